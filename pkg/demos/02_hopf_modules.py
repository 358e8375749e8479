"""Hopf modules split as coinvariants (+) augmented part exactly when B is Hopf.

For each Hopf module M we compare the coinvariants M^coB with the quotient
M / M B+ through the canonical map sigma.  For a Hopf algebra sigma is an
isomorphism on every module tried; for the two-element idempotent monoid
it already fails on B^ = B (x) B.

Run:  python demos/02_hopf_modules.py
"""

from hopfrob import idempotent_monoid_algebra, sweedler_h4, symmetric_group_algebra
from hopfrob.conv import solve_antipode
from hopfrob.hopfmod import (
    augmented_part,
    coinvariants,
    sigma,
    sigma_inverse_formula,
    witness_suite,
)


def survey(B):
    print(f"\n{B.name}")
    print(f"  {'module':10} {'dim':>4} {'coinv':>6} {'M B+':>6} {'bar':>4}  sigma")
    for M in witness_suite(B, max_dimV=2):
        d = sigma(M)
        state = "iso" if d.invertible else f"rank {d.rank}"
        print(f"  {M.name:10} {M.dim:>4} {coinvariants(M).dim:>6} "
              f"{augmented_part(M).dim:>6} {d.bar.dim:>4}  {state}")


for B in (symmetric_group_algebra(3), sweedler_h4(), idempotent_monoid_algebra()):
    survey(B)

# With an antipode, the inverse of sigma has a closed form m -> m_0 S(m_1).
B = sweedler_h4()
S = solve_antipode(B).S
for M in witness_suite(B, max_dimV=2):
    assert sigma_inverse_formula(M, S) == sigma(M).inverse
print("\nclosed-form inverse m -> m_0 S(m_1) matches the computed inverse on every H4 module")
