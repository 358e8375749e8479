"""What the failure certificates look like.

Every negative answer comes with a reason: an inconsistent linear system,
a singular form, a rank deficit, or the first basis tuple where an axiom
breaks.

Run:  python demos/04_how_things_break.py
"""

from hopfrob import Matrix, cyclic_group_algebra, idempotent_monoid_algebra
from hopfrob.bialg import check_bialgebra_axioms
from hopfrob.conv import solve_antipode
from hopfrob.frob import fh_system
from hopfrob.hopfmod import build_b_hat, hopf_galois, sigma

M2 = idempotent_monoid_algebra()
print("monoid {1, s}, s^2 = s")
print("  right antipode:", solve_antipode(M2, "right") or "none (inconsistent system)")
d = sigma(build_b_hat(M2))
print(f"  sigma on B^: rank {d.rank} from dim {d.coinv.dim} to dim {d.bar.dim}")
print(d.decomposition.render().replace("\n", "\n  "))
print(f"  Hopf-Galois map: rank {hopf_galois(M2).rank} of 4")
print("  FH test:", fh_system(M2))

# Perturb one structure constant of QC2 and the axiom checker names the
# first basis tuple where each broken axiom fails.
C2 = cyclic_group_algebra(2)
rows = C2.delta.to_rows()
rows[3][1] += 1  # Delta(g) picks up an extra g (x) g
mutant = C2.replace(check=False, delta=Matrix.from_rows(C2.field, rows))
print()
print(check_bialgebra_axioms(mutant).render())
