"""A walk through Sweedler's four-dimensional Hopf algebra.

Run:  python demos/01_sweedler_tour.py
"""

from hopfrob import sweedler_h4
from hopfrob.bialg import format_element, format_tensor
from hopfrob.conv import convolution, solve_antipode
from hopfrob.frob import antipode_from_fh, fh_system, integral_spaces

B = sweedler_h4()
print(B)

# The antipode is the convolution inverse of the identity.  We solve the
# linear system id * S = u eps for it and read off S on the basis.
S = solve_antipode(B).S
for i, b in enumerate(B.basis):
    print(f"S({b}) = {format_element(B, S.col_list(i))}")
assert convolution(B.identity(), S, B) == B.unit_counit()

# S has order 4: S^2 is conjugation by g, not the identity.
print("S^2 == id:", S @ S == B.identity(), "  S^4 == id:", S @ S @ S @ S == B.identity())

# Integrals.  H4 is not unimodular: the left and right integrals in B differ.
ints = integral_spaces(B)
print("left integral in B: ", format_element(B, ints.left_in.vectors()[0]))
print("right integral in B:", format_element(B, ints.right_in.vectors()[0]))
print("right integral on B:", format_element(B, ints.right_on.vectors()[0], "*"))

# A right integral psi on B gives a nondegenerate form psi(ab), and from it
# the norms T, t and a Casimir element e.
sys = fh_system(B)
print("form psi(b_i b_j):")
for row in sys.form.to_rows():
    print("   ", *(f"{str(x):>2}" for x in row))
print("T =", format_element(B, sys.T), "  t =", format_element(B, sys.t))
print("e =", format_tensor(B, sys.e))

# The antipode comes back out of the Frobenius data, S(a) = psi(T_1 a) T_2,
# without solving any system.
fh = antipode_from_fh(B, sys)
print("antipode from Frobenius data agrees with the solver:", fh.S == S)
