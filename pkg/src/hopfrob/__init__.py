"""Exact computer algebra for finite-dimensional bialgebras.

Antipodes and one-sided antipodes, Hopf modules and their canonical maps,
integrals, Frobenius systems and the adjunction bijections they induce,
all computed over the rationals or a prime field without rounding.
"""

from .exactla import GF, QQ, Matrix, PrimeField, QuotientSpace, RationalField, Subspace
from .bialg import Bialgebra, check_bialgebra_axioms, dual_bialgebra, op_cop
from .zoo import (
    cyclic_group_algebra,
    divided_power_char_p,
    group_algebra,
    idempotent_monoid_algebra,
    monoid_algebra,
    sweedler_h4,
    symmetric_group_algebra,
    trivial,
    zoo,
)

__version__ = "0.1.0"
