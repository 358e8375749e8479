"""Convolution on End(B), one-sided antipode solvers and antipode identities.

Linear maps B -> B are n x n :class:`~hopfrob.exactla.Matrix` objects; the
entry ``S[l, k]`` is the coefficient of b_l in S(b_k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bialg import Bialgebra, compare_columns
from .exactla import DimensionError, Matrix, Subspace, kron, solve_affine
from .report import Check, Report, TheoremViolation

SIDES = ("left", "right", "both")


def _check_endo(f: Matrix, B: Bialgebra, what: str) -> None:
    if f.shape != (B.dim, B.dim):
        raise DimensionError(f"{what} must be {B.dim}x{B.dim}, got {f.shape}")
    if f.field != B.field:
        raise DimensionError(f"{what} is over {f.field!r}, bialgebra over {B.field!r}")


def convolution(f: Matrix, g: Matrix, B: Bialgebra) -> Matrix:
    """f * g = m o (f (x) g) o Delta."""
    _check_endo(f, B, "f")
    _check_endo(g, B, "g")
    return B.m @ kron(f, g) @ B.delta


@dataclass(frozen=True)
class AntipodeSolution:
    S: Matrix
    solution_space_dim: int
    side: str
    homogeneous: Subspace

    def __call__(self, x):
        return self.S.apply(list(x))


def antipode_system(B: Bialgebra, side: str) -> tuple[Matrix, list]:
    """The affine system for a one-sided convolution inverse of the identity.

    Unknown ``l*n + j`` is ``S[l, j]``.  Equation ``k*n + r`` is the
    b_r-coordinate of id*S (right) or S*id (left) evaluated at b_k, and the
    right-hand side is that coordinate of eps(b_k) 1.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, got {side!r}")
    F, n = B.field, B.dim
    mcols = B.m.sparse_cols()
    dcols = B.delta.sparse_cols()
    rows = [dict() for _ in range(n * n)]
    for k in range(n):
        for ij, d in dcols[k].items():
            i, j = divmod(ij, n)
            for l in range(n):
                if side == "right":
                    # b_i S(b_j), S(b_j) = sum_l S[l,j] b_l
                    prod, var = mcols[i * n + l], l * n + j
                else:
                    # S(b_i) b_j
                    prod, var = mcols[l * n + j], l * n + i
                for r, c in prod.items():
                    row = rows[k * n + r]
                    row[var] = row.get(var, F.zero) + d * c
    A = Matrix.from_sparse(F, n * n, n * n, rows)
    rhs = [B.eps[k] * B.u[r] for k in range(n) for r in range(n)]
    return A, rhs


def _solve_side(B: Bialgebra, side: str) -> AntipodeSolution | None:
    A, rhs = antipode_system(B, side)
    sol = solve_affine(A, rhs)
    if sol is None:
        return None
    n = B.dim
    S = Matrix(B.field, n, n, sol.particular)
    # unitality and counitality are consequences, not imposed
    if S.apply(list(B.u)) != list(B.u) or list((B.counit_matrix() @ S).entries) != list(B.eps):
        raise TheoremViolation(f"{side} antipode is not unital and counital")
    return AntipodeSolution(S, sol.kernel.dim, side, sol.kernel)


def solve_antipode(B: Bialgebra, side: str = "both") -> AntipodeSolution | None:
    """A right (id*S = u eps), left (S*id = u eps) or two-sided antipode.

    Returns None when the system is inconsistent.  For ``side='both'`` the
    two one-sided problems are solved separately and, when both are
    solvable, the solutions must coincide.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    if side != "both":
        return _solve_side(B, side)
    right = _solve_side(B, "right")
    left = _solve_side(B, "left")
    if right is None or left is None:
        return None
    if right.S != left.S:
        raise TheoremViolation("left and right antipodes exist but differ")
    return AntipodeSolution(right.S, right.solution_space_dim, "both", right.homogeneous)


def check_antihom(B: Bialgebra, S: Matrix) -> Report:
    """Anti-multiplicativity, anti-comultiplicativity, unitality, counitality."""
    _check_endo(S, B, "S")
    F, n = B.field, B.dim
    tau = B.flip()
    rep = Report("anti-bialgebra morphism")
    rep.add(compare_columns("anti_mult", S @ B.m, B.m @ tau @ kron(S, S), B, 2))
    rep.add(compare_columns("anti_comult", B.delta @ S, kron(S, S) @ tau @ B.delta, B, 1))
    s1 = S.apply(list(B.u))
    rep.add(Check("unital", s1 == list(B.u), None if s1 == list(B.u) else ("1",), s1, list(B.u)))
    eS = list((B.counit_matrix() @ S).entries)
    ok = eS == list(B.eps)
    if ok:
        rep.record("counital", True)
    else:
        k = next(i for i in range(n) if eS[i] != B.eps[i])
        rep.record("counital", False, witness=(B.basis[k],), lhs=[eS[k]], rhs=[B.eps[k]])
    return rep


def check_super_identities(B: Bialgebra, S: Matrix) -> Report:
    """a_1 S(b a_2) = eps(a) S(b) on pairs (a, b), and
    S(b) (x) 1 = S(b_2)_1 (x) b_1 S(b_2)_2 on basis b."""
    _check_endo(S, B, "S")
    F, n = B.field, B.dim
    I = B.identity()
    m_op = B.m @ B.flip()
    rep = Report("super identities")
    lhs = B.m @ kron(I, S) @ kron(I, m_op) @ kron(B.delta, I)
    rhs = kron(B.counit_matrix(), S)
    rep.add(compare_columns("eq_super", lhs, rhs, B, 2))
    lhs2 = kron(S, B.unit_matrix())
    rhs2 = kron(I, m_op) @ kron(B.delta, I) @ kron(S, I) @ B.flip() @ B.delta
    rep.add(compare_columns("eq_super2", lhs2, rhs2, B, 1))
    return rep
