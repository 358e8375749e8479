"""Hopf modules, coinvariants, the canonical maps sigma / varsigma, adjunction
units and counits, the Hopf-Galois map and Hom spaces.

Module data are kept as sparse tables rather than as dense tensors:

* ``action[i][b]`` is the sparse vector m_i . b_b (right) or b_b . m_i (left);
* ``coaction[i]`` maps ``(j, b)`` to the coefficient of m_j (x) b_b (right)
  or of b_b (x) m_j (left).

Keying the coaction by ``(module index, bialgebra index)`` on both sides
lets coinvariants, bar quotients and the sigma inverse share one code path.
Dense matrices in the tensor-coordinate convention are available through
:attr:`HopfModule.action_matrix` and :attr:`HopfModule.coaction_matrix`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._sparse import axpy, dense, sparse
from .bialg import Bialgebra, op_cop
from .conv import AntipodeSolution, check_antihom, check_super_identities, convolution, solve_antipode
from .exactla import (
    Matrix,
    QuotientSpace,
    StructuralError,
    Subspace,
    invert,
    kernel_from_rows,
    kron,
    quotient,
    rank,
)
from .report import Check, Report, TheoremViolation

RIGHT, LEFT = "right", "left"


class HopfModuleError(StructuralError):
    def __init__(self, report: Report):
        self.report = report
        super().__init__("Hopf module axioms fail:\n" + report.render())


class NotWellDefined(StructuralError):
    """A formula on classes depends on the chosen representative."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class HopfModule:
    """A right or left module, comodule or Hopf module over ``B``.

    Either ``action`` or ``coaction`` may be None for a plain comodule or a
    plain module.  Construction validates all present axioms unless
    ``check=False``.
    """

    def __init__(
        self,
        B: Bialgebra,
        dim: int,
        action: list[list[dict]] | None,
        coaction: list[dict] | None,
        side: str = RIGHT,
        *,
        labels: Sequence[str] | None = None,
        name: str | None = None,
        check: bool = True,
    ):
        if side not in (RIGHT, LEFT):
            raise StructuralError(f"side must be right or left, got {side!r}")
        if dim < 0:
            raise StructuralError("negative dimension")
        n = B.dim
        if action is not None:
            if len(action) != dim or any(len(row) != n for row in action):
                raise StructuralError(f"action table must be {dim} x {n}")
            for i, row in enumerate(action):
                for b, vec in enumerate(row):
                    if any(not 0 <= j < dim for j in vec):
                        raise StructuralError(f"action[{i}][{b}] index out of range")
        if coaction is not None:
            if len(coaction) != dim:
                raise StructuralError(f"coaction table must have {dim} entries")
            for i, vec in enumerate(coaction):
                if any(not (0 <= j < dim and 0 <= b < n) for j, b in vec):
                    raise StructuralError(f"coaction[{i}] index out of range")
        self.B = B
        self.field = B.field
        self.dim = dim
        self.action = action
        self.coaction = coaction
        self.side = side
        self.labels = tuple(labels) if labels is not None else tuple(f"m{i}" for i in range(dim))
        self.name = name
        self._cache: dict = {}
        if check:
            report = validate_hopf_module(self)
            if not report.passed:
                raise HopfModuleError(report)

    def __repr__(self):
        kind = {(True, True): "Hopf module", (True, False): "module", (False, True): "comodule"}[
            (self.is_module, self.is_comodule)
        ]
        return f"<{self.side} {kind} {self.name or ''} dim {self.dim} over {self.B.name or 'B'}>"

    @property
    def is_module(self) -> bool:
        return self.action is not None

    @property
    def is_comodule(self) -> bool:
        return self.coaction is not None

    @property
    def is_hopf(self) -> bool:
        return self.is_module and self.is_comodule

    # -- sparse evaluation ---------------------------------------------

    def act(self, m: dict, b: dict) -> dict:
        """m . b (right) or b . m (left), for sparse m and b."""
        out: dict = {}
        for i, x in m.items():
            row = self.action[i]
            for k, y in b.items():
                axpy(out, x * y, row[k])
        return out

    def coact(self, m: dict) -> dict:
        out: dict = {}
        for i, x in m.items():
            axpy(out, x, self.coaction[i])
        return out

    def e(self, i: int) -> dict:
        return {i: self.field.one}

    # -- dense views ------------------------------------------------------

    @property
    def action_matrix(self) -> Matrix:
        n, d = self.B.dim, self.dim
        cols = [dict() for _ in range(d * n)]
        for i in range(d):
            for b in range(n):
                cols[self._mb_index(i, b)] = self.action[i][b]
        return Matrix.from_sparse(self.field, d * n, d, cols).T

    @property
    def coaction_matrix(self) -> Matrix:
        d = self.dim
        cols = [{self._mb_index(j, b): c for (j, b), c in self.coaction[i].items()} for i in range(d)]
        return Matrix.from_sparse(self.field, d, d * self.B.dim, cols).T

    def _mb_index(self, j: int, b: int) -> int:
        return j * self.B.dim + b if self.side == RIGHT else b * self.dim + j

    def action_operator(self, b: int) -> Matrix:
        """Matrix of m -> m . b_b (right) or b_b . m (left)."""
        key = ("act", b)
        if key not in self._cache:
            cols = [self.action[i][b] for i in range(self.dim)]
            self._cache[key] = Matrix.from_sparse(self.field, self.dim, self.dim, cols).T
        return self._cache[key]

    def coaction_component(self, b: int) -> Matrix:
        """C_b with delta(m) = sum_b C_b m (x) b_b (or b_b (x) C_b m)."""
        key = ("coact", b)
        if key not in self._cache:
            cols = [
                {j: c for (j, bb), c in self.coaction[i].items() if bb == b} for i in range(self.dim)
            ]
            self._cache[key] = Matrix.from_sparse(self.field, self.dim, self.dim, cols).T
        return self._cache[key]

    # -- forgetful functors -------------------------------------------

    def as_module(self) -> "HopfModule":
        return HopfModule(self.B, self.dim, self.action, None, self.side,
                          labels=self.labels, name=self.name, check=False)

    def as_comodule(self) -> "HopfModule":
        return HopfModule(self.B, self.dim, None, self.coaction, self.side,
                          labels=self.labels, name=self.name, check=False)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _first_failure(name: str, items) -> Check:
    for witness, lhs, rhs in items:
        if lhs != rhs:
            return Check(name, False, witness=witness, lhs=lhs, rhs=rhs)
    return Check(name, True)


def validate_hopf_module(M: HopfModule) -> Report:
    """Module, comodule and compatibility axioms on all basis tuples."""
    B, F = M.B, M.field
    n, d = B.dim, M.dim
    mt, dt = B.mult_table, B.comult_table
    unit = sparse(B.u)
    eps = B.eps
    bl, ml = B.basis, M.labels
    right = M.side == RIGHT
    rep = Report(f"{M.side} Hopf module axioms for {M.name or 'M'}")

    if M.is_module:
        rep.add(_first_failure("action_unital", (
            ((ml[i],), M.act(M.e(i), unit), M.e(i)) for i in range(d)
        )))

        def assoc():
            for i in range(d):
                for a in range(n):
                    for b in range(n):
                        if right:
                            yield ((ml[i], bl[a], bl[b]),
                                   M.act(M.action[i][a], {b: F.one}), M.act(M.e(i), mt[a][b]))
                        else:
                            # a . (b . m) = (ab) . m
                            yield ((bl[a], bl[b], ml[i]),
                                   M.act(M.action[i][b], {a: F.one}), M.act(M.e(i), mt[a][b]))

        rep.add(_first_failure("action_associative", assoc()))

    if M.is_comodule:
        def counital():
            for i in range(d):
                out: dict = {}
                for (j, b), c in M.coaction[i].items():
                    axpy(out, eps[b], {j: c})
                yield (ml[i],), out, M.e(i)

        rep.add(_first_failure("coaction_counital", counital()))

        def coassoc():
            for i in range(d):
                lhs: dict = {}
                rhs: dict = {}
                for (j, b), c in M.coaction[i].items():
                    for (k, b1), c1 in M.coaction[j].items():
                        # right: m_k (x) b1 (x) b ; left: b (x) b1 (x) m_k
                        axpy(lhs, c * c1, {(k, b1, b) if right else (k, b, b1): F.one})
                    for (x, y), c2 in dt[b].items():
                        axpy(rhs, c * c2, {(j, x, y): F.one})
                yield (ml[i],), lhs, rhs

        rep.add(_first_failure("coaction_coassociative", coassoc()))

    if M.is_hopf:
        def compat():
            for i in range(d):
                for b in range(n):
                    if right:
                        lhs = M.coact(M.action[i][b])
                    else:
                        lhs = M.coact(M.action[i][b])
                    rhs: dict = {}
                    for (b1, b2), cb in dt[b].items():
                        for (j, c), cm in M.coaction[i].items():
                            if right:
                                # m_0 . b_1 (x) m_1 b_2
                                mpart, bpart = M.action[j][b1], mt[c][b2]
                            else:
                                # b_1 m_{-1} (x) b_2 . m_0
                                mpart, bpart = M.action[j][b2], mt[b1][c]
                            for k, x in mpart.items():
                                for l, y in bpart.items():
                                    axpy(rhs, cb * cm * x * y, {(k, l): F.one})
                    w = (ml[i], bl[b]) if right else (bl[b], ml[i])
                    yield w, lhs, rhs

        rep.add(_first_failure("compatibility", compat()))
    return rep


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def free_hopf_module(B: Bialgebra, dimV: int, side: str = RIGHT) -> HopfModule:
    """V (x) B with delta(v (x) b) = v (x) b_1 (x) b_2 and (v (x) b) . a = v (x) ba,
    or the mirror B (x) V for ``side='left'``.

    Index of v (x) b is ``v*n + b`` (right), of b (x) v is ``b*dimV + v`` (left).
    """
    n = B.dim
    mt, dt = B.mult_table, B.comult_table
    d = dimV * n
    action = [[None] * n for _ in range(d)]
    coaction = [None] * d
    labels = [None] * d
    for v in range(dimV):
        for b in range(n):
            if side == RIGHT:
                i = v * n + b
                action[i] = [{v * n + k: c for k, c in mt[b][a].items()} for a in range(n)]
                coaction[i] = {(v * n + x, y): c for (x, y), c in dt[b].items()}
                labels[i] = f"v{v}⊗{B.basis[b]}" if dimV > 1 else B.basis[b]
            else:
                i = b * dimV + v
                action[i] = [{k * dimV + v: c for k, c in mt[a][b].items()} for a in range(n)]
                coaction[i] = {(y * dimV + v, x): c for (x, y), c in dt[b].items()}
                labels[i] = f"{B.basis[b]}⊗v{v}" if dimV > 1 else B.basis[b]
    name = "B" if dimV == 1 else f"V{dimV}⊗B" if side == RIGHT else f"B⊗V{dimV}"
    return HopfModule(B, d, action, coaction, side, labels=labels, name=name)


def regular_module(B: Bialgebra, side: str = RIGHT) -> HopfModule:
    return free_hopf_module(B, 1, side)


def build_b_hat(B: Bialgebra) -> HopfModule:
    """B (x) B with delta(a (x) b) = a (x) b_1 (x) b_2 and (a (x) b) . c = a c_1 (x) b c_2."""
    n = B.dim
    mt, dt = B.mult_table, B.comult_table
    action = []
    coaction = []
    for a in range(n):
        for b in range(n):
            row = []
            for c in range(n):
                out: dict = {}
                for (c1, c2), x in dt[c].items():
                    for k, y in mt[a][c1].items():
                        for l, z in mt[b][c2].items():
                            axpy(out, x * y * z, {k * n + l: B.field.one})
                row.append(out)
            action.append(row)
            coaction.append({(a * n + x, y): c for (x, y), c in dt[b].items()})
    labels = [f"{p}⊗{q}" for p in B.basis for q in B.basis]
    return HopfModule(B, n * n, action, coaction, RIGHT, labels=labels, name="B^")


def build_b_check(B: Bialgebra) -> HopfModule:
    """The left Hopf module B (x) B with delta(b (x) a) = b_1 (x) (b_2 (x) a)
    and c . (b (x) a) = c_1 b (x) c_2 a."""
    n = B.dim
    mt, dt = B.mult_table, B.comult_table
    action = []
    coaction = []
    for b in range(n):
        for a in range(n):
            row = []
            for c in range(n):
                out: dict = {}
                for (c1, c2), x in dt[c].items():
                    for k, y in mt[c1][b].items():
                        for l, z in mt[c2][a].items():
                            axpy(out, x * y * z, {k * n + l: B.field.one})
                row.append(out)
            action.append(row)
            coaction.append({(y * n + a, x): c for (x, y), c in dt[b].items()})
    labels = [f"{p}⊗{q}" for p in B.basis for q in B.basis]
    return HopfModule(B, n * n, action, coaction, LEFT, labels=labels, name="Bv")


def trivial_module(B: Bialgebra, dimV: int = 1, side: str = RIGHT) -> HopfModule:
    """V with v . b = eps(b) v."""
    action = [[({i: e} if e else {}) for e in B.eps] for i in range(dimV)]
    return HopfModule(B, dimV, action, None, side, labels=[f"v{i}" for i in range(dimV)],
                      name=f"K{dimV}_eps")


def trivial_comodule(B: Bialgebra, dimV: int = 1, side: str = RIGHT) -> HopfModule:
    """V with delta(v) = v (x) 1."""
    unit = sparse(B.u)
    coaction = [{(i, b): c for b, c in unit.items()} for i in range(dimV)]
    return HopfModule(B, dimV, None, coaction, side, labels=[f"v{i}" for i in range(dimV)],
                      name=f"K{dimV}_u")


def regular_comodule(B: Bialgebra) -> HopfModule:
    return regular_module(B).as_comodule()


def comodule_tensor_b(P: HopfModule) -> HopfModule:
    """For a right comodule P, the Hopf module P (x) B with coaction
    p_0 (x) b_1 (x) p_1 b_2 and action (p (x) b) . a = p (x) ba."""
    if P.side != RIGHT or not P.is_comodule:
        raise StructuralError("need a right comodule")
    B = P.B
    n = B.dim
    mt, dt = B.mult_table, B.comult_table
    action, coaction, labels = [], [], []
    for p in range(P.dim):
        for b in range(n):
            action.append([{p * n + k: c for k, c in mt[b][a].items()} for a in range(n)])
            out: dict = {}
            for (q, c), x in P.coaction[p].items():
                for (b1, b2), y in dt[b].items():
                    for k, z in mt[c][b2].items():
                        axpy(out, x * y * z, {(q * n + b1, k): B.field.one})
            coaction.append(out)
            labels.append(f"{P.labels[p]}⊗{B.basis[b]}")
    return HopfModule(B, P.dim * n, action, coaction, RIGHT, labels=labels,
                      name=f"{P.name or 'P'}⊗~B")


def zero_module(B: Bialgebra, side: str = RIGHT) -> HopfModule:
    return HopfModule(B, 0, [], [], side, name="0")


def witness_suite(B: Bialgebra, side: str = RIGHT, max_dimV: int = 3) -> list[HopfModule]:
    """The fixed family of Hopf modules on which natural-in-M claims are checked."""
    if side == RIGHT:
        mods = [regular_module(B), build_b_hat(B)]
    else:
        mods = [regular_module(B, LEFT), build_b_check(B)]
    mods += [free_hopf_module(B, k, side) for k in range(2, max_dimV + 1)]
    return mods


# ---------------------------------------------------------------------------
# Coinvariants, bar quotient, sigma
# ---------------------------------------------------------------------------


def _require(M: HopfModule, module: bool = False, comodule: bool = False) -> None:
    if module and not M.is_module:
        raise StructuralError("a module structure is required")
    if comodule and not M.is_comodule:
        raise StructuralError("a comodule structure is required")


def coinvariants(M: HopfModule) -> Subspace:
    """{m : delta(m) = m (x) 1} (right) or {m : delta(m) = 1 (x) m} (left)."""
    _require(M, comodule=True)
    if "coinv" not in M._cache:
        unit = sparse(M.B.u)
        rows: dict = {}
        for i in range(M.dim):
            defect = dict(M.coaction[i])
            axpy(defect, -M.field.one, {(i, b): c for b, c in unit.items()})
            for key, c in defect.items():
                rows.setdefault(key, {})[i] = c
        M._cache["coinv"] = kernel_from_rows(M.field, M.dim, rows.values())
    return M._cache["coinv"]


def augmented_part(M: HopfModule) -> Subspace:
    """M B+ (right) or B+ M (left)."""
    _require(M, module=True)
    if "aug" not in M._cache:
        plus = M.B.augmentation_ideal().sparse_vectors()
        vecs = [M.act(M.e(i), b) for i in range(M.dim) for b in plus]
        M._cache["aug"] = Subspace.span(M.field, M.dim, vecs)
    return M._cache["aug"]


def bar_quotient(M: HopfModule) -> QuotientSpace:
    """M / M B+ (right) or M / B+ M (left) with projection and section."""
    if "bar" not in M._cache:
        M._cache["bar"] = quotient(augmented_part(M))
    return M._cache["bar"]


@dataclass(frozen=True)
class SigmaData:
    coinv: Subspace
    bar: QuotientSpace
    sigma: Matrix
    rank: int
    invertible: bool
    inverse: Matrix | None
    decomposition: Report
    side: str

    @property
    def dims(self) -> tuple[int, int]:
        return self.coinv.dim, self.bar.dim


def sigma(M: HopfModule) -> SigmaData:
    """The composite coinvariants -> M -> bar quotient, in canonical coordinates.

    For a left module this is the left-handed map varsigma.  The report in
    ``decomposition`` checks M = M^coB (+) M B+ directly.
    """
    _require(M, module=True, comodule=True)
    if "sigma" in M._cache:
        return M._cache["sigma"]
    F = M.field
    coinv = coinvariants(M)
    bar = bar_quotient(M)
    aug = augmented_part(M)
    cols = [sparse(bar.project(v)) for v in coinv.vectors()]
    mat = Matrix.from_sparse(F, coinv.dim, bar.dim, cols).T
    r = rank(mat)
    inv = invert(mat) if coinv.dim == bar.dim else None
    dec = Report("coinvariants and augmented part decompose M")
    meet = coinv.intersection(aug)
    dec.record("zero_intersection", meet.dim == 0,
               witness=None if meet.dim == 0 else tuple(meet.vectors()[0]),
               detail=f"dim of intersection {meet.dim}")
    total = coinv.dim + aug.dim
    dec.record("spanning", (coinv + aug).dim == M.dim,
               detail=f"{coinv.dim} + {aug.dim} = {total} vs dim M = {M.dim}")
    out = SigmaData(coinv, bar, mat, r, inv is not None, inv, dec, M.side)
    M._cache["sigma"] = out
    return out


def varsigma(M: HopfModule) -> SigmaData:
    if M.side != LEFT:
        raise StructuralError("varsigma is defined for left Hopf modules")
    return sigma(M)


def projector_formula(M: HopfModule, S: Matrix) -> Matrix:
    """Matrix of m -> m_0 . S(m_1) (right) or S(m_{-1}) . m_0 (left)."""
    _require(M, module=True, comodule=True)
    cols = []
    Scols = S.sparse_cols()
    for i in range(M.dim):
        out: dict = {}
        for (j, b), c in M.coaction[i].items():
            axpy(out, c, M.act(M.e(j), Scols[b]))
        cols.append(out)
    return Matrix.from_sparse(M.field, M.dim, M.dim, cols).T


def sigma_inverse_formula(M: HopfModule, S: Matrix) -> Matrix:
    """bar -> coinvariants, class of m -> m_0 . S(m_1) (right) or S(m_{-1}) m_0 (left).

    Computed on the section's lifts.  Raises :class:`NotWellDefined` when the
    formula does not vanish on the augmented part (so the value depends on
    the lift) or does not land in the coinvariants.
    """
    data = sigma(M)
    phi = projector_formula(M, S)
    for v in augmented_part(M).vectors():
        img = phi.apply(v)
        if any(img):
            raise NotWellDefined("formula does not kill the augmented part", witness=v)
    cols = []
    for j in range(data.bar.dim):
        img = phi.apply(data.bar.section.col_list(j))
        coords = data.coinv.coordinates(img)
        if coords is None:
            raise NotWellDefined("formula does not land in the coinvariants", witness=j)
        cols.append(coords)
    return Matrix.from_columns(M.field, cols, data.coinv.dim)


def sigma_left_linearity(B: Bialgebra) -> Report:
    """sigma for B^ commutes with the left B-actions a.(x (x) y) = ax (x) y on
    its coinvariants and bar quotient."""
    M = build_b_hat(B)
    data = sigma(M)
    n = B.dim
    mt = B.mult_table
    rep = Report("sigma of B^ is left B-linear")
    bad = None
    for a in range(n):
        def left(v):
            out: dict = {}
            for idx, c in enumerate(v):
                if c:
                    x, y = divmod(idx, n)
                    for k, z in mt[a][x].items():
                        axpy(out, c * z, {k * n + y: B.field.one})
            return dense(B.field, out, n * n)
        on_coinv = [data.coinv.coordinates(left(v)) for v in data.coinv.vectors()]
        if any(c is None for c in on_coinv):
            bad = (B.basis[a], "coinvariants not stable")
            break
        L_c = Matrix.from_columns(B.field, on_coinv, data.coinv.dim)
        on_bar = [data.bar.project(left(data.bar.section.col_list(j))) for j in range(data.bar.dim)]
        L_b = Matrix.from_columns(B.field, on_bar, data.bar.dim)
        for v in data.bar.denominator.vectors():
            if any(data.bar.project(left(v))):
                bad = (B.basis[a], "augmented part not stable")
                break
        if bad:
            break
        if L_b @ data.sigma != data.sigma @ L_c:
            bad = (B.basis[a],)
            break
    rep.record("left_linear", bad is None, witness=bad)
    return rep


# ---------------------------------------------------------------------------
# Adjunction units and counits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdjunctionMaps:
    """eta_M : M -> bar(M) (x) B and theta_M : M^coB (x) B -> M for a right
    Hopf module M; eps_V : bar(V (x) B) -> V and gamma_V : V -> (V (x) B)^coB
    for the free module on a space of dimension dimV."""

    eta: Matrix | None
    theta: Matrix | None
    epsilon: Matrix | None
    gamma: Matrix | None


def eta_map(M: HopfModule) -> Matrix:
    """m -> class(m_0) (x) m_1, in (bar coordinates) (x) B."""
    _require(M, module=True, comodule=True)
    bar = bar_quotient(M)
    n = M.B.dim
    proj_cols = bar.projection.sparse_cols()
    cols = []
    for i in range(M.dim):
        out: dict = {}
        for (j, b), c in M.coaction[i].items():
            for q, x in proj_cols[j].items():
                axpy(out, c * x, {q * n + b: M.field.one})
        cols.append(out)
    return Matrix.from_sparse(M.field, M.dim, bar.dim * n, cols).T


def theta_map(M: HopfModule) -> Matrix:
    """m (x) b -> m . b on M^coB (x) B, coinvariants in canonical coordinates."""
    coinv = coinvariants(M)
    n = M.B.dim
    cols = []
    for v in coinv.sparse_vectors():
        for b in range(n):
            cols.append(M.act(v, {b: M.field.one}))
    return Matrix.from_sparse(M.field, coinv.dim * n, M.dim, cols).T


def epsilon_map(B: Bialgebra, dimV: int) -> Matrix:
    """class(v (x) b) -> v eps(b) on the bar quotient of V (x) B."""
    W = free_hopf_module(B, dimV)
    bar = bar_quotient(W)
    n = B.dim
    cols = []
    for j in range(bar.dim):
        out: dict = {}
        for idx, c in sparse(bar.section.col_list(j)).items():
            v, b = divmod(idx, n)
            axpy(out, c * B.eps[b], {v: B.field.one})
        cols.append(out)
    return Matrix.from_sparse(B.field, bar.dim, dimV, cols).T


def gamma_map(B: Bialgebra, dimV: int) -> Matrix:
    """v -> v (x) 1 in coinvariant coordinates of V (x) B."""
    W = free_hopf_module(B, dimV)
    coinv = coinvariants(W)
    n = B.dim
    cols = []
    for v in range(dimV):
        vec = [B.field.zero] * (dimV * n)
        for b, c in enumerate(B.u):
            vec[v * n + b] = c
        coords = coinv.coordinates(vec)
        if coords is None:
            raise TheoremViolation("v (x) 1 is not coinvariant")
        cols.append(coords)
    return Matrix.from_columns(B.field, cols, coinv.dim)


def adjunction_maps(M: HopfModule | None = None, B: Bialgebra | None = None,
                    dimV: int | None = None) -> AdjunctionMaps:
    eta = theta = eps = gam = None
    if M is not None:
        if M.side != RIGHT:
            raise StructuralError("adjunction maps are implemented for right Hopf modules")
        eta, theta = eta_map(M), theta_map(M)
    if dimV is not None:
        B = B if B is not None else M.B
        eps, gam = epsilon_map(B, dimV), gamma_map(B, dimV)
    return AdjunctionMaps(eta, theta, eps, gam)


def triangle_identities(M: HopfModule, dimV: int) -> Report:
    """Both triangle identities of bar -| - (x) B and of - (x) B -| coinvariants."""
    B, F = M.B, M.field
    n = B.dim
    I_B = B.identity()
    rep = Report(f"triangle identities ({M.name or 'M'}, dim V = {dimV})")
    W = free_hopf_module(B, dimV)
    eps_V = epsilon_map(B, dimV)

    # (eps_V (x) B) o eta_{V (x) B} = id
    lhs = kron(eps_V, I_B) @ eta_map(W)
    rep.record("counit_after_eta_free", lhs == Matrix.identity(F, W.dim))

    # eps_{bar M} o bar(eta_M) = id on bar M
    bar = bar_quotient(M)
    Wm = free_hopf_module(B, bar.dim)
    bar_w = bar_quotient(Wm)
    eta_M = eta_map(M)
    cols = [bar_w.project(eta_M.apply(bar.section.col_list(j))) for j in range(bar.dim)]
    bar_eta = Matrix.from_columns(F, cols, bar_w.dim)
    rep.record("counit_after_bar_eta", epsilon_map(B, bar.dim) @ bar_eta == Matrix.identity(F, bar.dim))

    # theta_{V (x) B} o (gamma_V (x) B) = id
    lhs = theta_map(W) @ kron(gamma_map(B, dimV), I_B)
    rep.record("theta_after_gamma_free", lhs == Matrix.identity(F, W.dim))

    # theta_M^coB o gamma_{M^coB} = id on M^coB
    coinv = coinvariants(M)
    c = coinv.dim
    gam = gamma_map(B, c)
    Wc = free_hopf_module(B, c)
    coinv_w = coinvariants(Wc)
    theta_M = theta_map(M)
    cols = [coinv.coordinates(theta_M.apply(v)) for v in coinv_w.vectors()]
    if any(x is None for x in cols):
        rep.record("theta_coinv_after_gamma", False, detail="theta does not preserve coinvariants")
    else:
        restricted = Matrix.from_columns(F, cols, c)
        rep.record("theta_coinv_after_gamma", restricted @ gam == Matrix.identity(F, c))
    return rep


# ---------------------------------------------------------------------------
# Hopf-Galois map, nu, deciders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaloisData:
    matrix: Matrix
    rank: int
    bijective: bool


def hopf_galois(B: Bialgebra) -> GaloisData:
    """beta(a (x) b) = a b_1 (x) b_2."""
    n = B.dim
    mt, dt = B.mult_table, B.comult_table
    cols = []
    for a in range(n):
        for b in range(n):
            out: dict = {}
            for (b1, b2), c in dt[b].items():
                for k, x in mt[a][b1].items():
                    axpy(out, c * x, {k * n + b2: B.field.one})
            cols.append(out)
    mat = Matrix.from_sparse(B.field, n * n, n * n, cols).T
    r = rank(mat)
    return GaloisData(mat, r, r == n * n)


def nu_from_eta(B: Bialgebra) -> Matrix | None:
    """nu(b) = (B (x) eps)(eta^{-1}(class(1 (x) b) (x) 1)) for eta of B^.

    Returns None when eta_{B^} is not invertible.  When it is, nu must be a
    left convolution inverse of the identity; a failure there raises
    :class:`TheoremViolation`.
    """
    M = build_b_hat(B)
    eta = eta_map(M)
    if eta.rows != eta.cols:
        return None
    inv = invert(eta)
    if inv is None:
        return None
    F, n = B.field, B.dim
    bar = bar_quotient(M)
    cols = []
    for b in range(n):
        one_b = [F.zero] * (n * n)
        for a, c in enumerate(B.u):
            one_b[a * n + b] = c
        cls = bar.project(one_b)
        vec = [F.zero] * (bar.dim * n)
        for q, x in enumerate(cls):
            for k, y in enumerate(B.u):
                vec[q * n + k] = x * y
        pre = inv.apply(vec)
        out = [F.zero] * n
        for idx, c in enumerate(pre):
            if c:
                x, y = divmod(idx, n)
                out[x] = out[x] + c * B.eps[y]
        cols.append(out)
    nu = Matrix.from_columns(F, cols, n)
    if convolution(nu, B.identity(), B) != B.unit_counit():
        raise TheoremViolation("nu is not a left convolution inverse of the identity")
    return nu


@dataclass
class HopfVerdict:
    side: str
    is_hopf: bool
    sigma: SigmaData
    antipode: AntipodeSolution | None
    sigma_inverse: Matrix | None
    reports: list

    def __bool__(self):
        return self.is_hopf


def decide_right_hopf(B: Bialgebra) -> HopfVerdict:
    """Decide by sigma_{B^} invertibility and, independently, by solving for a
    right antipode satisfying the anti-(co)multiplicativity and super
    identities.  The two verdicts must agree."""
    data = sigma(build_b_hat(B))
    sol = solve_antipode(B, "right")
    reports = []
    route_b = False
    if sol is not None:
        reports = [check_antihom(B, sol.S), check_super_identities(B, sol.S)]
        route_b = all(r.passed for r in reports)
    if data.invertible != route_b:
        raise TheoremViolation(
            f"sigma invertible = {data.invertible} but right antipode route = {route_b}"
        )
    inv = None
    if route_b:
        inv = sigma_inverse_formula(build_b_hat(B), sol.S)
        if inv != data.inverse:
            raise TheoremViolation("sigma inverse formula disagrees with the matrix inverse")
    return HopfVerdict(RIGHT, route_b, data, sol, inv, reports)


def decide_left_hopf(B: Bialgebra) -> HopfVerdict:
    """Left-handed decider on the left Hopf module B-check and a left antipode."""
    M = build_b_check(B)
    data = sigma(M)
    sol = solve_antipode(B, "left")
    reports = []
    route_b = False
    if sol is not None:
        # the left super identities are the right ones for B^{op,cop}
        mirror = op_cop(B, True, True)
        reports = [check_antihom(B, sol.S), check_super_identities(mirror, sol.S)]
        route_b = all(r.passed for r in reports)
    if data.invertible != route_b:
        raise TheoremViolation(
            f"varsigma invertible = {data.invertible} but left antipode route = {route_b}"
        )
    inv = None
    if route_b:
        inv = sigma_inverse_formula(M, sol.S)
        if inv != data.inverse:
            raise TheoremViolation("varsigma inverse formula disagrees with the matrix inverse")
    return HopfVerdict(LEFT, route_b, data, sol, inv, reports)


# ---------------------------------------------------------------------------
# Hom spaces
# ---------------------------------------------------------------------------

CATEGORIES = ("vec", "mod", "comod", "hopf")


def _sylvester_rows(Ns: list[Matrix], Ms: list[Matrix], dN: int, dM: int, rows: list) -> None:
    """Append the equations N_b f - f M_b = 0, f a dN x dM matrix flattened
    row-major (unknown r*dM + c)."""
    for Nb, Mb in zip(Ns, Ms):
        n_rows = Nb.sparse_rows()
        m_cols = Mb.sparse_cols()
        for r in range(dN):
            for c in range(dM):
                row: dict = {}
                for k, x in n_rows[r].items():
                    row[k * dM + c] = x
                for k, x in m_cols[c].items():
                    key = r * dM + k
                    v = row.get(key)
                    nv = -x if v is None else v - x
                    if nv:
                        row[key] = nv
                    else:
                        row.pop(key, None)
                if row:
                    rows.append(row)


def hom_space(M: HopfModule, N: HopfModule, category: str) -> Subspace:
    """Linear maps M -> N (as dim N x dim M matrices flattened row-major)
    that are B-linear, B-colinear, both, or unconstrained."""
    if category not in CATEGORIES:
        raise StructuralError(f"category must be one of {CATEGORIES}")
    F = M.field
    dM, dN = M.dim, N.dim
    if category == "vec":
        return Subspace.whole(F, dN * dM)
    if M.B is not N.B and M.B != N.B:
        raise StructuralError("modules over different bialgebras")
    if M.side != N.side:
        raise StructuralError("handedness mismatch")
    n = M.B.dim
    rows: list = []
    if category in ("mod", "hopf"):
        _require(M, module=True)
        _require(N, module=True)
        _sylvester_rows([N.action_operator(b) for b in range(n)],
                        [M.action_operator(b) for b in range(n)], dN, dM, rows)
    if category in ("comod", "hopf"):
        _require(M, comodule=True)
        _require(N, comodule=True)
        _sylvester_rows([N.coaction_component(b) for b in range(n)],
                        [M.coaction_component(b) for b in range(n)], dN, dM, rows)
    return kernel_from_rows(F, dN * dM, rows)


def hom_matrix(vec: Sequence, dN: int, dM: int, field) -> Matrix:
    return Matrix(field, dN, dM, list(vec))
