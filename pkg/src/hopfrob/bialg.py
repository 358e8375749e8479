"""Finite-dimensional bialgebras given by structure constants.

A :class:`Bialgebra` stores four matrices in the tensor-coordinate
convention of :mod:`hopfrob.exactla`:

* ``m``      n x n^2, column ``i*n + j`` holds the coordinates of b_i b_j
* ``u``      the coordinate vector of the unit (not necessarily b_0)
* ``delta``  n^2 x n, column ``i`` holds Delta(b_i)
* ``eps``    the counit covector

Construction runs :func:`check_bialgebra_axioms` and raises
:class:`AxiomError` on failure unless ``check=False`` (used to build mutants).
"""

from __future__ import annotations

from typing import Sequence

from .exactla import (
    DimensionError,
    Field,
    Matrix,
    StructuralError,
    kernel_basis,
    kron,
)
from .report import Check, Report


class AxiomError(StructuralError):
    """Raised when a candidate fails the bialgebra axioms."""

    def __init__(self, report: Report):
        self.report = report
        super().__init__("bialgebra axioms fail:\n" + report.render())


def flip_matrix(field: Field, p: int, q: int) -> Matrix:
    """The twist V (x) W -> W (x) V for dim V = p, dim W = q."""
    rows = [dict() for _ in range(p * q)]
    for i in range(p):
        for j in range(q):
            rows[j * p + i][i * q + j] = field.one
    return Matrix.from_sparse(field, q * p, p * q, rows)


class Bialgebra:
    def __init__(
        self,
        field: Field,
        basis: Sequence[str],
        m: Matrix,
        u: Sequence,
        delta: Matrix,
        eps: Sequence,
        *,
        check: bool = True,
        name: str | None = None,
    ):
        n = len(basis)
        if n < 1:
            raise StructuralError("a bialgebra needs dimension at least 1")
        if len(set(basis)) != n:
            raise StructuralError("basis labels must be unique")
        if m.shape != (n, n * n):
            raise DimensionError(f"multiplication must be {n}x{n * n}, got {m.shape}")
        if delta.shape != (n * n, n):
            raise DimensionError(f"comultiplication must be {n * n}x{n}, got {delta.shape}")
        if len(u) != n or len(eps) != n:
            raise DimensionError("unit and counit must have length dim")
        for mat in (m, delta):
            if mat.field != field:
                raise StructuralError("structure matrices over a different field")
        self.field = field
        self.basis = tuple(basis)
        self.dim = n
        self.m = m
        self.u = tuple(field(x) for x in u)
        self.delta = delta
        self.eps = tuple(field(x) for x in eps)
        self.name = name
        self._lmul = None
        self._rmul = None
        self._mt = None
        self._dt = None
        if check:
            report = check_bialgebra_axioms(self)
            if not report.passed:
                raise AxiomError(report)

    # -- structure-constant access ---------------------------------------

    @classmethod
    def from_structure_constants(
        cls,
        field: Field,
        basis: Sequence[str],
        mult,
        unit: Sequence,
        comult,
        counit: Sequence,
        *,
        check: bool = True,
        name: str | None = None,
    ) -> "Bialgebra":
        """Build from sparse data.

        ``mult[i][j]`` is a list of ``(k, c)`` meaning b_i b_j = sum c b_k;
        ``comult[i]`` is a list of ``(j, k, c)`` meaning
        Delta(b_i) = sum c b_j (x) b_k.
        """
        n = len(basis)
        mcols = [dict() for _ in range(n * n)]
        if len(mult) != n:
            raise DimensionError("mult must have one entry per basis element")
        for i in range(n):
            if len(mult[i]) != n:
                raise DimensionError(f"mult[{i}] must have {n} entries")
            for j in range(n):
                for k, c in mult[i][j]:
                    _check_index(k, n, f"mult[{i}][{j}]")
                    c = field(c)
                    col = mcols[i * n + j]
                    col[k] = col.get(k, field.zero) + c
        m = Matrix.from_sparse(field, n * n, n, mcols).T
        dcols = [dict() for _ in range(n)]
        if len(comult) != n:
            raise DimensionError("comult must have one entry per basis element")
        for i in range(n):
            for j, k, c in comult[i]:
                _check_index(j, n, f"comult[{i}]")
                _check_index(k, n, f"comult[{i}]")
                c = field(c)
                dcols[i][j * n + k] = dcols[i].get(j * n + k, field.zero) + c
        delta = Matrix.from_sparse(field, n, n * n, dcols).T
        return cls(field, basis, m, unit, delta, counit, check=check, name=name)

    def structure_constants(self) -> dict:
        """Sparse lists in the layout accepted by :meth:`from_structure_constants`."""
        n = self.dim
        mcols = self.m.sparse_cols()
        dcols = self.delta.sparse_cols()
        mult = [[sorted(mcols[i * n + j].items()) for j in range(n)] for i in range(n)]
        comult = [
            [(jk // n, jk % n, c) for jk, c in sorted(dcols[i].items())] for i in range(n)
        ]
        return {
            "basis": list(self.basis),
            "mult": mult,
            "unit": list(self.u),
            "comult": comult,
            "counit": list(self.eps),
        }

    def replace(self, *, check: bool = True, **changes) -> "Bialgebra":
        kw = dict(
            field=self.field, basis=self.basis, m=self.m, u=self.u,
            delta=self.delta, eps=self.eps, name=self.name,
        )
        kw.update(changes)
        return Bialgebra(
            kw["field"], kw["basis"], kw["m"], kw["u"], kw["delta"], kw["eps"],
            check=check, name=kw["name"],
        )

    def __eq__(self, other):
        if not isinstance(other, Bialgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.basis == other.basis
            and self.m == other.m
            and self.u == other.u
            and self.delta == other.delta
            and self.eps == other.eps
        )

    def __hash__(self):
        return hash((self.basis, self.m, self.delta))

    def __repr__(self):
        label = self.name or "Bialgebra"
        return f"<{label} over {self.field!r}, dim {self.dim}, basis {list(self.basis)}>"

    # -- element arithmetic ----------------------------------------------

    def e(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def vec(self, **coeffs) -> list:
        """Element from label coefficients, e.g. ``B.vec(x=1, gx=-1)``."""
        v = [self.field.zero] * self.dim
        for label, c in coeffs.items():
            v[self.index(label)] = self.field(c)
        return v

    @property
    def one(self) -> list:
        return list(self.u)

    def mul(self, x: Sequence, y: Sequence) -> list:
        return self.m.apply(_tensor(self.field, x, y))

    def comul(self, x: Sequence) -> list:
        return self.delta.apply(list(x))

    def counit(self, x: Sequence):
        out = self.field.zero
        for a, b in zip(self.eps, x):
            if b:
                out = out + a * b
        return out

    def left_mult(self, i: int) -> Matrix:
        """Matrix of b -> b_i b."""
        if self._lmul is None:
            self._lmul = [self._mult_matrix(i, left=True) for i in range(self.dim)]
        return self._lmul[i]

    def right_mult(self, i: int) -> Matrix:
        """Matrix of b -> b b_i."""
        if self._rmul is None:
            self._rmul = [self._mult_matrix(i, left=False) for i in range(self.dim)]
        return self._rmul[i]

    def left_mult_by(self, a: Sequence) -> Matrix:
        return _lincomb(self.field, self.dim, a, self.left_mult)

    def right_mult_by(self, a: Sequence) -> Matrix:
        return _lincomb(self.field, self.dim, a, self.right_mult)

    def _mult_matrix(self, i: int, left: bool) -> Matrix:
        n = self.dim
        cols = self.m.sparse_cols()
        picked = [cols[i * n + j] if left else cols[j * n + i] for j in range(n)]
        return Matrix.from_sparse(self.field, n, n, picked).T

    @property
    def mult_table(self) -> list[list[dict]]:
        """``mult_table[a][b]`` is the sparse vector b_a b_b."""
        if self._mt is None:
            n = self.dim
            cols = self.m.sparse_cols()
            self._mt = [[cols[a * n + b] for b in range(n)] for a in range(n)]
        return self._mt

    @property
    def comult_table(self) -> list[dict]:
        """``comult_table[a]`` maps ``(i, j)`` to the coefficient of b_i (x) b_j in Delta(b_a)."""
        if self._dt is None:
            n = self.dim
            self._dt = [
                {divmod(ij, n): c for ij, c in col.items()} for col in self.delta.sparse_cols()
            ]
        return self._dt

    # -- common derived matrices -----------------------------------------

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)

    def unit_matrix(self) -> Matrix:
        """u : K -> B as an n x 1 matrix."""
        return Matrix.column(self.field, self.u)

    def counit_matrix(self) -> Matrix:
        return Matrix.row(self.field, self.eps)

    def unit_counit(self) -> Matrix:
        """The convolution unit u o eps."""
        return self.unit_matrix() @ self.counit_matrix()

    def flip(self) -> Matrix:
        return flip_matrix(self.field, self.dim, self.dim)

    def tensor_algebra_mult(self) -> Matrix:
        """Multiplication of the algebra B (x) B, as an n^2 x n^4 matrix."""
        n = self.dim
        mid = kron(kron(Matrix.identity(self.field, n), self.flip()), Matrix.identity(self.field, n))
        return kron(self.m, self.m) @ mid

    def augmentation_ideal(self):
        """B+ = ker(eps)."""
        return kernel_basis(self.counit_matrix())


def format_element(B: Bialgebra, v: Sequence, suffix: str = "") -> str:
    """``x - gx``, ``1/2*g + 1``; zero prints as ``0``.  ``suffix`` marks
    dual-basis labels, e.g. ``"*"``."""
    return _format_terms(B.field, [(f"{b}{suffix}", c) for b, c in zip(B.basis, v)])


def format_tensor(B: Bialgebra, v: Sequence) -> str:
    n = B.dim
    labels = [f"{B.basis[i // n]} ⊗ {B.basis[i % n]}" for i in range(n * n)]
    return _format_terms(B.field, list(zip(labels, v)))


def _format_terms(F: Field, terms) -> str:
    out = ""
    for label, c in terms:
        if not c:
            continue
        s = F.format(c)
        neg = s.startswith("-")
        mag = s[1:] if neg else s
        term = label if mag == "1" else f"{mag}*{label}"
        if not out:
            out = ("-" if neg else "") + term
        else:
            out += (" - " if neg else " + ") + term
    return out or "0"


def _check_index(k, n, where):
    if not isinstance(k, int) or not 0 <= k < n:
        raise StructuralError(f"{where}: index {k!r} out of range 0..{n - 1}")


def _tensor(field: Field, x: Sequence, y: Sequence) -> list:
    out = [field.zero] * (len(x) * len(y))
    q = len(y)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    out[i * q + j] = a * b
    return out


def tensor_vectors(field: Field, x: Sequence, y: Sequence) -> list:
    return _tensor(field, x, y)


def _lincomb(field: Field, n: int, coeffs: Sequence, mats) -> Matrix:
    out = Matrix.zeros(field, n, n)
    for i, c in enumerate(coeffs):
        if c:
            out = out + mats(i).scale(c)
    return out


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------


def _decode(index: int, n: int, arity: int) -> tuple:
    out = []
    for _ in range(arity):
        out.append(index % n)
        index //= n
    return tuple(reversed(out))


def compare_columns(name: str, lhs: Matrix, rhs: Matrix, B: Bialgebra, arity: int) -> Check:
    if lhs == rhs:
        return Check(name, True)
    for col in range(lhs.cols):
        a, b = lhs.col_list(col), rhs.col_list(col)
        if a != b:
            idx = _decode(col, B.dim, arity) if arity else ()
            labels = tuple(B.basis[i] for i in idx)
            return Check(name, False, witness=labels, lhs=a, rhs=b)
    raise AssertionError("unequal matrices with equal columns")


def check_bialgebra_axioms(B: Bialgebra) -> Report:
    """Check associativity, unitality, coassociativity, counitality and the
    compatibility of Delta and eps with the multiplication, exactly on all
    basis tuples."""
    F = B.field
    n = B.dim
    I = B.identity()
    u = B.unit_matrix()
    eps = B.counit_matrix()
    m, delta = B.m, B.delta
    report = Report(f"bialgebra axioms for {B.name or 'B'}")

    report.add(compare_columns("associativity", m @ kron(m, I), m @ kron(I, m), B, 3))

    left_unit = m @ kron(u, I)
    right_unit = m @ kron(I, u)
    c = compare_columns("unitality", left_unit, I, B, 1)
    if c.passed:
        c = compare_columns("unitality", right_unit, I, B, 1)
    report.add(c)

    report.add(
        compare_columns("coassociativity", kron(delta, I) @ delta, kron(I, delta) @ delta, B, 1)
    )

    c = compare_columns("counitality", kron(eps, I) @ delta, I, B, 1)
    if c.passed:
        c = compare_columns("counitality", kron(I, eps) @ delta, I, B, 1)
    report.add(c)

    lhs = delta @ m
    rhs = B.tensor_algebra_mult() @ kron(delta, delta)
    c = compare_columns("comultiplication_multiplicative", lhs, rhs, B, 2)
    if c.passed:
        d1 = delta.apply(list(B.u))
        one_one = tensor_vectors(F, B.u, B.u)
        if d1 != one_one:
            c = Check("comultiplication_multiplicative", False, witness=("1",), lhs=d1, rhs=one_one,
                      detail="Delta(1) != 1 (x) 1")
    report.add(c)

    c = compare_columns("counit_multiplicative", eps @ m, kron(eps, eps), B, 2)
    if c.passed and B.counit(B.u) != F.one:
        c = Check("counit_multiplicative", False, witness=("1",), lhs=[B.counit(B.u)], rhs=[F.one],
                  detail="eps(1) != 1")
    report.add(c)
    return report


# ---------------------------------------------------------------------------
# Derived bialgebras
# ---------------------------------------------------------------------------


def dual_bialgebra(B: Bialgebra) -> Bialgebra:
    """B* on the dual basis: multiplication is convolution, i.e. the transpose
    of Delta; comultiplication is the transpose of m; unit eps; counit
    evaluation at 1."""
    name = f"{B.name}*" if B.name else None
    return Bialgebra(
        B.field,
        [f"{b}*" for b in B.basis],
        B.delta.T,
        B.eps,
        B.m.T,
        B.u,
        name=name,
    )


def double_dual_relabel(B: Bialgebra) -> Bialgebra:
    """Undo the ``**`` suffix introduced by dualising twice."""
    labels = [b[:-2] if b.endswith("**") else b for b in B.basis]
    name = B.name[:-2] if B.name and B.name.endswith("**") else B.name
    return B.replace(basis=labels, name=name, check=False)


def op_cop(B: Bialgebra, opposite_mult: bool, opposite_comult: bool) -> Bialgebra:
    m = B.m @ B.flip() if opposite_mult else B.m
    delta = B.flip() @ B.delta if opposite_comult else B.delta
    suffix = ("^op" if opposite_mult else "") + ("^cop" if opposite_comult else "")
    name = f"{B.name}{suffix}" if B.name and suffix else B.name
    return B.replace(m=m, delta=delta, name=name)
