"""Exact linear algebra over the rationals and prime fields.

Everything here is exact: rationals are :class:`fractions.Fraction` (always
in lowest terms with a positive denominator) and prime-field scalars are
:class:`FpElement` residues.  Matrices are immutable, dense and row-major;
elimination internally works on sparse rows (``{column: value}`` dicts)
because the constraint systems arising from Hopf modules are very sparse.

Tensor coordinates follow one fixed convention: the index of e_i (x) e_j in
V (x) W is ``i * dim(W) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class StructuralError(ValueError):
    """Malformed input: shapes, indices or fields that do not fit together."""


class FieldMismatchError(StructuralError):
    pass


class DimensionError(StructuralError):
    pass


# ---------------------------------------------------------------------------
# Fields and scalars
# ---------------------------------------------------------------------------


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FpElement:
    """A residue modulo a prime ``p``, always stored reduced to ``0 <= value < p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine F_{self.p} and F_{other.p} scalars")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldMismatchError(f"{other} has no image in F_{self.p}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by 0 in F_{self.p}")
        return FpElement(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.p) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FpElement(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Base class for the two supported exact fields."""

    zero: object
    one: object
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        """Parse a decimal integer or ``a/b`` string exactly."""
        if not isinstance(text, str):
            raise StructuralError(f"scalar must be a string, got {text!r}")
        s = text.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                num, den = int(num), int(den)
                if den == 0:
                    raise StructuralError(f"zero denominator in {text!r}")
                return self(num) / self(den)
            return self(int(s))
        except StructuralError:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise StructuralError(f"invalid scalar {text!r}") from exc

    def format(self, x) -> str:
        return str(self(x))

    def descriptor(self) -> dict:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, FpElement):
            raise FieldMismatchError(f"F_{x.p} scalar used over Q")
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot interpret {x!r} as a rational")

    def descriptor(self) -> dict:
        return {"kind": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise StructuralError(f"{p!r} is not a prime")
        self.p = p
        self.characteristic = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def __call__(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} scalar used over F_{self.p}")
            return x
        if isinstance(x, int):
            return FpElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldMismatchError(f"{x} has no image in F_{self.p}")
            return FpElement(x.numerator, self.p) / x.denominator
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot interpret {x!r} in F_{self.p}")

    def descriptor(self) -> dict:
        return {"kind": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc: dict) -> Field:
    kind = desc.get("kind") if isinstance(desc, dict) else None
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(desc.get("p"))
    raise StructuralError(f"unknown field descriptor {desc!r}")


def _same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a!r} vs {b!r}")


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "_data", "_sparse")

    def __init__(self, field: Field, rows: int, cols: int, entries: Iterable):
        data = tuple(field(x) for x in entries)
        if len(data) != rows * cols:
            raise DimensionError(f"{len(data)} entries for a {rows}x{cols} matrix")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data
        self._sparse = None

    @classmethod
    def _trusted(cls, field: Field, rows: int, cols: int, data: tuple, sparse=None) -> "Matrix":
        # entries already canonical field elements; skips coercion
        out = object.__new__(cls)
        out.field = field
        out.rows = rows
        out.cols = cols
        out._data = data
        out._sparse = sparse
        return out

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(field, len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls.from_sparse(field, n, n, [{i: field.one} for i in range(n)])

    @classmethod
    def from_sparse(cls, field: Field, rows: int, cols: int, sparse_rows: Sequence[dict]) -> "Matrix":
        if len(sparse_rows) != rows:
            raise DimensionError(f"{len(sparse_rows)} sparse rows for {rows} rows")
        data = [field.zero] * (rows * cols)
        clean = []
        for i, row in enumerate(sparse_rows):
            kept = {}
            for j, x in row.items():
                if not 0 <= j < cols:
                    raise DimensionError(f"column index {j} out of range for {cols} columns")
                x = field(x)
                if x:
                    data[i * cols + j] = x
                    kept[j] = x
            clean.append(kept)
        return cls._trusted(field, rows, cols, tuple(data), clean)

    @classmethod
    def column(cls, field: Field, vec: Sequence) -> "Matrix":
        return cls(field, len(vec), 1, vec)

    @classmethod
    def row(cls, field: Field, vec: Sequence) -> "Matrix":
        return cls(field, 1, len(vec), vec)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        data = [field.zero] * (rows * cols)
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise DimensionError("column length mismatch")
            for i, x in enumerate(c):
                data[i * cols + j] = x
        return cls(field, rows, cols, data)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        return self._data

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self._data[i * self.cols:(i + 1) * self.cols])

    def col_list(self, j: int) -> list:
        return [self._data[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list]:
        return [self.row_list(i) for i in range(self.rows)]

    def sparse_rows(self) -> list[dict]:
        if self._sparse is None:
            c = self.cols
            d = self._data
            self._sparse = [
                {j: d[i * c + j] for j in range(c) if d[i * c + j]} for i in range(self.rows)
            ]
        return self._sparse

    def sparse_cols(self) -> list[dict]:
        out: list[dict] = [{} for _ in range(self.cols)]
        for i, row in enumerate(self.sparse_rows()):
            for j, x in row.items():
                out[j][i] = x
        return out

    # -- algebra ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def _check(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise StructuralError(f"expected a Matrix, got {type(other).__name__}")
        _same_field(self.field, other.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix._trusted(self.field, self.rows, self.cols, tuple(a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix._trusted(self.field, self.rows, self.cols, tuple(a - b for a, b in zip(self._data, other._data)))

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(self.field, self.rows, self.cols, tuple(-a for a in self._data))

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._trusted(self.field, self.rows, self.cols, tuple(c * a for a in self._data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        brows = other.sparse_rows()
        out = []
        for row in self.sparse_rows():
            acc: dict = {}
            for k, a in row.items():
                for j, b in brows[k].items():
                    acc[j] = acc.get(j, zero) + a * b
            out.append({j: x for j, x in acc.items() if x})
        return Matrix.from_sparse(self.field, self.rows, other.cols, out)

    def apply(self, vec: Sequence) -> list:
        """Matrix times a coordinate vector, returned as a list."""
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.shape} matrix")
        zero = self.field.zero
        out = []
        for row in self.sparse_rows():
            acc = zero
            for k, a in row.items():
                x = vec[k]
                if x:
                    acc = acc + a * x
            out.append(acc)
        return out

    @property
    def T(self) -> "Matrix":
        d, c, r = self._data, self.cols, self.rows
        return Matrix._trusted(self.field, c, r, tuple(d[i * c + j] for j in range(c) for i in range(r)))

    def is_zero(self) -> bool:
        return not any(self._data)

    def submatrix_cols(self, cols: Sequence[int]) -> "Matrix":
        return Matrix.from_rows(self.field, [[r[j] for j in cols] for r in self.to_rows()], len(cols))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.to_rows())
        return f"Matrix<{self.field!r} {self.rows}x{self.cols}>[{body}]"


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; (A (x) B)[i*p + k, j*q + l] = A[i, j] * B[k, l]."""
    A._check(B)
    p, q = B.rows, B.cols
    rows = A.rows * p
    cols = A.cols * q
    out: list[dict] = [dict() for _ in range(rows)]
    brows = B.sparse_rows()
    for i, arow in enumerate(A.sparse_rows()):
        for j, a in arow.items():
            for k, brow in enumerate(brows):
                target = out[i * p + k]
                for l, b in brow.items():
                    target[j * q + l] = a * b
    return Matrix.from_sparse(A.field, rows, cols, out)


def hstack(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    rows = blocks[0].rows
    out = [[] for _ in range(rows)]
    for b in blocks:
        if b.rows != rows:
            raise DimensionError("hstack row mismatch")
        for i in range(rows):
            out[i].extend(b.row_list(i))
    return Matrix.from_rows(field, out, sum(b.cols for b in blocks))


def vstack(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    cols = blocks[0].cols
    rows = []
    for b in blocks:
        if b.cols != cols:
            raise DimensionError("vstack column mismatch")
        rows.extend(b.to_rows())
    return Matrix.from_rows(field, rows, cols)


# ---------------------------------------------------------------------------
# Sparse elimination engine
# ---------------------------------------------------------------------------


class Echelon:
    """Incrementally maintained reduced row-echelon form.

    Invariant: every pivot row has leading coefficient 1 and each pivot
    column is zero in every other stored row.  Rows are added one at a time
    which keeps memory proportional to the rank, not to the number of
    equations.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivot_rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        pivots = self.pivot_rows
        for col in [c for c in row if c in pivots]:
            c = row.get(col)
            if not c:
                continue
            for j, x in pivots[col].items():
                v = row.get(j)
                nv = -c * x if v is None else v - c * x
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True when it increased the rank."""
        row = self.reduce({j: x for j, x in row.items() if x})
        if not row:
            return False
        col = min(row)
        inv = self.field.one / row[col]
        row = {j: x * inv for j, x in row.items()}
        for other in self.pivot_rows.values():
            c = other.get(col)
            if c:
                for j, x in row.items():
                    v = other.get(j)
                    nv = -c * x if v is None else v - c * x
                    if nv:
                        other[j] = nv
                    else:
                        other.pop(j, None)
        self.pivot_rows[col] = row
        return True

    def rref_rows(self) -> list[tuple[int, dict]]:
        return sorted(self.pivot_rows.items())

    def kernel_vectors(self) -> list[dict]:
        """Sparse basis of the null space, one vector per free column."""
        pivots = self.pivot_rows
        # column -> [(pivot, coefficient)] for free columns
        by_free: dict[int, list] = {}
        for p, row in pivots.items():
            for j, x in row.items():
                if j != p:
                    by_free.setdefault(j, []).append((p, x))
        one = self.field.one
        out = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            vec = {f: one}
            for p, x in by_free.get(f, ()):
                vec[p] = -x
            out.append(vec)
        return out


def _dense(field: Field, vec: dict, n: int) -> list:
    out = [field.zero] * n
    for j, x in vec.items():
        out[j] = x
    return out


# ---------------------------------------------------------------------------
# Subspaces and quotients
# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of ``field^ambient_dim`` held by its canonical RREF basis."""

    __slots__ = ("field", "ambient_dim", "_rows", "pivots", "_basis")

    def __init__(self, field: Field, ambient_dim: int, rows: list[tuple[int, dict]]):
        # rows: sorted (pivot, sparse row) pairs already in RREF
        self.field = field
        self.ambient_dim = ambient_dim
        self._rows = rows
        self.pivots = tuple(p for p, _ in rows)
        self._basis = None

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable) -> "Subspace":
        ech = Echelon(field, ambient_dim)
        for v in vectors:
            if isinstance(v, dict):
                ech.add(v)
            else:
                if len(v) != ambient_dim:
                    raise DimensionError(f"vector of length {len(v)} in {ambient_dim}-space")
                ech.add({j: field(x) for j, x in enumerate(v) if x})
        return cls(field, ambient_dim, ech.rref_rows())

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [])

    @classmethod
    def whole(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [(i, {i: field.one}) for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> Matrix:
        """Rows form the canonical basis."""
        if self._basis is None:
            self._basis = Matrix.from_sparse(
                self.field, self.dim, self.ambient_dim, [r for _, r in self._rows]
            )
        return self._basis

    def vectors(self) -> list[list]:
        return [_dense(self.field, r, self.ambient_dim) for _, r in self._rows]

    def sparse_vectors(self) -> list[dict]:
        return [dict(r) for _, r in self._rows]

    def coordinates(self, vec: Sequence) -> list | None:
        """Coordinates of ``vec`` in the canonical basis, or None if not a member."""
        if len(vec) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(vec)} in {self.ambient_dim}-space")
        F = self.field
        coords = [F(vec[p]) for p in self.pivots]
        residual = {j: F(x) for j, x in enumerate(vec) if x}
        for c, (_, r) in zip(coords, self._rows):
            if c:
                for j, x in r.items():
                    v = residual.get(j)
                    nv = -c * x if v is None else v - c * x
                    if nv:
                        residual[j] = nv
                    else:
                        residual.pop(j, None)
        return None if residual else coords

    def contains(self, vec: Sequence) -> bool:
        return self.coordinates(vec) is not None

    def __contains__(self, vec) -> bool:
        return self.contains(vec)

    def combine(self, coords: Sequence) -> list:
        out = [self.field.zero] * self.ambient_dim
        for c, (_, r) in zip(coords, self._rows):
            if c:
                for j, x in r.items():
                    out[j] = out[j] + c * x
        return out

    def __add__(self, other: "Subspace") -> "Subspace":
        _same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("ambient dimension mismatch")
        return Subspace.span(
            self.field, self.ambient_dim, self.sparse_vectors() + other.sparse_vectors()
        )

    def intersection(self, other: "Subspace") -> "Subspace":
        _same_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("ambient dimension mismatch")
        # solve sum a_i u_i - sum b_j w_j = 0
        U, W = self.sparse_vectors(), other.sparse_vectors()
        k = len(U)
        cols = [dict() for _ in range(self.ambient_dim)]
        for i, u in enumerate(U):
            for j, x in u.items():
                cols[j][i] = x
        for i, w in enumerate(W):
            for j, x in w.items():
                cols[j][k + i] = -x
        ech = Echelon(self.field, k + len(W))
        for c in cols:
            if c:
                ech.add(c)
        vecs = []
        for v in ech.kernel_vectors():
            vecs.append(self.combine([v.get(i, self.field.zero) for i in range(k)]))
        return Subspace.span(self.field, self.ambient_dim, vecs)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self._rows == other._rows
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={self.pivots})"


@dataclass(frozen=True)
class QuotientSpace:
    """``ambient / denominator`` with a projection and a chosen section.

    Quotient coordinates are the non-pivot columns of the denominator's RREF
    basis, and the section sends quotient basis vector ``j`` to the ambient
    coordinate vector of the ``j``-th non-pivot column.
    """

    ambient_dim: int
    denominator: Subspace
    projection: Matrix
    section: Matrix
    free_columns: tuple

    @property
    def dim(self) -> int:
        return self.projection.rows

    def project(self, vec: Sequence) -> list:
        return self.projection.apply(list(vec))

    def lift(self, coords: Sequence) -> list:
        return self.section.apply(list(coords))


def quotient(denominator: Subspace) -> QuotientSpace:
    field = denominator.field
    n = denominator.ambient_dim
    pivots = set(denominator.pivots)
    free = [j for j in range(n) if j not in pivots]
    index = {j: i for i, j in enumerate(free)}
    proj = [dict() for _ in free]
    for j in free:
        proj[index[j]][j] = field.one
    for p, row in denominator._rows:
        # e_p == -sum_{free j} row[j] e_j modulo the denominator
        for j, x in row.items():
            if j != p:
                proj[index[j]][p] = -x
    projection = Matrix.from_sparse(field, len(free), n, proj)
    section = Matrix.from_sparse(
        field, n, len(free), [{index[j]: field.one} if j in index else {} for j in range(n)]
    )
    return QuotientSpace(n, denominator, projection, section, tuple(free))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def rref_of_rows(field: Field, ncols: int, rows: Iterable[dict]) -> Echelon:
    ech = Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    return ech


def kernel_from_rows(field: Field, ncols: int, rows: Iterable[dict]) -> Subspace:
    """Null space of the system whose equations are given as sparse rows."""
    ech = rref_of_rows(field, ncols, rows)
    return Subspace.span(field, ncols, ech.kernel_vectors())


def kernel_basis(A: Matrix) -> Subspace:
    """Canonical basis of ``{x : A x = 0}``."""
    return kernel_from_rows(A.field, A.cols, A.sparse_rows())


def image_basis(A: Matrix) -> Subspace:
    """Column space of ``A``."""
    return Subspace.span(A.field, A.rows, A.sparse_cols())


def rank(A: Matrix) -> int:
    return rref_of_rows(A.field, A.cols, A.sparse_rows()).rank


def invert(A: Matrix) -> Matrix | None:
    """Exact inverse, or None when ``A`` is singular."""
    if A.rows != A.cols:
        raise DimensionError(f"cannot invert a {A.rows}x{A.cols} matrix")
    n = A.rows
    one = A.field.one
    ech = Echelon(A.field, 2 * n)
    for i, row in enumerate(A.sparse_rows()):
        r = dict(row)
        r[n + i] = one
        ech.add(r)
    rows = ech.rref_rows()
    if [p for p, _ in rows[:n]] != list(range(n)):
        return None
    return Matrix.from_sparse(A.field, n, n, [{j - n: x for j, x in r.items() if j >= n} for _, r in rows[:n]])


@dataclass(frozen=True)
class AffineSolution:
    """One particular solution plus the homogeneous solution space."""

    particular: tuple
    kernel: Subspace


def solve_affine(A: Matrix, b: Sequence) -> AffineSolution | None:
    """Solve ``A x = b``; returns None when the system is inconsistent.

    The particular solution sets every free variable to zero.
    """
    if len(b) != A.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {A.rows} equations")
    field = A.field
    n = A.cols
    ech = Echelon(field, n + 1)
    for row, rhs in zip(A.sparse_rows(), b):
        r = dict(row)
        rhs = field(rhs)
        if rhs:
            r[n] = rhs
        ech.add(r)
    if n in ech.pivot_rows:
        return None
    x = [field.zero] * n
    for p, row in ech.pivot_rows.items():
        x[p] = row.get(n, field.zero)
    homogeneous = [v for v in ech.kernel_vectors() if n not in v]
    return AffineSolution(tuple(x), Subspace.span(field, n, homogeneous))


def compose_all(*maps: Matrix) -> Matrix:
    """``compose_all(f, g, h) == f @ g @ h``."""
    out = maps[0]
    for m in maps[1:]:
        out = out @ m
    return out
