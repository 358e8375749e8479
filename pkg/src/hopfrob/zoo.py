"""Named example bialgebras.

The infinite-dimensional one-sided Hopf algebras of Green-Nichols-Taft are
deliberately absent: a finite-dimensional bialgebra with a one-sided
antipode is already a Hopf algebra, so no finite structure-constant model of
a genuine one-sided example exists.
"""

from __future__ import annotations

from itertools import permutations
from math import comb
from typing import Sequence

from .bialg import Bialgebra
from .exactla import QQ, Field, PrimeField, StructuralError


class ZooValidationError(StructuralError):
    pass


def _validate_table(table: Sequence[Sequence[int]], need_inverses: bool) -> int:
    n = len(table)
    if n == 0:
        raise ZooValidationError("empty Cayley table")
    for a, row in enumerate(table):
        if len(row) != n:
            raise ZooValidationError(f"row {a} has length {len(row)}, expected {n}")
        for b, c in enumerate(row):
            if not isinstance(c, int) or not 0 <= c < n:
                raise ZooValidationError(f"cell ({a},{b}) = {c!r} is not an element index")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ZooValidationError(f"not associative at ({a},{b},{c})")
    identities = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if not identities:
        raise ZooValidationError("no identity element")
    e = identities[0]
    if need_inverses:
        for a in range(n):
            if not any(table[a][b] == e == table[b][a] for b in range(n)):
                raise ZooValidationError(f"element {a} has no inverse (cell row {a})")
    return e


def monoid_algebra(
    table: Sequence[Sequence[int]],
    field: Field = QQ,
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> Bialgebra:
    """K M with Delta(e_m) = e_m (x) e_m and eps(e_m) = 1."""
    e = _validate_table(table, need_inverses=False)
    return _semigroup_bialgebra(table, e, field, labels, name or "monoid_algebra")


def group_algebra(
    table: Sequence[Sequence[int]],
    field: Field = QQ,
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> Bialgebra:
    e = _validate_table(table, need_inverses=True)
    return _semigroup_bialgebra(table, e, field, labels, name or "group_algebra")


def _semigroup_bialgebra(table, e, field, labels, name):
    n = len(table)
    labels = list(labels) if labels is not None else [f"e{i}" for i in range(n)]
    if len(labels) != n:
        raise ZooValidationError("one label per element required")
    mult = [[[(table[a][b], 1)] for b in range(n)] for a in range(n)]
    unit = [1 if i == e else 0 for i in range(n)]
    comult = [[(a, a, 1)] for a in range(n)]
    return Bialgebra.from_structure_constants(
        field, labels, mult, unit, comult, [1] * n, name=name
    )


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group_table(k: int) -> tuple[list[list[int]], list[str]]:
    """Cayley table of S_k; elements are permutations in lexicographic order,
    composed as (p q)(i) = p(q(i))."""
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    labels = ["".join(str(i + 1) for i in p) for p in perms]
    return table, labels


IDEMPOTENT_MONOID_TABLE = [[0, 1], [1, 1]]


def cyclic_group_algebra(n: int, field: Field = QQ) -> Bialgebra:
    labels = ["1"] + (["g"] if n == 2 else [f"g{i}" for i in range(1, n)])
    if n > 2:
        labels = ["1", "g"] + [f"g{i}" for i in range(2, n)]
    return group_algebra(cyclic_group_table(n), field, labels, name=f"C{n}")


def symmetric_group_algebra(k: int = 3, field: Field = QQ) -> Bialgebra:
    table, labels = symmetric_group_table(k)
    return group_algebra(table, field, labels, name=f"S{k}")


def idempotent_monoid_algebra(field: Field = QQ) -> Bialgebra:
    """The monoid {1, s} with s^2 = s; a bialgebra that is not Hopf."""
    return monoid_algebra(IDEMPOTENT_MONOID_TABLE, field, ["1", "s"], name="idempotent_monoid")


def sweedler_h4(field: Field = QQ) -> Bialgebra:
    """Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, Delta g = g (x) g,
    Delta x = x (x) 1 + g (x) x.  Basis order 1, g, x, gx."""
    # basis element g^a x^b has index 2*b + a
    def idx(a, b):
        return 2 * b + a

    mult = [[[] for _ in range(4)] for _ in range(4)]
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                for d in (0, 1):
                    if b + d >= 2:
                        continue
                    sign = -1 if (b and c) else 1
                    mult[idx(a, b)][idx(c, d)] = [(idx((a + c) % 2, b + d), sign)]
    comult = [
        [(0, 0, 1)],
        [(1, 1, 1)],
        [(2, 0, 1), (1, 2, 1)],
        [(3, 1, 1), (0, 3, 1)],
    ]
    return Bialgebra.from_structure_constants(
        field, ["1", "g", "x", "gx"], mult, [1, 0, 0, 0], comult, [1, 1, 0, 0], name="H4"
    )


def trivial(field: Field = QQ) -> Bialgebra:
    return Bialgebra.from_structure_constants(
        field, ["1"], [[[(0, 1)]]], [1], [[(0, 0, 1)]], [1], name="trivial"
    )


def divided_power_char_p(p: int, field: Field | None = None) -> Bialgebra:
    """K[x]/(x^p) with x primitive.  Over F_p this is a Hopf algebra; over
    any other field the multiplicativity of Delta fails and construction
    raises :class:`~hopfrob.bialg.AxiomError`."""
    if field is None:
        field = PrimeField(p)
    labels = ["1", "x"] + [f"x^{k}" for k in range(2, p)]
    mult = [[[(a + b, 1)] if a + b < p else [] for b in range(p)] for a in range(p)]
    comult = [[(i, k - i, comb(k, i)) for i in range(k + 1)] for k in range(p)]
    unit = [1] + [0] * (p - 1)
    counit = [1] + [0] * (p - 1)
    return Bialgebra.from_structure_constants(
        field, labels, mult, unit, comult, counit, name=f"divided_power_{p}"
    )


def zoo(name: str, field: Field = QQ, **params) -> Bialgebra:
    """Look up a zoo member by name.

    ``group_algebra`` and ``monoid_algebra`` take ``table=`` (and optional
    ``labels=``); ``divided_power_char_p`` takes ``p=``.
    """
    if name == "group_algebra":
        return group_algebra(params["table"], field, params.get("labels"))
    if name == "monoid_algebra":
        return monoid_algebra(params["table"], field, params.get("labels"))
    if name == "sweedler_h4":
        return sweedler_h4(field)
    if name == "trivial":
        return trivial(field)
    if name == "divided_power_char_p":
        p = params.get("p", field.characteristic)
        return divided_power_char_p(p, field)
    if name == "idempotent_monoid":
        return idempotent_monoid_algebra(field)
    if name.startswith("c") and name[1:].isdigit():
        return cyclic_group_algebra(int(name[1:]), field)
    if name.startswith("s") and name[1:].isdigit():
        return symmetric_group_algebra(int(name[1:]), field)
    raise KeyError(f"unknown zoo member {name!r}")
