"""Brute-force reference computations that share no code with hopfrob.

Products and coproducts are hand-coded on monomials and all linear algebra
goes through sympy, so agreement with the package is a genuine two-route
check rather than a re-run of the same elimination.
"""

from __future__ import annotations

from itertools import product

import sympy as sp


class HandCoded:
    """A bialgebra given by Python functions on basis indices."""

    def __init__(self, n, mul, comul, unit, counit):
        self.n = n
        self.mul = mul          # (i, j) -> {k: c}
        self.comul = comul      # i -> {(j, k): c}
        self.unit = unit        # list
        self.counit = counit    # list

    def mul_vec(self, x, y):
        out = [sp.Integer(0)] * self.n
        for i, j in product(range(self.n), repeat=2):
            if x[i] and y[j]:
                for k, c in self.mul(i, j).items():
                    out[k] += x[i] * y[j] * c
        return out


def sweedler() -> HandCoded:
    # basis 1, g, x, gx; index 2*b + a for g^a x^b
    mono = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}
    back = {v: k for k, v in mono.items()}

    def mul(i, j):
        a, b = mono[i]
        c, d = mono[j]
        if b + d >= 2:
            return {}
        sign = -1 if (b and c) else 1  # x g = -g x
        return {back[((a + c) % 2, b + d)]: sign}

    coprods = {
        0: {(0, 0): 1},
        1: {(1, 1): 1},
        2: {(2, 0): 1, (1, 2): 1},   # x (x) 1 + g (x) x
        3: {(3, 1): 1, (0, 3): 1},   # gx (x) g + 1 (x) gx
    }
    return HandCoded(4, mul, coprods.__getitem__, [1, 0, 0, 0], [1, 1, 0, 0])


def cyclic2() -> HandCoded:
    return HandCoded(
        2,
        lambda i, j: {(i + j) % 2: 1},
        lambda i: {(i, i): 1},
        [1, 0],
        [1, 1],
    )


def _normalize(v):
    v = list(v)
    lead = next(x for x in v if x != 0)
    return [sp.nsimplify(x / lead) for x in v]


def left_integrals_in(H: HandCoded):
    """t with a t = eps(a) t for every basis a."""
    t = sp.symbols(f"t0:{H.n}")
    eqs = []
    for a in range(H.n):
        ea = [1 if k == a else 0 for k in range(H.n)]
        prod_ = H.mul_vec(ea, list(t))
        eqs += [prod_[k] - H.counit[a] * t[k] for k in range(H.n)]
    A, _ = sp.linear_eq_to_matrix(eqs, t)
    return [_normalize(v) for v in A.nullspace()]


def right_integrals_on(H: HandCoded):
    """lam with lam(a_1) a_2 = lam(a) 1."""
    lam = sp.symbols(f"l0:{H.n}")
    eqs = []
    for a in range(H.n):
        lhs = [sp.Integer(0)] * H.n
        for (i, j), c in H.comul(a).items():
            lhs[j] += c * lam[i]
        eqs += [lhs[k] - lam[a] * H.unit[k] for k in range(H.n)]
    A, _ = sp.linear_eq_to_matrix(eqs, lam)
    return [_normalize(v) for v in A.nullspace()]


def form(H: HandCoded, psi):
    basis = [[1 if k == i else 0 for k in range(H.n)] for i in range(H.n)]
    return [
        [sum(p * c for p, c in zip(psi, H.mul_vec(basis[i], basis[j]))) for j in range(H.n)]
        for i in range(H.n)
    ]


def norm_T(H: HandCoded, psi):
    """T with psi(T b) = eps(b)."""
    T = sp.symbols(f"T0:{H.n}")
    eqs = []
    for b in range(H.n):
        eb = [1 if k == b else 0 for k in range(H.n)]
        eqs.append(sum(p * c for p, c in zip(psi, H.mul_vec(list(T), eb))) - H.counit[b])
    (sol,) = sp.linsolve(eqs, T)
    return list(sol)


def right_antipode(H: HandCoded):
    """S with b_1 S(b_2) = eps(b) 1, as columns S(b_j); None if inconsistent."""
    n = H.n
    s = sp.symbols(f"s0:{n * n}")  # s[l*n + j] = coefficient of b_l in S(b_j)
    eqs = []
    for b in range(n):
        lhs = [sp.Integer(0)] * n
        for (i, j), c in H.comul(b).items():
            col = [s[l * n + j] for l in range(n)]
            ei = [1 if k == i else 0 for k in range(n)]
            for k, x in enumerate(H.mul_vec(ei, col)):
                lhs[k] += c * x
        eqs += [lhs[k] - H.counit[b] * H.unit[k] for k in range(n)]
    sols = sp.linsolve(eqs, s)
    if not sols:
        return None
    (sol,) = sols
    return [[sol[l * n + j] for l in range(n)] for j in range(n)]


def group_inverse_permutation(table):
    e = next(i for i in range(len(table)) if all(table[i][x] == x for x in range(len(table))))
    return [next(b for b in range(len(table)) if table[a][b] == e) for a in range(len(table))]
