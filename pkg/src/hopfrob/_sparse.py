"""Small helpers for vectors stored as ``{index: nonzero scalar}`` dicts."""

from __future__ import annotations

from typing import Sequence


def axpy(out: dict, c, vec: dict) -> dict:
    """out += c * vec, in place, dropping zeros."""
    if not c:
        return out
    for k, x in vec.items():
        v = out.get(k)
        nv = c * x if v is None else v + c * x
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def sparse(vec: Sequence) -> dict:
    return {i: x for i, x in enumerate(vec) if x}


def dense(field, vec: dict, n: int) -> list:
    out = [field.zero] * n
    for i, x in vec.items():
        out[i] = x
    return out


def lincomb(terms) -> dict:
    """sum of c * vec over ``(c, vec)`` pairs."""
    out: dict = {}
    for c, vec in terms:
        axpy(out, c, vec)
    return out
