"""JSON structure-constant files, one bialgebra per file.

Members::

    field    {"kind": "Q"} or {"kind": "Fp", "p": <prime>}
    dim      integer
    basis    array of dim labels
    unit     array of dim scalar strings
    counit   array of dim scalar strings
    mult     mult[i][j] is an array of [k, scalar] entries: b_i b_j = sum scalar b_k
    comult   comult[i] is an array of [j, k, scalar]: Delta(b_i) = sum scalar b_j (x) b_k
    name     optional display name

Scalars are strings holding a decimal integer or ``a/b``; nothing else is
accepted, so a file round-trips bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bialg import Bialgebra
from .exactla import Field, StructuralError, field_from_descriptor

MEMBERS = ("field", "dim", "basis", "unit", "counit", "mult", "comult")


class BialgebraFileError(StructuralError):
    """Malformed file; the message names the offending member and index."""


def _scalar(F: Field, s, where: str):
    if not isinstance(s, str):
        raise BialgebraFileError(f"{where}: scalar must be a string, got {json.dumps(s)}")
    try:
        return F.parse(s)
    except StructuralError as exc:
        raise BialgebraFileError(f"{where}: {exc}") from None


def _index(k, n: int, where: str) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < n:
        raise BialgebraFileError(f"{where}: basis index {json.dumps(k)} not in 0..{n - 1}")
    return k


def _array(x, where: str, length: int | None = None) -> list:
    if not isinstance(x, list):
        raise BialgebraFileError(f"{where}: expected an array")
    if length is not None and len(x) != length:
        raise BialgebraFileError(f"{where}: expected {length} entries, got {len(x)}")
    return x


def from_document(doc, *, check: bool = True) -> Bialgebra:
    if not isinstance(doc, dict):
        raise BialgebraFileError("top level: expected an object")
    for key in MEMBERS:
        if key not in doc:
            raise BialgebraFileError(f"{key}: missing member")
    extra = sorted(set(doc) - set(MEMBERS) - {"name"})
    if extra:
        raise BialgebraFileError(f"{extra[0]}: unknown member")
    try:
        F = field_from_descriptor(doc["field"])
    except StructuralError as exc:
        raise BialgebraFileError(f"field: {exc}") from None
    n = doc["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BialgebraFileError(f"dim: expected a positive integer, got {json.dumps(n)}")
    basis = _array(doc["basis"], "basis", n)
    for i, b in enumerate(basis):
        if not isinstance(b, str):
            raise BialgebraFileError(f"basis[{i}]: label must be a string")
    if len(set(basis)) != n:
        raise BialgebraFileError("basis: labels must be unique")
    unit = [_scalar(F, s, f"unit[{i}]") for i, s in enumerate(_array(doc["unit"], "unit", n))]
    counit = [
        _scalar(F, s, f"counit[{i}]") for i, s in enumerate(_array(doc["counit"], "counit", n))
    ]
    mult = []
    for i, row in enumerate(_array(doc["mult"], "mult", n)):
        out_row = []
        for j, cell in enumerate(_array(row, f"mult[{i}]", n)):
            terms = []
            for t, entry in enumerate(_array(cell, f"mult[{i}][{j}]")):
                where = f"mult[{i}][{j}][{t}]"
                k, s = _array(entry, where, 2)
                terms.append((_index(k, n, where), _scalar(F, s, where)))
            out_row.append(terms)
        mult.append(out_row)
    comult = []
    for i, cell in enumerate(_array(doc["comult"], "comult", n)):
        terms = []
        for t, entry in enumerate(_array(cell, f"comult[{i}]")):
            where = f"comult[{i}][{t}]"
            j, k, s = _array(entry, where, 3)
            terms.append((_index(j, n, where), _index(k, n, where), _scalar(F, s, where)))
        comult.append(terms)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise BialgebraFileError("name: expected a string")
    return Bialgebra.from_structure_constants(
        F, basis, mult, unit, comult, counit, check=check, name=name
    )


def loads(text: str, *, check: bool = True) -> Bialgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BialgebraFileError(f"not JSON: {exc}") from None
    return from_document(doc, check=check)


def parse_bialgebra(path, *, check: bool = True) -> Bialgebra:
    """Read and (unless ``check=False``) axiom-check a bialgebra file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BialgebraFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, check=check)


def to_document(B: Bialgebra) -> dict:
    F = B.field
    sc = B.structure_constants()
    doc = {
        "field": F.descriptor(),
        "dim": B.dim,
        "basis": list(B.basis),
        "unit": [F.format(x) for x in B.u],
        "counit": [F.format(x) for x in B.eps],
        "mult": [[[[k, F.format(c)] for k, c in cell] for cell in row] for row in sc["mult"]],
        "comult": [[[j, k, F.format(c)] for j, k, c in cell] for cell in sc["comult"]],
    }
    if B.name:
        doc["name"] = B.name
    return doc


def dumps(B: Bialgebra) -> str:
    return _compact(to_document(B)) + "\n"


def write_bialgebra(B: Bialgebra, path) -> None:
    Path(path).write_text(dumps(B), encoding="utf-8")


def _compact(doc: dict) -> str:
    # one member per line, innermost arrays kept on a single line
    lines = ["{"]
    items = list(doc.items())
    for pos, (key, value) in enumerate(items):
        comma = "," if pos < len(items) - 1 else ""
        if key in ("mult", "comult"):
            inner = ",\n    ".join(json.dumps(v, ensure_ascii=False) for v in value)
            lines.append(f'  "{key}": [\n    {inner}\n  ]{comma}')
        else:
            lines.append(f'  "{key}": {json.dumps(value, ensure_ascii=False)}{comma}')
    lines.append("}")
    return "\n".join(lines)
