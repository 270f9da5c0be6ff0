"""Reading and writing algebra files.

The on-disk format is UTF-8 JSON:

    {"dim": n,
     "basis": ["e1", ...],
     "table": <products>,
     "bracket_table": <products>}     # optional second product

where <products> is either a dense n x n array of {basis_name: "p/q"}
maps, or a sparse object mapping "ei*ej" to {basis_name: "p/q"}.  Omitted
entries are zero and every rational is a string with canonical sign on the
numerator.  `bracket_table` carries a second product over the same basis
(used for Poisson-style input).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Algebra
from .errors import AlgebraFormatError
from .linalg import F0, Matrix


def _parse_rational(text, where):
    if not isinstance(text, str):
        raise AlgebraFormatError(f"rational values must be strings, got {text!r}", where)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise AlgebraFormatError(f"not a rational: {text!r} ({exc})", where) from None


def _parse_combo(obj, names, where):
    out = [F0] * len(names)
    if not isinstance(obj, dict):
        raise AlgebraFormatError("product entries must be {basis_name: rational} maps", where)
    for name, val in obj.items():
        if name not in names:
            raise AlgebraFormatError(f"unknown basis name {name!r}", where)
        out[names.index(name)] = _parse_rational(val, f"{where}.{name}")
    return tuple(out)


def _parse_products(obj, names, where):
    n = len(names)
    table = [[(F0,) * n for _ in range(n)] for _ in range(n)]
    if isinstance(obj, list):
        if len(obj) != n or any(not isinstance(r, list) or len(r) != n for r in obj):
            raise AlgebraFormatError(f"dense table must be a {n}x{n} array", where)
        for i, row in enumerate(obj):
            for j, cell in enumerate(row):
                table[i][j] = _parse_combo(cell, names, f"{where}[{i}][{j}]")
    elif isinstance(obj, dict):
        for key, cell in obj.items():
            parts = key.split("*")
            if len(parts) != 2 or parts[0] not in names or parts[1] not in names:
                raise AlgebraFormatError(f"bad product key {key!r}", where)
            i, j = names.index(parts[0]), names.index(parts[1])
            table[i][j] = _parse_combo(cell, names, f"{where}.{key}")
    else:
        raise AlgebraFormatError("table must be a dense array or a sparse object", where)
    return table


def parse_algebra_document(doc, where="<algebra>"):
    """Parse a loaded JSON document into (product, bracket-or-None)."""
    if not isinstance(doc, dict):
        raise AlgebraFormatError("top level must be an object", where)
    try:
        dim = doc["dim"]
        basis = doc["basis"]
    except KeyError as exc:
        raise AlgebraFormatError(f"missing field {exc}", where) from None
    if not isinstance(dim, int) or dim < 0:
        raise AlgebraFormatError("dim must be a nonnegative integer", f"{where}.dim")
    if not isinstance(basis, list) or len(basis) != dim or len(set(basis)) != dim:
        raise AlgebraFormatError(f"basis must list {dim} distinct names", f"{where}.basis")
    names = tuple(str(b) for b in basis)
    if "table" not in doc:
        raise AlgebraFormatError("missing field 'table'", where)
    table = _parse_products(doc["table"], names, f"{where}.table")
    alg = Algebra(names, tuple(tuple(row) for row in table))
    bracket = None
    if "bracket_table" in doc:
        braw = _parse_products(doc["bracket_table"], names, f"{where}.bracket_table")
        bracket = Algebra(names, tuple(tuple(row) for row in braw))
    return alg, bracket


def load_algebra_pair(path):
    """Load (product, bracket-or-None) from a file."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AlgebraFormatError(f"invalid JSON: {exc}", f"{path}:{exc.lineno}:{exc.colno}") from None
    return parse_algebra_document(doc, where=str(path))


def load_algebra(path) -> Algebra:
    return load_algebra_pair(path)[0]


def _products_document(alg: Algebra):
    out = {}
    for i, iname in enumerate(alg.basis_names):
        for j, jname in enumerate(alg.basis_names):
            combo = {
                kname: str(c)
                for kname, c in zip(alg.basis_names, alg.table[i][j])
                if c
            }
            if combo:
                out[f"{iname}*{jname}"] = combo
    return out


def algebra_document(alg: Algebra, bracket: Algebra = None):
    """Canonical (sparse, zero-free) JSON document for an algebra."""
    doc = {
        "dim": alg.dim,
        "basis": list(alg.basis_names),
        "table": _products_document(alg),
    }
    if bracket is not None:
        doc["bracket_table"] = _products_document(bracket)
    return doc


def dumps_algebra(alg: Algebra, bracket: Algebra = None) -> str:
    return json.dumps(algebra_document(alg, bracket), indent=2) + "\n"


def save_algebra(alg: Algebra, path, bracket: Algebra = None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_algebra(alg, bracket))


def load_linear_map(path, expected_dim=None) -> Matrix:
    """Load an n x n map from {"dim": n, "matrix": [["p/q", ...], ...]}.

    matrix[i][j] is the coefficient of e_i in the image of e_j (column
    action, matching LinearMap conventions elsewhere).
    """
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise AlgebraFormatError(f"invalid JSON: {exc}", f"{path}:{exc.lineno}:{exc.colno}") from None
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise AlgebraFormatError("expected an object with a 'matrix' field", str(path))
    rows = doc["matrix"]
    n = doc.get("dim", len(rows))
    if expected_dim is not None and n != expected_dim:
        raise AlgebraFormatError(f"map has dim {n}, algebra has dim {expected_dim}", str(path))
    if not isinstance(rows, list) or len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraFormatError(f"matrix must be {n}x{n}", f"{path}.matrix")
    parsed = [
        [_parse_rational(rows[i][j], f"{path}.matrix[{i}][{j}]") for j in range(n)]
        for i in range(n)
    ]
    return Matrix.from_rows(parsed)
