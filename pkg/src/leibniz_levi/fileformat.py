"""JSON algebra and map files.

Algebra file::

    {"name": "L201", "dim": 8, "basis": ["e", "f", ...],
     "products": [{"left": "e", "right": "h", "result": [["2", "e"]]}, ...]}

Coefficients are strings ``"p"`` or ``"p/q"``; unlisted products are zero.

Map file (a linear map given on vectors spanning its source)::

    {"map": [{"from": [["1", "e"]], "to": [["2", "x0"]]}, ...]}
"""
from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from pathlib import Path

from . import linalg as la
from .core import AlgebraTable
from .errors import FormatError

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def max_dim() -> int:
    return int(os.environ.get("MAX_DIM", "64"))


def parse_coef(s, where: str) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise FormatError(f"{where}: coefficient must be a rational string, got {s!r}")
    s = str(s)
    if not _RATIONAL.match(s):
        raise FormatError(f"{where}: malformed rational {s!r}")
    try:
        return la.frac(s.replace(" ", ""))
    except ZeroDivisionError:
        raise FormatError(f"{where}: zero denominator in {s!r}") from None


def format_coef(c: Fraction) -> str:
    return str(c)


def _terms(entry, idx: dict, n: int, where: str) -> list:
    if not isinstance(entry, list):
        raise FormatError(f"{where}: expected a list of [coef, basis_name] pairs")
    v = [la.ZERO] * n
    for k, term in enumerate(entry):
        if not (isinstance(term, list) and len(term) == 2):
            raise FormatError(f"{where}[{k}]: expected [coef, basis_name]")
        coef, nm = term
        if nm not in idx:
            raise FormatError(f"{where}[{k}]: unknown basis name {nm!r}")
        v[idx[nm]] += parse_coef(coef, f"{where}[{k}]")
    return v


def algebra_from_dict(doc) -> AlgebraTable:
    if not isinstance(doc, dict):
        raise FormatError("top level: expected an object")
    for key in ("dim", "basis", "products"):
        if key not in doc:
            raise FormatError(f"missing field {key!r}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise FormatError("name: expected a string")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise FormatError("dim: expected a non-negative integer")
    if dim > max_dim():
        raise FormatError(f"dim: {dim} exceeds MAX_DIM={max_dim()}")
    basis = doc["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) and b for b in basis):
        raise FormatError("basis: expected an array of identifiers")
    if len(basis) != dim:
        raise FormatError(f"basis: {len(basis)} names for dim {dim}")
    if len(set(basis)) != dim:
        raise FormatError("basis: duplicate identifiers")
    idx = {b: i for i, b in enumerate(basis)}
    prods = {}
    if not isinstance(doc["products"], list):
        raise FormatError("products: expected an array")
    for k, entry in enumerate(doc["products"]):
        where = f"products[{k}]"
        if not isinstance(entry, dict) or not {"left", "right", "result"} <= set(entry):
            raise FormatError(f"{where}: expected {{left, right, result}}")
        l, r = entry["left"], entry["right"]
        for side, nm in (("left", l), ("right", r)):
            if nm not in idx:
                raise FormatError(f"{where}.{side}: unknown basis name {nm!r}")
        key = (idx[l], idx[r])
        if key in prods:
            raise FormatError(f"{where}: duplicate entry for [{l}, {r}]")
        prods[key] = _terms(entry["result"], idx, dim, f"{where}.result")
    return AlgebraTable.from_products(basis, prods, name)


def algebra_to_dict(A: AlgebraTable) -> dict:
    products = []
    for i, j, terms in A.nonzero_products():
        products.append({
            "left": A.basis_names[i],
            "right": A.basis_names[j],
            "result": [[format_coef(c), A.basis_names[k]] for k, c in terms],
        })
    return {"name": A.name, "dim": A.dim, "basis": list(A.basis_names), "products": products}


def parse_algebra(text: str) -> AlgebraTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    return algebra_from_dict(doc)


def render_algebra(A: AlgebraTable) -> str:
    return json.dumps(algebra_to_dict(A), indent=1)


def load_algebra(path) -> AlgebraTable:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra(text)


def save_algebra(A: AlgebraTable, path) -> None:
    Path(path).write_text(render_algebra(A) + "\n")


def parse_map(text: str, A: AlgebraTable) -> list:
    """List of (from_vector, to_vector) pairs in ambient coordinates."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"map file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("map"), list):
        raise FormatError("map file: missing array field 'map'")
    idx = {b: i for i, b in enumerate(A.basis_names)}
    pairs = []
    for k, entry in enumerate(doc["map"]):
        if not isinstance(entry, dict) or not {"from", "to"} <= set(entry):
            raise FormatError(f"map[{k}]: expected {{from, to}}")
        src = _terms(entry["from"], idx, A.dim, f"map[{k}].from")
        dst = _terms(entry["to"], idx, A.dim, f"map[{k}].to")
        pairs.append((tuple(src), tuple(dst)))
    return pairs


def vector_terms(A: AlgebraTable, v) -> list:
    return [[format_coef(c), nm] for c, nm in zip(v, A.basis_names) if c]


def render_map(A: AlgebraTable, pairs) -> str:
    return json.dumps({"map": [{"from": vector_terms(A, s), "to": vector_terms(A, t)}
                               for s, t in pairs]}, indent=1)
