"""JSON algebra files.

Algebra file::

    {"dim_even": 1, "dim_odd": 1,
     "products": [{"left": 1, "right": 1, "result": [{"basis": 0, "coeff": "1"}]}]}

A pair file has the same dimensions and two product lists, ``"dot"`` and
``"bracket"``, instead of ``"products"``.  Coefficients are rational strings
(``"3"``, ``"-1/2"``); omitted products are zero.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import GradedBasis, SuperAlgebra, make_superalgebra
from .errors import InputError, ParseError
from .presentation import PoissonPair
from .scalars import format_rational, parse_rational


def _int_field(obj: dict, key: str, where: str, minimum: int = 0) -> int:
    if key not in obj:
        raise ParseError(f"missing field {key!r}", where or "<root>")
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParseError(f"expected an integer >= {minimum}, got {value!r}", f"{where}.{key}" if where else key)
    return value


def _parse_products(items, basis: GradedBasis, where: str) -> SuperAlgebra:
    if not isinstance(items, list):
        raise ParseError("expected a list of product records", where)
    n = basis.dim
    degs = basis.degrees()
    entries = []
    seen_pairs = set()
    for r, rec in enumerate(items):
        loc = f"{where}[{r}]"
        if not isinstance(rec, dict):
            raise ParseError("expected an object with left/right/result", loc)
        unknown = set(rec) - {"left", "right", "result"}
        if unknown:
            raise ParseError(f"unknown field(s) {sorted(unknown)}", loc)
        i = _int_field(rec, "left", loc)
        j = _int_field(rec, "right", loc)
        for key, idx in (("left", i), ("right", j)):
            if idx >= n:
                raise ParseError(f"index {idx} out of range 0..{n - 1}", f"{loc}.{key}")
        if (i, j) in seen_pairs:
            raise ParseError(f"duplicate product record for e{i}e{j}", loc)
        seen_pairs.add((i, j))
        result = rec.get("result")
        if not isinstance(result, list):
            raise ParseError("expected a list of {basis, coeff} terms", f"{loc}.result")
        seen_k = set()
        for t, term in enumerate(result):
            tloc = f"{loc}.result[{t}]"
            if not isinstance(term, dict):
                raise ParseError("expected an object with basis/coeff", tloc)
            unknown = set(term) - {"basis", "coeff"}
            if unknown:
                raise ParseError(f"unknown field(s) {sorted(unknown)}", tloc)
            k = _int_field(term, "basis", tloc)
            if k >= n:
                raise ParseError(f"index {k} out of range 0..{n - 1}", f"{tloc}.basis")
            if k in seen_k:
                raise ParseError(f"basis {k} listed twice", tloc)
            seen_k.add(k)
            if "coeff" not in term:
                raise ParseError("missing field 'coeff'", tloc)
            raw = term["coeff"]
            if not isinstance(raw, str):
                raise ParseError(f"coefficient must be a rational string, got {raw!r}", f"{tloc}.coeff")
            try:
                c = parse_rational(raw)
            except ParseError as exc:
                raise ParseError(str(exc), f"{tloc}.coeff") from None
            if c and degs[k] != (degs[i] + degs[j]) % 2:
                raise ParseError(
                    f"grading violation: e{i}e{j} (degree {(degs[i] + degs[j]) % 2}) has a component on e{k} (degree {degs[k]})",
                    tloc,
                )
            entries.append((i, j, k, c))
    return make_superalgebra(basis, entries)


def parse_algebra_file(text: str) -> SuperAlgebra | PoissonPair:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "<root>")
    dim_even = _int_field(data, "dim_even", "")
    dim_odd = _int_field(data, "dim_odd", "")
    try:
        basis = GradedBasis(dim_even, dim_odd)
    except InputError as exc:
        raise ParseError(str(exc), "dim_even/dim_odd") from None
    has_products = "products" in data
    has_pair = "dot" in data or "bracket" in data
    unknown = set(data) - {"dim_even", "dim_odd", "products", "dot", "bracket"}
    if unknown:
        raise ParseError(f"unknown field(s) {sorted(unknown)}", "<root>")
    if has_products and has_pair:
        raise ParseError("give either 'products' or 'dot'/'bracket', not both", "<root>")
    if has_pair:
        dot = _parse_products(data.get("dot", []), basis, "dot")
        bracket = _parse_products(data.get("bracket", []), basis, "bracket")
        return PoissonPair(dot, bracket)
    return _parse_products(data.get("products", []), basis, "products")


def load(path) -> SuperAlgebra | PoissonPair:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra_file(text)


def _products_json(A: SuperAlgebra) -> list:
    out = []
    n = A.dim
    for i in range(n):
        for j in range(n):
            terms = []
            for k in range(n):
                c = A.constants[i][j][k]
                if c:
                    if not isinstance(c, Fraction):
                        raise InputError("only rational tables can be serialized")
                    terms.append({"basis": k, "coeff": format_rational(c)})
            if terms:
                out.append({"left": i, "right": j, "result": terms})
    return out


def algebra_to_json(A: SuperAlgebra) -> dict:
    return {"dim_even": A.basis.dim_even, "dim_odd": A.basis.dim_odd, "products": _products_json(A)}


def pair_to_json(P: PoissonPair) -> dict:
    return {
        "dim_even": P.basis.dim_even,
        "dim_odd": P.basis.dim_odd,
        "dot": _products_json(P.dot),
        "bracket": _products_json(P.bracket),
    }


def dumps(obj: SuperAlgebra | PoissonPair) -> str:
    data = pair_to_json(obj) if isinstance(obj, PoissonPair) else algebra_to_json(obj)
    return json.dumps(data, indent=2) + "\n"
