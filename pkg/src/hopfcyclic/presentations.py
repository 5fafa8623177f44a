"""Load and save algebra presentations in a structured text (JSON) format.

A Hopf presentation carries: name, field ({"kind": "rational"} or
{"kind": "cyclotomic", "order": m}), dim, basis, unit (scalar list),
product (rows [i, j, k, "c"]: e_i e_j gains c e_k), coproduct (rows
[i, j, k, "c"]: Delta(e_i) gains c e_j (x) e_k), counit (scalar list),
antipode (rows [i, j, "c"]: S(e_i) gains c e_j) and characters (named
scalar lists).  Indices are 0-based and omitted entries are zero.

Lie presentations carry dim and brackets (rows [i, j, k, "c"]).  Pairing
and action inputs bundle a Hopf (or plain algebra) presentation with
matrices, trace vectors and idempotents in the same scalar syntax.
"""

from __future__ import annotations

import json

from .enveloping import EnvelopingAlgebra, LieAlgebra
from .fields import ScalarFormatError, field_from_spec
from .hopf import CharacterError, FiniteHopf


class PresentationError(Exception):
    """Malformed input file; the CLI maps this to exit code 2."""


def _fail(msg):
    raise PresentationError(msg)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(f"{path} is not valid structured text: {exc}")


def _field_of(data, path):
    try:
        return field_from_spec(data.get("field", {"kind": "rational"}))
    except (ScalarFormatError, KeyError, TypeError, ValueError) as exc:
        _fail(f"{path}: bad field spec: {exc}")


def _scalar(field, text, path, where):
    try:
        return field.parse(text)
    except (ScalarFormatError, ValueError, TypeError) as exc:
        _fail(f"{path}: bad scalar {text!r} in {where}: {exc}")


def _scalar_list(field, rows, dim, path, where):
    if not isinstance(rows, list) or len(rows) != dim:
        _fail(f"{path}: {where} must be a list of {dim} scalars")
    return [_scalar(field, v, path, where) for v in rows]


def _index(v, dim, path, where):
    if not isinstance(v, int) or not 0 <= v < dim:
        _fail(f"{path}: index {v!r} out of range in {where}")
    return v


def hopf_from_dict(data, path="<dict>"):
    if not isinstance(data, dict):
        _fail(f"{path}: top level must be a mapping")
    for key in ("name", "dim", "basis", "unit", "product",
                "coproduct", "counit", "antipode"):
        if key not in data:
            _fail(f"{path}: missing field {key!r}")
    field = _field_of(data, path)
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        _fail(f"{path}: dim must be a positive integer")
    basis = data["basis"]
    if not isinstance(basis, list) or len(basis) != dim:
        _fail(f"{path}: basis must list {dim} labels")

    unit_list = _scalar_list(field, data["unit"], dim, path, "unit")
    unit = {i: v for i, v in enumerate(unit_list) if v}

    product = {}
    for row in data["product"]:
        if not isinstance(row, list) or len(row) != 4:
            _fail(f"{path}: product rows must be [i, j, k, scalar]")
        i = _index(row[0], dim, path, "product")
        j = _index(row[1], dim, path, "product")
        k = _index(row[2], dim, path, "product")
        c = _scalar(field, row[3], path, "product")
        if c:
            slot = product.setdefault((i, j), {})
            slot[k] = slot.get(k, field.zero()) + c

    coproduct = {}
    for row in data["coproduct"]:
        if not isinstance(row, list) or len(row) != 4:
            _fail(f"{path}: coproduct rows must be [i, j, k, scalar]")
        i = _index(row[0], dim, path, "coproduct")
        j = _index(row[1], dim, path, "coproduct")
        k = _index(row[2], dim, path, "coproduct")
        c = _scalar(field, row[3], path, "coproduct")
        if c:
            slot = coproduct.setdefault(i, {})
            slot[(j, k)] = slot.get((j, k), field.zero()) + c

    counit = _scalar_list(field, data["counit"], dim, path, "counit")

    antipode = {}
    for row in data["antipode"]:
        if not isinstance(row, list) or len(row) != 3:
            _fail(f"{path}: antipode rows must be [i, j, scalar]")
        i = _index(row[0], dim, path, "antipode")
        j = _index(row[1], dim, path, "antipode")
        c = _scalar(field, row[2], path, "antipode")
        if c:
            slot = antipode.setdefault(i, {})
            slot[j] = slot.get(j, field.zero()) + c

    characters = {}
    for cname, rows in (data.get("characters") or {}).items():
        characters[cname] = _scalar_list(field, rows, dim, path,
                                         f"character {cname}")
    try:
        return FiniteHopf(data["name"], field, basis, unit, product,
                          coproduct, counit, antipode, characters=characters)
    except CharacterError as exc:
        _fail(f"{path}: {exc}")


def load_hopf(path):
    return hopf_from_dict(_load_json(path), path)


def hopf_to_dict(H):
    field = H.field
    data = {
        "name": H.name,
        "field": field.to_spec(),
        "dim": H.dim,
        "basis": list(H.basis),
        "unit": [field.format(
            H.unit.get(i, field.zero())) for i in range(H.dim)],
        "product": [[i, j, k, field.format(c)]
                    for (i, j) in sorted(H.product)
                    for k, c in sorted(H.product[(i, j)].items())],
        "coproduct": [[i, j, k, field.format(c)]
                      for i in sorted(H.coproduct)
                      for (j, k), c in sorted(H.coproduct[i].items())],
        "counit": [field.format(v) for v in H.counit],
        "antipode": [[i, j, field.format(c)]
                     for i in sorted(H.antipode)
                     for j, c in sorted(H.antipode[i].items())],
        "characters": {name: [field.format(v) for v in ch.values]
                       for name, ch in sorted(H.characters.items())},
    }
    return data


def dump_hopf(H, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(hopf_to_dict(H), fh, indent=1)
        fh.write("\n")


def load_lie(path):
    data = _load_json(path)
    if not isinstance(data, dict) or "dim" not in data or "brackets" not in data:
        _fail(f"{path}: a Lie presentation needs dim and brackets")
    field = _field_of(data, path)
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        _fail(f"{path}: dim must be a positive integer")
    brackets = {}
    for row in data["brackets"]:
        if not isinstance(row, list) or len(row) != 4:
            _fail(f"{path}: bracket rows must be [i, j, k, scalar]")
        i = _index(row[0], dim, path, "brackets")
        j = _index(row[1], dim, path, "brackets")
        k = _index(row[2], dim, path, "brackets")
        c = _scalar(field, row[3], path, "brackets")
        if c:
            slot = brackets.setdefault((i, j), {})
            slot[k] = slot.get(k, field.zero()) + c
    try:
        return EnvelopingAlgebra(LieAlgebra(dim, brackets))
    except ValueError as exc:
        _fail(f"{path}: {exc}")


def _matrix_rows(field, rows, dim, path, where):
    out = {}
    for row in rows:
        if not isinstance(row, list) or len(row) != 3:
            _fail(f"{path}: matrix rows must be [row, col, scalar]")
        r = _index(row[0], dim, path, where)
        c = _index(row[1], dim, path, where)
        v = _scalar(field, row[2], path, where)
        if v:
            out[(r, c)] = out.get((r, c), field.zero()) + v
    return {k: v for k, v in out.items() if v}


def load_pairing_input(path):
    """Input for the idempotent pairing: an algebra (as a Hopf presentation,
    only the algebra structure is used), a cochain of even degree, an
    idempotent in M_q(A) and the amplification size q.

    cochain: {"degree": 2m, "entries": [[i0, ..., i2m, "c"], ...]}
    idempotent: [[row, col, basis-index, "c"], ...] inside M_q(A).
    """
    from .algebras import algebra_of_hopf
    data = _load_json(path)
    for key in ("algebra", "cochain", "idempotent", "q"):
        if key not in data:
            _fail(f"{path}: missing field {key!r}")
    A = algebra_of_hopf(hopf_from_dict(data["algebra"], path))
    field = A.field
    q = data["q"]
    if not isinstance(q, int) or q < 1:
        _fail(f"{path}: q must be a positive integer")
    spec = data["cochain"]
    degree = spec.get("degree")
    if degree not in (0, 2):
        _fail(f"{path}: cochain degree must be 0 or 2")
    phi = {}
    for row in spec.get("entries", []):
        if not isinstance(row, list) or len(row) != degree + 2:
            _fail(f"{path}: cochain rows need {degree + 1} indices + scalar")
        key = tuple(_index(v, A.dim, path, "cochain") for v in row[:-1])
        c = _scalar(field, row[-1], path, "cochain")
        if c:
            phi[key] = phi.get(key, field.zero()) + c
    E = {}
    for row in data["idempotent"]:
        if not isinstance(row, list) or len(row) != 4:
            _fail(f"{path}: idempotent rows must be [row, col, basis, scalar]")
        r, c = row[0], row[1]
        if not (isinstance(r, int) and isinstance(c, int)
                and 0 <= r < q and 0 <= c < q):
            _fail(f"{path}: idempotent position ({r!r}, {c!r}) outside M_{q}")
        b = _index(row[2], A.dim, path, "idempotent")
        v = _scalar(field, row[3], path, "idempotent")
        if v:
            slot = E.setdefault((r, c), {})
            slot[b] = slot.get(b, field.zero()) + v
    E = {k: {b: v for b, v in elem.items() if v} for k, elem in E.items()}
    E = {k: elem for k, elem in E.items() if elem}
    return A, phi, E, q


def load_gamma_input(path):
    """Input for the characteristic-map check: a Hopf presentation, a
    character name, an algebra presentation, one action matrix per H-basis
    element ([row, col, "c"] rows) and a trace vector."""
    from .actions import HopfAction, Trace
    from .algebras import algebra_of_hopf
    data = _load_json(path)
    for key in ("hopf", "character", "algebra", "action", "trace"):
        if key not in data:
            _fail(f"{path}: missing field {key!r}")
    H = hopf_from_dict(data["hopf"], path)
    try:
        delta = H.character(data["character"])
    except CharacterError as exc:
        _fail(f"{path}: {exc}")
    A = algebra_of_hopf(hopf_from_dict(data["algebra"], path))
    if A.field.to_spec() != H.field.to_spec():
        _fail(f"{path}: hopf and algebra must share a field")
    action_rows = data["action"]
    if not isinstance(action_rows, list) or len(action_rows) != H.dim:
        _fail(f"{path}: action must list one matrix per Hopf basis element")
    matrices = {i: _matrix_rows(A.field, rows, A.dim, path, f"action[{i}]")
                for i, rows in enumerate(action_rows)}
    trace = Trace(A, _scalar_list(A.field, data["trace"], A.dim, path,
                                  "trace"))
    return H, delta, A, HopfAction(H, A, matrices), trace
