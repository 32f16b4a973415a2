"""JSON formats for algebras, morphisms, bimodules, and relation files.

Scalars travel as canonical strings ("a/b" reduced with positive denominator
over Q, decimal in [0, p) over GF(p)); all dumps sort keys so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Algebra, AlgMap
from .bimodule import Bimodule
from .hopf import Bimonoid
from .linalg import Field, LinAlgError, Mat, field_from_json, field_to_json


def scalar_str(field: Field, x) -> str:
    return field.format(x)


def mat_to_lists(m: Mat) -> list[list[str]]:
    return [[m.field.format(x) for x in row] for row in m.data]


def mat_from_lists(field: Field, rows: list[list], nrows: int, ncols: int) -> Mat:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise LinAlgError("matrix block has wrong shape")
    if nrows == 0 or ncols == 0:
        return Mat.zeros(field, nrows, ncols)
    return Mat(field, rows)


def algebra_to_json(a: Algebra, comult: Mat | None = None, counit: Mat | None = None) -> dict:
    doc = {
        "field": field_to_json(a.field),
        "dim": a.dim,
        "basis": list(a.basis_labels),
        "mult": [
            [[a.field.format(x) for x in a.mult[i][j]] for j in range(a.dim)]
            for i in range(a.dim)
        ],
        "unit": [a.field.format(x) for x in a.unit],
    }
    if comult is not None:
        n = a.dim
        doc["comult"] = [
            [[a.field.format(comult.data[j * n + k][i]) for k in range(n)] for j in range(n)]
            for i in range(n)
        ]
    if counit is not None:
        doc["counit"] = [a.field.format(x) for x in counit.data[0]]
    return doc


def algebra_from_json(doc: dict) -> Algebra:
    field = field_from_json(doc["field"])
    dim = int(doc["dim"])
    return Algebra(field, dim, doc["mult"], doc["unit"], doc.get("basis"))


def bimonoid_from_json(doc: dict, alg: Algebra | None = None) -> Bimonoid:
    """Reads the optional comult/counit fields; comult[i][j][k] is the
    coefficient of e_j (x) e_k in the image of e_i."""
    a = alg or algebra_from_json(doc)
    if "comult" not in doc or "counit" not in doc:
        raise LinAlgError("algebra file carries no comultiplication/counit")
    n = a.dim
    comult = Mat.zeros(a.field, n * n, n)
    raw = doc["comult"]
    if len(raw) != n:
        raise LinAlgError("comult must have one block per basis element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                comult.data[j * n + k][i] = a.field.coerce(raw[i][j][k])
    counit = Mat(a.field, [[a.field.coerce(x) for x in doc["counit"]]])
    return Bimonoid(a, comult, counit)


def morphism_from_json(doc: dict, base: Path | None = None) -> AlgMap:
    src = _resolve_algebra(doc["source"], base)
    dst = _resolve_algebra(doc["target"], base)
    matrix = mat_from_lists(dst.field, doc["matrix"], dst.dim, src.dim)
    return AlgMap(src, dst, matrix)


def _resolve_algebra(spec, base: Path | None) -> Algebra:
    if isinstance(spec, str):
        path = Path(spec)
        if base is not None and not path.is_absolute():
            path = base / path
        return algebra_from_json(json.loads(path.read_text()))
    return algebra_from_json(spec)


def bimodule_to_json(m: Bimodule) -> dict:
    return {
        "left_alg": algebra_to_json(m.left_alg),
        "right_alg": algebra_to_json(m.right_alg),
        "dim": m.dim,
        "left": [
            [[m.field.format(x) for x in m.left_action_coords(i, u)] for u in range(m.dim)]
            for i in range(m.left_alg.dim)
        ],
        "right": [
            [[m.field.format(x) for x in m.right_action_coords(u, j)] for j in range(m.right_alg.dim)]
            for u in range(m.dim)
        ],
    }


def bimodule_from_json(doc: dict) -> Bimodule:
    left_alg = algebra_from_json(doc["left_alg"])
    right_alg = algebra_from_json(doc["right_alg"])
    return Bimodule.from_tensors(left_alg, right_alg, int(doc["dim"]), doc["left"], doc["right"])


def relations_from_json(doc: dict, field: Field, expected_dim: int) -> list[list]:
    gens = doc.get("generators", [])
    out = []
    for g in gens:
        if len(g) != expected_dim:
            raise LinAlgError(
                f"relation vector has length {len(g)}, expected {expected_dim}"
            )
        out.append([field.coerce(x) for x in g])
    return out


def load_json(path) -> dict:
    return json.loads(Path(path).read_text())


def dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
