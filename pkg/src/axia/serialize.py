"""JSON serialization of scalars, matrices and algebras.

Rationals are serialized as exact "p/q" strings (decimals rejected);
rational functions as {"num": [...], "den": [...]} coefficient lists in
ascending degree.  Matrices: {rows, cols, field, entries} with row-major
entries.  Algebras: {field, labels, mul_table, gram?} storing only the
upper triangle (pairs (i, j) with i <= j in lexicographic order).
"""

from __future__ import annotations

import json

from .algebra import Algebra, BilinearForm
from .linalg import Matrix
from .scalars import FIELDS_BY_KIND


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "field": m.field.kind,
        "entries": [m.field.to_json(x) for row in m.data for x in row],
    }


def matrix_from_json(d: dict) -> Matrix:
    field = FIELDS_BY_KIND[d["field"]]
    rows, cols = d["rows"], d["cols"]
    entries = [field.from_json(x) for x in d["entries"]]
    if len(entries) != rows * cols:
        raise ValueError("entry count does not match rows*cols")
    return Matrix(field, [entries[r * cols:(r + 1) * cols]
                          for r in range(rows)])


def _upper_pairs(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def algebra_to_json(alg: Algebra, form: BilinearForm = None) -> dict:
    field = alg.field
    out = {
        "field": field.kind,
        "labels": list(alg.labels),
        "mul_table": [[field.to_json(x) for x in alg.mul_table[i][j]]
                      for i, j in _upper_pairs(alg.dim)],
    }
    if form is not None:
        out["gram"] = [field.to_json(form.gram.data[i][j])
                       for i, j in _upper_pairs(alg.dim)]
    return out


def algebra_from_json(d: dict):
    """Returns (Algebra, BilinearForm or None)."""
    field = FIELDS_BY_KIND[d["field"]]
    labels = d["labels"]
    n = len(labels)
    pairs = _upper_pairs(n)
    if len(d["mul_table"]) != len(pairs):
        raise ValueError("mul_table length does not match upper triangle")
    table = [[None] * n for _ in range(n)]
    for (i, j), entry in zip(pairs, d["mul_table"]):
        vec = tuple(field.from_json(x) for x in entry)
        table[i][j] = vec
        table[j][i] = vec
    alg = Algebra(field, labels, table)
    form = None
    if d.get("gram") is not None:
        g = [[field.zero] * n for _ in range(n)]
        for (i, j), x in zip(pairs, d["gram"]):
            g[i][j] = g[j][i] = field.from_json(x)
        form = BilinearForm(field, Matrix(field, g))
    return alg, form


def dump_json(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=False)
        fh.write("\n")


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
