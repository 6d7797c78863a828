"""Equivariant completion of partial multiplication tables and forms.

Given the products (or form values) of some basis pairs and a finite group
of linear symmetries g, the identity (u.v)^g = u^g . v^g — expanded by
bilinearity — lets unknown entries be solved one at a time and forces
consistency between every pair of derivations.
"""

from __future__ import annotations

from .errors import CompletionInconsistent, CompletionInsufficient
from .linalg import Matrix


def mulclose(field, generators, limit=10000):
    """Closure of a generator list of square matrices under multiplication."""
    n = generators[0].rows
    ident = Matrix.identity(field, n)

    def key(m):
        return tuple(tuple(row) for row in m.data)

    elems = {key(ident): ident}
    frontier = [ident]
    while frontier:
        new = []
        for m in frontier:
            for g in generators:
                p = g.matmul(m)
                k = key(p)
                if k not in elems:
                    elems[k] = p
                    new.append(p)
                    if len(elems) > limit:
                        raise ValueError("group closure exceeded limit")
        frontier = new
    return list(elems.values())


def _pair_coefficients(field, u, v):
    """Expand (sum u_i b_i)(sum v_j b_j) into unordered-pair coefficients."""
    coeffs = {}
    nz_u = [(i, ui) for i, ui in enumerate(u) if not field.is_zero(ui)]
    nz_v = [(j, vj) for j, vj in enumerate(v) if not field.is_zero(vj)]
    for i, ui in nz_u:
        for j, vj in nz_v:
            pair = (i, j) if i <= j else (j, i)
            c = ui * vj
            coeffs[pair] = coeffs.get(pair, field.zero) + c
    return {p: c for p, c in coeffs.items() if not field.is_zero(c)}


def complete_table(field, dim, known, group, describe=None):
    """Complete a partial product table under a symmetry group.

    known: {(i, j) with i <= j: coordinate tuple}.  group: list of Matrix
    operators (columns = images of basis vectors).  Returns the completed
    dict; raises CompletionInconsistent if two derivations disagree and
    CompletionInsufficient if the orbit closure leaves pairs undefined.
    """
    known = {_norm(p): tuple(v) for p, v in known.items()}
    all_pairs = {(i, j) for i in range(dim) for j in range(i, dim)}
    describe = describe or (lambda p: str(p))
    progress = True
    while progress:
        progress = False
        for g in group:
            cols = [tuple(g.data[i][j] for i in range(dim)) for j in range(dim)]
            for (p, q), value in list(known.items()):
                u, v = cols[p], cols[q]
                rhs = g.matvec(value)
                coeffs = _pair_coefficients(field, u, v)
                unknown = [pair for pair in coeffs if pair not in known]
                if len(unknown) > 1:
                    continue
                acc = list(rhs)
                for pair, c in coeffs.items():
                    if pair in known:
                        w = known[pair]
                        acc = [a - c * wk for a, wk in zip(acc, w)]
                if not unknown:
                    if any(not field.is_zero(a) for a in acc):
                        raise CompletionInconsistent(
                            f"image of pair {describe((p, q))} under the group "
                            f"contradicts known entries (residual on "
                            f"{describe((p, q))})")
                    continue
                pair = unknown[0]
                c = coeffs[pair]
                known[pair] = tuple(a / c for a in acc)
                progress = True
    missing = all_pairs - set(known)
    if missing:
        raise CompletionInsufficient([describe(p) for p in missing])
    return known


def complete_form(field, dim, known, group, describe=None):
    """Same completion logic for a symmetric bilinear form (scalar values),
    using invariance <u^g, v^g> = <u, v>."""
    known = {_norm(p): v for p, v in known.items()}
    all_pairs = {(i, j) for i in range(dim) for j in range(i, dim)}
    describe = describe or (lambda p: str(p))
    progress = True
    while progress:
        progress = False
        for g in group:
            cols = [tuple(g.data[i][j] for i in range(dim)) for j in range(dim)]
            for (p, q), value in list(known.items()):
                coeffs = _pair_coefficients(field, cols[p], cols[q])
                unknown = [pair for pair in coeffs if pair not in known]
                if len(unknown) > 1:
                    continue
                acc = value
                for pair, c in coeffs.items():
                    if pair in known:
                        acc = acc - c * known[pair]
                if not unknown:
                    if not field.is_zero(acc):
                        raise CompletionInconsistent(
                            f"form value at {describe((p, q))} contradicts "
                            f"group invariance")
                    continue
                pair = unknown[0]
                known[pair] = acc / coeffs[pair]
                progress = True
    missing = all_pairs - set(known)
    if missing:
        raise CompletionInsufficient([describe(p) for p in missing])
    return known


def _norm(pair):
    i, j = pair
    return (i, j) if i <= j else (j, i)


def table_from_pairs(field, dim, pairs):
    """Symmetric dim x dim nested list from an upper-triangle pair dict."""
    table = [[None] * dim for _ in range(dim)]
    for (i, j), v in pairs.items():
        table[i][j] = tuple(v)
        table[j][i] = tuple(v)
    return table


def gram_from_pairs(field, dim, pairs):
    g = [[field.zero] * dim for _ in range(dim)]
    for (i, j), v in pairs.items():
        g[i][j] = v
        g[j][i] = v
    return Matrix(field, g)
