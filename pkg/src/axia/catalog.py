"""Hard-coded fusion rules and the eight dihedral algebras of Monster type.

Each dihedral algebra is stored as its published representative products and
form values; the full symmetric tables are materialized by orbit completion
under the dihedral symmetry (k -> -k, k -> 1-k on axis indices, extra basis
vectors fixed) and any inconsistency fails loudly.

Basis ordering follows the published tables: axes in index order, then the
extra vectors (a_rho, u_rho, v_rho, w_rho as applicable).
"""

from __future__ import annotations

from .algebra import Algebra, BilinearForm, FusionRule
from .completion import (complete_form, complete_table, gram_from_pairs,
                         mulclose, table_from_pairs)
from .linalg import Matrix
from .scalars import QQ, QT, rat

# ---------------------------------------------------------------------------
# Fusion rules
# ---------------------------------------------------------------------------


def monster_rule(field=QQ) -> FusionRule:
    """The Monster (Majorana) fusion rule on {1, 0, 1/4, 1/32}."""
    one, zero, q, e = "1", "0", "1/4", "1/32"
    table = {
        (one, one): {one}, (one, zero): set(), (one, q): {q}, (one, e): {e},
        (zero, zero): {zero}, (zero, q): {q}, (zero, e): {e},
        (q, q): {one, zero}, (q, e): {e},
        (e, e): {one, zero, q},
    }
    return FusionRule(field, (one, zero, q, e), table)


def jordan_half_rule(field=QQ) -> FusionRule:
    """The Jordan-type-1/2 fusion rule on {1, 0, 1/2}."""
    one, zero, h = field.of(1), field.of(0), field.of("1/2")
    table = {
        (one, one): {one}, (one, zero): set(), (one, h): {h},
        (zero, zero): {zero}, (zero, h): {h},
        (h, h): {one, zero},
    }
    return FusionRule(field, (one, zero, h), table)


def f4a_rule(t=None) -> FusionRule:
    """The 4A-axis fusion rule on {1, 0, 1/2, 3/8, t}.

    By default t is the indeterminate of Q(t); a rational value may be
    substituted provided it stays distinct from 1, 0, 1/2 and 3/8.
    """
    if t is None:
        field = QT
        t = field.t
    else:
        field = QQ
        t = field.of(t)
    one, zero, h, s = (field.of(1), field.of(0), field.of("1/2"),
                       field.of("3/8"))
    if t in (one, zero, h, s):
        raise ValueError("t collides with a fixed eigenvalue; the printed "
                         "rule requires t not in {1, 0, 1/2, 3/8}")
    table = {
        (one, one): {one}, (one, zero): set(), (one, h): {h},
        (one, s): {s}, (one, t): {t},
        (zero, zero): {zero}, (zero, h): {h}, (zero, s): {s}, (zero, t): {t},
        (h, h): {one, zero}, (h, s): {s}, (h, t): {t},
        (s, s): {one, zero, h}, (s, t): set(),
        (t, t): {one, zero, h},
    }
    return FusionRule(field, (one, zero, h, s, t), table)


MONSTER_EIGENVALUES = ("1", "0", "1/4", "1/32")

# ---------------------------------------------------------------------------
# Dihedral catalog data
#
# Axis labels are integers k (the axis a_k, index mod N); extra basis
# vectors are strings.  Products/forms are given on representative pairs
# exactly as published; "1" entries for idempotent axes are implicit
# (a_0 * a_0 = a_0 is seeded for every type).
# ---------------------------------------------------------------------------

DIHEDRAL_TYPES = ("2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A")

_DIHEDRAL_DATA = {
    "2A": {
        "n": 2,
        "basis": [0, 1, "rho"],
        "products": [
            ((0, 1), {0: "1/8", 1: "1/8", "rho": "-1/8"}),
            ((0, "rho"), {0: "1/8", "rho": "1/8", 1: "-1/8"}),
            (("rho", "rho"), {"rho": "1"}),
        ],
        "forms": [
            # a_rho is itself a norm-1 axis; the Frobenius identity on the
            # triple (a_0, a_1, a_rho) forces (a_rho, a_rho) = 1
            ((0, 1), "1/8"), ((0, "rho"), "1/8"), (("rho", "rho"), "1"),
        ],
    },
    "2B": {
        "n": 2,
        "basis": [0, 1],
        "products": [((0, 1), {})],
        "forms": [((0, 1), "0")],
    },
    "3A": {
        "n": 3,
        "basis": [-1, 0, 1, "u"],
        "products": [
            ((0, 1), {0: "1/16", 1: "1/16", -1: "1/32", "u": "-135/2048"}),
            ((0, "u"), {0: "2/9", 1: "-1/9", -1: "-1/9", "u": "5/32"}),
            (("u", "u"), {"u": "1"}),
        ],
        "forms": [
            ((0, 1), "13/256"), ((0, "u"), "1/4"), (("u", "u"), "8/5"),
        ],
    },
    "3C": {
        "n": 3,
        "basis": [-1, 0, 1],
        "products": [((0, 1), {0: "1/64", 1: "1/64", -1: "-1/64"})],
        "forms": [((0, 1), "1/64")],
    },
    "4A": {
        "n": 4,
        "basis": [-1, 0, 1, 2, "v"],
        "products": [
            ((0, 1), {0: "3/64", 1: "3/64", 2: "1/64", -1: "1/64",
                      "v": "-3/64"}),
            ((0, "v"), {0: "5/16", 1: "-1/8", 2: "-1/16", -1: "-1/8",
                        "v": "3/16"}),
            (("v", "v"), {"v": "1"}),
            ((0, 2), {}),
        ],
        "forms": [
            ((0, 1), "1/32"), ((0, 2), "0"), ((0, "v"), "3/8"),
            (("v", "v"), "2"),
        ],
    },
    "4B": {
        "n": 4,
        "basis": [-1, 0, 1, 2, "rho"],
        "products": [
            ((0, 1), {0: "1/64", 1: "1/64", -1: "-1/64", 2: "-1/64",
                      "rho": "1/64"}),
            ((0, 2), {0: "1/8", 2: "1/8", "rho": "-1/8"}),
            # the pair {a_0, a_2} generates a 2A with the same a_rho
            ((0, "rho"), {0: "1/8", "rho": "1/8", 2: "-1/8"}),
            (("rho", "rho"), {"rho": "1"}),
        ],
        "forms": [
            ((0, 1), "1/64"), ((0, 2), "1/8"), ((0, "rho"), "1/8"),
            (("rho", "rho"), "1"),
        ],
    },
    "5A": {
        "n": 5,
        "basis": [-2, -1, 0, 1, 2, "w"],
        "products": [
            ((0, 1), {0: "3/128", 1: "3/128", 2: "-1/128", -1: "-1/128",
                      -2: "-1/128", "w": "1"}),
            ((0, 2), {0: "3/128", 2: "3/128", 1: "-1/128", -1: "-1/128",
                      -2: "-1/128", "w": "-1"}),
            ((0, "w"), {1: "7/4096", -1: "7/4096", 2: "-7/4096",
                        -2: "-7/4096", "w": "7/32"}),
            (("w", "w"), {-2: "175/524288", -1: "175/524288", 0: "175/524288",
                          1: "175/524288", 2: "175/524288"}),
        ],
        "forms": [
            ((0, 1), "3/128"), ((0, 2), "3/128"), ((0, "w"), "0"),
            (("w", "w"), "875/524288"),
        ],
    },
    "6A": {
        "n": 6,
        "basis": [-2, -1, 0, 1, 2, 3, "rho", "u"],
        "products": [
            ((0, 1), {0: "1/64", 1: "1/64", -2: "-1/64", -1: "-1/64",
                      2: "-1/64", 3: "-1/64", "rho": "1/64", "u": "45/2048"}),
            ((0, 2), {0: "1/16", 2: "1/16", -2: "1/32", "u": "-135/2048"}),
            ((0, "u"), {0: "2/9", 2: "-1/9", -2: "-1/9", "u": "5/32"}),
            ((0, 3), {0: "1/8", 3: "1/8", "rho": "-1/8"}),
            (("rho", "u"), {}),
            # the pair {a_0, a_3} generates a 2A with the same a_rho
            ((0, "rho"), {0: "1/8", "rho": "1/8", 3: "-1/8"}),
            (("rho", "rho"), {"rho": "1"}),
            (("u", "u"), {"u": "1"}),
        ],
        "forms": [
            ((0, 1), "5/256"), ((0, 2), "13/256"), ((0, 3), "1/8"),
            (("rho", "u"), "0"), ((0, "rho"), "1/8"), (("rho", "rho"), "1"),
            ((0, "u"), "1/4"), (("u", "u"), "8/5"),
        ],
    },
}

# Eigenvectors of the axis a_0 per type (eigenvalue -> list of vectors),
# as published, with four typographic corrections forced by
# tau(a_0)-invariance of the 0-eigenspace (noted where they occur):
# the published source omits a_0 in the 2A 0-eigenvector and prints
# a_k - a_{-k} for a_k + a_{-k} in one 5A and one 6A 0-eigenvector.
REFERENCE_EIGENVECTORS = {
    "2A": {
        "0": [{1: "1", "rho": "1", 0: "-1/4"}],
        "1/4": [{1: "1", "rho": "-1"}],
        "1/32": [],
    },
    "2B": {"0": [{1: "1"}], "1/4": [], "1/32": []},
    "3A": {
        "0": [{"u": "1", 0: "-10/27", 1: "32/27", -1: "32/27"}],
        "1/4": [{"u": "1", 0: "-8/45", 1: "-32/45", -1: "-32/45"}],
        "1/32": [{1: "1", -1: "-1"}],
    },
    "3C": {
        "0": [{1: "1", -1: "1", 0: "-1/32"}],
        "1/4": [],
        "1/32": [{1: "1", -1: "-1"}],
    },
    "4A": {
        "0": [{"v": "1", 0: "-1/2", 1: "2", -1: "2"}, {2: "1"}],
        "1/4": [{"v": "1", 0: "-1/3", 1: "-2/3", -1: "-2/3", 2: "-1/3"}],
        "1/32": [{1: "1", -1: "-1"}],
    },
    "4B": {
        "0": [{1: "1", -1: "1", 0: "-1/32", "rho": "-1/8", 2: "1/8"},
              {2: "1", "rho": "1", 0: "-1/4"}],
        "1/4": [{2: "1", "rho": "-1"}],
        "1/32": [{1: "1", -1: "-1"}],
    },
    "5A": {
        # first vector: published (a_2 - a_{-2}); corrected to +.
        "0": [{"w": "1", 0: "3/512", 1: "-15/128", -1: "-15/128",
               2: "-1/128", -2: "-1/128"},
              {"w": "1", 0: "-3/512", 1: "1/128", -1: "1/128",
               2: "15/128", -2: "15/128"}],
        "1/4": [{"w": "1", 1: "1/128", -1: "1/128", 2: "-1/128",
                 -2: "-1/128"}],
        "1/32": [{1: "1", -1: "-1"}, {2: "1", -2: "-1"}],
    },
    "6A": {
        # first vector: published (a_1 - a_{-1}); corrected to +.
        "0": [{"u": "1", 0: "2/45", 1: "-256/45", -1: "-256/45",
               2: "-32/45", -2: "-32/45", 3: "-32/45", "rho": "32/45"},
              {3: "1", "rho": "1", 0: "-1/4"},
              {"u": "1", 0: "-10/27", 2: "32/27", -2: "32/27"}],
        "1/4": [{"u": "1", 0: "-8/45", 2: "-32/45", -2: "-32/45",
                 3: "-32/45", "rho": "32/45"},
                {3: "1", "rho": "-1"}],
        "1/32": [{1: "1", -1: "-1"}, {2: "1", -2: "-1"}],
    },
}


class DihedralAlgebra:
    """A completed dihedral catalog algebra with its form and metadata."""

    def __init__(self, name, algebra, form, axes, axis_keys,
                 reference_eigenvectors, group=None):
        self.name = name
        self.algebra = algebra
        self.form = form
        self.axes = axes                # coordinate vectors of the axes
        self.axis_keys = axis_keys      # integer index of each axis
        self.reference_eigenvectors = reference_eigenvectors
        self.group = group or []        # dihedral relabeling operators

    @property
    def n_axes(self):
        return len(self.axes)


def _label(key):
    if isinstance(key, int):
        return f"a_{key}"
    return "a_rho" if key == "rho" else f"{key}_rho"


def _index_maps(n):
    """Generators of the dihedral relabeling group on axis indices mod n:
    k -> -k (tau(a_0)) and k -> 1-k (the a_0 <-> a_1 swap)."""
    return [lambda k: -k % n, lambda k: (1 - k) % n]


def _perm_matrix(field, basis, keymap, n):
    """Permutation operator from an axis index map; extras fixed."""
    positions = {}
    for pos, key in enumerate(basis):
        positions[key] = pos
    dim = len(basis)
    m = [[field.zero] * dim for _ in range(dim)]
    for pos, key in enumerate(basis):
        if isinstance(key, int):
            target = _canon_key(keymap(key % n), n)
            m[positions[target]][pos] = field.one
        else:
            m[pos][pos] = field.one
    return Matrix(field, m)


def _canon_key(k_mod, n):
    """Back from residue mod n to the representative used in the basis
    (indices are stored in the symmetric range used by the tables)."""
    k = k_mod % n
    if k > n // 2:
        k -= n
    return k


def dihedral(name: str) -> DihedralAlgebra:
    """Construct a dihedral catalog algebra (over Q) by orbit completion."""
    if name not in _DIHEDRAL_DATA:
        raise ValueError(f"unknown dihedral type {name!r}; "
                         f"expected one of {DIHEDRAL_TYPES}")
    data = _DIHEDRAL_DATA[name]
    n = data["n"]
    basis = list(data["basis"])
    dim = len(basis)
    pos = {key: i for i, key in enumerate(basis)}
    field = QQ

    def vec(combo):
        v = [field.zero] * dim
        for key, c in combo.items():
            v[pos[key]] = rat(c)
        return tuple(v)

    known = {}
    # every axis is idempotent
    for key in basis:
        if isinstance(key, int):
            known[(pos[key], pos[key])] = vec({key: "1"})
    for (u, v), combo in data["products"]:
        known[_pair(pos[u], pos[v])] = vec(combo)

    group = mulclose(field, [_perm_matrix(field, basis, km, n)
                             for km in _index_maps(n)])
    labels = [_label(k) for k in basis]

    def describe(p):
        return f"({labels[p[0]]}, {labels[p[1]]})"

    table = complete_table(field, dim, known, group, describe)

    gram_known = {}
    for key in basis:
        if isinstance(key, int):
            gram_known[(pos[key], pos[key])] = field.one
    for (u, v), value in data["forms"]:
        gram_known[_pair(pos[u], pos[v])] = rat(value)
    gram = complete_form(field, dim, gram_known, group, describe)

    alg = Algebra(field, labels, table_from_pairs(field, dim, table))
    form = BilinearForm(field, gram_from_pairs(field, dim, gram))

    axis_keys = sorted(k for k in basis if isinstance(k, int))
    axes = [alg.basis_vector(_label(k)) for k in axis_keys]
    ref = {}
    for lam, vecs in REFERENCE_EIGENVECTORS[name].items():
        ref[field.of(lam)] = [vec(c) for c in vecs]
    return DihedralAlgebra(name, alg, form, axes, axis_keys, ref, group)


def _pair(i, j):
    return (i, j) if i <= j else (j, i)
