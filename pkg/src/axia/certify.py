"""Quantitative certification of the 12-dimensional family M(t).

Reproduces the closed-form Gram determinant and LDLT diagonal, certifies
the positive-(semi)definiteness region [0, 1/6] via Sturm interval
certificates and exact grid verdicts, decides Norton's inequality through
the antisymmetrized n^2 x n^2 product-form matrix, certifies the Majorana
property and the 9-dimensional quotients at the boundary, and verifies
the 4A-axis fusion rule, its C2 x C2 grading and the Jordan-type
subalgebra generated by the three 4A axes.
"""

from __future__ import annotations

import os

from .algebra import (GradingAssignment, AbelianGroup, axis_decomposition,
                      quotient, radical, subalgebra_algebra,
                      subalgebra_closure, verify_fusion, verify_frobenius,
                      verify_grading, is_automorphism)
from .catalog import f4a_rule, jordan_half_rule, monster_rule
from .errors import DegreeCapExceeded, PoleAtPoint
from .linalg import Matrix, determinant, in_span, ldlt, span_rref
from .m4 import (build_m4a, reference_v_eigenvectors, specialize_m4a,
                 verify_dependencies)
from .scalars import (QQ, QT, RationalFunction, count_roots_open,
                      format_rational, rat, rational_sign)

# 12-point certification grid: both boundary points of [0, 1/6], interior
# points, near-boundary points and the degenerate radical point 9/4.
DEFAULT_GRID = ("-1/10", "-1/100", "0", "1/24", "1/12", "1/8", "1/6",
                "9/50", "1/5", "1", "2", "9/4")

DEFAULT_DEGREE_CAP = 40
DEGREE_CAP_ENV = "AXIA_DEGREE_CAP"

MONSTER_EIGENVALUES_QQ = tuple(QQ.of(x) for x in ("1", "0", "1/4", "1/32"))


def degree_cap() -> int:
    raw = os.environ.get(DEGREE_CAP_ENV)
    return int(raw) if raw else DEFAULT_DEGREE_CAP


# ---------------------------------------------------------------------------
# Gram determinant / LDLT diagonal / interval certificates
# ---------------------------------------------------------------------------

def gram_analysis(alg=None, form=None):
    """Exact determinant and natural-order LDLT diagonal of the Gram
    matrix (defaults to the symbolic M_4A form)."""
    if form is None:
        m4a = build_m4a()
        form = m4a.form
    det = determinant(form.gram)
    result = ldlt(form.gram)
    return det, tuple(result.D)


def gram_det_closed_form() -> RationalFunction:
    """-t^3 (6t-1)^3 (4t-9)^6 / (2^19 * 3^3)."""
    t = QT.t
    return (-(t ** 3) * (QT.of(6) * t - 1) ** 3 * (QT.of(4) * t - QT.of(9)) ** 6
            / QT.of(2 ** 19 * 3 ** 3))


class IntervalCertificate:
    """Sturm-based sign certificate for one rational function on [a, b].

    verdict: POSITIVE (no roots of numerator or denominator touch [a, b]
    and the midpoint sample is positive), NONNEGATIVE (no interior roots,
    nonnegative midpoint; endpoint roots allowed), or FAILS.
    """

    POSITIVE = "POSITIVE"
    NONNEGATIVE = "NONNEGATIVE"
    FAILS = "FAILS"

    def __init__(self, function, interval, verdict, witnesses):
        self.function = function
        self.interval = interval
        self.verdict = verdict
        self.witnesses = witnesses

    def to_json(self):
        return {"function": str(self.function),
                "interval": [format_rational(x) for x in self.interval],
                "verdict": self.verdict,
                "witnesses": self.witnesses}


def certify_interval(f, a, b) -> IntervalCertificate:
    """Certificate that the rational function f has constant sign on [a, b]."""
    a, b = rat(a), rat(b)
    f = QT.of(f)
    if f.is_zero():
        return IntervalCertificate(f, (a, b), IntervalCertificate.NONNEGATIVE,
                                   {"identically_zero": True})
    num_in, num_a, num_b = ((0, False, False) if f.num.degree <= 0
                            else count_roots_open(f.num, a, b))
    den_in, den_a, den_b = ((0, False, False) if f.den.degree <= 0
                            else count_roots_open(f.den, a, b))
    mid = (a + b) / 2
    try:
        mid_sign = rational_sign(f.evaluate(mid))
    except PoleAtPoint:
        mid_sign = None
    witnesses = {
        "num_interior_roots": num_in, "den_interior_roots": den_in,
        "num_root_at_endpoints": [num_a, num_b],
        "den_root_at_endpoints": [den_a, den_b],
        "midpoint": format_rational(mid), "midpoint_sign": mid_sign,
    }
    if num_in or den_in or den_a or den_b or mid_sign is None or mid_sign < 0:
        verdict = IntervalCertificate.FAILS
    elif not (num_a or num_b) and mid_sign > 0:
        verdict = IntervalCertificate.POSITIVE
    else:
        verdict = IntervalCertificate.NONNEGATIVE
    return IntervalCertificate(f, (a, b), verdict, witnesses)


def certify_psd_interval(diag, interval=("0", "1/6")):
    """Interval certificates for a sequence of LDLT diagonal entries;
    all NONNEGATIVE/POSITIVE together certify PSD on the interval."""
    a, b = interval
    return [certify_interval(d, a, b) for d in diag]


# ---------------------------------------------------------------------------
# Grid verdicts
# ---------------------------------------------------------------------------

def definiteness_at(t0):
    """(pd, psd, radical_dim) of the specialized Gram matrix at t = t0."""
    spec = specialize_m4a(t0)
    result = ldlt(spec.form.gram)
    rad = radical(spec.form)
    return result.is_pd(), result.is_psd(), len(rad)


def radical_dimension(t0) -> int:
    spec = specialize_m4a(t0)
    return len(radical(spec.form))


def definiteness_report(grid=DEFAULT_GRID):
    report = []
    for point in grid:
        t0 = rat(point)
        pd, psd, rad = definiteness_at(t0)
        report.append({"t0": format_rational(t0), "pd": pd, "psd": psd,
                       "radical_dim": rad})
    return report


# ---------------------------------------------------------------------------
# Norton's inequality
# ---------------------------------------------------------------------------

def norton_matrix(alg, form) -> Matrix:
    """The antisymmetrized product-form matrix on ordered basis pairs:
    b[(i,j),(k,l)] = <e_i e_k, e_j e_l> - <e_j e_k, e_i e_l>.

    Positive semidefiniteness is equivalent to Norton's inequality
    <u.u, v.v> >= <u.v, u.v> holding for all u, v.
    """
    field = alg.field
    n = alg.dim
    z = field.zero
    is_zero = field.is_zero
    table = alg.mul_table
    gram = form.gram.data
    # gp[i][k] = Gram * (e_i e_k): inner products against all basis vectors
    gp = [[None] * n for _ in range(n)]
    for i in range(n):
        for k in range(i, n):
            prod = table[i][k]
            row = tuple(sum((gram[r][c] * prod[c] for c in range(n)
                             if not is_zero(prod[c])), z) for r in range(n))
            gp[i][k] = row
            gp[k][i] = row

    def dot(u, v):
        return sum((a * b for a, b in zip(u, v) if not (is_zero(a))), z)

    size = n * n
    data = [[z] * size for _ in range(size)]
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for r, (i, j) in enumerate(pairs):
        if i == j:
            continue  # antisymmetrization vanishes; row stays zero
        for s in range(r, size):
            k, l = pairs[s]
            if k == l:
                continue
            val = dot(table[i][k], gp[j][l]) - dot(table[j][k], gp[i][l])
            data[r][s] = val
            data[s][r] = val
    return Matrix(field, data)


def norton_check(t0, spec=None) -> bool:
    """Exact PSD verdict of the 144 x 144 Norton matrix of M(t0)."""
    if spec is None:
        spec = specialize_m4a(t0)
    result = ldlt(norton_matrix(spec.algebra, spec.form))
    return result.is_psd()


def norton_grid_report(grid=DEFAULT_GRID):
    return [{"t0": format_rational(rat(p)), "norton_psd": norton_check(p)}
            for p in grid]


def norton_symbolic(cap=None):
    """Opt-in symbolic LDLT of the Norton matrix over Q(t).

    Aborts with a partial diagonal once any computed entry exceeds the
    degree cap (env AXIA_DEGREE_CAP); the grid verdicts never depend on
    this path.
    """
    if cap is None:
        cap = degree_cap()
    m4a = build_m4a()
    b = norton_matrix(m4a.algebra, m4a.form)
    n = b.rows
    field = QT
    z = field.zero
    lrows = [[] for _ in range(n)]
    active = []
    diag = []

    def check(x):
        if max(x.num.degree, x.den.degree) > cap:
            raise DegreeCapExceeded(
                f"entry degree exceeds cap {cap} at column {len(diag)}")

    status = "COMPLETE"
    try:
        for j in range(n):
            lj = lrows[j]
            dj = b.data[j][j] - sum((lj[k] * lj[k] * diag[active[k]]
                                     for k in range(len(lj))), z)
            check(dj)
            if dj.is_zero():
                dl = [lj[k] * diag[active[k]] for k in range(len(lj))]
                for i in range(j + 1, n):
                    li = lrows[i]
                    cij = b.data[i][j] - sum((a * bb for a, bb in zip(li, dl)), z)
                    if not cij.is_zero():
                        status = "FAILED_INDEFINITE"
                        raise StopIteration
                diag.append(z)
                continue
            diag.append(dj)
            dl = [lj[k] * diag[active[k]] for k in range(len(lj))]
            for i in range(j + 1, n):
                li = lrows[i]
                lij = (b.data[i][j]
                       - sum((a * bb for a, bb in zip(li, dl)), z)) / dj
                check(lij)
                li.append(lij)
            active.append(j)
    except DegreeCapExceeded:
        status = "DEGREE_CAP_EXCEEDED"
    except StopIteration:
        pass
    return {"status": status, "degree_cap": cap,
            "columns_processed": len(diag), "diagonal": diag}


# ---------------------------------------------------------------------------
# Majorana certification
# ---------------------------------------------------------------------------

class MajoranaVerdict:
    """Majorana = positive definite Frobenius form + Norton's inequality."""

    def __init__(self, t0, gram_pd, norton_psd):
        self.t0 = t0
        self.gram_pd = gram_pd
        self.norton_psd = norton_psd

    @property
    def is_majorana(self):
        return self.gram_pd and self.norton_psd

    def to_json(self):
        return {"t0": format_rational(self.t0), "gram_pd": self.gram_pd,
                "norton_psd": self.norton_psd,
                "is_majorana": self.is_majorana}


def majorana_certify(t0) -> MajoranaVerdict:
    t0 = rat(t0)
    spec = specialize_m4a(t0)
    gram_pd = ldlt(spec.form.gram).is_pd()
    norton_psd = norton_check(t0, spec)
    return MajoranaVerdict(t0, gram_pd, norton_psd)


def quotient_certify(t0):
    """At a boundary point (radical dimension 3): quotient by the radical
    and re-certify Monster fusion, positive definiteness and Norton."""
    t0 = rat(t0)
    spec = specialize_m4a(t0)
    rad = radical(spec.form)
    report = {"t0": format_rational(t0), "radical_dim": len(rad)}
    if len(rad) != 3:
        report.update({"pass": False,
                       "reason": f"expected radical dim 3, got {len(rad)}"})
        return report
    qalg, qform, project = quotient(spec.algebra, spec.form, rad)
    report["quotient_dim"] = qalg.dim
    rule = monster_rule()
    fusion_ok = True
    for ax in spec.axes:
        qa = project(ax)
        dec = axis_decomposition(qalg, qa, MONSTER_EIGENVALUES_QQ)
        if not dec.is_primitive or verify_fusion(qalg, dec, rule):
            fusion_ok = False
    gram_pd = ldlt(qform.gram).is_pd()
    norton_psd = ldlt(norton_matrix(qalg, qform)).is_psd()
    report.update({
        "fusion_ok": fusion_ok, "gram_pd": gram_pd,
        "norton_psd": norton_psd,
        "pass": (qalg.dim == 9 and fusion_ok and gram_pd and norton_psd),
    })
    return report


# ---------------------------------------------------------------------------
# 4A-axis fusion / grading / Jordan subalgebra
# ---------------------------------------------------------------------------

F4A_EIGENVALUE_ORDER = ("1", "0", "1/2", "3/8", "t")


def f4a_grading() -> GradingAssignment:
    """The C2 x C2 grading of the 4A-axis rule: {1, 0, 1/2} -> e,
    {3/8} -> a, {t} -> b (nothing is graded ab)."""
    field = QT
    t = field.t
    assignment = {field.of(1): "e", field.of(0): "e", field.of("1/2"): "e",
                  field.of("3/8"): "a", t: "b"}
    return GradingAssignment(AbelianGroup.c2xc2(), assignment)


def v4a_certify():
    """Certify each 4A axis v_(i,j) of the symbolic M_4A: idempotency,
    eigenspace dims (1, 4, 4, 2, 1), published eigenvectors, the 4A-axis
    fusion rule and its C2 x C2 grading; plus the 9-dimensional Jordan
    subalgebra generated by the three v's."""
    m4a = build_m4a()
    alg = m4a.algebra
    field = QT
    t = field.t
    rule = f4a_rule()
    evs = (field.of(1), field.of(0), field.of("1/2"), field.of("3/8"), t)
    checks = []

    def add(name, expected, actual):
        checks.append({"name": name, "expected": expected, "actual": actual,
                       "pass": expected == actual})

    for i, j in ((1, 2), (1, 3), (2, 3)):
        lab = f"v_{i}{j}"
        v = alg.basis_vector(lab)
        add(f"{lab} idempotent", True, alg.is_idempotent(v))
        dec = axis_decomposition(alg, v, evs)
        add(f"{lab} eigenspace dims", (1, 4, 4, 2, 1), dec.dims)
        refs = reference_v_eigenvectors(i, j)
        ok = True
        for lam, vecs in refs.items():
            bm, piv = span_rref(field, dec.spaces[lam], alg.dim)
            for w in vecs:
                if not in_span(field, bm, piv, w):
                    ok = False
        add(f"{lab} reference eigenvectors", True, ok)
        add(f"{lab} fusion violations", 0, len(verify_fusion(alg, dec, rule)))
    add("C2xC2 grading", True, verify_grading(rule, f4a_grading()))

    vgens = [alg.basis_vector(f"v_{i}{j}") for i, j in ((1, 2), (1, 3), (2, 3))]
    closure = subalgebra_closure(alg, vgens)
    add("jordan closure dim", 9, len(closure))
    sub, coords = subalgebra_algebra(alg, closure)
    jrule = jordan_half_rule(field)
    jevs = (field.of(1), field.of(0), field.of("1/2"))
    ok = True
    for v in vgens:
        dec = axis_decomposition(sub, coords(v), jevs)
        if not dec.is_complete or verify_fusion(sub, dec, jrule):
            ok = False
    add("jordan fusion on closure", True, ok)
    return {"target": "v4a", "checks": checks,
            "pass": all(c["pass"] for c in checks)}


# ---------------------------------------------------------------------------
# Verification suites (CLI-facing)
# ---------------------------------------------------------------------------

def verify_eigenspace_orthogonality(alg, form, dec):
    """Eigenvectors of distinct eigenvalues are orthogonal under a
    Frobenius form; returns violations."""
    field = alg.field
    violations = []
    evs = dec.eigenvalues
    for a, lam in enumerate(evs):
        for mu in evs[a + 1:]:
            for u in dec.spaces[lam]:
                for v in dec.spaces[mu]:
                    val = form.apply(u, v)
                    if not field.is_zero(val):
                        violations.append({
                            "eigenvalues": (str(lam), str(mu)),
                            "u": alg.describe(u), "v": alg.describe(v),
                            "value": str(val)})
    return violations


def verify_m4a():
    """Default verification suite for the symbolic M_4A: Monster fusion on
    all six axes, Frobenius property, linear dependencies, symmetry
    operators (automorphisms and isometries)."""
    m4a = build_m4a()
    alg, form = m4a.algebra, m4a.form
    field = QT
    rule = monster_rule(field)
    evs = tuple(field.of(x) for x in ("1", "0", "1/4", "1/32"))
    checks = []

    def add(name, expected, actual):
        checks.append({"name": name, "expected": expected, "actual": actual,
                       "pass": expected == actual})

    add("dimension", 12, alg.dim)
    for ax, key in zip(m4a.axes, (1, -1, 2, -2, 3, -3)):
        dec = axis_decomposition(alg, ax, evs)
        add(f"a_{key} primitive", True, dec.is_primitive)
        add(f"a_{key} fusion violations", 0,
            len(verify_fusion(alg, dec, rule)))
    add("frobenius violations", 0, len(verify_frobenius(alg, form)))
    add("dependency violations", 0, len(verify_dependencies(m4a)))
    for name, op in m4a.symmetries.items():
        add(f"{name} automorphism+isometry", True,
            is_automorphism(alg, op, form))
    return {"target": "m4a", "checks": checks,
            "pass": all(c["pass"] for c in checks)}


def verify_m4b():
    from .m4 import build_m4b
    m4b = build_m4b()
    alg, form = m4b.algebra, m4b.form
    rule = monster_rule()
    checks = []

    def add(name, expected, actual):
        checks.append({"name": name, "expected": expected, "actual": actual,
                       "pass": expected == actual})

    add("dimension", 7, alg.dim)
    add("closure dim", 7, len(subalgebra_closure(alg, m4b.axes)))
    for ax, key in zip(m4b.axes, (1, -1, 2, -2, 3, -3)):
        dec = axis_decomposition(alg, ax, MONSTER_EIGENVALUES_QQ)
        add(f"a_{key} primitive", True, dec.is_primitive)
        add(f"a_{key} fusion violations", 0,
            len(verify_fusion(alg, dec, rule)))
    add("frobenius violations", 0, len(verify_frobenius(alg, form)))
    return {"target": "m4b", "checks": checks,
            "pass": all(c["pass"] for c in checks)}


def verify_dihedral(name):
    from .catalog import dihedral
    d = dihedral(name)
    alg, form = d.algebra, d.form
    rule = monster_rule()
    checks = []

    def add(cname, expected, actual):
        checks.append({"name": cname, "expected": expected, "actual": actual,
                       "pass": expected == actual})

    for ax, key in zip(d.axes, d.axis_keys):
        dec = axis_decomposition(alg, ax, MONSTER_EIGENVALUES_QQ)
        add(f"a_{key} primitive", True, dec.is_primitive)
        add(f"a_{key} fusion violations", 0,
            len(verify_fusion(alg, dec, rule)))
    add("frobenius violations", 0, len(verify_frobenius(alg, form)))
    dec0 = axis_decomposition(alg, alg.basis_vector("a_0"),
                              MONSTER_EIGENVALUES_QQ)
    ok = True
    for lam, vecs in d.reference_eigenvectors.items():
        bm, piv = span_rref(QQ, dec0.spaces[lam], alg.dim)
        for v in vecs:
            if not in_span(QQ, bm, piv, v):
                ok = False
    add("reference eigenvectors", True, ok)
    orbit = {tuple(g.matvec(d.axes[0])) for g in (d.group or [])}
    add("axis orbit size", len(d.axes), len(orbit))
    return {"target": f"dihedral:{name}", "checks": checks,
            "pass": all(c["pass"] for c in checks)}
