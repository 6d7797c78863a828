"""Axial-algebra engine: structure-constant algebras, eigenspace
decompositions, fusion/Frobenius verification, Miyamoto involutions,
closures, ideals, radicals, quotients, projection graphs, gradings.

Vectors are coordinate tuples over the algebra's scalar field.
"""

from __future__ import annotations

from .errors import (DimensionMismatch, IncompleteDecomposition, NotAnIdeal,
                     NotIdempotent, NotSemisimple)
from .linalg import (Matrix, in_span, inverse, kernel_basis, rref, span_rref,
                     unit_vec, vec_add, vec_is_zero, vec_scale, vec_sub,
                     zero_vec)


class Algebra:
    """Finite-dimensional commutative algebra via a symmetric product table.

    mul_table[i][j] is the coordinate vector of (basis i) * (basis j).
    """

    def __init__(self, field, labels, mul_table):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mul_table = [[tuple(mul_table[i][j]) for j in range(self.dim)]
                          for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i):
                if self.mul_table[i][j] != self.mul_table[j][i]:
                    raise ValueError(
                        f"product table not symmetric at ({i}, {j})")
            for j in range(self.dim):
                if len(self.mul_table[i][j]) != self.dim:
                    raise DimensionMismatch("product entry of wrong length")

    def index(self, label):
        return self.labels.index(label)

    def basis_vector(self, label):
        return unit_vec(self.field, self.dim, self.index(label))

    def vector(self, combo):
        """Coordinate vector from {label: coefficient}."""
        v = [self.field.zero] * self.dim
        for label, c in combo.items():
            v[self.index(label)] = self.field.of(c)
        return tuple(v)

    def mul(self, u, v):
        """Bilinear extension of the product table."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("vector length != algebra dimension")
        field = self.field
        is_zero = field.is_zero
        acc = [field.zero] * self.dim
        table = self.mul_table
        for i, ui in enumerate(u):
            if is_zero(ui):
                continue
            row = table[i]
            for j, vj in enumerate(v):
                if is_zero(vj):
                    continue
                c = ui * vj
                for k, w in enumerate(row[j]):
                    if not is_zero(w):
                        acc[k] = acc[k] + c * w
        return tuple(acc)

    def ad(self, a) -> Matrix:
        """Matrix of the adjoint x -> a*x (columns = images of basis)."""
        cols = [self.mul(a, unit_vec(self.field, self.dim, j))
                for j in range(self.dim)]
        return Matrix(self.field, [[cols[j][i] for j in range(self.dim)]
                                   for i in range(self.dim)])

    def is_idempotent(self, a):
        return self.mul(a, a) == tuple(a)

    def describe(self, v):
        """Human-readable linear combination of basis labels."""
        parts = []
        for c, label in zip(v, self.labels):
            if not self.field.is_zero(c):
                parts.append(f"({c})*{label}")
        return " + ".join(parts) if parts else "0"


class BilinearForm:
    """Symmetric bilinear form via its Gram matrix on the algebra basis."""

    def __init__(self, field, gram: Matrix):
        if not gram.is_symmetric():
            raise ValueError("Gram matrix not symmetric")
        self.field = field
        self.gram = gram

    def apply(self, u, v):
        field = self.field
        acc = field.zero
        for i, ui in enumerate(u):
            if field.is_zero(ui):
                continue
            row = self.gram.data[i]
            s = field.zero
            for j, vj in enumerate(v):
                if not field.is_zero(vj):
                    s = s + row[j] * vj
            acc = acc + ui * s
        return acc


class FusionRule:
    """Symmetric map (eigenvalue pair) -> subset of eigenvalues."""

    def __init__(self, field, eigenvalues, table):
        self.field = field
        self.eigenvalues = tuple(field.of(x) for x in eigenvalues)
        self.table = {}
        for (lam, mu), vals in table.items():
            lam, mu = field.of(lam), field.of(mu)
            vals = frozenset(field.of(v) for v in vals)
            if not vals <= set(self.eigenvalues):
                raise ValueError("fusion target outside eigenvalue set")
            self.table[(lam, mu)] = vals
            self.table[(mu, lam)] = vals
        for lam in self.eigenvalues:
            for mu in self.eigenvalues:
                if (lam, mu) not in self.table:
                    raise ValueError(f"fusion table missing ({lam}, {mu})")

    def __getitem__(self, pair):
        lam, mu = pair
        return self.table[(self.field.of(lam), self.field.of(mu))]


class AxisDecomposition:
    """Eigenspace bases of ad_a for one idempotent a."""

    def __init__(self, axis, eigenvalues, spaces, dim, one):
        self.axis = tuple(axis)
        self.eigenvalues = tuple(eigenvalues)
        self.spaces = {lam: [tuple(v) for v in vs]
                       for lam, vs in spaces.items()}
        self.dim = dim
        self.one = one

    @property
    def dims(self):
        return tuple(len(self.spaces[lam]) for lam in self.eigenvalues)

    @property
    def is_complete(self):
        return sum(self.dims) == self.dim

    @property
    def is_primitive(self):
        """One-dimensional 1-eigenspace."""
        return len(self.spaces.get(self.one, ())) == 1


def axis_decomposition(alg: Algebra, a, eigenvalues) -> AxisDecomposition:
    """Eigenspace decomposition of ad_a over the given eigenvalue set.

    Raises NotIdempotent / NotSemisimple when a is not an axis candidate.
    """
    field = alg.field
    a = tuple(field.of(x) for x in a)
    if not alg.is_idempotent(a):
        raise NotIdempotent(f"not idempotent: {alg.describe(a)}")
    ada = alg.ad(a)
    eigenvalues = tuple(field.of(x) for x in dict.fromkeys(
        field.of(x) for x in eigenvalues))
    spaces = {}
    total = 0
    for lam in eigenvalues:
        shifted = Matrix(field, [[ada.data[i][j] - (lam if i == j else field.zero)
                                  for j in range(alg.dim)]
                                 for i in range(alg.dim)])
        basis = kernel_basis(shifted)
        spaces[lam] = basis
        total += len(basis)
    if total != alg.dim:
        raise NotSemisimple(
            f"eigenspace dims {[len(spaces[l]) for l in eigenvalues]} "
            f"sum to {total} != {alg.dim}")
    return AxisDecomposition(a, eigenvalues, spaces, alg.dim, field.one)


def verify_fusion(alg: Algebra, dec: AxisDecomposition, rule: FusionRule):
    """All eigenvector-pair products tested for fusion membership.

    Returns a list of violation records (empty list = pass).
    """
    if not dec.is_complete:
        raise IncompleteDecomposition("fusion check needs a complete decomposition")
    field = alg.field
    violations = []
    span_cache = {}

    def target_span(vals):
        key = frozenset(vals)
        if key not in span_cache:
            vecs = []
            for nu in dec.eigenvalues:
                if nu in key:
                    vecs.extend(dec.spaces[nu])
            span_cache[key] = span_rref(field, vecs, alg.dim)
        return span_cache[key]

    evs = dec.eigenvalues
    for i, lam in enumerate(evs):
        for mu in evs[i:]:
            allowed = rule[(lam, mu)]
            basis_m, pivots = target_span(allowed)
            for u in dec.spaces[lam]:
                for v in dec.spaces[mu]:
                    p = alg.mul(u, v)
                    if vec_is_zero(field, p):
                        continue
                    if not in_span(field, basis_m, pivots, p):
                        violations.append({
                            "eigenvalues": (str(lam), str(mu)),
                            "u": alg.describe(u),
                            "v": alg.describe(v),
                            "product": alg.describe(p),
                            "allowed": sorted(str(x) for x in allowed),
                        })
    return violations


def verify_frobenius(alg: Algebra, form: BilinearForm):
    """Check <b_i, b_j b_k> = <b_i b_j, b_k> on all basis triples."""
    field = alg.field
    gram = form.gram.data
    table = alg.mul_table
    n = alg.dim
    violations = []
    for i in range(n):
        for j in range(n):
            for k in range(i, n):  # i <-> k symmetry of the identity
                left = _form_row_dot(field, gram[i], table[j][k])
                right = _form_row_dot(field, gram[k], table[i][j])
                if left != right:
                    violations.append({
                        "triple": (alg.labels[i], alg.labels[j], alg.labels[k]),
                        "lhs": str(left),
                        "rhs": str(right),
                    })
    return violations


def _form_row_dot(field, gram_row, vec):
    acc = field.zero
    for g, v in zip(gram_row, vec):
        if not field.is_zero(v):
            acc = acc + g * v
    return acc


def miyamoto(alg: Algebra, dec: AxisDecomposition, negative_eigenvalues,
             form: BilinearForm = None) -> Matrix:
    """The involution that negates the given eigenspaces and fixes the rest.

    Checked to be an involutive algebra automorphism (and an isometry of
    the form when one is supplied); raises on violation.
    """
    if not dec.is_complete:
        raise IncompleteDecomposition("miyamoto needs a complete decomposition")
    field = alg.field
    neg = {field.of(x) for x in negative_eigenvalues}
    if not neg <= set(dec.eigenvalues):
        raise ValueError("negative eigenvalues outside the decomposition")
    cols = []
    signs = []
    for lam in dec.eigenvalues:
        for v in dec.spaces[lam]:
            cols.append(v)
            signs.append(-1 if lam in neg else 1)
    n = alg.dim
    E = Matrix(field, [[cols[j][i] for j in range(n)] for i in range(n)])
    S = Matrix(field, [[(field.of(signs[i]) if i == j else field.zero)
                        for j in range(n)] for i in range(n)])
    T = E.matmul(S).matmul(inverse(E))
    if T.matmul(T) != Matrix.identity(field, n):
        raise ValueError("constructed Miyamoto map is not an involution")
    _check_automorphism(alg, T, form)
    return T


def _check_automorphism(alg: Algebra, T: Matrix, form: BilinearForm = None):
    field = alg.field
    n = alg.dim
    for i in range(n):
        ei = unit_vec(field, n, i)
        for j in range(i, n):
            ej = unit_vec(field, n, j)
            lhs = T.matvec(alg.mul_table[i][j])
            rhs = alg.mul(T.matvec(ei), T.matvec(ej))
            if tuple(lhs) != tuple(rhs):
                raise ValueError(f"not an algebra automorphism at pair ({i},{j})")
    if form is not None:
        for i in range(n):
            ti = T.matvec(unit_vec(field, n, i))
            for j in range(i, n):
                tj = T.matvec(unit_vec(field, n, j))
                if form.apply(ti, tj) != form.gram.data[i][j]:
                    raise ValueError(f"not an isometry at pair ({i},{j})")


def is_automorphism(alg: Algebra, T: Matrix, form: BilinearForm = None) -> bool:
    try:
        _check_automorphism(alg, T, form)
        return True
    except ValueError:
        return False


def subalgebra_closure(alg: Algebra, generators):
    """RREF basis of the smallest product-closed subspace containing the
    generators; iterates span growth to a fixpoint."""
    field = alg.field
    basis_m, pivots = span_rref(field, [tuple(g) for g in generators], alg.dim)
    while True:
        current = [tuple(r) for r in basis_m.data]
        new_vecs = list(current)
        grew = False
        for i, u in enumerate(current):
            for v in current[i:]:
                p = alg.mul(u, v)
                if not in_span(field, basis_m, pivots, p):
                    new_vecs.append(p)
                    grew = True
        if not grew:
            return current
        basis_m, pivots = span_rref(field, new_vecs, alg.dim)


def subalgebra_algebra(alg: Algebra, basis_vectors, labels=None):
    """Materialize a product-closed subspace as an Algebra in its own
    coordinates; returns (Algebra, coords) where coords maps an ambient
    vector inside the subspace to subalgebra coordinates."""
    field = alg.field
    m, pivots = span_rref(field, [tuple(v) for v in basis_vectors], alg.dim)
    k = len(pivots)

    def coords(v):
        r = list(v)
        out = []
        for row, pc in zip(m.data, pivots):
            c = r[pc]
            out.append(c)
            if not field.is_zero(c):
                r = [x - c * y for x, y in zip(r, row)]
        if any(not field.is_zero(x) for x in r):
            raise ValueError("vector outside the subalgebra")
        return tuple(out)

    table = [[coords(alg.mul(tuple(m.data[i]), tuple(m.data[j])))
              for j in range(k)] for i in range(k)]
    if labels is None:
        labels = [f"s_{i}" for i in range(k)]
    return Algebra(field, labels, table), coords


def radical(form: BilinearForm):
    """Kernel of the Gram matrix = radical of the Frobenius form."""
    return kernel_basis(form.gram)


def is_ideal(alg: Algebra, subspace):
    """True iff the span of the subspace absorbs products with the basis."""
    field = alg.field
    basis_m, pivots = span_rref(field, [tuple(v) for v in subspace], alg.dim)
    for i in range(alg.dim):
        ei = unit_vec(field, alg.dim, i)
        for v in basis_m.data:
            if not in_span(field, basis_m, pivots, alg.mul(ei, tuple(v))):
                return False
    return True


def quotient(alg: Algebra, form: BilinearForm, ideal):
    """Quotient algebra and induced form on a complement basis.

    The ideal must absorb products (NotAnIdeal otherwise).  The induced
    form is only well defined when the ideal lies in the form's kernel;
    that containment is checked here as well.
    """
    field = alg.field
    ideal_m, pivots = span_rref(field, [tuple(v) for v in ideal], alg.dim)
    if not is_ideal(alg, ideal_m.data):
        raise NotAnIdeal("subspace does not absorb products")
    pivot_set = set(pivots)
    comp = [j for j in range(alg.dim) if j not in pivot_set]

    def project(v):
        """Reduce modulo the ideal, then read off complement coordinates."""
        r = list(v)
        for row, pc in zip(ideal_m.data, pivots):
            c = r[pc]
            if not field.is_zero(c):
                r = [x - c * y for x, y in zip(r, row)]
        return tuple(r[j] for j in comp)

    reps = [unit_vec(field, alg.dim, j) for j in comp]
    labels = [alg.labels[j] for j in comp]
    table = [[project(alg.mul(reps[i], reps[j])) for j in range(len(comp))]
             for i in range(len(comp))]
    qalg = Algebra(field, labels, table)
    # induced form well-defined <=> ideal is in the kernel of the form
    zero = zero_vec(field, alg.dim)
    for v in ideal_m.data:
        for i in range(alg.dim):
            if form.apply(tuple(v), unit_vec(field, alg.dim, i)) != field.zero:
                raise NotAnIdeal("ideal not contained in the form kernel; "
                                 "induced form undefined")
    qgram = Matrix(field, [[form.apply(reps[i], reps[j])
                            for j in range(len(comp))]
                           for i in range(len(comp))])
    return qalg, BilinearForm(field, qgram), project


def projection_graph(form: BilinearForm, axes):
    """Adjacency dict on axis indices; edge iff <a_i, a_j> != 0."""
    field = form.field
    n = len(axes)
    adj = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if not field.is_zero(form.apply(axes[i], axes[j])):
                adj[i].add(j)
                adj[j].add(i)
    return adj


def is_connected(graph) -> bool:
    if not graph:
        return True
    seen = set()
    stack = [next(iter(graph))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(graph[v] - seen)
    return len(seen) == len(graph)


class AbelianGroup:
    """Tiny finite abelian group given by element names and a product map."""

    def __init__(self, elements, op, identity):
        self.elements = tuple(elements)
        self.op = dict(op)
        self.identity = identity

    def mul(self, a, b):
        return self.op[(a, b)]

    @classmethod
    def c2(cls):
        e, g = "e", "g"
        op = {(e, e): e, (e, g): g, (g, e): g, (g, g): e}
        return cls((e, g), op, e)

    @classmethod
    def c2xc2(cls):
        els = ("e", "a", "b", "ab")
        flip = {"e": 0, "a": 1, "b": 2, "ab": 3}
        rev = {v: k for k, v in flip.items()}
        op = {(x, y): rev[flip[x] ^ flip[y]] for x in els for y in els}
        return cls(els, op, "e")


class GradingAssignment:
    """Map eigenvalue -> group element (total on the rule's eigenvalues)."""

    def __init__(self, group: AbelianGroup, assignment):
        self.group = group
        self.assignment = dict(assignment)


def verify_grading(rule: FusionRule, grading: GradingAssignment) -> bool:
    """True iff assignment(nu) = assignment(lam)*assignment(mu) for every
    nu in lam*mu."""
    g = grading.group
    asg = grading.assignment
    for lam in rule.eigenvalues:
        if lam not in asg:
            return False
    for lam in rule.eigenvalues:
        for mu in rule.eigenvalues:
            target = g.mul(asg[lam], asg[mu])
            for nu in rule[(lam, mu)]:
                if asg[nu] != target:
                    return False
    return True
