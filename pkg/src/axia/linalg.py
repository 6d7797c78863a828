"""Dense exact linear algebra over a generic scalar field (Q or Q(t)).

Matrices are immutable-by-convention lists of rows; all algorithms are
division-exact (RREF, Bareiss determinant, semidefinite-aware LDLT) and
never use floating point.
"""

from __future__ import annotations

from .errors import DimensionMismatch, NonSquare, ZeroPivotSymbolic
from .scalars import QQ, QT


class Matrix:
    """Dense matrix over one scalar field; data is a list of row lists."""

    __slots__ = ("field", "data", "rows", "cols")

    def __init__(self, field, data):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field!r})"

    def copy(self):
        return Matrix(self.field, self.data)

    def transpose(self):
        return Matrix(self.field,
                      [[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        return all(self.data[i][j] == self.data[j][i]
                   for i in range(self.rows) for j in range(i))

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch("matmul shape mismatch")
        z = self.field.zero
        out = []
        bt = other.transpose().data
        for arow in self.data:
            out.append([sum((a * b for a, b in zip(arow, bcol)), z)
                        for bcol in bt])
        return Matrix(self.field, out)

    def matvec(self, v):
        if self.cols != len(v):
            raise DimensionMismatch("matvec shape mismatch")
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, v)), z)
                     for row in self.data)

    def scale(self, c):
        return Matrix(self.field, [[c * x for x in row] for row in self.data])

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("add shape mismatch")
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.data, other.data)])

    def sub(self, other):
        return self.add(other.scale(-self.field.one))


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

def rref(m: Matrix):
    """Reduced row echelon form; returns (Matrix, pivot column tuple)."""
    field = m.field
    data = [list(row) for row in m.data]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if not field.is_zero(data[i][c])),
                  None)
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        pv = data[r][c]
        if pv != field.one:
            inv_row = data[r]
            data[r] = [x / pv for x in inv_row]
        for i in range(nr):
            if i != r and not field.is_zero(data[i][c]):
                f = data[i][c]
                data[i] = [x - f * y for x, y in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Matrix(field, data), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix):
    """RREF-canonical basis of the right null space (tuple of vectors)."""
    field = m.field
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    z, o = field.zero, field.one
    for fc in free:
        v = [z] * m.cols
        v[fc] = o
        for r, pc in enumerate(pivots):
            v[pc] = -red.data[r][fc]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b):
    """One exact solution of m x = b, or None if inconsistent."""
    field = m.field
    aug = Matrix(field, [list(row) + [bi] for row, bi in zip(m.data, b)])
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    z = field.zero
    x = [z] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red.data[r][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise NonSquare("inverse of a non-square matrix")
    n = m.rows
    field = m.field
    aug = Matrix(field, [list(row) + [field.one if i == j else field.zero
                                      for j in range(n)]
                         for i, row in enumerate(m.data)])
    red, pivots = rref(aug)
    if len(pivots) != n or any(p >= n for p in pivots):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(field, [row[n:] for row in red.data])


def determinant(m: Matrix):
    """Exact determinant by fraction-free (Bareiss) elimination.

    The intermediate entries are minors of the input, which keeps degree
    growth under control over Q(t); over Q the divisions are exact
    rational arithmetic anyway.
    """
    if m.rows != m.cols:
        raise NonSquare("determinant of a non-square matrix")
    field = m.field
    n = m.rows
    if n == 0:
        return field.one
    a = [list(row) for row in m.data]
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if field.is_zero(a[k][k]):
            pr = next((i for i in range(k + 1, n)
                       if not field.is_zero(a[i][k])), None)
            if pr is None:
                return field.zero
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                row_i[j] = _exact_div(field, num, prev)
            row_i[k] = field.zero
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def _exact_div(field, num, den):
    if field is QT:
        # division of polynomials guaranteed exact by Bareiss
        if den == field.one:
            return num
    return num / den


# ---------------------------------------------------------------------------
# LDLT
# ---------------------------------------------------------------------------

class LDLTResult:
    """Outcome of a natural-order, no-pivoting LDLT decomposition.

    status is "COMPLETE" or "FAILED_INDEFINITE"; on failure, certificate
    is the (row, col) of a nonzero entry below an exactly-zero pivot,
    which witnesses that the matrix is not positive semidefinite.
    """

    COMPLETE = "COMPLETE"
    FAILED_INDEFINITE = "FAILED_INDEFINITE"

    def __init__(self, field, L, D, status, certificate=None):
        self.field = field
        self.L = L
        self.D = D
        self.status = status
        self.certificate = certificate

    def is_psd(self):
        if self.status != self.COMPLETE:
            return False
        if self.field is QT:
            raise TypeError("no sign verdict over Q(t); specialize first")
        return all(self.field.sign(d) >= 0 for d in self.D)

    def is_pd(self):
        return (self.status == self.COMPLETE
                and all(self.field.sign(d) > 0 for d in self.D))


def ldlt(m: Matrix, positivity_oracle=None, entry_guard=None) -> LDLTResult:
    """Semidefinite-aware LDLT in natural order with no pivoting.

    A zero pivot is legal only when the rest of its column (in the Schur
    complement) is exactly zero; the column is then skipped with D entry 0.
    Otherwise the matrix cannot be PSD: over Q the result carries status
    FAILED_INDEFINITE, over Q(t) ZeroPivotSymbolic is raised.

    positivity_oracle may override the sign test used for reporting; the
    decomposition itself only needs exact zero tests.  entry_guard, if
    given, is called with every computed pivot and L entry and may raise
    to abort (used for symbolic degree caps).
    """
    if m.rows != m.cols:
        raise NonSquare("ldlt of a non-square matrix")
    field = m.field
    n = m.rows
    z, one = field.zero, field.one
    is_zero = field.is_zero
    # L stored compactly: lrows[i][k] is L[i, active[k]]
    lrows = [[] for _ in range(n)]
    active = []
    D = []
    for j in range(n):
        lj = lrows[j]
        dj = m.data[j][j] - sum((lj[k] * lj[k] * D[active[k]]
                                 for k in range(len(lj))), z)
        if entry_guard is not None:
            entry_guard(dj)
        if is_zero(dj):
            for i in range(j + 1, n):
                li = lrows[i]
                cij = m.data[i][j] - sum((a * b for a, b in zip(li, _dl(lj, D, active))), z)
                if not is_zero(cij):
                    if field is QT:
                        raise ZeroPivotSymbolic(
                            f"zero pivot at column {j}, nonzero entry at row {i}")
                    L = _expand_l(field, lrows, active, n)
                    return LDLTResult(field, L, D + [z] * (n - len(D)),
                                      LDLTResult.FAILED_INDEFINITE, (i, j))
            D.append(z)
            continue
        D.append(dj)
        dl = [lj[k] * D[active[k]] for k in range(len(lj))]
        for i in range(j + 1, n):
            li = lrows[i]
            cij = m.data[i][j] - sum((a * b for a, b in zip(li, dl)), z)
            lij = cij / dj
            if entry_guard is not None:
                entry_guard(lij)
            li.append(lij)
        active.append(j)
    L = _expand_l(field, lrows, active, n)
    return LDLTResult(field, L, D, LDLTResult.COMPLETE)


def _dl(lj, D, active):
    return [lj[k] * D[active[k]] for k in range(len(lj))]


def _expand_l(field, lrows, active, n):
    z, one = field.zero, field.one
    L = [[z] * n for _ in range(n)]
    for i in range(n):
        L[i][i] = one
        for k, col in enumerate(active):
            if col < i and k < len(lrows[i]):
                L[i][col] = lrows[i][k]
    return Matrix(field, L)


def reconstruct_ldlt(result: LDLTResult) -> Matrix:
    """L diag(D) L^T, for checking exact reconstruction."""
    field = result.field
    n = result.L.rows
    Ld = Matrix(field, [[result.L.data[i][j] * result.D[j] for j in range(n)]
                        for i in range(n)])
    return Ld.matmul(result.L.transpose())


# ---------------------------------------------------------------------------
# Vector helpers (coordinate tuples over a field)
# ---------------------------------------------------------------------------

def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_neg(u):
    return tuple(-a for a in u)


def zero_vec(field, n):
    return (field.zero,) * n


def unit_vec(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_is_zero(field, u):
    return all(field.is_zero(a) for a in u)


def span_rref(field, vectors, ncols):
    """Matrix whose rows are an RREF basis of the span of the vectors."""
    if not vectors:
        return Matrix(field, []), ()
    red, pivots = rref(Matrix(field, list(vectors)))
    basis_rows = red.data[:len(pivots)]
    return Matrix(field, basis_rows), pivots


def in_span(field, rref_basis: Matrix, pivots, v):
    """Exact membership of v in the row span of an RREF basis."""
    r = list(v)
    for row, pc in zip(rref_basis.data, pivots):
        c = r[pc]
        if not field.is_zero(c):
            r = [x - c * y for x, y in zip(r, row)]
    return all(field.is_zero(x) for x in r)
