"""Dense exact linear algebra: rref, solve, kernel, image, canonical subspaces.

All scalars are exact (Fraction or GFElement, interoperating with ints).
Pivoting is always "first nonzero entry scanning left-to-right", so every
basis this module produces is deterministic and canonical for its span.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QQ, FieldMismatchError, GFElement, PrimeField


def infer_field(entries):
    """Determine the common field of a collection of scalars."""
    field = None
    for x in entries:
        if isinstance(x, GFElement):
            f = PrimeField(x.modulus)
        elif isinstance(x, Fraction):
            f = QQ
        else:
            continue
        if field is None:
            field = f
        elif field != f:
            raise FieldMismatchError("mixed fields %r and %r" % (field, f))
    return field if field is not None else QQ


class Matrix:
    """Immutable dense matrix over an exact field, row-major."""

    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, data, field=None, cols=None):
        data = tuple(tuple(row) for row in data)
        if field is None:
            field = infer_field(x for row in data for x in row)
        self.field = field
        self.data = tuple(tuple(field.coerce(x) for x in row) for row in data)
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(row) != self.cols for row in self.data):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    @classmethod
    def zero(cls, rows, cols, field=QQ):
        z = field.zero()
        return cls([[z] * cols for _ in range(rows)], field=field, cols=cols)

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field.zero(), field.one()
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], field=field)

    @classmethod
    def from_cols(cls, cols, field=None, rows=None):
        cols = [tuple(c) for c in cols]
        if rows is None:
            rows = len(cols[0]) if cols else 0
        data = [[c[i] for c in cols] for i in range(rows)]
        return cls(data, field=field, cols=len(cols))

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(row[j] for row in self.data)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            field=self.field, cols=self.cols,
        )

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            field=self.field, cols=self.cols,
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.data], field=self.field, cols=self.cols)

    def scale(self, c):
        return Matrix([[c * a for a in row] for row in self.data], field=self.field, cols=self.cols)

    def __matmul__(self, other):
        assert self.cols == other.rows, "shape mismatch %dx%d @ %dx%d" % (
            self.rows, self.cols, other.rows, other.cols)
        ocols = [other.col(j) for j in range(other.cols)]
        return Matrix(
            [[vdot(row, c) for c in ocols] for row in self.data],
            field=self.field, cols=other.cols,
        )

    def mul_vec(self, v):
        assert self.cols == len(v)
        return tuple(vdot(row, v) for row in self.data)

    def transpose(self):
        return Matrix([self.col(j) for j in range(self.cols)], field=self.field, cols=self.rows)

    def trace(self):
        assert self.rows == self.cols
        return sum(self.data[i][i] for i in range(self.rows))

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def __repr__(self):
        return "Matrix(%r)" % (list(list(r) for r in self.data),)


def vdot(u, v):
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * x for x in v)


def vzero(n):
    return (0,) * n


def is_zero_vec(v):
    return all(x == 0 for x in v)


def rref(m):
    """Reduced row-echelon form.  Returns (R, pivot_columns, rank)."""
    rows = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        if inv != 1:
            rows[r] = [x / inv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Matrix(rows, field=m.field, cols=nc), tuple(pivots), len(pivots)


def rank(m):
    return rref(m)[2]


def solve(m, rhs):
    """Solve m x = rhs exactly.

    Returns the solution with zero free variables, or None when inconsistent.
    """
    assert m.rows == len(rhs)
    aug = Matrix([list(row) + [b] for row, b in zip(m.data, rhs)],
                 field=m.field, cols=m.cols + 1)
    if m.rows == 0:
        return vzero(m.cols)
    R, pivots, _ = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [0] * m.cols
    for r, c in enumerate(pivots):
        x[c] = R[r, m.cols]
    return tuple(x)


def solve_unique(m, rhs):
    x = solve(m, rhs)
    if x is None:
        raise ValueError("inconsistent linear system")
    return x


class Subspace:
    """A subspace of k^n with a canonical (echelon) basis.

    The basis vectors, read as the rows of a matrix, are in reduced
    row-echelon form; each basis vector has a leading 1 in its pivot
    coordinate and zeros in every other basis vector's pivot coordinate.
    This form is unique for the span, so equal subspaces compare equal.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis, pivots):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(v) for v in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, vectors, ambient_dim):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            assert len(v) == ambient_dim
        if not vectors:
            return cls(ambient_dim, (), ())
        R, pivots, rk = rref(Matrix(vectors, cols=ambient_dim))
        return cls(ambient_dim, R.data[:rk], pivots)

    @classmethod
    def full(cls, ambient_dim, field=QQ):
        eye = Matrix.identity(ambient_dim, field=field)
        return cls(ambient_dim, eye.data, tuple(range(ambient_dim)))

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, v):
        """Coordinates of v in the canonical basis, or None if v is outside."""
        assert len(v) == self.ambient_dim
        cs = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, b in zip(cs, self.basis):
            if c != 0:
                residual = [a - c * x for a, x in zip(residual, b)]
        if any(x != 0 for x in residual):
            return None
        return cs

    def contains(self, v):
        return self.coords(v) is not None

    def from_coords(self, cs):
        v = [0] * self.ambient_dim
        for c, b in zip(cs, self.basis):
            if c != 0:
                v = [a + c * x for a, x in zip(v, b)]
        return tuple(v)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)


def image_basis(m):
    """Canonical basis of the column span of m."""
    return Subspace.from_vectors([m.col(j) for j in range(m.cols)], m.rows)


def kernel_basis(m):
    """Canonical basis of the null space of m."""
    R, pivots, rk = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    gens = []
    for f in free:
        x = [0] * m.cols
        x[f] = 1
        for r, c in enumerate(pivots):
            x[c] = -R[r, f]
        gens.append(tuple(x))
    return Subspace.from_vectors(gens, m.cols)
