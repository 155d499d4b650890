"""Finite-dimensional Lie algebras by structure constants, representations as
operator matrices, bilinear forms, contragredients, and direct sums."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .linalg import Matrix, rank, vadd, vscale, vzero
from .scalars import QQ


@dataclass
class Report:
    """Outcome of a validation pass: ok iff no violations were recorded."""

    violations: list = dfield(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def fail(self, message):
        self.violations.append(message)

    def merge(self, other, prefix=""):
        for v in other.violations:
            self.violations.append(prefix + v)

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(self.violations)


class LieAlgebra:
    """A Lie algebra given by a basis and structure constants.

    brackets[i][j] is the coordinate vector of [e_i, e_j].
    """

    def __init__(self, dim, brackets, labels=None, field=QQ):
        self.dim = dim
        self.field = field
        self.brackets = tuple(
            tuple(tuple(field.coerce(c) for c in vec) for vec in row) for row in brackets
        )
        assert len(self.brackets) == dim
        for row in self.brackets:
            assert len(row) == dim and all(len(v) == dim for v in row)
        self.labels = tuple(labels) if labels else tuple("e%d" % i for i in range(dim))

    @classmethod
    def abelian(cls, dim, field=QQ, labels=None):
        z = vzero(dim)
        return cls(dim, [[z] * dim for _ in range(dim)], labels=labels, field=field)

    def bracket(self, x, y):
        """Bracket of two coordinate vectors."""
        out = vzero(self.dim)
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                out = vadd(out, vscale(a * b, self.brackets[i][j]))
        return out

    def ad(self, x):
        """Matrix of ad(x) acting on coordinate vectors."""
        cols = []
        for j in range(self.dim):
            ej = tuple(1 if k == j else 0 for k in range(self.dim))
            cols.append(self.bracket(x, ej))
        return Matrix.from_cols(cols, field=self.field, rows=self.dim)

    def adjoint_rep(self):
        ops = []
        for i in range(self.dim):
            ei = tuple(1 if k == i else 0 for k in range(self.dim))
            ops.append(self.ad(ei))
        return Representation(self, self.dim, ops)


def validate_lie_algebra(L):
    """Check antisymmetry and the Jacobi identity on all basis triples."""
    rep = Report()
    if L.dim < 1:
        rep.fail("pentad requires non-zero Lie algebra (dim >= 1)")
        return rep
    n = L.dim
    for i in range(n):
        if any(c != 0 for c in L.brackets[i][i]):
            rep.fail("alternating law violated: [e%d,e%d] != 0" % (i, i))
        for j in range(i + 1, n):
            if vadd(L.brackets[i][j], L.brackets[j][i]) != vzero(n):
                rep.fail("antisymmetry violated at (%d,%d)" % (i, j))
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = vadd(
                    vadd(
                        L.bracket(basis[i], L.bracket(basis[j], basis[k])),
                        L.bracket(basis[j], L.bracket(basis[k], basis[i])),
                    ),
                    L.bracket(basis[k], L.bracket(basis[i], basis[j])),
                )
                if s != vzero(n):
                    rep.fail("Jacobi violated at triple (%d,%d,%d)" % (i, j, k))
                    return rep
    return rep


class Representation:
    """A representation of a Lie algebra: one operator matrix per basis element."""

    def __init__(self, algebra, space_dim, operators):
        self.algebra = algebra
        self.space_dim = space_dim
        self.operators = tuple(operators)
        assert len(self.operators) == algebra.dim
        for op in self.operators:
            assert op.rows == space_dim and op.cols == space_dim

    @classmethod
    def zero(cls, algebra, space_dim):
        z = Matrix.zero(space_dim, space_dim, field=algebra.field)
        return cls(algebra, space_dim, [z] * algebra.dim)

    def operator(self, a):
        """Matrix of the action of the algebra element with coordinates a."""
        m = Matrix.zero(self.space_dim, self.space_dim, field=self.algebra.field)
        for i, c in enumerate(a):
            if c != 0:
                m = m + self.operators[i].scale(c)
        return m

    def act(self, a, v):
        """Apply the element with algebra coordinates a to the vector v."""
        out = vzero(self.space_dim)
        for i, c in enumerate(a):
            if c != 0:
                out = vadd(out, vscale(c, self.operators[i].mul_vec(v)))
        return out


def validate_representation(rho):
    """Check the commutator law rho([a,b]) = rho(a)rho(b) - rho(b)rho(a)."""
    rep = Report()
    L = rho.algebra
    for i in range(L.dim):
        for j in range(L.dim):
            lhs = rho.operator(L.brackets[i][j])
            rhs = rho.operators[i] @ rho.operators[j] - rho.operators[j] @ rho.operators[i]
            if lhs != rhs:
                rep.fail("representation law violated at pair (%d,%d)" % (i, j))
                return rep
    return rep


def contragredient(rho):
    """The dual representation: operators -transpose(rho(e_i)) in the dual basis."""
    return Representation(
        rho.algebra, rho.space_dim, [-op.transpose() for op in rho.operators]
    )


class BilinearForm:
    """A bilinear form on a Lie algebra, given by its Gram matrix."""

    def __init__(self, gram):
        self.gram = gram
        self.symmetric = gram == gram.transpose()

    @property
    def dim(self):
        return self.gram.rows

    def eval(self, x, y):
        total = 0
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = self.gram.row(i)
            for j, b in enumerate(y):
                if b != 0:
                    total = total + a * row[j] * b
        return total


def validate_bilinear_form(B, L):
    """Check non-degeneracy and invariance B([a,b],c) = B(a,[b,c])."""
    rep = Report()
    if B.gram.rows != L.dim or B.gram.cols != L.dim:
        rep.fail("Gram matrix dimension mismatch")
        return rep
    if rank(B.gram) != L.dim:
        rep.fail("bilinear form degenerate (rank %d < %d)" % (rank(B.gram), L.dim))
    n = L.dim
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = B.eval(L.brackets[i][j], basis[k])
                rhs = B.eval(basis[i], L.brackets[j][k])
                if lhs != rhs:
                    rep.fail("invariance violated at triple (%d,%d,%d)" % (i, j, k))
                    return rep
    return rep


def direct_sum_algebra(L1, L2):
    assert L1.field == L2.field, "field mismatch in direct sum"
    assert L1.dim >= 1 and L2.dim >= 1, "direct sum components must be non-zero"
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    brackets = [[vzero(n) for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            brackets[i][j] = L1.brackets[i][j] + vzero(n2)
    for i in range(n2):
        for j in range(n2):
            brackets[n1 + i][n1 + j] = vzero(n1) + L2.brackets[i][j]
    labels = tuple(l + "'" for l in L1.labels) + tuple(l + "''" for l in L2.labels)
    return LieAlgebra(n, brackets, labels=labels, field=L1.field)


def direct_sum_rep(rho1, rho2, algebra):
    """Block-diagonal sum of two representations of the two summands of `algebra`."""
    d1, d2 = rho1.space_dim, rho2.space_dim
    d = d1 + d2
    field = algebra.field
    ops = []
    for op in rho1.operators:
        rows = [list(op.row(i)) + [0] * d2 for i in range(d1)]
        rows += [[0] * d for _ in range(d2)]
        ops.append(Matrix(rows, field=field, cols=d))
    for op in rho2.operators:
        rows = [[0] * d for _ in range(d1)]
        rows += [[0] * d1 + list(op.row(i)) for i in range(d2)]
        ops.append(Matrix(rows, field=field, cols=d))
    return Representation(algebra, d, ops)


def sum_reps_same_algebra(rho1, rho2):
    """Direct sum V1 (+) V2 of two modules over the same algebra."""
    assert rho1.algebra is rho2.algebra or rho1.algebra.brackets == rho2.algebra.brackets
    d1, d2 = rho1.space_dim, rho2.space_dim
    d = d1 + d2
    field = rho1.algebra.field
    ops = []
    for op1, op2 in zip(rho1.operators, rho2.operators):
        rows = [list(op1.row(i)) + [0] * d2 for i in range(d1)]
        rows += [[0] * d1 + list(op2.row(i)) for i in range(d2)]
        ops.append(Matrix(rows, field=field, cols=d))
    return Representation(rho1.algebra, d, ops)


def direct_sum_form(B1, B2):
    d1, d2 = B1.gram.rows, B2.gram.rows
    rows = [list(B1.gram.row(i)) + [0] * d2 for i in range(d1)]
    rows += [[0] * d1 + list(B2.gram.row(i)) for i in range(d2)]
    return BilinearForm(Matrix(rows, field=B1.gram.field, cols=d1 + d2))
