"""Ready-made pentads: special linear families, the two-torus example, the
adjoint construction, and a characteristic-2 example."""

from __future__ import annotations

from fractions import Fraction

from .liealg import BilinearForm, LieAlgebra, Representation
from .linalg import Matrix, solve_unique
from .pentad import Pentad
from .scalars import QQ, PrimeField


def matrix_lie_algebra(basis_matrices, field=QQ, labels=None):
    """Lie algebra spanned by linearly independent matrices, with structure
    constants computed from commutators."""
    flat = [tuple(x for row in b.data for x in row) for b in basis_matrices]
    span = Matrix.from_cols(flat, field=field, rows=len(flat[0]))
    dim = len(basis_matrices)
    brackets = []
    for a in basis_matrices:
        row = []
        for b in basis_matrices:
            comm = a @ b - b @ a
            row.append(solve_unique(span, tuple(x for r in comm.data for x in r)))
        brackets.append(row)
    return LieAlgebra(dim, brackets, labels=labels, field=field)


def sl_basis(m, field=QQ):
    """Basis of sl_m: Cartan elements E_ii - E_{i+1,i+1}, then off-diagonal E_ij."""
    def unit(i, j):
        rows = [[field.one() if (r, c) == (i, j) else field.zero() for c in range(m)]
                for r in range(m)]
        return Matrix(rows, field=field, cols=m)

    basis = []
    labels = []
    for i in range(m - 1):
        basis.append(unit(i, i) - unit(i + 1, i + 1))
        labels.append("h%d" % i)
    for i in range(m):
        for j in range(m):
            if i != j:
                basis.append(unit(i, j))
                labels.append("E%d%d" % (i, j))
    return basis, labels


def sl2(field=QQ):
    """sl_2 with basis (h, x, y): [h,x] = 2x, [h,y] = -2y, [x,y] = h."""
    basis, _ = sl_basis(2, field=field)
    return matrix_lie_algebra(basis, field=field, labels=["h", "x", "y"])


def sl2_trace_form(field=QQ):
    return BilinearForm(Matrix([[2, 0, 0], [0, 0, 1], [0, 1, 0]], field=field))


def gl1_sl_pentad(m):
    """(gl_1 + sl_m, natural rep, Q^m, (Q^m)*, kappa_m) whose graded algebra
    is sl_{m+1} of dimension m^2 + 2m."""
    field = QQ
    basis, labels = sl_basis(m, field=field)
    # extend with the gl_1 generator acting as the identity on Q^m
    dim = len(basis) + 1
    sl = matrix_lie_algebra(basis, field=field, labels=labels)
    brackets = [[(0,) + ((0,) * len(basis)) for _ in range(dim)] for _ in range(dim)]
    for i in range(sl.dim):
        for j in range(sl.dim):
            brackets[i + 1][j + 1] = (0,) + sl.brackets[i][j]
    g = LieAlgebra(dim, brackets, labels=["z"] + list(labels), field=field)
    eye = Matrix.identity(m, field=field)
    ops = [eye] + basis
    rho = Representation(g, m, ops)
    # kappa_m((a,A),(a',A')) = m/(m+1) a a' + Tr(A A')
    gram = [[0] * dim for _ in range(dim)]
    gram[0][0] = Fraction(m, m + 1)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            gram[i + 1][j + 1] = (a @ b).trace()
    b0 = BilinearForm(Matrix(gram, field=field, cols=dim))
    return Pentad.build(g, rho, b0)


def gl1gl1sl2_pentad():
    """The pentad (gl_1 + gl_1 + sl_2, rho, Q^2, (Q^2)*, B0) with
    rho((a,b,A))v = bv + Av, whose graded algebra is gl_1 + sl_3 (dim 9)."""
    field = QQ
    slb, _ = sl_basis(2, field=field)
    dim = 5  # e_a, e_b, h, x, y
    sl = matrix_lie_algebra(slb, field=field)
    brackets = [[(0, 0, 0, 0, 0) for _ in range(dim)] for _ in range(dim)]
    for i in range(3):
        for j in range(3):
            brackets[i + 2][j + 2] = (0, 0) + sl.brackets[i][j]
    g = LieAlgebra(dim, brackets, labels=["ea", "eb", "h", "x", "y"], field=field)
    zero2 = Matrix.zero(2, 2, field=field)
    eye2 = Matrix.identity(2, field=field)
    rho = Representation(g, 2, [zero2, eye2] + slb)
    # B0((a,b,A),(a',b',A')) = 3/4 aa' + bb' + 1/2(ab' + a'b) + Tr(AA')
    gram = [
        [Fraction(3, 4), Fraction(1, 2), 0, 0, 0],
        [Fraction(1, 2), 1, 0, 0, 0],
        [0, 0, 2, 0, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0],
    ]
    b0 = BilinearForm(Matrix(gram, field=field, cols=5))
    return Pentad.build(g, rho, b0)


def gl1gl1sl2_modules():
    """The rank-one modules over gl1gl1sl2_pentad: pi((a,b,A))u = au on U = Q,
    varpi((a,b,A))w = -aw on its dual, paired by <u,w> = uw."""
    p = gl1gl1sl2_pentad()
    one = Matrix([[1]], field=QQ)
    zero = Matrix([[0]], field=QQ)
    pi = Representation(p.g, 1, [one, zero, zero, zero, zero])
    varpi = Representation(p.g, 1, [-one, zero, zero, zero, zero])
    pairing0 = Matrix([[1]], field=QQ)
    return p, pi, varpi, pairing0


def adjoint_pentad(L, B):
    """(g, ad, g, g, B) with the pairing B itself; its Phi-map is the bracket."""
    ad = L.adjoint_rep()
    return Pentad(L, ad, ad, B.gram, B)


def char2_pentad():
    """A small pentad over GF(2): abelian g = gl_1 + gl_1 acting diagonally."""
    field = PrimeField(2)
    g = LieAlgebra.abelian(2, field=field)
    rho = Representation(g, 2, [
        Matrix([[1, 0], [0, 0]], field=field),
        Matrix([[0, 0], [0, 1]], field=field),
    ])
    b0 = BilinearForm(Matrix.identity(2, field=field))
    return Pentad.build(g, rho, b0)
