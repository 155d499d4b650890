"""Standard pentads (g, rho, V, dual V, B0): assembly, Phi-map solving,
validation, direct sums, and surjectivity diagnostics."""

from __future__ import annotations

from .liealg import (
    Report,
    contragredient,
    direct_sum_algebra,
    direct_sum_form,
    direct_sum_rep,
    validate_bilinear_form,
    validate_lie_algebra,
    validate_representation,
)
from .linalg import Matrix, Subspace, kernel_basis, rank, solve_unique, vadd, vzero


class Pentad:
    """A pentad (g, rho, V, dualV, B0) with its solved Phi and Psi tables.

    phi[j][k] is Phi(v_j (x) phi_k) in g coordinates; psi[k][j] is
    Psi(phi_k (x) v_j).
    """

    def __init__(self, g, rho, dual, pairing, b0):
        self.g = g
        self.rho = rho
        self.dual = dual
        self.pairing = pairing  # dim V x dim dual, entry <v_i, phi_j>
        self.b0 = b0
        assert pairing.rows == rho.space_dim and pairing.cols == dual.space_dim
        self.phi = solve_phi_map(g, rho, dual, pairing, b0)
        self.psi = solve_psi_map(g, rho, dual, pairing, b0)

    @classmethod
    def build(cls, g, rho, b0, dual=None, pairing=None):
        """Assemble a pentad; dual module defaults to the full dual of V."""
        if dual is None:
            dual = contragredient(rho)
        if pairing is None:
            assert dual.space_dim == rho.space_dim
            pairing = Matrix.identity(rho.space_dim, field=g.field)
        return cls(g, rho, dual, pairing, b0)

    @property
    def field(self):
        return self.g.field

    def pair(self, v, phi):
        """The pairing <v, phi> of coordinate vectors."""
        total = 0
        for i, a in enumerate(v):
            if a == 0:
                continue
            row = self.pairing.row(i)
            for j, b in enumerate(phi):
                if b != 0:
                    total = total + a * row[j] * b
        return total

    def phi_vec(self, v, phi):
        """Phi(v (x) phi) for arbitrary coordinate vectors, from the table."""
        out = vzero(self.g.dim)
        for j, a in enumerate(v):
            if a == 0:
                continue
            for k, b in enumerate(phi):
                if b != 0:
                    out = vadd(out, tuple(a * b * c for c in self.phi[j][k]))
        return out


def solve_phi_map(g, rho, dual, pairing, b0):
    """Solve B0(a, Phi(v (x) phi)) = <rho(a)v, phi> for each basis pair (v, phi)."""
    dimv, dimd = rho.space_dim, dual.space_dim
    table = []
    for j in range(dimv):
        vj = tuple(1 if t == j else 0 for t in range(dimv))
        row = []
        for k in range(dimd):
            rhs = []
            for i in range(g.dim):
                av = rho.operators[i].mul_vec(vj)
                rhs.append(sum(av[r] * pairing[r, k] for r in range(dimv)))
            row.append(solve_unique(b0.gram, rhs))
        table.append(tuple(row))
    return tuple(table)


def solve_psi_map(g, rho, dual, pairing, b0):
    """Solve B0(a, Psi(phi (x) v)) = <v, varrho(a)phi> for each basis pair."""
    dimv, dimd = rho.space_dim, dual.space_dim
    table = []
    for k in range(dimd):
        phik = tuple(1 if t == k else 0 for t in range(dimd))
        row = []
        for j in range(dimv):
            rhs = []
            for i in range(g.dim):
                aphi = dual.operators[i].mul_vec(phik)
                rhs.append(sum(pairing[j, r] * aphi[r] for r in range(dimd)))
            row.append(solve_unique(b0.gram, rhs))
        table.append(tuple(row))
    return tuple(table)


def validate_pentad(p):
    """Full standardness check: component validators, pairing non-degeneracy,
    the Phi defining relation, Phi + Psi = 0, and Phi equivariance."""
    rep = Report()
    rep.merge(validate_lie_algebra(p.g), "algebra: ")
    if not rep.ok:
        return rep
    rep.merge(validate_representation(p.rho), "rho: ")
    rep.merge(validate_representation(p.dual), "dual module: ")
    rep.merge(validate_bilinear_form(p.b0, p.g), "B0: ")
    dimv, dimd = p.rho.space_dim, p.dual.space_dim
    if dimv != dimd or (dimv > 0 and rank(p.pairing) != dimv):
        rep.fail("pairing between V and dual V is degenerate")
    g = p.g
    basis_g = [tuple(1 if t == i else 0 for t in range(g.dim)) for i in range(g.dim)]
    basis_v = [tuple(1 if t == j else 0 for t in range(dimv)) for j in range(dimv)]
    basis_d = [tuple(1 if t == k else 0 for t in range(dimd)) for k in range(dimd)]
    for i in range(g.dim):
        for j in range(dimv):
            for k in range(dimd):
                # defining relation and its dual-side mirror
                lhs = p.b0.eval(basis_g[i], p.phi[j][k])
                av = p.rho.operators[i].mul_vec(basis_v[j])
                rhs = p.pair(av, basis_d[k])
                if lhs != rhs:
                    rep.fail("Phi defining relation violated at (a%d, v%d, phi%d)" % (i, j, k))
                    return rep
                aphi = p.dual.operators[i].mul_vec(basis_d[k])
                if rhs != -p.pair(basis_v[j], aphi):
                    rep.fail("pairing not g-invariant at (a%d, v%d, phi%d)" % (i, j, k))
                    return rep
    for j in range(dimv):
        for k in range(dimd):
            if vadd(p.phi[j][k], p.psi[k][j]) != vzero(g.dim):
                rep.fail("Phi + Psi != 0 at pair (v%d, phi%d)" % (j, k))
                return rep
    # equivariance: Phi(rho(a)v (x) phi) + Phi(v (x) varrho(a)phi) = [a, Phi(v (x) phi)]
    for i in range(g.dim):
        for j in range(dimv):
            for k in range(dimd):
                av = p.rho.operators[i].mul_vec(basis_v[j])
                aphi = p.dual.operators[i].mul_vec(basis_d[k])
                lhs = vadd(p.phi_vec(av, basis_d[k]), p.phi_vec(basis_v[j], aphi))
                rhs = g.bracket(basis_g[i], p.phi[j][k])
                if lhs != rhs:
                    rep.fail("Phi equivariance violated at (a%d, v%d, phi%d)" % (i, j, k))
                    return rep
    return rep


def direct_sum_pentad(p1, p2):
    """The direct sum pentad (g1+g2, rho1+rho2, V1+V2, dual1+dual2, B1+B2)."""
    assert p1.field == p2.field, "field mismatch in pentad direct sum"
    g = direct_sum_algebra(p1.g, p2.g)
    rho = direct_sum_rep(p1.rho, p2.rho, g)
    dual = direct_sum_rep(p1.dual, p2.dual, g)
    d1, d2 = p1.pairing.rows, p2.pairing.rows
    c1, c2 = p1.pairing.cols, p2.pairing.cols
    rows = [list(p1.pairing.row(i)) + [0] * c2 for i in range(d1)]
    rows += [[0] * c1 + list(p2.pairing.row(i)) for i in range(d2)]
    pairing = Matrix(rows, field=g.field, cols=c1 + c2)
    b0 = direct_sum_form(p1.b0, p2.b0)
    return Pentad(g, rho, dual, pairing, b0)


def surjectivity_checks(p):
    """Rank-based diagnostics: rho/varrho/Phi surjectivity and rho faithfulness."""
    dimv, dimd, dimg = p.rho.space_dim, p.dual.space_dim, p.g.dim
    rho_vecs = []
    for op in p.rho.operators:
        for j in range(dimv):
            rho_vecs.append(op.col(j))
    dual_vecs = []
    for op in p.dual.operators:
        for k in range(dimd):
            dual_vecs.append(op.col(k))
    phi_vecs = [p.phi[j][k] for j in range(dimv) for k in range(dimd)]
    flat_cols = []
    for op in p.rho.operators:
        flat_cols.append(tuple(x for row in op.data for x in row))
    faithful_mat = Matrix.from_cols(flat_cols, field=p.field, rows=dimv * dimv)
    return {
        "rho_surjective": Subspace.from_vectors(rho_vecs, dimv).dim == dimv,
        "varrho_surjective": Subspace.from_vectors(dual_vecs, dimd).dim == dimd,
        "phi_surjective": Subspace.from_vectors(phi_vecs, dimg).dim == dimg,
        "rho_faithful": kernel_basis(faithful_mat).dim == 0,
    }
