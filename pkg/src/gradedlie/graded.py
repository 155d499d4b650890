"""The graded Lie algebra associated with a standard pentad, truncated to a
finite depth: graduation spaces, bracket tables, the invariant form B_L,
transitivity and graded-ideal diagnostics, and derivation extension.

Degree conventions: V_0 = g, V_1 = V, V_-1 = dual V.  For |n| >= 2 a basis
element of V_n is stored as a matrix in Hom(V_-1, V_{n-1}) (positive n) or
Hom(V_1, V_{n+1}) (negative n), rows indexed by target coordinates and
columns by source basis, flattened row-major.
"""

from __future__ import annotations

import random

from .liealg import BilinearForm, LieAlgebra, Report, Representation
from .linalg import (
    Matrix,
    Subspace,
    is_zero_vec,
    kernel_basis,
    rank,
    solve,
    vadd,
    vscale,
    vzero,
)
from .pentad import Pentad


def _unit(n, i):
    return tuple(1 if t == i else 0 for t in range(n))


class GradedAlgebra:
    """Truncated associated graded Lie algebra of a standard pentad."""

    def __init__(self, pentad, depth):
        self.pentad = pentad
        self.depth = depth
        self.dims = {}
        self.components = {}   # n -> Subspace for |n| >= 2
        self.gen_pairs = {}    # n -> list of generator index pairs (a, b)
        self.gen_decomp = {}   # n -> per basis element, list of (coeff, pair_index)
        self.rho_n = {}        # n -> tuple of Matrix, the g-action on V_n
        self.p_table = {}      # n >= 1 -> [a][b] vector in V_{n+1} coords
        self.q_table = {}      # n <= -1 -> [a][b] vector in V_{n-1} coords
        self.tables = {}       # (n, m) -> [i][j] vector in V_{n+m} coords
        self.bl = None         # n >= 0 -> Gram matrix on V_n x V_-n
        self.finite = False

    # -- element helpers ---------------------------------------------------

    @property
    def field(self):
        return self.pentad.field

    def degrees(self):
        return range(-self.depth, self.depth + 1)

    def total_dim(self):
        return sum(self.dims.values())

    def basis_matrix(self, n, i):
        """Unflatten basis element i of V_n (|n| >= 2) into its stored matrix."""
        sub = self.components[n]
        flat = sub.basis[i]
        tgt = self.dims[n - (1 if n > 0 else -1)]
        src = self.dims[-1 if n > 0 else 1]
        return Matrix([flat[r * src:(r + 1) * src] for r in range(tgt)],
                      field=self.field, cols=src)

    def br(self, n, m, x, y):
        """Bracket of coordinate vectors x in V_n and y in V_m."""
        if abs(n + m) > self.depth:
            raise ValueError("bracket degree %d out of depth %d" % (n + m, self.depth))
        t = self.tables[(n, m)]
        out = vzero(self.dims[n + m])
        for i, a in enumerate(x):
            if a == 0:
                continue
            ti = t[i]
            for j, b in enumerate(y):
                if b != 0:
                    out = vadd(out, vscale(a * b, ti[j]))
        return out

    def rho_act(self, n, a, v):
        """Apply the algebra element with g-coordinates a to v in V_n."""
        out = vzero(self.dims[n])
        for i, c in enumerate(a):
            if c != 0:
                out = vadd(out, vscale(c, self.rho_n[n][i].mul_vec(v)))
        return out


def build_graduations(pentad, depth):
    """Build graduation spaces, g-actions and all bracket tables to +-depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    G = GradedAlgebra(pentad, depth)
    g, rho, dual = pentad.g, pentad.rho, pentad.dual
    G.dims[0] = g.dim
    G.dims[1] = rho.space_dim
    G.dims[-1] = dual.space_dim
    G.rho_n[0] = tuple(g.adjoint_rep().operators)
    G.rho_n[1] = tuple(rho.operators)
    G.rho_n[-1] = tuple(dual.operators)
    for k in range(1, depth):
        _build_level(G, k, +1)
        _build_level(G, k, -1)
    pos_zero = any(G.dims[k] == 0 for k in range(1, depth + 1))
    neg_zero = any(G.dims[-k] == 0 for k in range(1, depth + 1))
    G.finite = pos_zero and neg_zero
    _fill_tables(G)
    return G


def _build_level(G, k, sign):
    """Build V_{(k+1)*sign} as the image of p_k (sign=+1) or q_{-k} (sign=-1)."""
    pentad = G.pentad
    n = k * sign            # current top level
    new = (k + 1) * sign    # level being built
    d_src = G.dims[-sign]   # Hom source: V_-1 for positive, V_1 for negative
    d_tgt = G.dims[n]       # Hom target: V_n
    d_one = G.dims[sign]
    field = G.field
    if d_tgt == 0 or d_one == 0 or d_src == 0:
        G.dims[new] = 0
        G.components[new] = Subspace(0, (), ())
        G.gen_pairs[new] = []
        G.gen_decomp[new] = []
        G.rho_n[new] = tuple(Matrix.zero(0, 0, field=field) for _ in range(pentad.g.dim))
        table = [[() for _ in range(d_tgt)] for _ in range(d_one)]
        if sign > 0:
            G.p_table[k] = table
        else:
            G.q_table[-k] = table
        return

    def curry(a, c):
        # the g-element x_a(eta_c): Phi(x_a (x) eta_c) positively,
        # Psi(phi_a (x) xi_c) negatively
        return pentad.phi[a][c] if sign > 0 else pentad.psi[a][c]

    prev_table = None
    if k >= 2:
        prev_table = G.p_table[k - 1] if sign > 0 else G.q_table[-(k - 1)]

    gens = []
    pairs = []
    for a in range(d_one):
        for b in range(d_tgt):
            cols = []
            for c in range(d_src):
                if k == 1:
                    # p_1(x_a (x) x_b)(eta_c) = rho(x_a(eta_c)) x_b - rho(x_b(eta_c)) x_a
                    col = vadd(
                        G.rho_act(sign, curry(a, c), _unit(d_tgt, b)),
                        vscale(-1, G.rho_act(sign, curry(b, c), _unit(d_tgt, a))),
                    )
                else:
                    # p_k(x_a (x) z_b)(eta_c) = rho_k(x_a(eta_c)) z_b
                    #                           + p_{k-1}(x_a (x) z_b(eta_c))
                    col = G.rho_act(n, curry(a, c), _unit(d_tgt, b))
                    zb_c = G.basis_matrix(n, b).col(c)  # in V_{n-sign} coords
                    for r, w in enumerate(zb_c):
                        if w != 0:
                            col = vadd(col, vscale(w, prev_table[a][r]))
                cols.append(col)
            # flatten row-major: rows are target coords, columns are source basis
            flat = tuple(cols[c_idx][r] for r in range(d_tgt) for c_idx in range(d_src))
            gens.append(flat)
            pairs.append((a, b))
    ambient = d_tgt * d_src
    sub = Subspace.from_vectors(gens, ambient)
    G.dims[new] = sub.dim
    G.components[new] = sub
    G.gen_pairs[new] = pairs

    # coordinates of each generator, giving the p/q tables
    table = [[None] * d_tgt for _ in range(d_one)]
    for (a, b), flat in zip(pairs, gens):
        coords = sub.coords(flat)
        assert coords is not None
        table[a][b] = coords
    if sign > 0:
        G.p_table[k] = table
    else:
        G.q_table[-k] = table

    # decomposition of each canonical basis element over the generators
    gen_mat = Matrix.from_cols(gens, field=field, rows=ambient)
    decomps = []
    for t in range(sub.dim):
        cs = solve(gen_mat, sub.basis[t])
        assert cs is not None
        decomps.append([(c, idx) for idx, c in enumerate(cs) if c != 0])
    G.gen_decomp[new] = decomps

    # g-action on the new level through the canonical Hom action
    ops = []
    for i in range(pentad.g.dim):
        top = G.rho_n[n][i]
        src_op = G.rho_n[-sign][i]
        cols = []
        for t in range(sub.dim):
            M = G.basis_matrix(new, t)
            acted = top @ M - M @ src_op
            flat = tuple(x for row in acted.data for x in row)
            coords = sub.coords(flat)
            assert coords is not None, "g-action left the graded component"
            cols.append(coords)
        ops.append(Matrix.from_cols(cols, field=field, rows=sub.dim))
    G.rho_n[new] = tuple(ops)


def _fill_tables(G):
    N = G.depth
    order = [0, 1, -1]
    for k in range(2, N + 1):
        order += [k, -k]
    for n in order:
        for m in range(-N, N + 1):
            if abs(n + m) > N:
                continue
            G.tables[(n, m)] = _make_table(G, n, m)


def _make_table(G, n, m):
    pentad = G.pentad
    dn, dm, dt = G.dims[n], G.dims[m], G.dims[n + m]
    if dn == 0 or dm == 0:
        return [[vzero(dt)] * dm for _ in range(dn)]
    if dt == 0:
        return [[()] * dm for _ in range(dn)]
    table = [[None] * dm for _ in range(dn)]
    if n == 0:
        for i in range(dn):
            op = G.rho_n[m][i]
            for j in range(dm):
                table[i][j] = op.col(j)
    elif n == 1:
        for i in range(dn):
            for j in range(dm):
                if m >= 1:
                    table[i][j] = G.p_table[m][i][j]
                elif m == 0:
                    table[i][j] = vscale(-1, G.rho_n[1][j].mul_vec(_unit(dn, i)))
                elif m == -1:
                    table[i][j] = pentad.phi[i][j]
                else:
                    # [x_1, z_m] = -z_m(x_1) for m <= -2
                    table[i][j] = vscale(-1, G.basis_matrix(m, j).col(i))
    elif n == -1:
        for i in range(dn):
            for j in range(dm):
                if m <= -1:
                    table[i][j] = G.q_table[m][i][j]
                elif m == 0:
                    table[i][j] = vscale(-1, G.rho_n[-1][j].mul_vec(_unit(dn, i)))
                elif m == 1:
                    table[i][j] = pentad.psi[i][j]
                else:
                    # [y_-1, z_m] = -z_m(y_-1) for m >= 2
                    table[i][j] = vscale(-1, G.basis_matrix(m, j).col(i))
    elif n >= 2:
        for i in range(dn):
            for j in range(dm):
                out = vzero(dt)
                for c, idx in G.gen_decomp[n][i]:
                    a, b = G.gen_pairs[n][idx]
                    # [p_{n-1}(x_a (x) z_b), w] = [x_a,[z_b,w]] - [z_b,[x_a,w]]
                    inner = G.tables[(n - 1, m)][b][j]
                    t1 = G.br(1, n - 1 + m, _unit(G.dims[1], a), inner)
                    inner2 = G.tables[(1, m)][a][j]
                    t2 = G.br(n - 1, m + 1, _unit(G.dims[n - 1], b), inner2)
                    out = vadd(out, vscale(c, vadd(t1, vscale(-1, t2))))
                table[i][j] = out
    else:  # n <= -2
        for i in range(dn):
            for j in range(dm):
                out = vzero(dt)
                for c, idx in G.gen_decomp[n][i]:
                    a, b = G.gen_pairs[n][idx]
                    # [q_{n+1}(y_a (x) z_b), w] = [y_a,[z_b,w]] - [z_b,[y_a,w]]
                    inner = G.tables[(n + 1, m)][b][j]
                    t1 = G.br(-1, n + 1 + m, _unit(G.dims[-1], a), inner)
                    inner2 = G.tables[(-1, m)][a][j]
                    t2 = G.br(n + 1, m - 1, _unit(G.dims[n + 1], b), inner2)
                    out = vadd(out, vscale(c, vadd(t1, vscale(-1, t2))))
                table[i][j] = out
    return table


def check_graded_algebra(G):
    """Exhaustive antisymmetry, alternating, Jacobi and g-action checks on all
    stored basis elements within depth."""
    rep = Report()
    N = G.depth
    # antisymmetry (the (n,m) and (m,n) tables are computed independently)
    for (n, m), t in G.tables.items():
        tm = G.tables[(m, n)]
        for i in range(G.dims[n]):
            for j in range(G.dims[m]):
                if not is_zero_vec(vadd(t[i][j], tm[j][i])):
                    rep.fail("antisymmetry violated at degrees (%d,%d) pair (%d,%d)"
                             % (n, m, i, j))
                    return rep
    # alternating law (needed separately in characteristic 2)
    for n in G.degrees():
        if abs(2 * n) > N or (n, n) not in G.tables:
            continue
        for i in range(G.dims[n]):
            if not is_zero_vec(G.tables[(n, n)][i][i]):
                rep.fail("[x,x] != 0 at degree %d basis %d" % (n, i))
                return rep
    # Jacobi on all triples whose intermediate degrees stay within depth
    for n in G.degrees():
        for m in G.degrees():
            for l in G.degrees():
                if (abs(n + m) > N or abs(m + l) > N or abs(n + l) > N
                        or abs(n + m + l) > N):
                    continue
                for i in range(G.dims[n]):
                    x = _unit(G.dims[n], i)
                    for j in range(G.dims[m]):
                        y = _unit(G.dims[m], j)
                        xy = G.tables[(n, m)][i][j]
                        for k in range(G.dims[l]):
                            z = _unit(G.dims[l], k)
                            s = vadd(
                                G.br(n, m + l, x, G.tables[(m, l)][j][k]),
                                vadd(
                                    G.br(m, l + n, y, G.br(l, n, z, x)),
                                    G.br(l, n + m, z, xy),
                                ),
                            )
                            if not is_zero_vec(s):
                                rep.fail(
                                    "Jacobi violated at degrees (%d,%d,%d) "
                                    "indices (%d,%d,%d)" % (n, m, l, i, j, k))
                                return rep
    # rho_n is a representation on every level
    g = G.pentad.g
    for n in G.degrees():
        for i in range(g.dim):
            for j in range(g.dim):
                lhs = Matrix.zero(G.dims[n], G.dims[n], field=G.field)
                for t, c in enumerate(g.brackets[i][j]):
                    if c != 0:
                        lhs = lhs + G.rho_n[n][t].scale(c)
                rhs = (G.rho_n[n][i] @ G.rho_n[n][j]
                       - G.rho_n[n][j] @ G.rho_n[n][i])
                if lhs != rhs:
                    rep.fail("rho_%d violates the representation law at (%d,%d)"
                             % (n, i, j))
                    return rep
    return rep


def build_BL(G, exhaustive_threshold=64, seed=0, samples=200):
    """Build the Gram matrices of the invariant form B_L (B0 must be symmetric).

    Each Gram is computed twice, from the positive and the negative generator
    decompositions, and the two results are compared.  Invariance is checked
    exhaustively when the total basis count is at most `exhaustive_threshold`,
    and on seeded random triples above it.
    """
    pentad = G.pentad
    if not pentad.b0.symmetric:
        raise ValueError("B_L requires a symmetric B0; construction refused")
    N = G.depth
    grams = {0: pentad.b0.gram, 1: pentad.pairing}
    rep = Report()
    for i in range(1, N):
        dp, dn = G.dims[i + 1], G.dims[-i - 1]
        gram = Matrix.zero(dp, dn, field=G.field)
        if dp and dn:
            rows = []
            for t in range(dp):
                row = []
                for y in range(dn):
                    total = 0
                    for c, idx in G.gen_decomp[i + 1][t]:
                        a, b = G.gen_pairs[i + 1][idx]
                        # B_L(p_i(x_a (x) u_b), y) = B_L(u_b, [y, x_a])
                        w = G.tables[(-i - 1, 1)][y][a]  # in V_-i coords
                        gi = grams[i]
                        total = total + c * sum(
                            gi[b, r] * w[r] for r in range(G.dims[-i]))
                    row.append(total)
                rows.append(row)
            gram = Matrix(rows, field=G.field, cols=dn)
            # independent recomputation from the negative side's generators
            rows2 = []
            for t in range(dp):
                row = []
                for y in range(dn):
                    total = 0
                    for c, idx in G.gen_decomp[-i - 1][y]:
                        a, b = G.gen_pairs[-i - 1][idx]
                        # B_L(x, q_-i(y_a (x) z_b)) = <[z_b, x], y_a>
                        w = G.tables[(-i, i + 1)][b][t]  # in V_1 coords
                        total = total + c * pentad.pair(w, _unit(G.dims[-1], a))
                    row.append(total)
                rows2.append(row)
            if gram != Matrix(rows2, field=G.field, cols=dn):
                rep.fail("B_L well-definedness cross-check failed at degree %d" % (i + 1))
        grams[i + 1] = gram
    G.bl = grams
    # per-degree non-degeneracy
    for n in range(0, N + 1):
        dp, dn = G.dims[n], G.dims[-n]
        if dp != dn:
            rep.fail("B_L degenerate: dim V_%d = %d != dim V_%d = %d" % (n, dp, -n, dn))
        elif dp and rank(grams[n]) != dp:
            rep.fail("B_L degenerate at degree %d" % n)
    if not grams[0] == grams[0].transpose():
        rep.fail("B_L not symmetric on V_0")
    # invariance B_L([x,y],z) = B_L(x,[y,z]) on degree triples summing to zero
    triples = []
    for n in G.degrees():
        for m in G.degrees():
            l = -n - m
            if abs(l) > N:
                continue
            for i in range(G.dims[n]):
                for j in range(G.dims[m]):
                    for k in range(G.dims[l]):
                        triples.append((n, m, l, i, j, k))
    if G.total_dim() > exhaustive_threshold:
        rng = random.Random(seed)
        if len(triples) > samples:
            triples = rng.sample(triples, samples)
    for n, m, l, i, j, k in triples:
        xy = G.tables[(n, m)][i][j]
        yz = G.tables[(m, l)][j][k]
        lhs = bl_eval(G, n + m, xy, _unit(G.dims[l], k))
        rhs = bl_eval(G, n, _unit(G.dims[n], i), yz)
        if lhs != rhs:
            rep.fail("B_L invariance violated at degrees (%d,%d,%d) indices (%d,%d,%d)"
                     % (n, m, l, i, j, k))
            break
    return rep


def bl_eval(G, n, x, y):
    """B_L(x, y) for x in V_n, y in V_-n (zero across other degree pairs)."""
    assert G.bl is not None, "B_L not built"
    if n >= 0:
        gram = G.bl[n]
        total = 0
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b != 0:
                    total = total + a * gram[i, j] * b
        return total
    return bl_eval(G, -n, y, x)


def check_transitivity(G):
    """Per-degree transitivity: nothing of degree >= 0 annihilates V_-1 and
    nothing of degree <= 0 annihilates V_1."""
    result = {"positive": {}, "negative": {}}
    N = G.depth
    for i in range(0, N + 1):
        if G.dims[i] == 0:
            result["positive"][i] = True
            continue
        rows = []
        for t in range(G.dims[i]):
            row = []
            for c in range(G.dims[-1]):
                row.extend(G.tables[(i, -1)][t][c])
            rows.append(row)
        mat = Matrix(rows, field=G.field, cols=G.dims[-1] * G.dims[i - 1])
        result["positive"][i] = kernel_basis(mat.transpose()).dim == 0
    for i in range(0, N + 1):
        n = -i
        if G.dims[n] == 0:
            result["negative"][i] = True
            continue
        rows = []
        for t in range(G.dims[n]):
            row = []
            for c in range(G.dims[1]):
                row.extend(G.tables[(n, 1)][t][c])
            rows.append(row)
        mat = Matrix(rows, field=G.field, cols=G.dims[1] * G.dims[n + 1])
        result["negative"][i] = kernel_basis(mat.transpose()).dim == 0
    result["transitive"] = (all(result["positive"].values())
                            and all(result["negative"].values()))
    return result


def extend_derivation(G, alpha0, alpha1, alpham1):
    """Extend (alpha_0, alpha_1, alpha_-1) to a derivation of the whole
    truncated algebra.  The Leibniz compatibility on degrees -1..1 is checked
    first; a violation raises ValueError with a witness."""
    alphas = {0: alpha0, 1: alpha1, -1: alpham1}
    for n in (-1, 0, 1):
        for m in (-1, 0, 1):
            if abs(n + m) > 1:
                continue
            for i in range(G.dims[n]):
                for j in range(G.dims[m]):
                    x = _unit(G.dims[n], i)
                    y = _unit(G.dims[m], j)
                    lhs = alphas[n + m].mul_vec(G.tables[(n, m)][i][j])
                    rhs = vadd(
                        G.br(n, m, alphas[n].mul_vec(x), y),
                        G.br(n, m, x, alphas[m].mul_vec(y)),
                    )
                    if lhs != rhs:
                        raise ValueError(
                            "Leibniz precondition violated at degrees (%d,%d) "
                            "pair (%d,%d)" % (n, m, i, j))
    for k in range(1, G.depth):
        for sign in (1, -1):
            n = (k + 1) * sign
            d = G.dims[n]
            cols = []
            for t in range(d):
                out = vzero(d)
                for c, idx in G.gen_decomp[n][t]:
                    a, b = G.gen_pairs[n][idx]
                    da, db = G.dims[sign], G.dims[k * sign]
                    x = _unit(da, a)
                    z = _unit(db, b)
                    term = vadd(
                        G.br(sign, k * sign, alphas[sign].mul_vec(x), z),
                        G.br(sign, k * sign, x, alphas[k * sign].mul_vec(z)),
                    )
                    out = vadd(out, vscale(c, term))
                cols.append(out)
            alphas[n] = Matrix.from_cols(cols, field=G.field, rows=d)
    # verify Leibniz on every stored bracket table
    for (n, m), t in G.tables.items():
        for i in range(G.dims[n]):
            for j in range(G.dims[m]):
                x = _unit(G.dims[n], i)
                y = _unit(G.dims[m], j)
                lhs = alphas[n + m].mul_vec(t[i][j])
                rhs = vadd(
                    G.br(n, m, alphas[n].mul_vec(x), y),
                    G.br(n, m, x, alphas[m].mul_vec(y)),
                )
                if lhs != rhs:
                    raise ValueError(
                        "extended map fails Leibniz at degrees (%d,%d) pair (%d,%d)"
                        % (n, m, i, j))
    return alphas


def grading_derivation(G):
    """The derivation alpha(v_n) = n v_n."""
    one = G.field.one()
    return extend_derivation(
        G,
        Matrix.zero(G.dims[0], G.dims[0], field=G.field),
        Matrix.identity(G.dims[1], field=G.field),
        Matrix.identity(G.dims[-1], field=G.field).scale(-one),
    )


def graded_ideal_probe(G, samples=10, seed=0):
    """Search for a proper nonzero graded ideal by spinning homogeneous seed
    vectors (every basis vector plus seeded random vectors) to closure under
    bracketing with V_0 and V_{+-1}.  Returns a dict degree -> Subspace for
    the first proper ideal found, or None."""
    rng = random.Random(seed)
    N = G.depth
    seeds = []
    for n in sorted(G.dims):
        for i in range(G.dims[n]):
            seeds.append((n, _unit(G.dims[n], i)))
    nonzero_degs = [n for n in sorted(G.dims) if G.dims[n] > 0]
    for _ in range(samples):
        n = rng.choice(nonzero_degs)
        v = tuple(G.field.from_int(rng.randint(-2, 2)) for _ in range(G.dims[n]))
        if not is_zero_vec(v):
            seeds.append((n, v))
    total = G.total_dim()
    for n0, v0 in seeds:
        spans = {n: [] for n in G.dims}
        spans[n0] = [v0]
        subs = {n: Subspace.from_vectors(spans[n], G.dims[n]) for n in G.dims}
        changed = True
        while changed:
            changed = False
            for n in sorted(G.dims):
                for vec in subs[n].basis:
                    for d in (0, 1, -1):
                        if abs(n + d) > N:
                            continue
                        for i in range(G.dims[d]):
                            w = G.br(d, n, _unit(G.dims[d], i), vec)
                            if not is_zero_vec(w) and not subs[n + d].contains(w):
                                subs[n + d] = Subspace.from_vectors(
                                    list(subs[n + d].basis) + [w], G.dims[n + d])
                                changed = True
        closure_dim = sum(s.dim for s in subs.values())
        if 0 < closure_dim < total:
            return subs
    return None


def local_pentad(G):
    """Extract the degree (-1, 0, 1) data with B_L as a new pentad
    (V_0, rho = ad restricted to V_1, V_1, V_-1, B_L|_0)."""
    assert G.bl is not None, "build B_L first"
    g0 = LieAlgebra(
        G.dims[0],
        [[G.tables[(0, 0)][i][j] for j in range(G.dims[0])] for i in range(G.dims[0])],
        field=G.field,
    )
    rho1 = Representation(
        g0, G.dims[1],
        [Matrix.from_cols([G.tables[(0, 1)][i][j] for j in range(G.dims[1])],
                          field=G.field, rows=G.dims[1])
         for i in range(G.dims[0])],
    )
    dual1 = Representation(
        g0, G.dims[-1],
        [Matrix.from_cols([G.tables[(0, -1)][i][j] for j in range(G.dims[-1])],
                          field=G.field, rows=G.dims[-1])
         for i in range(G.dims[0])],
    )
    return Pentad(g0, rho1, dual1, G.bl[1], BilinearForm(G.bl[0]))


def to_lie_algebra(G):
    """Flatten a finite graded algebra into a LieAlgebra with one basis.

    Returns (algebra, offsets) where offsets[n] is the index of the first
    basis element of V_n.
    """
    assert G.finite, "flattening requires the finite flag"
    degs = sorted(G.dims)
    offsets = {}
    pos = 0
    for n in degs:
        offsets[n] = pos
        pos += G.dims[n]
    total = pos
    brackets = [[vzero(total) for _ in range(total)] for _ in range(total)]
    for n in degs:
        for m in degs:
            if G.dims[n] == 0 or G.dims[m] == 0:
                continue
            if abs(n + m) > G.depth:
                continue  # both components vanish past the zero graduation
            t = G.tables[(n, m)]
            for i in range(G.dims[n]):
                for j in range(G.dims[m]):
                    vec = [0] * total
                    for r, c in enumerate(t[i][j]):
                        vec[offsets[n + m] + r] = c
                    brackets[offsets[n] + i][offsets[m] + j] = tuple(vec)
    return LieAlgebra(total, brackets, field=G.field), offsets
