"""Positive and negative graded module extensions over a built graded
algebra, the extended pairing between them, the lifted Phi-map, and the
lifted-pentad certificate.

A positive extension grows by levels 0, 1, 2, ... with level m+1 inside
Hom(V_-1, U_m); a negative extension grows by 0, -1, -2, ... with level
-m-1 inside Hom(V_1, U_-m).  Both are handled by one builder parameterized
by the sign of the growth direction.
"""

from __future__ import annotations

import random

from .graded import bl_eval, to_lie_algebra
from .liealg import BilinearForm, Report, Representation
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
from .pentad import Pentad, solve_phi_map


def _unit(n, i):
    return tuple(1 if t == i else 0 for t in range(n))


class GradedModule:
    """A truncated positive (sign=+1) or negative (sign=-1) extension."""

    def __init__(self, algebra, rep, sign, depth):
        self.algebra = algebra
        self.rep = rep
        self.sign = sign
        self.depth = depth
        self.dims = {}       # level -> dim (levels 0, sign, 2*sign, ...)
        self.levels = {}     # level -> Subspace for |level| >= 1
        self.gen_pairs = {}  # level -> list of (a, b): a in V_sign basis, b in prev level
        self.gen_decomp = {}
        self.pi0 = {}        # level -> tuple of Matrix (g-action)
        self.r_table = {}    # level m -> [a][u] coords in level m+sign
        self.action = {}     # (n, m) -> [i][j] coords in level n+m
        self.finite = False

    @property
    def field(self):
        return self.algebra.field

    def level_list(self):
        return sorted(self.dims, key=abs)

    def total_dim(self):
        return sum(self.dims.values())

    def dim_at(self, m):
        if m in self.dims:
            return self.dims[m]
        if m * self.sign < 0 or m == 0:
            return 0  # the extension vanishes strictly on the other side
        assert self.finite, "level %d beyond truncation depth" % m
        return 0

    def basis_matrix(self, m, i):
        """Unflatten basis element i of level m (|m| >= 1) into its matrix in
        Hom(V_-sign, U_{m-sign})."""
        sub = self.levels[m]
        flat = sub.basis[i]
        tgt = self.dims[m - self.sign]
        src = self.algebra.dims[-self.sign]
        return Matrix([flat[r * src:(r + 1) * src] for r in range(tgt)],
                      field=self.field, cols=src)

    def act(self, n, m, x, u):
        """Apply x in V_n to u in level m; result in level n+m."""
        t = n + m
        dt = self.dim_at(t)
        out = vzero(dt)
        if dt == 0 or m not in self.dims or self.dims[m] == 0:
            return out
        table = self.action[(n, m)]
        for i, a in enumerate(x):
            if a == 0:
                continue
            ti = table[i]
            for j, b in enumerate(u):
                if b != 0:
                    out = vadd(out, vscale(a * b, ti[j]))
        return out

    def pi0_act(self, m, a, u):
        out = vzero(self.dims[m])
        for i, c in enumerate(a):
            if c != 0:
                out = vadd(out, vscale(c, self.pi0[m][i].mul_vec(u)))
        return out


def extend_positive(G, pi, depth=None):
    """The positive extension of the g-module pi over the graded algebra G."""
    return _extend(G, pi, +1, depth)


def extend_negative(G, varpi, depth=None):
    """The negative extension (levels 0, -1, -2, ...)."""
    return _extend(G, varpi, -1, depth)


def _extend(G, rep, sign, depth):
    if depth is None:
        depth = G.depth
    if depth < 0:
        raise ValueError("module depth must be >= 0")
    M = GradedModule(G, rep, sign, depth)
    M.dims[0] = rep.space_dim
    M.pi0[0] = tuple(rep.operators)
    field = M.field
    g_dim = G.pentad.g.dim
    for step in range(depth):
        m = step * sign
        new = m + sign
        d_u = M.dims[m]
        d_src = G.dims[-sign]
        d_one = G.dims[sign]
        if d_u == 0 or d_one == 0 or d_src == 0:
            M.dims[new] = 0
            M.levels[new] = Subspace(0, (), ())
            M.gen_pairs[new] = []
            M.gen_decomp[new] = []
            M.pi0[new] = tuple(Matrix.zero(0, 0, field=field) for _ in range(g_dim))
            M.r_table[m] = [[() for _ in range(d_u)] for _ in range(d_one)]
            continue
        gens = []
        pairs = []
        for a in range(d_one):
            for u in range(d_u):
                cols = []
                for c in range(d_src):
                    # r_m(x_a (x) u)(eta_c) = pi_m([eta_c, x_a] (x) u)
                    #                         + r_{m-sign}(x_a (x) u(eta_c))
                    bracket = G.tables[(-sign, sign)][c][a]  # in V_0 coords
                    col = M.pi0_act(m, bracket, _unit(d_u, u))
                    if step >= 1:
                        u_c = M.basis_matrix(m, u).col(c)  # level m-sign coords
                        for r, w in enumerate(u_c):
                            if w != 0:
                                col = vadd(col, vscale(w, M.r_table[m - sign][a][r]))
                    cols.append(col)
                flat = tuple(cols[c][r] for r in range(d_u) for c in range(d_src))
                gens.append(flat)
                pairs.append((a, u))
        ambient = d_u * d_src
        sub = Subspace.from_vectors(gens, ambient)
        M.dims[new] = sub.dim
        M.levels[new] = sub
        M.gen_pairs[new] = pairs
        table = [[None] * d_u for _ in range(d_one)]
        for (a, u), flat in zip(pairs, gens):
            coords = sub.coords(flat)
            assert coords is not None
            table[a][u] = coords
        M.r_table[m] = table
        gen_mat = Matrix.from_cols(gens, field=field, rows=ambient)
        decomps = []
        for t in range(sub.dim):
            cs = solve(gen_mat, sub.basis[t])
            assert cs is not None
            decomps.append([(c, idx) for idx, c in enumerate(cs) if c != 0])
        M.gen_decomp[new] = decomps
        # canonical g-action on the new level
        ops = []
        for i in range(g_dim):
            top = _pi_matrix(M, m, i)
            src_op = G.rho_n[-sign][i]
            cols = []
            for t in range(sub.dim):
                mat = M.basis_matrix(new, t)
                acted = top @ mat - mat @ src_op
                flat = tuple(x for row in acted.data for x in row)
                coords = sub.coords(flat)
                assert coords is not None, "g-action left the module level"
                cols.append(coords)
            ops.append(Matrix.from_cols(cols, field=field, rows=sub.dim))
        M.pi0[new] = tuple(ops)
    last = depth * sign
    M.finite = M.dims[last] == 0 or any(M.dims[k * sign] == 0 for k in range(depth + 1))
    _fill_action_tables(M)
    return M


def _pi_matrix(M, m, i):
    return M.pi0[m][i]


def _fill_action_tables(M):
    G = M.algebra
    order = [0, 1, -1]
    for k in range(2, G.depth + 1):
        order += [k, -k]
    for n in order:
        for m in M.level_list():
            t = n + m
            if t not in M.dims:
                continue
            M.action[(n, m)] = _make_action(M, n, m)


def _make_action(M, n, m):
    G = M.algebra
    sign = M.sign
    dn = G.dims[n]
    dm = M.dims[m]
    dt = M.dims[n + m]
    if dn == 0 or dm == 0:
        return [[vzero(dt)] * dm for _ in range(dn)]
    if dt == 0:
        return [[()] * dm for _ in range(dn)]
    table = [[None] * dm for _ in range(dn)]
    if n == 0:
        for i in range(dn):
            op = M.pi0[m][i]
            for j in range(dm):
                table[i][j] = op.col(j)
    elif n == sign:
        # the raising direction: r_m; the lowering side of the mirror is zero
        for i in range(dn):
            for j in range(dm):
                table[i][j] = M.r_table[m][i][j]
    elif n == -sign:
        # evaluation u_m(y): only defined for levels past the base
        for i in range(dn):
            for j in range(dm):
                table[i][j] = M.basis_matrix(m, j).col(i)
    else:  # |n| >= 2: expand V_n through its generator decomposition
        s = 1 if n > 0 else -1
        d_gen = G.dims[s]
        prev = n - s
        for i in range(dn):
            for j in range(dm):
                out = vzero(dt)
                for c, idx in G.gen_decomp[n][i]:
                    a, b = G.gen_pairs[n][idx]
                    # pi_{n,m}(p(x_a (x) z_b) (x) u) =
                    #   pi_{s, prev+m}(x_a (x) pi_{prev,m}(z_b (x) u))
                    #   - pi_{prev, m+s}(z_b (x) pi_{s,m}(x_a (x) u))
                    inner = M.act(prev, m, _unit(G.dims[prev], b), _unit(dm, j))
                    t1 = M.act(s, prev + m, _unit(d_gen, a), inner)
                    inner2 = M.act(s, m, _unit(d_gen, a), _unit(dm, j))
                    t2 = M.act(prev, m + s, _unit(G.dims[prev], b), inner2)
                    out = vadd(out, vscale(c, vadd(t1, vscale(-1, t2))))
                table[i][j] = out
    return table


def check_graded_module(M):
    """Exhaustive action-law check: pi([x,y] (x) u) = pi(x (x) pi(y (x) u))
    - pi(y (x) pi(x (x) u)) over all stored basis triples."""
    rep = Report()
    G = M.algebra

    def defined(level):
        # a level whose dimension is known exactly: stored, on the vanishing
        # side, or past a zero level of a finite extension
        return level in M.dims or level * M.sign <= 0 or M.finite

    for n in G.degrees():
        for n2 in G.degrees():
            if abs(n + n2) > G.depth:
                continue
            for m in M.level_list():
                if not (defined(n + m) and defined(n2 + m)
                        and defined(n + n2 + m)):
                    continue
                for i in range(G.dims[n]):
                    x = _unit(G.dims[n], i)
                    for j in range(G.dims[n2]):
                        y = _unit(G.dims[n2], j)
                        xy = G.tables[(n, n2)][i][j]
                        for u in range(M.dims[m]):
                            uu = _unit(M.dims[m], u)
                            lhs = M.act(n + n2, m, xy, uu)
                            rhs = vadd(
                                M.act(n, n2 + m, x, M.act(n2, m, y, uu)),
                                vscale(-1, M.act(n2, n + m, y, M.act(n, m, x, uu))),
                            )
                            if lhs != rhs:
                                rep.fail(
                                    "module action law violated at degrees "
                                    "(%d,%d) level %d indices (%d,%d,%d)"
                                    % (n, n2, m, i, j, u))
                                return rep
    return rep


def module_transitivity(M):
    """Per level m != 0: no nonzero element is annihilated by all of V_-sign."""
    verdicts = {}
    for m in M.level_list():
        if m == 0:
            continue
        if M.dims[m] == 0:
            verdicts[m] = True
            continue
        rows = []
        for j in range(M.dims[m]):
            row = []
            for i in range(M.algebra.dims[-M.sign]):
                row.extend(M.action[(-M.sign, m)][i][j])
            rows.append(row)
        mat = Matrix(rows, field=M.field,
                     cols=M.algebra.dims[-M.sign] * M.dims[m - M.sign])
        verdicts[m] = kernel_basis(mat.transpose()).dim == 0
    verdicts["transitive"] = all(v for k, v in verdicts.items() if k != "transitive")
    return verdicts


def module_irreducibility_probe(M, samples=10, seed=0):
    """Reduce to g-irreducibility of the degree-0 space and spin seeded
    vectors under the g-operators.  Returns ("reducible", witness Subspace)
    or ("probably-irreducible", sample count)."""
    d = M.dims[0]
    if d == 0:
        return ("probably-irreducible", 0)
    rng = random.Random(seed)
    seeds = [_unit(d, i) for i in range(d)]
    for _ in range(samples):
        v = tuple(M.field.from_int(rng.randint(-2, 2)) for _ in range(d))
        if not is_zero_vec(v):
            seeds.append(v)
    ops = M.pi0[0]
    for v in seeds:
        sub = Subspace.from_vectors([v], d)
        changed = True
        while changed:
            changed = False
            for b in sub.basis:
                for op in ops:
                    w = op.mul_vec(b)
                    if not is_zero_vec(w) and not sub.contains(w):
                        sub = Subspace.from_vectors(list(sub.basis) + [w], d)
                        changed = True
        if 0 < sub.dim < d:
            return ("reducible", sub)
    return ("probably-irreducible", len(seeds))


class ExtendedPairing:
    """Per-level Gram matrices of the pairing between a positive and a
    negative extension; level i pairs U^+_i with U^-_{-i}."""

    def __init__(self, grams):
        self.grams = grams  # i >= 0 -> Matrix

    def eval(self, i, u, w):
        gram = self.grams[i]
        total = 0
        for a, x in enumerate(u):
            if x == 0:
                continue
            for b, y in enumerate(w):
                if y != 0:
                    total = total + x * gram[a, b] * y
        return total


def build_pairing(Gp, Gn, gram0):
    """Build the extended pairing from the degree-0 Gram.

    Each level's Gram is computed from the negative side's generator
    decompositions and independently recomputed from the positive side's;
    the two must agree.  Returns (ExtendedPairing, Report).
    """
    rep = Report()
    assert Gp.sign == +1 and Gn.sign == -1
    assert Gp.algebra is Gn.algebra
    if gram0.rows != Gp.dims[0] or gram0.cols != Gn.dims[0]:
        raise ValueError("degree-0 Gram has wrong shape")
    if Gp.dims[0] and rank(gram0) != Gp.dims[0]:
        raise ValueError("degree-0 pairing degenerate")
    grams = {0: gram0}
    top = 0
    while (top + 1) in Gp.dims and -(top + 1) in Gn.dims:
        i = top + 1
        dp, dn = Gp.dims[i], Gn.dims[-i]
        rows = []
        for t in range(dp):
            row = []
            for y in range(dn):
                total = 0
                for c, idx in Gn.gen_decomp[-i][y]:
                    a, b = Gn.gen_pairs[-i][idx]
                    # <u_i, r^-(y_a (x) w_b)> = -<u_i(y_a), w_b>
                    if dp:
                        u_ya = Gp.basis_matrix(i, t).col(a)  # U^+_{i-1} coords
                        prev = grams[i - 1]
                        total = total - c * sum(
                            u_ya[r] * prev[r, b] for r in range(Gp.dims[i - 1]))
                row.append(total)
            rows.append(row)
        gram = Matrix(rows, field=Gp.field, cols=dn) if dp else \
            Matrix.zero(dp, dn, field=Gp.field)
        # recompute from the positive side: <r^+(x_a (x) u_b), w> = -<u_b, w(x_a)>
        rows2 = []
        for t in range(dp):
            row = []
            for y in range(dn):
                total = 0
                for c, idx in Gp.gen_decomp[i][t]:
                    a, b = Gp.gen_pairs[i][idx]
                    w_xa = Gn.basis_matrix(-i, y).col(a)  # U^-_{-i+1} coords
                    prev = grams[i - 1]
                    total = total - c * sum(
                        prev[b, r] * w_xa[r] for r in range(Gn.dims[-i + 1]))
                row.append(total)
            rows2.append(row)
        gram2 = Matrix(rows2, field=Gp.field, cols=dn) if dp else gram
        if gram != gram2:
            rep.fail("pairing well-definedness cross-check failed at level %d" % i)
        grams[i] = gram
        top = i
    pairing = ExtendedPairing(grams)
    # non-degeneracy level by level
    for i, gram in grams.items():
        if gram.rows != gram.cols:
            rep.fail("pairing degenerate at level %d: dims %d vs %d"
                     % (i, gram.rows, gram.cols))
        elif gram.rows and rank(gram) != gram.rows:
            rep.fail("pairing degenerate at level %d" % i)
    # L-invariance: <pi+(z (x) u), w> + <u, pi-(z (x) w)> = 0 exhaustively
    G = Gp.algebra
    for n in G.degrees():
        for m in Gp.level_list():
            i2 = n + m
            if i2 < 0 or i2 not in Gp.dims or -i2 not in Gn.dims or -m not in Gn.dims:
                continue
            mneg = -i2  # the matching negative level for the left term
            for zi in range(G.dims[n]):
                z = _unit(G.dims[n], zi)
                for u in range(Gp.dims[m]):
                    uu = _unit(Gp.dims[m], u)
                    zu = Gp.act(n, m, z, uu)
                    for w in range(Gn.dims[mneg]):
                        ww = _unit(Gn.dims[mneg], w)
                        lhs = pairing.eval(i2, zu, ww) if i2 >= 0 else 0
                        zw = Gn.act(n, mneg, z, ww)
                        rhs = pairing.eval(m, uu, zw) if m >= 0 else 0
                        if lhs + rhs != 0:
                            rep.fail(
                                "pairing not invariant at degree %d, levels "
                                "(%d,%d) indices (%d,%d,%d)" % (n, m, mneg, zi, u, w))
                            return pairing, rep
    return pairing, rep


class LiftedPhi:
    """Tables of the lifted Phi-map: (i, j) -> [u][w] -> V_{i-j} coords."""

    def __init__(self, tables):
        self.tables = tables


def build_lifted_phi(Gp, Gn, pairing, pi, varpi, gram0):
    """Build all lifted Phi tables.  Requires B0 symmetric and the degree-0
    pentad (g, pi, U, dual U, B0) standard; returns (LiftedPhi, Report)."""
    rep = Report()
    G = Gp.algebra
    pentad = G.pentad
    if not pentad.b0.symmetric:
        raise ValueError("lifted Phi-map requires a symmetric B0")
    assert G.bl is not None, "build B_L first"
    phi0 = solve_phi_map(pentad.g, pi, varpi, gram0, pentad.b0)
    pos_levels = [m for m in Gp.level_list() if Gp.dims[m] > 0]
    neg_levels = [-m for m in Gn.level_list() if Gn.dims[m] > 0]
    tables = {}
    # base row: j = 0
    for i in pos_levels:
        if abs(i) > G.depth:
            raise ValueError("module level %d exceeds algebra depth" % i)
        if i == 0:
            tables[(0, 0)] = [[phi0[u][w] for w in range(Gn.dims[0])]
                              for u in range(Gp.dims[0])]
            continue
        table = []
        for t in range(Gp.dims[i]):
            row = []
            for w in range(Gn.dims[0]):
                out = vzero(G.dims[i])
                for c, idx in Gp.gen_decomp[i][t]:
                    a, b = Gp.gen_pairs[i][idx]
                    # Phi~^{i}_0(r(x_a (x) u_b) (x) w) = [x_a, Phi~^{i-1}_0(u_b (x) w)]
                    inner = tables[(i - 1, 0)][b][w]
                    out = vadd(out, vscale(c, G.br(1, i - 1, _unit(G.dims[1], a), inner)))
                row.append(out)
            table.append(row)
        tables[(i, 0)] = table
    # induct on the negative level j
    for j in neg_levels:
        if j == 0:
            continue
        if j > G.depth:
            raise ValueError("module level %d exceeds algebra depth" % -j)
        for i in pos_levels:
            if abs(i - j) > G.depth:
                raise ValueError("lifted Phi target degree %d out of depth" % (i - j))
            table = []
            for t in range(Gp.dims[i]):
                row = []
                for y in range(Gn.dims[-j]):
                    out = vzero(G.dims[i - j])
                    for c, idx in Gn.gen_decomp[-j][y]:
                        a, b = Gn.gen_pairs[-j][idx]
                        # Phi~^i_{-j}(u (x) r^-(y_a (x) w_b)) =
                        #   [y_a, Phi~^i_{-j+1}(u (x) w_b)]
                        #   - Phi~^{i-1}_{-j+1}(u(y_a) (x) w_b)
                        inner = tables[(i, j - 1)][t][b]
                        term = G.br(-1, i - j + 1, _unit(G.dims[-1], a), inner)
                        if i >= 1:
                            u_ya = Gp.basis_matrix(i, t).col(a)
                            for r, x in enumerate(u_ya):
                                if x != 0:
                                    term = vadd(term, vscale(
                                        -x, tables[(i - 1, j - 1)][r][b]))
                        out = vadd(out, vscale(c, term))
                    row.append(out)
                table.append(row)
            tables[(i, j)] = table
    lphi = LiftedPhi(tables)
    # defining relation: B_L(a, Phi~(u (x) w)) = <pi+(a (x) u), w>
    for (i, j), table in tables.items():
        n = j - i  # degree of the test element a
        if abs(n) > G.depth:
            continue
        for ai in range(G.dims[n]):
            a = _unit(G.dims[n], ai)
            for t in range(Gp.dims[i]):
                for w in range(Gn.dims[-j]):
                    lhs = bl_eval(G, n, a, table[t][w])
                    au = Gp.act(n, i, a, _unit(Gp.dims[i], t))
                    rhs = pairing.eval(j, au, _unit(Gn.dims[-j], w))
                    if lhs != rhs:
                        rep.fail("lifted Phi defining relation violated at "
                                 "levels (%d,%d) witness (a%d,u%d,w%d)"
                                 % (i, -j, ai, t, w))
                        return lphi, rep
    return lphi, rep


def lifted_pentad(G, Gp, Gn, pairing, lphi):
    """Flatten (L, pi~+, U~+, U~-, B_L) into a Pentad and validate it.

    Returns (pentad, offsets_u, offsets_w, report); the report also covers
    the cross-check that the pentad's solved Phi-map equals the lifted one.
    """
    rep = Report()
    L, offsets = to_lie_algebra(G)
    if not (Gp.finite and Gn.finite):
        rep.fail("module truncated; lifted pentad requires finite extensions")
        return None, None, None, rep
    pos_levels = [m for m in Gp.level_list()]
    neg_levels = [m for m in Gn.level_list()]
    off_u, pos_total = {}, 0
    for m in pos_levels:
        off_u[m] = pos_total
        pos_total += Gp.dims[m]
    off_w, neg_total = {}, 0
    for m in neg_levels:
        off_w[m] = neg_total
        neg_total += Gn.dims[m]

    def flat_ops(M, offs, total):
        ops = []
        for n in sorted(G.dims):
            for i in range(G.dims[n]):
                mat = [[0] * total for _ in range(total)]
                for m in M.level_list():
                    t = n + m
                    if t not in M.dims or M.dims[m] == 0 or M.dims[t] == 0:
                        continue
                    table = M.action[(n, m)]
                    for j in range(M.dims[m]):
                        col = table[i][j]
                        for r, c in enumerate(col):
                            mat[offs[t] + r][offs[m] + j] = c
                ops.append(Matrix(mat, field=G.field, cols=total))
        return ops

    pi_ops = flat_ops(Gp, off_u, pos_total)
    varpi_ops = flat_ops(Gn, off_w, neg_total)
    pi_rep = Representation(L, pos_total, pi_ops)
    varpi_rep = Representation(L, neg_total, varpi_ops)
    # block pairing Gram
    pair_rows = [[0] * neg_total for _ in range(pos_total)]
    for i, gram in pairing.grams.items():
        if i not in Gp.dims or -i not in Gn.dims:
            continue
        for a in range(gram.rows):
            for b in range(gram.cols):
                pair_rows[off_u[i] + a][off_w[-i] + b] = gram[a, b]
    pair_mat = Matrix(pair_rows, field=G.field, cols=neg_total)
    # B_L as a full Gram on the flattened algebra
    total = L.dim
    bl_rows = [[0] * total for _ in range(total)]
    for n in sorted(G.dims):
        if abs(n) > G.depth or G.dims[n] == 0 or G.dims[-n] == 0:
            continue
        gram = G.bl[n] if n >= 0 else G.bl[-n].transpose()
        for a in range(G.dims[n]):
            for b in range(G.dims[-n]):
                bl_rows[offsets[n] + a][offsets[-n] + b] = gram[a, b]
    bl_form = BilinearForm(Matrix(bl_rows, field=G.field, cols=total))
    p = Pentad(L, pi_rep, varpi_rep, pair_mat, bl_form)
    # the solved Phi-map of the flattened pentad must equal the lifted tables
    for (i, j), table in lphi.tables.items():
        for t in range(Gp.dims[i]):
            for w in range(Gn.dims[-j]):
                expected = [0] * total
                for r, c in enumerate(table[t][w]):
                    expected[offsets[i - j] + r] = c
                if tuple(expected) != p.phi[off_u[i] + t][off_w[-j] + w]:
                    rep.fail("lifted Phi disagrees with the solved Phi-map at "
                             "levels (%d,%d) pair (%d,%d)" % (i, -j, t, w))
                    return p, off_u, off_w, rep
    return p, off_u, off_w, rep
