"""The chain rule: the graded algebra built on the lifted pentad
(L, pi~+, U~+, U~-, B_L) is isomorphic to the graded algebra built directly
on the direct-sum pentad (g, rho (+) pi, V (+) U, dual V (+) dual U, B0).

The certificate regrades the left-hand side by the integer eigenvalues of a
derivation gamma = alpha + beta (alpha from the inner grading, beta from the
outer one) and constructs an explicit degree-by-degree isomorphism sigma.
"""

from __future__ import annotations

from .gmodule import (
    build_lifted_phi,
    build_pairing,
    extend_negative,
    extend_positive,
    lifted_pentad,
)
from .graded import (
    bl_eval,
    build_BL,
    build_graduations,
    extend_derivation,
    grading_derivation,
    to_lie_algebra,
)
from .liealg import Report, sum_reps_same_algebra
from .linalg import Matrix, Subspace, kernel_basis, rank, vadd, vscale, vzero
from .pentad import Pentad


def _unit(n, i):
    return tuple(1 if t == i else 0 for t in range(n))


class ChainCertificate:
    """Everything produced while certifying the chain-rule isomorphism."""

    def __init__(self, inner, lhs, rhs, lifted, regrading, sigma, dim_table,
                 verdict, report):
        self.inner = inner        # GradedAlgebra of the base pentad
        self.lhs = lhs            # GradedAlgebra of the lifted pentad
        self.rhs = rhs            # GradedAlgebra of the direct-sum pentad
        self.lifted = lifted      # the lifted Pentad itself
        self.regrading = regrading  # {"alpha", "beta", "gamma", "w_dims"}
        self.sigma = sigma        # degree -> list of flattened-lhs vectors
        self.dim_table = dim_table  # degree -> (lhs gamma-eigen dim, rhs dim)
        self.verdict = verdict
        self.report = report

    @property
    def ok(self):
        return self.report.ok and self.verdict["status"] == "isomorphic-within-depth"


def direct_sum_module_pentad(pentad, pi, varpi, pairing0):
    """The pentad (g, rho (+) pi, V (+) U, dual V (+) dual U, B0)."""
    rho_sum = sum_reps_same_algebra(pentad.rho, pi)
    dual_sum = sum_reps_same_algebra(pentad.dual, varpi)
    dv, du = pentad.rho.space_dim, pi.space_dim
    cv, cu = pentad.dual.space_dim, varpi.space_dim
    rows = [list(pentad.pairing.row(i)) + [0] * cu for i in range(dv)]
    rows += [[0] * cv + list(pairing0.row(i)) for i in range(du)]
    pair = Matrix(rows, field=pentad.field, cols=cv + cu)
    return Pentad(pentad.g, rho_sum, dual_sum, pair, pentad.b0)


def full_gram(G, offsets):
    """The Gram matrix of B_L on the flattened basis of a finite G."""
    assert G.bl is not None
    total = G.total_dim()
    rows = [[0] * total for _ in range(total)]
    for n in sorted(G.dims):
        if abs(n) > G.depth or G.dims[n] == 0 or G.dims[-n] == 0:
            continue
        gram = G.bl[n] if n >= 0 else G.bl[-n].transpose()
        for a in range(G.dims[n]):
            for b in range(G.dims[-n]):
                rows[offsets[n] + a][offsets[-n] + b] = gram[a, b]
    return Matrix(rows, field=G.field, cols=total)


def _block_diagonal_derivation(values, blocks, field):
    """Diagonal matrix with `values[t]` repeated `blocks[t]` times."""
    total = sum(blocks)
    rows = [[0] * total for _ in range(total)]
    pos = 0
    for val, size in zip(values, blocks):
        for _ in range(size):
            rows[pos][pos] = field.from_int(val)
            pos += 1
    return Matrix(rows, field=field, cols=total)


def _eigen_split(op, low, high):
    """Integer-eigenvalue decomposition of a square matrix.

    Returns (spaces, diagonalizable) where spaces maps each eigenvalue in
    [low, high] with a nonzero eigenspace to its kernel Subspace.
    """
    d = op.rows
    spaces = {}
    found = 0
    for k in range(low, high + 1):
        shifted = op - Matrix.identity(d, field=op.field).scale(op.field.from_int(k))
        ker = kernel_basis(shifted)
        if ker.dim:
            spaces[k] = ker
            found += ker.dim
    return spaces, found == d


def build_chain(pentad, pi, varpi, pairing0, depth, seed=0, samples=200):
    """Build both sides of the chain rule and certify the isomorphism.

    Returns a ChainCertificate; its report collects every intermediate
    verification (B_L builds, extended pairing, lifted Phi, standardness of
    the lifted pentad, derivation eigendata, sigma residuals).
    """
    report = Report()
    if not pentad.b0.symmetric:
        raise ValueError("chain rule requires a symmetric B0")

    # left-hand side: graded algebra on the lifted pentad
    G1 = build_graduations(pentad, depth)
    report.merge(build_BL(G1, seed=seed, samples=samples), "inner B_L: ")
    Gp = extend_positive(G1, pi)
    Gn = extend_negative(G1, varpi)
    pairing, prep = build_pairing(Gp, Gn, pairing0)
    report.merge(prep, "extended pairing: ")
    lphi, lrep = build_lifted_phi(Gp, Gn, pairing, pi, varpi, pairing0)
    report.merge(lrep, "lifted Phi: ")
    lifted, off_u, off_w, crep = lifted_pentad(G1, Gp, Gn, pairing, lphi)
    report.merge(crep, "lifted pentad: ")
    if lifted is None:
        verdict = {"status": "truncated", "dims_match": False,
                   "residual_zero": False, "finite": False}
        return ChainCertificate(G1, None, None, None, {}, {}, {}, verdict, report)
    G2 = build_graduations(lifted, depth)
    report.merge(build_BL(G2, seed=seed, samples=samples), "outer B_L: ")

    # right-hand side: graded algebra on the direct-sum pentad
    rhs_pentad = direct_sum_module_pentad(pentad, pi, varpi, pairing0)
    G3 = build_graduations(rhs_pentad, depth)
    report.merge(build_BL(G3, seed=seed, samples=samples), "rhs B_L: ")

    # regrading derivations of the left-hand side
    _, offsets1 = to_lie_algebra(G1)
    inner_degs = sorted(G1.dims)
    alpha0 = _block_diagonal_derivation(
        inner_degs, [G1.dims[n] for n in inner_degs], G2.field)
    pos_levels = Gp.level_list()  # flattening order: 0, 1, 2, ...
    alpha1 = _block_diagonal_derivation(
        pos_levels, [Gp.dims[m] for m in pos_levels], G2.field)
    neg_levels = Gn.level_list()  # flattening order: 0, -1, -2, ...
    alpham1 = _block_diagonal_derivation(
        neg_levels, [Gn.dims[m] for m in neg_levels], G2.field)
    alpha = extend_derivation(G2, alpha0, alpha1, alpham1)
    beta = grading_derivation(G2)
    gamma = {m: alpha[m] + beta[m] for m in alpha}

    # integer eigenvalues and the gamma-eigenspace dimensions
    bound = 2 * depth
    w_dims = {}
    gamma_spaces = {}
    for m in sorted(G2.dims):
        if G2.dims[m] == 0:
            continue
        a_spaces, a_diag = _eigen_split(alpha[m], -bound, bound)
        if not a_diag:
            report.fail("alpha not integer-diagonalizable at outer degree %d" % m)
        spaces, diag = _eigen_split(gamma[m], -bound, bound)
        if not diag:
            report.fail("gamma not integer-diagonalizable at outer degree %d" % m)
        gamma_spaces[m] = spaces
        for k, sub in spaces.items():
            w_dims[k] = w_dims.get(k, 0) + sub.dim

    # B_L skew-compatibility with alpha and beta on all homogeneous pairs
    for m in sorted(G2.dims):
        if abs(m) > G2.depth or G2.dims[m] == 0 or G2.dims[-m] == 0:
            continue
        for der in (alpha, beta):
            for i in range(G2.dims[m]):
                x = _unit(G2.dims[m], i)
                dx = der[m].mul_vec(x)
                for j in range(G2.dims[-m]):
                    y = _unit(G2.dims[-m], j)
                    dy = der[-m].mul_vec(y)
                    if bl_eval(G2, m, dx, y) + bl_eval(G2, m, x, dy) != 0:
                        report.fail("B_L not skew-compatible with the regrading "
                                    "derivation at degrees (%d,%d)" % (m, -m))
                        break
                else:
                    continue
                break

    # dimension comparison
    dim_table = {}
    dims_match = True
    for k in range(-bound, bound + 1):
        rhs_dim = G3.dims.get(k, 0 if G3.finite else None)
        lhs_dim = w_dims.get(k, 0)
        if rhs_dim is None:
            if lhs_dim:
                dims_match = False
                dim_table[k] = (lhs_dim, None)
            continue
        if lhs_dim or rhs_dim:
            dim_table[k] = (lhs_dim, rhs_dim)
        if lhs_dim != rhs_dim:
            dims_match = False
    if not dims_match:
        report.fail("gamma-eigenspace dimensions disagree with the direct-sum side")

    # explicit isomorphism sigma, degree by degree
    L2, offs2 = to_lie_algebra(G2)
    total2 = L2.dim

    def embed(outer, vec):
        out = [0] * total2
        for r, c in enumerate(vec):
            out[offs2[outer] + r] = c
        return tuple(out)

    dv = pentad.rho.space_dim
    sigma = {}
    # degree 0: V_0 = g sits inside the inner algebra inside W_0
    sigma[0] = [embed(0, _unit(G1.total_dim(), offsets1[0] + i))
                for i in range(G3.dims[0])]
    # degree 1: V (inner degree 1 in W_0) followed by U_0 (level 0 of W_1)
    sigma[1] = []
    for i in range(dv):
        sigma[1].append(embed(0, _unit(G1.total_dim(), offsets1[1] + i)))
    for i in range(pi.space_dim):
        sigma[1].append(embed(1, _unit(sum(Gp.dims.values()), off_u[0] + i)))
    # degree -1: dual V then dual U_0
    sigma[-1] = []
    for i in range(pentad.dual.space_dim):
        sigma[-1].append(embed(0, _unit(G1.total_dim(), offsets1[-1] + i)))
    for i in range(varpi.space_dim):
        sigma[-1].append(embed(-1, _unit(sum(Gn.dims.values()), off_w[0] + i)))
    # higher degrees: sigma(p_k(x (x) z)) = [sigma(x), sigma(z)]
    for k in range(2, depth + 1):
        for sign in (1, -1):
            n = k * sign
            vals = []
            for t in range(G3.dims[n]):
                out = vzero(total2)
                for c, idx in G3.gen_decomp[n][t]:
                    a, b = G3.gen_pairs[n][idx]
                    br = L2.bracket(sigma[sign][a], sigma[(k - 1) * sign][b])
                    out = vadd(out, vscale(c, br))
                vals.append(out)
            sigma[n] = vals

    # sigma lands in the right gamma-eigenspace and is invertible per degree
    gamma_rows = [[0] * total2 for _ in range(total2)]
    for m in sorted(G2.dims):
        gm = gamma[m]
        for a in range(G2.dims[m]):
            for b in range(G2.dims[m]):
                gamma_rows[offs2[m] + a][offs2[m] + b] = gm[a, b]
    gamma_full = Matrix(gamma_rows, field=G2.field, cols=total2)
    sigma_ok = True
    for k, vals in sigma.items():
        for v in vals:
            if gamma_full.mul_vec(v) != vscale(G2.field.from_int(k), v):
                report.fail("sigma image not in the gamma-eigenspace at degree %d" % k)
                sigma_ok = False
        span = Subspace.from_vectors(vals, total2)
        if span.dim != G3.dims[k] or span.dim != w_dims.get(k, 0):
            report.fail("sigma not bijective at degree %d (rank %d, rhs %d, lhs %d)"
                        % (k, span.dim, G3.dims[k], w_dims.get(k, 0)))
            sigma_ok = False

    # bracket residuals: sigma([x,y]) - [sigma(x), sigma(y)] must vanish
    residual_zero = True
    for (n, m), table in G3.tables.items():
        if n not in sigma or m not in sigma or (n + m) not in sigma:
            continue
        for i in range(G3.dims[n]):
            for j in range(G3.dims[m]):
                lhs_v = vzero(total2)
                for r, c in enumerate(table[i][j]):
                    if c != 0:
                        lhs_v = vadd(lhs_v, vscale(c, sigma[n + m][r]))
                rhs_v = L2.bracket(sigma[n][i], sigma[m][j])
                if lhs_v != rhs_v:
                    residual_zero = False
                    report.fail("sigma bracket residual nonzero at degrees "
                                "(%d,%d) pair (%d,%d)" % (n, m, i, j))
                    break
            else:
                continue
            break

    finite = G2.finite and G3.finite
    if dims_match and sigma_ok and residual_zero and report.ok:
        status = "isomorphic-within-depth"
    elif dims_match and not (sigma_ok and residual_zero):
        status = "dimensions match, explicit map not found"
    else:
        status = "not certified"
    verdict = {
        "status": status,
        "dims_match": dims_match,
        "sigma_invertible": sigma_ok,
        "residual_zero": residual_zero,
        "finite": finite,
    }
    regrading = {"alpha": alpha, "beta": beta, "gamma": gamma, "w_dims": w_dims,
                 "gamma_spaces": gamma_spaces}
    return ChainCertificate(G1, G2, G3, lifted, regrading, sigma, dim_table,
                            verdict, report)


def verify_local_equivalence(cert):
    """Check the universality hypotheses on both sides, plus the local match.

    Hypotheses per degree within depth: each graduation is generated by
    bracketing with degree +-1, and B_L pairs opposite degrees
    non-degenerately.  The local match re-checks that sigma on degrees
    -1, 0, 1 intertwines brackets and the forms exactly.
    """
    rep = Report()
    for name, G in (("lhs", cert.lhs), ("rhs", cert.rhs)):
        if G is None:
            rep.fail("%s not built" % name)
            continue
        for sign in (1, -1):
            for k in range(1, G.depth):
                n = (k + 1) * sign
                if G.dims[n] == 0:
                    continue
                vecs = []
                t = G.tables[(sign, k * sign)]
                for i in range(G.dims[sign]):
                    for j in range(G.dims[k * sign]):
                        vecs.append(t[i][j])
                if Subspace.from_vectors(vecs, G.dims[n]).dim != G.dims[n]:
                    rep.fail("%s: degree %d not generated by bracketing with "
                             "degree %d" % (name, n, sign))
        for n in range(0, G.depth + 1):
            dp, dn = G.dims[n], G.dims[-n]
            if dp != dn or (dp and rank(G.bl[n]) != dp):
                rep.fail("%s: B_L degenerate between degrees %d and %d" % (name, n, -n))
    if cert.lhs is None or cert.rhs is None:
        return rep
    # local data match through sigma on degrees -1, 0, 1
    G2, G3 = cert.lhs, cert.rhs
    L2, offs2 = to_lie_algebra(G2)
    gram2 = full_gram(G2, offs2)
    for n in (-1, 0, 1):
        for m in (-1, 0, 1):
            if abs(n + m) > 1:
                continue
            for i in range(G3.dims[n]):
                for j in range(G3.dims[m]):
                    lhs_v = vzero(L2.dim)
                    for r, c in enumerate(G3.tables[(n, m)][i][j]):
                        if c != 0:
                            lhs_v = vadd(lhs_v, vscale(c, cert.sigma[n + m][r]))
                    if lhs_v != L2.bracket(cert.sigma[n][i], cert.sigma[m][j]):
                        rep.fail("local bracket mismatch at degrees (%d,%d) "
                                 "pair (%d,%d)" % (n, m, i, j))
    for n in (0, 1):
        for i in range(G3.dims[n]):
            for j in range(G3.dims[-n]):
                lhs_b = 0
                si, sj = cert.sigma[n][i], cert.sigma[-n][j]
                for a, x in enumerate(si):
                    if x == 0:
                        continue
                    row = gram2.row(a)
                    for b, y in enumerate(sj):
                        if y != 0:
                            lhs_b = lhs_b + x * row[b] * y
                rhs_b = bl_eval(G3, n, _unit(G3.dims[n], i), _unit(G3.dims[-n], j))
                if lhs_b != rhs_b:
                    rep.fail("local form mismatch at degree %d pair (%d,%d)"
                             % (n, i, j))
    return rep
