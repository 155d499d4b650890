"""The chain-rule certificate and local-equivalence verification."""

from gradedlie.catalog import gl1_sl_pentad, gl1gl1sl2_modules
from gradedlie.chain import (
    build_chain,
    direct_sum_module_pentad,
    verify_local_equivalence,
)
from gradedlie.graded import build_graduations
from gradedlie.liealg import Representation
from gradedlie.linalg import Matrix
from gradedlie.pentad import validate_pentad


def test_sl4_chain_certificate():
    p, pi, varpi, pairing0 = gl1gl1sl2_modules()
    cert = build_chain(p, pi, varpi, pairing0, 3)
    assert cert.report.ok
    assert cert.verdict["status"] == "isomorphic-within-depth"
    assert cert.verdict["residual_zero"]
    assert cert.verdict["finite"]
    assert cert.dim_table == {-2: (2, 2), -1: (3, 3), 0: (5, 5),
                              1: (3, 3), 2: (2, 2)}
    assert cert.rhs.total_dim() == 15
    assert verify_local_equivalence(cert).ok


def test_trivial_module_chain():
    p, _, _, _ = gl1gl1sl2_modules()
    zero = Representation.zero(p.g, 0)
    cert = build_chain(p, zero, zero, Matrix.zero(0, 0), 3)
    assert cert.ok
    # both sides are just the graded algebra of the base pentad
    base = build_graduations(p, 3)
    assert {k: v[1] for k, v in cert.dim_table.items()} == \
        {n: base.dims[n] for n in base.dims if base.dims[n]}


def test_direct_sum_pentad_standard():
    p, pi, varpi, pairing0 = gl1gl1sl2_modules()
    rhs = direct_sum_module_pentad(p, pi, varpi, pairing0)
    assert validate_pentad(rhs).ok
    assert rhs.rho.space_dim == 3


def test_u_equals_v_rhs_dims_match_direct_build():
    # an infinite example: the certificate reports truncation, but the rhs
    # pentad must agree with an independently assembled direct-sum pentad
    q = gl1_sl_pentad(2)
    cert = build_chain(q, q.rho, q.dual, q.pairing, 3)
    assert cert.verdict["status"] == "truncated"
    rhs = direct_sum_module_pentad(q, q.rho, q.dual, q.pairing)
    assert validate_pentad(rhs).ok
    G = build_graduations(rhs, 3)
    from gradedlie.liealg import sum_reps_same_algebra
    from gradedlie.pentad import Pentad
    rho2 = sum_reps_same_algebra(q.rho, q.rho)
    dual2 = sum_reps_same_algebra(q.dual, q.dual)
    pair = Matrix([[1 if i == j else 0 for j in range(4)] for i in range(4)])
    independent = Pentad(q.g, rho2, dual2, pair, q.b0)
    G2 = build_graduations(independent, 3)
    assert {n: G.dims[n] for n in G.dims} == {n: G2.dims[n] for n in G2.dims}


def test_zeroed_bl_block_fails_hypotheses():
    p, pi, varpi, pairing0 = gl1gl1sl2_modules()
    cert = build_chain(p, pi, varpi, pairing0, 3)
    # sabotage one Gram block of the rhs form
    cert.rhs.bl[2] = Matrix.zero(2, 2)
    rep = verify_local_equivalence(cert)
    assert not rep.ok
    assert any("degenerate" in v for v in rep.violations)
