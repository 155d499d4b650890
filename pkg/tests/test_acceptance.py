"""Acceptance gate: the eight end-to-end criteria, all exact arithmetic."""

from fractions import Fraction

from gradedlie.catalog import char2_pentad, gl1_sl_pentad, gl1gl1sl2_modules
from gradedlie.chain import build_chain
from gradedlie.gmodule import (
    build_lifted_phi,
    build_pairing,
    check_graded_module,
    extend_negative,
    extend_positive,
    module_irreducibility_probe,
    module_transitivity,
)
from gradedlie.graded import (
    bl_eval,
    build_BL,
    build_graduations,
    check_graded_algebra,
    local_pentad,
    to_lie_algebra,
)
from gradedlie.linalg import rank, vadd, vzero
from gradedlie.pentad import validate_pentad

from zoo import bundled_pentads, random_pentads


def test_criterion_1_sl3_reconstruction():
    G = build_graduations(gl1_sl_pentad(2), 3)
    assert [G.dims[n] for n in range(-2, 3)] == [0, 2, 4, 2, 0]
    assert G.total_dim() == 8  # m^2 + 2m at m = 2
    assert G.dims[2] == 0 and G.dims[-2] == 0
    assert G.finite


def test_criterion_2_sl4_magnitude():
    G = build_graduations(gl1_sl_pentad(3), 3)
    assert G.total_dim() == 15


def test_criterion_3_gl1_sl3_example():
    p, _, _, _ = gl1gl1sl2_modules()
    G = build_graduations(p, 3)
    assert G.total_dim() == 9
    # Phi(v (x) phi) = (-(v.phi), 3/2 (v.phi), v phi^t - 1/2 (v.phi) I_2)
    half, threehalf = Fraction(1, 2), Fraction(3, 2)
    assert p.phi[0][0] == (-1, threehalf, half, 0, 0)
    assert p.phi[0][1] == (0, 0, 0, 1, 0)
    assert p.phi[1][0] == (0, 0, 0, 0, 1)
    assert p.phi[1][1] == (-1, threehalf, -half, 0, 0)
    assert build_BL(G).ok
    h = (0, 0, 1, 0, 0)
    assert bl_eval(G, 0, h, h) == 2
    L, offsets = to_lie_algebra(G)
    hL = tuple(1 if i == offsets[0] + 2 else 0 for i in range(L.dim))
    assert (L.ad(hL) @ L.ad(hL)).trace() == 12


def test_criterion_4_module_extension():
    p, pi, _, _ = gl1gl1sl2_modules()
    G = build_graduations(p, 3)
    Gp = extend_positive(G, pi)
    assert [Gp.dims[m] for m in range(0, 3)] == [1, 2, 0]
    assert module_transitivity(Gp)["transitive"]
    verdict, _ = module_irreducibility_probe(Gp)
    assert verdict == "probably-irreducible"


def test_criterion_5_chain_rule():
    p, pi, varpi, pairing0 = gl1gl1sl2_modules()
    cert = build_chain(p, pi, varpi, pairing0, 3)
    assert cert.verdict["status"] == "isomorphic-within-depth"
    assert cert.verdict["residual_zero"]
    assert cert.verdict["finite"]
    assert cert.dim_table == {-2: (2, 2), -1: (3, 3), 0: (5, 5),
                              1: (3, 3), 2: (2, 2)}


def test_criterion_6_property_suite():
    for pentad, module in bundled_pentads() + random_pentads(seed=20260823):
        assert validate_pentad(pentad).ok
        G3 = build_graduations(pentad, 3)
        # (a) antisymmetry + Jacobi on all triples within depth 3
        assert check_graded_algebra(G3).ok
        # (b) B_L symmetric-blocked, non-degenerate, invariant (B0 symmetric)
        assert pentad.b0.symmetric
        assert build_BL(G3).ok
        assert G3.bl[0] == G3.bl[0].transpose()
        for n in range(0, 4):
            assert G3.dims[n] == G3.dims[-n]
            if G3.dims[n]:
                assert rank(G3.bl[n]) == G3.dims[n]
        # (c) module action law
        pi, varpi, pairing0 = module
        Gp, Gn = extend_positive(G3, pi), extend_negative(G3, varpi)
        assert check_graded_module(Gp).ok
        assert check_graded_module(Gn).ok
        # (d) pairing invariance on all stored homogeneous triples
        pairing, prep = build_pairing(Gp, Gn, pairing0)
        assert prep.ok
        # (e) lifted Phi defining relation, exhaustively
        _, phirep = build_lifted_phi(Gp, Gn, pairing, pi, varpi, pairing0)
        assert phirep.ok
        # (f) Phi + Psi = 0
        for j in range(pentad.rho.space_dim):
            for k in range(pentad.dual.space_dim):
                assert vadd(pentad.phi[j][k], pentad.psi[k][j]) == \
                    vzero(pentad.g.dim)
        # (g) N=2 vs N=3 truncation overlap is bit-identical
        G2 = build_graduations(pentad, 2)
        for key, table in G2.tables.items():
            assert G3.tables[key] == table
        for n in G2.dims:
            assert G2.dims[n] == G3.dims[n]


def test_criterion_7_char2_smoke():
    G = build_graduations(char2_pentad(), 2)
    assert check_graded_algebra(G).ok
    for (n, m), table in G.tables.items():
        if n == m:
            for i in range(G.dims[n]):
                assert all(c == 0 for c in table[i][i])


def test_criterion_8_universality_round_trip():
    G = build_graduations(gl1_sl_pentad(2), 3)
    build_BL(G)
    local = local_pentad(G)
    assert validate_pentad(local).ok
    G2 = build_graduations(local, 3)
    assert {n: d for n, d in G2.dims.items()} == \
        {n: d for n, d in G.dims.items()}
    assert G2.tables == G.tables
