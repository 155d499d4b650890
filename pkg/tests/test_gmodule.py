"""Graded module extensions, the extended pairing, and the lifted Phi-map."""

import pytest

from gradedlie.catalog import gl1gl1sl2_modules, gl1_sl_pentad
from gradedlie.gmodule import (
    build_lifted_phi,
    build_pairing,
    check_graded_module,
    extend_negative,
    extend_positive,
    lifted_pentad,
    module_irreducibility_probe,
    module_transitivity,
)
from gradedlie.graded import build_BL, build_graduations
from gradedlie.liealg import Representation
from gradedlie.linalg import Matrix
from gradedlie.pentad import validate_pentad


def _built_example(depth=3):
    p, pi, varpi, pairing0 = gl1gl1sl2_modules()
    G = build_graduations(p, depth)
    build_BL(G)
    return G, pi, varpi, pairing0


def test_rank_one_module_levels():
    G, pi, varpi, pairing0 = _built_example()
    Gp = extend_positive(G, pi)
    assert [Gp.dims[m] for m in range(0, 3)] == [1, 2, 0]
    assert Gp.finite
    assert Gp.total_dim() == 3
    Gn = extend_negative(G, varpi)
    assert [Gn.dims[m] for m in range(0, -3, -1)] == [1, 2, 0]


def test_module_action_law():
    G, pi, varpi, _ = _built_example()
    assert check_graded_module(extend_positive(G, pi)).ok
    assert check_graded_module(extend_negative(G, varpi)).ok


def test_module_transitive_and_irreducible():
    G, pi, _, _ = _built_example()
    Gp = extend_positive(G, pi)
    assert module_transitivity(Gp)["transitive"]
    verdict, samples = module_irreducibility_probe(Gp)
    assert verdict == "probably-irreducible"
    assert samples > 0


def test_reducible_module_detected():
    # two copies of the rank-one module: every line at degree 0 is invariant
    G, pi, _, _ = _built_example()
    double = Representation(
        G.pentad.g, 2,
        [Matrix([[op[0, 0], 0], [0, op[0, 0]]], field=G.field)
         for op in pi.operators])
    Gp = extend_positive(G, double)
    verdict, witness = module_irreducibility_probe(Gp)
    assert verdict == "reducible"
    assert witness.dim == 1


def test_zero_action_module_concentrated():
    G, _, _, _ = _built_example()
    zero = Representation.zero(G.pentad.g, 2)
    Gp = extend_positive(G, zero)
    assert Gp.dims[0] == 2 and Gp.dims[1] == 0
    assert Gp.finite


def test_extended_pairing():
    G, pi, varpi, pairing0 = _built_example()
    Gp, Gn = extend_positive(G, pi), extend_negative(G, varpi)
    pairing, rep = build_pairing(Gp, Gn, pairing0)
    assert rep.ok
    assert pairing.grams[0] == pairing0
    assert pairing.grams[1].rows == 2


def test_degenerate_pairing_rejected():
    G, pi, varpi, _ = _built_example()
    Gp, Gn = extend_positive(G, pi), extend_negative(G, varpi)
    with pytest.raises(ValueError, match="degenerate"):
        build_pairing(Gp, Gn, Matrix.zero(1, 1))


def test_lifted_phi_and_pentad():
    G, pi, varpi, pairing0 = _built_example()
    Gp, Gn = extend_positive(G, pi), extend_negative(G, varpi)
    pairing, _ = build_pairing(Gp, Gn, pairing0)
    lphi, rep = build_lifted_phi(Gp, Gn, pairing, pi, varpi, pairing0)
    assert rep.ok
    assert set(lphi.tables) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    lifted, off_u, off_w, cert = lifted_pentad(G, Gp, Gn, pairing, lphi)
    assert cert.ok
    assert validate_pentad(lifted).ok
    assert lifted.rho.space_dim == 3 and lifted.dual.space_dim == 3


def test_truncated_module_over_infinite_growth():
    # U = V over gl1+sl2 never reaches a zero level
    q = gl1_sl_pentad(2)
    G = build_graduations(q, 3)
    Gp = extend_positive(G, q.rho)
    assert not Gp.finite
    assert [Gp.dims[m] for m in range(0, 4)] == [2, 3, 4, 5]
    # the action law still holds on every verifiable triple
    assert check_graded_module(Gp).ok
