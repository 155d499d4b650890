"""Exhaustive structural properties on the bundled examples and a zoo of
randomly generated small pentads: bracket axioms, the invariant form,
module action laws, pairing invariance, the lifted-map relation, and
truncation consistency.  All checks are exact (zero tolerance)."""

import pytest

from gradedlie.gmodule import (
    build_lifted_phi,
    build_pairing,
    check_graded_module,
    extend_negative,
    extend_positive,
)
from gradedlie.graded import (
    build_BL,
    build_graduations,
    check_graded_algebra,
)
from gradedlie.linalg import rank, vadd, vzero

from zoo import bundled_pentads, random_pentads

ALL = bundled_pentads() + random_pentads(seed=20260823)

IDS = ["bundled%d" % i for i in range(len(bundled_pentads()))] + \
      ["random%d" % i for i in range(len(random_pentads(seed=20260823)))]


@pytest.fixture(params=list(range(len(ALL))), ids=IDS, scope="module")
def case(request):
    pentad, module = ALL[request.param]
    G = build_graduations(pentad, 3)
    build_BL(G)
    return pentad, module, G


def test_bracket_axioms(case):
    _, _, G = case
    assert check_graded_algebra(G).ok


def test_bl_blocked_nondegenerate_invariant(case):
    pentad, _, G = case
    rep = build_BL(G)
    assert rep.ok
    assert G.bl[0] == G.bl[0].transpose()
    for n in range(0, G.depth + 1):
        assert G.dims[n] == G.dims[-n]
        if G.dims[n]:
            assert rank(G.bl[n]) == G.dims[n]


def test_module_action_law(case):
    _, module, G = case
    pi, varpi, _ = module
    assert check_graded_module(extend_positive(G, pi)).ok
    assert check_graded_module(extend_negative(G, varpi)).ok


def test_pairing_invariance(case):
    _, module, G = case
    pi, varpi, pairing0 = module
    Gp, Gn = extend_positive(G, pi), extend_negative(G, varpi)
    _, rep = build_pairing(Gp, Gn, pairing0)
    assert rep.ok


def test_lifted_phi_defining_relation(case):
    _, module, G = case
    pi, varpi, pairing0 = module
    Gp, Gn = extend_positive(G, pi), extend_negative(G, varpi)
    pairing, _ = build_pairing(Gp, Gn, pairing0)
    _, rep = build_lifted_phi(Gp, Gn, pairing, pi, varpi, pairing0)
    assert rep.ok


def test_phi_plus_psi_is_zero(case):
    pentad, _, _ = case
    for j in range(pentad.rho.space_dim):
        for k in range(pentad.dual.space_dim):
            assert vadd(pentad.phi[j][k], pentad.psi[k][j]) == \
                vzero(pentad.g.dim)


def test_truncation_consistency(case):
    pentad, _, G3 = case
    G2 = build_graduations(pentad, 2)
    for key, table in G2.tables.items():
        assert G3.tables[key] == table
    for n in G2.dims:
        assert G2.dims[n] == G3.dims[n]
