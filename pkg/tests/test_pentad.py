"""Pentad assembly, the solved Phi/Psi tables, and standardness validation."""

from fractions import Fraction

from gradedlie.catalog import (
    adjoint_pentad,
    char2_pentad,
    gl1_sl_pentad,
    gl1gl1sl2_pentad,
    sl2,
    sl2_trace_form,
)
from gradedlie.liealg import BilinearForm
from gradedlie.linalg import Matrix, vadd, vzero
from gradedlie.pentad import (
    Pentad,
    direct_sum_pentad,
    surjectivity_checks,
    validate_pentad,
)

from zoo import random_pentads


def test_catalog_pentads_are_standard():
    for p in (gl1_sl_pentad(2), gl1_sl_pentad(3), gl1gl1sl2_pentad(),
              adjoint_pentad(sl2(), sl2_trace_form()), char2_pentad()):
        assert validate_pentad(p).ok


def test_phi_closed_form_gl1gl1sl2():
    # Phi(v (x) phi) = (-(v.phi), 3/2 (v.phi), v phi^t - 1/2 (v.phi) I)
    # in the basis (ea, eb, h, x, y) with sl2 coordinates (h, x, y)
    p = gl1gl1sl2_pentad()
    half, threehalf = Fraction(1, 2), Fraction(3, 2)
    expected = {
        (0, 0): (-1, threehalf, half, 0, 0),
        (0, 1): (0, 0, 0, 1, 0),
        (1, 0): (0, 0, 0, 0, 1),
        (1, 1): (-1, threehalf, -half, 0, 0),
    }
    for (j, k), vec in expected.items():
        assert p.phi[j][k] == vec


def test_phi_plus_psi_vanishes():
    for p, _ in [(gl1_sl_pentad(2), None), (gl1gl1sl2_pentad(), None)]:
        for j in range(p.rho.space_dim):
            for k in range(p.dual.space_dim):
                assert vadd(p.phi[j][k], p.psi[k][j]) == vzero(p.g.dim)


def test_adjoint_phi_is_the_bracket():
    L = sl2()
    p = adjoint_pentad(L, sl2_trace_form())
    for j in range(3):
        for k in range(3):
            ej = tuple(1 if t == j else 0 for t in range(3))
            ek = tuple(1 if t == k else 0 for t in range(3))
            assert p.phi[j][k] == L.bracket(ej, ek)


def test_corrupted_b0_detected():
    p = gl1_sl_pentad(2)
    gram = [list(row) for row in p.b0.gram.data]
    gram[0][1] = Fraction(1, 3)  # breaks symmetry/invariance
    bad = Pentad(p.g, p.rho, p.dual, p.pairing,
                 BilinearForm(Matrix(gram, cols=p.g.dim)))
    assert not validate_pentad(bad).ok


def test_direct_sum_pentad_blockwise_phi():
    p1 = gl1_sl_pentad(2)
    p2 = gl1gl1sl2_pentad()
    s = direct_sum_pentad(p1, p2)
    assert validate_pentad(s).ok
    d1, g1 = p1.rho.space_dim, p1.g.dim
    for j in range(d1):
        for k in range(d1):
            assert s.phi[j][k][:g1] == p1.phi[j][k]
            assert all(c == 0 for c in s.phi[j][k][g1:])
    for j in range(p2.rho.space_dim):
        for k in range(p2.dual.space_dim):
            assert s.phi[d1 + j][d1 + k][g1:] == p2.phi[j][k]
            assert all(c == 0 for c in s.phi[d1 + j][d1 + k][:g1])


def test_surjectivity_diagnostics():
    checks = surjectivity_checks(gl1_sl_pentad(2))
    assert checks == {"rho_surjective": True, "varrho_surjective": True,
                      "phi_surjective": True, "rho_faithful": True}
    # the gl1+gl1+sl2 pentad has ea acting by zero: rho not faithful
    checks2 = surjectivity_checks(gl1gl1sl2_pentad())
    assert not checks2["rho_faithful"]
    assert not checks2["phi_surjective"]


def test_random_pentads_are_standard():
    for p, _ in random_pentads(seed=0):
        assert validate_pentad(p).ok
