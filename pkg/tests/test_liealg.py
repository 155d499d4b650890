"""Structure-constant Lie algebras, representations, and forms."""

from gradedlie.catalog import matrix_lie_algebra, sl2, sl2_trace_form, sl_basis
from gradedlie.liealg import (
    LieAlgebra,
    Representation,
    contragredient,
    direct_sum_algebra,
    direct_sum_form,
    direct_sum_rep,
    sum_reps_same_algebra,
    validate_bilinear_form,
    validate_lie_algebra,
    validate_representation,
)
from gradedlie.linalg import Matrix


def test_sl2_structure():
    L = sl2()
    assert validate_lie_algebra(L).ok
    h, x, y = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert L.bracket(h, x) == (0, 2, 0)
    assert L.bracket(h, y) == (0, 0, -2)
    assert L.bracket(x, y) == (1, 0, 0)


def test_sl3_jacobi():
    basis, _ = sl_basis(3)
    L = matrix_lie_algebra(basis)
    assert L.dim == 8
    assert validate_lie_algebra(L).ok


def test_invalid_brackets_detected():
    # [e0,e1] = e0 but [e1,e0] = 0 breaks antisymmetry
    bad = LieAlgebra(2, [[(0, 0), (1, 0)], [(0, 0), (0, 0)]])
    rep = validate_lie_algebra(bad)
    assert not rep.ok
    assert any("antisymmetry" in v for v in rep.violations)


def test_adjoint_is_a_representation():
    L = sl2()
    assert validate_representation(L.adjoint_rep()).ok


def test_contragredient_law():
    basis, _ = sl_basis(2)
    L = matrix_lie_algebra(basis)
    rho = Representation(L, 2, basis)
    assert validate_representation(rho).ok
    assert validate_representation(contragredient(rho)).ok


def test_trace_form_invariance():
    L = sl2()
    assert validate_bilinear_form(sl2_trace_form(), L).ok
    degenerate = sl2_trace_form()
    degenerate.gram = Matrix([[0, 0, 0], [0, 0, 1], [0, 1, 0]])
    from gradedlie.liealg import BilinearForm
    rep = validate_bilinear_form(BilinearForm(degenerate.gram), L)
    assert not rep.ok


def test_direct_sums():
    L = sl2()
    LL = direct_sum_algebra(L, L)
    assert LL.dim == 6
    assert validate_lie_algebra(LL).ok
    rho = L.adjoint_rep()
    both = direct_sum_rep(rho, rho, LL)
    assert validate_representation(both).ok
    same = sum_reps_same_algebra(rho, rho)
    assert same.space_dim == 6
    assert validate_representation(same).ok
    B = direct_sum_form(sl2_trace_form(), sl2_trace_form())
    assert validate_bilinear_form(B, LL).ok


def test_zero_dim_algebra_rejected():
    rep = validate_lie_algebra(LieAlgebra(0, []))
    assert not rep.ok
    assert "non-zero Lie algebra" in rep.violations[0]
