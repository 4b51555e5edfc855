from collections import Counter
from fractions import Fraction
from math import prod

import pytest

from fivevertex.exact import Polynomial, RationalFunction
from fivevertex.lattice import LatticeSpec
from fivevertex.painleve import (affine_constants, b_parameter_report, homogeneous_Z,
                                 is_degenerate, nu_parameters, painleve_residual,
                                 search_affine_correction, sigma_form_residual, sigma_from_Z)
from fivevertex.sampling import RationalSampler

X = RationalFunction.x()

GRID = [LatticeSpec(L, M, N) for L in range(1, 6) for M in range(1, 6)
        for N in range(min(L, M) + 1)]


def test_affine_constants_example():
    assert affine_constants(LatticeSpec(2, 2, 1)) == (2, Fraction(1, 2))


def test_nu_example():
    assert nu_parameters(LatticeSpec(4, 5, 2)) == (Fraction(9, 2), Fraction(-5, 2),
                                                   Fraction(3, 2), Fraction(1, 2))


def test_b_parameter_example():
    assert b_parameter_report(LatticeSpec(8, 9, 3)).b[0] == Fraction(11, 2)


def test_b_relations():
    rs = RationalSampler(3)
    for _ in range(10):
        L, M = rs.integer(1, 12), rs.integer(1, 12)
        spec = LatticeSpec(L, M, rs.integer(0, min(L, M)))
        rel = b_parameter_report(spec).relations()
        assert rel["b_tilde_1 = -b_1"] and rel["b_tilde_3 = -b_4"] and rel["b_tilde_4 = -b_3"]
        # the second relation holds with b_2; the variant with b_1 fails in general
        assert rel["b_tilde_2 = -b_2"]
    assert not b_parameter_report(LatticeSpec(3, 3, 1)).relations()["b_tilde_2 = -b_1"]


@pytest.mark.parametrize("spec", GRID[::3], ids=str)
def test_b_sets_define_the_same_equation(spec):
    # the sigma-form depends on the parameters through b_j^2 and prod b_j
    p = b_parameter_report(spec)
    assert Counter(v * v for v in p.b) == Counter(v * v for v in p.b_tilde)
    assert prod(p.b) == prod(p.b_tilde)


def test_residual_zero_for_small_box():
    assert painleve_residual(LatticeSpec(2, 2, 1)).is_zero()


@pytest.mark.parametrize("spec", GRID, ids=str)
def test_residual_vanishes_on_grid(spec):
    assert painleve_residual(spec).is_zero()


def test_degenerate_edges_are_flagged():
    assert is_degenerate(LatticeSpec(3, 4, 0)) and is_degenerate(LatticeSpec(3, 4, 3))
    assert not is_degenerate(LatticeSpec(3, 4, 1))
    # there Z is a monomial in x times a constant and sigma is affine
    for spec in (LatticeSpec(3, 4, 0), LatticeSpec(3, 4, 3), LatticeSpec(1, 1, 1)):
        s = sigma_from_Z(spec)
        assert s.is_polynomial() and s.num.degree <= 1


def test_negative_controls():
    spec = LatticeSpec(3, 3, 1)
    sigma = sigma_from_Z(spec)
    nu = nu_parameters(spec)
    assert sigma_form_residual(sigma, nu).is_zero()
    assert not sigma_form_residual(sigma + X, nu).is_zero()
    assert not sigma_form_residual(sigma_from_Z(spec, A_P=0), nu).is_zero()
    wrong_nu = (nu[0] + 1,) + nu[1:]
    assert not sigma_form_residual(sigma, wrong_nu).is_zero()


def test_sigma_independent_of_alpha_and_delta():
    for spec in (LatticeSpec(3, 3, 1), LatticeSpec(4, 2, 1), LatticeSpec(2, 5, 2)):
        assert sigma_from_Z(spec, 1, 1) == sigma_from_Z(spec, 7, 3)


def test_sigma_denominator():
    spec = LatticeSpec(3, 3, 1)
    sigma = sigma_from_Z(spec)
    R = homogeneous_Z(spec).coefficient
    bound = R.num * R.den * Polynomial([0, -1, 1])
    assert (bound % sigma.den).is_zero()


def test_no_affine_correction_needed():
    assert search_affine_correction(LatticeSpec(3, 3, 1), span=2) == [(0, 0)]


def test_input_guards():
    with pytest.raises(ValueError):
        sigma_form_residual(X, (1, 2, 3))
