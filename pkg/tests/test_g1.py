import pytest

from clusterdaha.algebra import VT, VTX, Laurent, RatFunc
from clusterdaha.macdonald_g1 import (
    c_l, c_l_literal, check_eigen, evaluate_at_t, explicit_coeff, f_eigen, f_eigen_residual,
    macdonald_P_explicit, macdonald_P_pieri, psi_plus, psi_plus_inv_q, reconstruct_P,
)
from clusterdaha.qspecial import qmono, qpoch

x = Laurent.var(VTX, "x")
t = Laurent.var(VTX, "t")


def test_small_polynomials():
    assert macdonald_P_pieri(0) == RatFunc.const(VTX, 1)
    assert macdonald_P_pieri(1) == RatFunc(x + x**-1)
    # P_2 = x^2 + x^-2 + (1 - t^2)(1 + q^2) / (1 - q^2 t^2)
    one = Laurent.const(VTX, 1)
    mid = RatFunc((one - t**2) * (one + qmono(VTX, 2))) / RatFunc(one - qmono(VTX, 2, t=2))
    assert macdonald_P_pieri(2) == RatFunc(x**2 + x**-2) + mid


@pytest.mark.parametrize("l", range(0, 9))
def test_three_routes_agree(l):
    P = macdonald_P_pieri(l)
    assert P == macdonald_P_explicit(l)
    assert P == reconstruct_P(l)


@pytest.mark.parametrize("l", range(0, 9))
def test_eigen(l):
    assert check_eigen(macdonald_P_pieri(l), l)


def test_wrong_eigenvalue_rejected():
    assert not check_eigen(macdonald_P_pieri(3), 2)


def test_negative_l():
    with pytest.raises(ValueError):
        macdonald_P_pieri(-1)


def test_t_equal_one_leaves_extreme_terms():
    # (t^2; q^2)_r vanishes at t = 1 for r >= 1, leaving x^l + x^-l
    for l in range(1, 6):
        for r in range(1, l):
            c = explicit_coeff(l, r).subs({"t": {}})
            assert c.is_zero()


@pytest.mark.parametrize("l", range(0, 8))
def test_f_eigen_residual_vanishes(l):
    assert len(f_eigen_residual(f_eigen(l), l)) == 0


@pytest.mark.parametrize("l", range(0, 8))
def test_genus_reduction_constant(l):
    assert evaluate_at_t(macdonald_P_pieri(l)) == c_l(l).in_context(VTX)


def test_printed_constant_fails():
    for l in (2, 4):
        assert c_l_literal(l) != c_l(l)
    with pytest.raises(ValueError):
        c_l_literal(1)


def test_psi_plus():
    assert psi_plus(-1).is_zero()
    assert psi_plus(0) == RatFunc.const(VT, 1)
    assert psi_plus(2) == qpoch(qmono(VT, 2), 2, 2).inv()
    assert psi_plus_inv_q(1) == RatFunc.const(VT, 1) / RatFunc(Laurent.const(VT, 1) - qmono(VT, -2))
