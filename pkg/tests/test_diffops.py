import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterdaha.algebra import VTX, VTX3, Laurent, NotLaurentError, RatFunc
from clusterdaha.diffops import (
    DiffOp, X3, collect_coeffs_form, genus2_opA, genus2_opB, hcheck, index_perm, macdonald_op, mul_op,
)
from clusterdaha.qspecial import qmono, whittaker
from clusterdaha.verify import hcheck_ladder

x = Laurent.var(VTX, "x")
t = Laurent.var(VTX, "t")


def _rf(p):
    return RatFunc(p)


def test_shift_acts_on_coefficients():
    T = DiffOp(VTX, ("x",), {(1,): 1})
    X = DiffOp.scalar(VTX, ("x",), x)
    # T x = q x T
    assert T * X == DiffOp(VTX, ("x",), {(1,): _rf(qmono(VTX, 1) * x)})


ops = st.sampled_from([hcheck(0), hcheck(1), hcheck(-1), mul_op(), macdonald_op()])


@settings(max_examples=25)
@given(ops, ops, ops)
def test_composition_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("n", range(-3, 4))
def test_ladder(n):
    assert hcheck_ladder(n)


def test_macdonald_via_hcheck():
    M = hcheck(0).scale(_rf(t**-1)) - hcheck(2).scale(_rf(qmono(VTX, -1) * t))
    assert M == macdonald_op()


def test_hcheck0_on_whittaker():
    W = whittaker(3)
    assert hcheck(0).apply(W) == qmono(VTX, -3) * W


def test_apply_rejects_non_laurent():
    with pytest.raises(NotLaurentError):
        hcheck(0).apply(x)


@pytest.mark.parametrize("k", (1, 2, 3))
def test_collect_coeffs_matches_closed_form(k):
    assert collect_coeffs_form(k) == genus2_opA(k)


def test_opA_permutations():
    assert genus2_opA(1).rename(index_perm({1: 2, 2: 1, 3: 3})) == genus2_opA(2)
    with pytest.raises(ValueError):
        genus2_opA(4)


def test_opA_commute():
    a, b = genus2_opA(1), genus2_opA(2)
    assert (a * b) == (b * a)


def test_opB_is_multiplication():
    f = Laurent.var(VTX3, "x12") + Laurent.var(VTX3, "x23")
    x12 = Laurent.var(VTX3, "x12")
    assert genus2_opB(1, 2).apply(f) == (x12 + x12**-1) * f
    assert genus2_opB(2, 1) == genus2_opB(1, 2)
    assert genus2_opB(1, 2).xvars == X3
