import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterdaha.algebra import VT, VTX, Laurent, RatFunc
from clusterdaha.qspecial import (
    QPower, bracket, chu_vandermonde_sides, one_minus, pochhammer, qbinom, qmono, qpoch, whittaker,
)
from clusterdaha.verify import whittaker_eigen, whittaker_pieri

q = qmono(VT, 1)
t = Laurent.var(VT, "t")


def test_qpower_grid():
    assert QPower.q("1/4").vexp == 1
    assert QPower.q(2).laurent() == q**2
    with pytest.raises(ValueError):
        QPower.q("1/8")
    with pytest.raises(ValueError):
        qmono(VT, "1/3")


def test_pochhammer_small():
    X = Laurent.var(VT, "t")
    one = Laurent.const(VT, 1)
    assert qpoch(X, 1, 0) == RatFunc.const(VT, 1)
    assert qpoch(X, 1, 2) == RatFunc((one - X) * (one - q * X))
    with pytest.raises(ValueError):
        qpoch(X, 1, -1)


@settings(max_examples=40)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(-2, 2))
def test_pochhammer_splits(m, n, s):
    X = qmono(VT, 0, t=1)
    lhs = qpoch(X, s or 1, m + n)
    rhs = qpoch(X, s or 1, m) * qpoch(qmono(VT, (s or 1) * m, t=1), s or 1, n)
    assert lhs == rhs


@given(st.integers(0, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_qbinom_symmetry_and_pascal(nk):
    n, k = nk
    assert qbinom(n, k) == qbinom(n, n - k)
    if 0 < k < n:
        # q^2-Pascal rule: [n,k] = [n-1,k-1] + q^{2k} [n-1,k]
        assert qbinom(n, k) == qbinom(n - 1, k - 1) + RatFunc(qmono(VT, 2 * k)) * qbinom(n - 1, k)


def test_qbinom_examples():
    assert qbinom(2, 1) == RatFunc(Laurent.const(VT, 1) + q**2)
    with pytest.raises(ValueError):
        qbinom(2, 3)


def test_bracket():
    assert bracket(1, 0) == RatFunc.const(VT, 1)
    assert bracket(0, 0).is_zero()
    assert bracket(2, 0) == RatFunc(q + q**-1)
    assert bracket(-1, 0) == RatFunc.const(VT, -1)
    with pytest.raises(ValueError):
        bracket("1/2", 0)


def test_whittaker_small():
    x = Laurent.var(VTX, "x")
    assert whittaker(0) == Laurent.const(VTX, 1)
    assert whittaker(1) == x + x**-1
    assert whittaker(2) == x**2 + x**-2 + Laurent.const(VTX, 1) + qmono(VTX, 2)
    assert whittaker(-1).is_zero()


@pytest.mark.parametrize("l", range(0, 12))
def test_whittaker_eigen_and_pieri(l):
    assert whittaker_eigen(l)
    assert whittaker_pieri(l)


@pytest.mark.parametrize("n", range(0, 6))
def test_chu_vandermonde(n):
    lhs, rhs = chu_vandermonde_sides(n)
    assert lhs == rhs


def test_one_minus_factored():
    r = one_minus(q)
    assert r == RatFunc(Laurent.const(VT, 1) - q)
    assert pochhammer(t, QPower.q(2), 1) == r.__class__(Laurent.const(VT, 1) - t)
