"""Genus 1 (SL_2) Macdonald polynomials by three independent routes.

Polynomials in x are returned as RatFunc over (v, t, x) whose denominator
involves only v and t.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import VT, VTX, Laurent, RatFunc, rsum
from .diffops import macdonald_op
from .lattice import LatticeFn
from .qspecial import one_minus, qmono, qpoch, whittaker


def _x(e=1):
    return Laurent.var(VTX, "x", e)


def pieri_coeff(l: int) -> RatFunc:
    """Coefficient of P_{l-1} in (x + x^-1) P_l."""
    c = VT
    return (one_minus(qmono(c, 2 * l)) * one_minus(qmono(c, 2 * (l - 1), t=4))) / (
        one_minus(qmono(c, 2 * l, t=2)) * one_minus(qmono(c, 2 * (l - 1), t=2))
    )


@lru_cache(maxsize=None)
def _pieri_table(l: int):
    if l == 0:
        return (RatFunc.const(VTX, 1),)
    prev = _pieri_table(l - 1)
    X = RatFunc(_x() + _x(-1))
    if l == 1:
        return prev + (X,)
    nxt = X * prev[l - 1] - pieri_coeff(l - 1).in_context(VTX) * prev[l - 2]
    return prev + (nxt,)


def macdonald_P_pieri(l: int) -> RatFunc:
    """P_l by iterating the Pieri rule from P_0 = 1."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    return _pieri_table(l)[l]


def explicit_coeff(l: int, r: int) -> RatFunc:
    """Coefficient of x^(l-2r) in the terminating basic hypergeometric sum."""
    c = VT
    t2 = Laurent.var(c, "t", 2)
    num = qpoch(qmono(c, 2 * l), -2, r) * qpoch(t2, 2, r)
    den = qpoch(qmono(c, 2 * (l - 1), t=2), -2, r) * qpoch(qmono(c, 2), 2, r)
    return num / den


def macdonald_P_explicit(l: int) -> RatFunc:
    if l < 0:
        raise ValueError("l must be nonnegative")
    terms = [explicit_coeff(l, r).in_context(VTX) * RatFunc(_x(l - 2 * r)) for r in range(l + 1)]
    return rsum(terms, VTX)


def psi_plus(n: int, ctx=VT) -> RatFunc:
    """Psi_q^+[n] = 1/(q^2; q^2)_n for n >= 0 and 0 for n < 0."""
    if n < 0:
        return RatFunc.const(ctx, 0)
    return qpoch(qmono(ctx, 2), 2, n).inv()


def psi_plus_inv_q(n: int, ctx=VT) -> RatFunc:
    """The same distribution with q replaced by q^-1: 1/(q^-2; q^-2)_n."""
    if n < 0:
        return RatFunc.const(ctx, 0)
    return qpoch(qmono(ctx, -2), -2, n).inv()


def f_eigen(l: int) -> LatticeFn:
    """Eigenfunction of eta_{-1}(M) supported on 0 <= n <= l, l - n even."""
    c = VT
    out = {}
    for n in range(l % 2, l + 1, 2):
        k = (l - n) // 2
        num = qpoch(qmono(c, 2), 2, l) * RatFunc(qmono(c, n - l, t=l - n))
        den = qpoch(qmono(c, n + l, t=2), 2, k) * qpoch(qmono(c, n - l), 2, k)
        out[n] = num / den
    return LatticeFn(out, c)


def f_eigen_residual(f: LatticeFn, l: int) -> LatticeFn:
    """Left minus right side of the three-term eigen-equation on n >= 0.

    The equation lives in the quotient of V by the functions vanishing on
    Z_{>=0}, so points n < 0 are not constrained.
    """
    c = VT
    ev = RatFunc(qmono(c, l, t=1) + qmono(c, -l, t=-1))
    pts = {m for n in f.values for m in (n, n - 2) if m >= 0}
    out = {}
    for n in pts:
        lhs = RatFunc(qmono(c, n, t=1) + qmono(c, -n, t=-1)) * f[n] - RatFunc(qmono(c, -n - 2, t=1)) * f[n + 2]
        out[n] = lhs - ev * f[n]
    return LatticeFn(out, c)


def reconstruct_P(l: int) -> RatFunc:
    """P_l from Whittaker data: sum_n Psi^+[l-2n] f_l(l-2n) W_{l-2n}."""
    f = f_eigen(l)
    terms = []
    for n in range(l // 2 + 1):
        m = l - 2 * n
        coeff = psi_plus(m) * f[m]
        terms.append(coeff.in_context(VTX) * RatFunc(whittaker(m)))
    return rsum(terms, VTX)


def eigenvalue(l: int, ctx=VT) -> RatFunc:
    return RatFunc(qmono(ctx, l, t=1) + qmono(ctx, -l, t=-1))


def check_eigen(P: RatFunc, l: int) -> bool:
    return macdonald_op().apply(P) == eigenvalue(l).in_context(VTX) * P


def evaluate_at_t(P: RatFunc) -> RatFunc:
    """P(x = t)."""
    return P.subs({"x": {"t": 1}})


def c_l(l: int) -> RatFunc:
    """Genus reduction constant c_l = P_l(t) in the base-q^2 convention.

    c_l = t^-l (t^4; q^2)_l / (t^2; q^2)_l, i.e. the formula with (t, q) -> (t^2, q^2),
    matching P_l = P_l(x; t^2, q^2).
    """
    c = VT
    return RatFunc(qmono(c, 0, t=-l)) * qpoch(Laurent.var(c, "t", 4), 2, l) / qpoch(Laurent.var(c, "t", 2), 2, l)


def c_l_literal(l: int) -> RatFunc:
    """The printed form t^(-l/2) (t^2; q)_l / (t; q)_l; needs even l for the grid."""
    c = VT
    if l % 2:
        raise ValueError("t^(-l/2) is off the integer t grid for odd l")
    return RatFunc(qmono(c, 0, t=-l // 2)) * qpoch(Laurent.var(c, "t", 2), 1, l) / qpoch(Laurent.var(c, "t", 1), 1, l)
