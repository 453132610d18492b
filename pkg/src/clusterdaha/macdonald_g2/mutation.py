"""Genus 2 eigenfunctions through the cluster mutation sequence gamma.

The chain is g'_l -> g''_l (three commuting dilogarithm factors) ->
Psi_gamma^-1 g_l (last factor), then the Whittaker map to S_{q,t}^{x3}.
"""
from __future__ import annotations

from itertools import product

from ..algebra import VT, VTX3, Laurent, RatFunc, rsum
from ..lattice import LatticeFn
from ..qspecial import qmono, qpoch, whittaker
from .triples import VAR_OF, admissible, primed


def _q2():
    return qmono(VT, 2)


def _t2():
    return Laurent.var(VT, "t", 2)


def _half(x):
    if x % 2:
        raise ValueError("odd value where an even one is required")
    return x // 2


def _h_value(l, j) -> RatFunc:
    """prod_k (q^-2l_k; q^2)_{(j_k+l_k)/2} (t^2; q^2)_{(j_k+l_k)/2} (q^2 t^-1)^{(|j|+|l|)/2}."""
    e = _half(sum(j) + sum(l))
    out = RatFunc(qmono(VT, 2 * e, t=-e))
    for lk, jk in zip(l, j):
        m = _half(jk + lk)
        out = out * qpoch(qmono(VT, -2 * lk), 2, m) * qpoch(_t2(), 2, m)
    return out


def _support(l):
    ranges = [range(lk % 2, lk + 1, 2) for lk in l]
    return [j for j in product(*ranges)]


def g_raw(l) -> LatticeFn:
    """Eigenfunction of the Xi_{A_k} (the g_l display without its constant prefactor)."""
    if not admissible(l):
        raise ValueError(f"{l} is not admissible")
    return LatticeFn({j: _h_value(l, j) for j in _support(l)}, VT)


def g_eigen(l) -> LatticeFn:
    """g'_l: g_l after the first dilogarithm factor, without the infinite prefactor.

    g'_l(j) = h(j) / (q^2 t^2; q^2)_{|j|/2}.
    """
    if not admissible(l):
        raise ValueError(f"{l} is not admissible")
    out = {}
    for j in _support(l):
        out[j] = _h_value(l, j) / qpoch(qmono(VT, 2, t=2), 2, _half(sum(j)))
    return LatticeFn(out, VT)


def xi_residual(g: LatticeFn, l, k: int) -> LatticeFn:
    """Residual of the Xi_{A_k} eigen-equation on the region j >= 0."""
    c = VT
    ev = RatFunc(qmono(c, l[k - 1], t=1) + qmono(c, -l[k - 1], t=-1))
    pts = set()
    for j in g.values:
        for s in (0, -2):
            p = tuple(x + (s if i == k - 1 else 0) for i, x in enumerate(j))
            if min(p) >= 0:
                pts.add(p)
    out = {}
    for j in pts:
        jk = j[k - 1]
        up = tuple(x + (2 if i == k - 1 else 0) for i, x in enumerate(j))
        lhs = RatFunc(qmono(c, jk, t=1) + qmono(c, -jk, t=-1)) * g[j] - RatFunc(qmono(c, -(jk + 2))) * g[up]
        out[j] = lhs - ev * g[j]
    return LatticeFn(out, c)


def _jprime(j):
    """j'_a = (j_b + j_c - j_a) / 2 (j with even sum)."""
    return primed(j)


def apply_three(g: LatticeFn, l) -> LatticeFn:
    """g'' from g' by the three commuting factors Psi_q^-1(X_{-e_{2a-1}-e_7}).

    g''(j) = sum_n t^{|n|} q^{|n|^2 - sum n_a^2 + 2 n.j'} prod (q^2;q^2)_{n_a}^-1 g'(j + 2n).
    """
    c = VT
    out = {}
    pts = _targets(l)
    for j in pts:
        jp = _jprime(j)
        ranges = [range(0, max(0, (lk - jk) // 2) + 1) for lk, jk in zip(l, j)]
        terms = []
        for n in product(*ranges):
            src = tuple(a + 2 * b for a, b in zip(j, n))
            val = g.values.get(src)
            if val is None:
                continue
            sn = sum(n)
            qe = sn * sn - sum(x * x for x in n) + 2 * sum(a * b for a, b in zip(n, jp))
            coef = RatFunc(qmono(c, qe, t=sn))
            for na in n:
                coef = coef / qpoch(_q2(), 2, na)
            terms.append(coef * val)
        if terms:
            out[j] = rsum(terms, c)
    return LatticeFn(out, c)


def _targets(l):
    """Points 0 <= j <= l with j = l mod 2: the only ones reaching the Whittaker map."""
    return list(product(*[range(lk % 2, lk + 1, 2) for lk in l]))


def apply_last(g2: LatticeFn, l) -> LatticeFn:
    """Final factor: sum_s (-1)^s (q^-2 t)^s / (q^-2s; q^2)_s g''(j + 2s(1,1,1))."""
    c = VT
    out = {}
    for j in _targets(l):
        terms = []
        s = 0
        while True:
            src = tuple(x + 2 * s for x in j)
            if any(a > b for a, b in zip(src, l)):
                break
            val = g2.values.get(src)
            if val is not None:
                coef = RatFunc(qmono(c, -2 * s, t=s)) / qpoch(qmono(c, -2 * s), 2, s)
                terms.append(coef * val)
            s += 1
        if terms:
            out[j] = rsum(terms, c)
    return LatticeFn(out, c)


def apply_psi_gamma_inverse(g: LatticeFn, l) -> LatticeFn:
    return apply_last(apply_three(g, l), l)


def whittaker_tilde(jp) -> RatFunc:
    """prod_k W_{j'_k}(x_{ij}) / (q^2; q^2)_{j'_k}."""
    out = RatFunc.const(VTX3, 1)
    for k, m in zip((1, 2, 3), jp):
        w = whittaker(m, VAR_OF[k], VTX3)
        out = out * (RatFunc(w) / qpoch(qmono(VTX3, 2), 2, m))
    return out


def phi_mutation(l) -> RatFunc:
    """phi_l = sum_j (Psi_gamma^-1 g_l)(j) W~_{j'}(x)."""
    l = tuple(l)
    if not admissible(l):
        return RatFunc(Laurent(VTX3))
    f = apply_psi_gamma_inverse(g_eigen(l), l)
    terms = []
    for j, val in f.values.items():
        jp = _jprime(j)
        if min(jp) < 0:
            continue
        terms.append(val.in_context(VTX3) * whittaker_tilde(jp))
    return rsum(terms, VTX3)
