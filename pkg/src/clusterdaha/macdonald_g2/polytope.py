"""Closed formula for phi_l as a sum over lattice points of a polytope."""
from __future__ import annotations

from itertools import product

from ..algebra import VT, VTX3, Laurent, RatFunc, rsum
from ..qspecial import qmono, qpoch
from .triples import admissible, primed


def _q2():
    return qmono(VT, 2)


def K0(l) -> RatFunc:
    """Leading coefficient of phi_l (the coefficient of x23^l23 x13^l13 x12^l12)."""
    if not admissible(l):
        raise ValueError(f"{l} is not admissible")
    s = sum(l)
    lp = primed(l)
    out = RatFunc(qmono(VT, 2 * s, t=-s)) / qpoch(qmono(VT, 2, t=2), 2, s // 2)
    for la, lpa in zip(l, lp):
        out = out * qpoch(qmono(VT, 0, t=2), 2, la) * qpoch(qmono(VT, -2 * la), 2, la)
        out = out / qpoch(_q2(), 2, lpa)
    return out


def _pair2(k):
    """2 k'_a = k_b + k_c - k_a, a = 1, 2, 3."""
    s = sum(k)
    return tuple(s - 2 * x for x in k)


def enumerate_polytope(k, l):
    """Lattice points (r23, r13, r12, s, n1, n2, n3) >= 0 with
    2 k_ab - l_ab <= r_ab and r_ab + r_ac <= n_a <= k_a - s.
    """
    lp = primed(l)
    kp2 = _pair2(k)
    # r'_a = r_bc: its lower bound is 2 k'_a - l'_a
    lo = [max(0, kp2[a] - lp[a]) for a in range(3)]
    smax = min(k)
    out = []
    if smax < 0:
        return out
    for rp in product(*[range(lo[a], max(k) + 1) for a in range(3)]):
        r = (rp[1] + rp[2], rp[0] + rp[2], rp[0] + rp[1])
        for s in range(smax + 1):
            ranges = [range(r[a], k[a] - s + 1) for a in range(3)]
            for n in product(*ranges):
                out.append((rp[0], rp[1], rp[2], s) + tuple(n))
    return out


def enumerate_polytope_bruteforce(k, l, box=None):
    """Same set by filtering a box (an independent check of the bounds)."""
    lp = primed(l)
    kp2 = _pair2(k)
    box = box if box is not None else max(k) + 1
    out = []
    for pt in product(range(box + 1), repeat=7):
        rp, s, n = pt[:3], pt[3], pt[4:]
        r = (rp[1] + rp[2], rp[0] + rp[2], rp[0] + rp[1])
        if any(kp2[a] - lp[a] > rp[a] for a in range(3)):
            continue
        if all(r[a] <= n[a] <= k[a] - s for a in range(3)):
            out.append(pt)
    return out


def closed_coeff(k, l, point) -> RatFunc:
    """Summand C_{l,k} at a lattice point of the polytope."""
    rp, s, n = point[:3], point[3], point[4:]
    r = (rp[1] + rp[2], rp[0] + rp[2], rp[0] + rp[1])
    lp = primed(l)
    kp2 = _pair2(k)
    sl, sr, sk, sn = sum(l), sum(r), sum(k), sum(n)
    e = sl + sr - sk + 2 * s
    qe = (
        sn * sn - sr * sr + 3 * sum(x * x for x in r) - sum(x * x for x in n)
        - 2 * sum(a * b for a, b in zip(r, n)) + (s + 1) * (s + 2 * (sn - sr))
    )
    for a in range(3):
        qe += 2 * (n[a] - r[a]) * (lp[a] - kp2[a])
    out = RatFunc(qmono(VT, 2 * e + qe, t=-e)) * ((-1) ** s)
    m = sn + sl // 2 - sk + 3 * s
    if m < 0:
        return RatFunc(Laurent(VT))
    out = out / (qpoch(_q2(), 2, s) * qpoch(qmono(VT, 2, t=2), 2, m))
    for a in range(3):
        m1 = n[a] + l[a] - k[a] + s
        m2 = lp[a] + rp[a] - kp2[a]
        if m1 < 0 or m2 < 0 or n[a] < r[a]:
            return RatFunc(Laurent(VT))
        out = out * qpoch(qmono(VT, 0, t=2), 2, m1) * qpoch(qmono(VT, -2 * l[a]), 2, m1)
        out = out / (qpoch(_q2(), 2, n[a] - r[a]) * qpoch(_q2(), 2, rp[a]) * qpoch(_q2(), 2, m2))
    return out


def _k_range(l):
    sl = sum(l)
    for k in product(range(sl + 1), repeat=3):
        if sum(k) <= sl:
            yield k


def phi_closed(l) -> RatFunc:
    """phi_l = sum_k sum_{polytope} C_{l,k} prod x_ab^{l_ab - 2 k_ab}."""
    l = tuple(l)
    if not admissible(l):
        return RatFunc(Laurent(VTX3))
    lp = primed(l)
    terms = []
    for k in _k_range(l):
        pts = enumerate_polytope(k, l)
        if not pts:
            continue
        c = rsum([closed_coeff(k, l, p) for p in pts], VT)
        if not c:
            continue
        kp2 = _pair2(k)
        mono = Laurent.monomial(VTX3, {"x23": lp[0] - kp2[0], "x13": lp[1] - kp2[1], "x12": lp[2] - kp2[2]})
        terms.append(c.in_context(VTX3) * RatFunc(mono))
    return rsum(terms, VTX3)
