"""Pieri rule for the mutation-route eigenfunctions phi_l."""
from __future__ import annotations

from dataclasses import dataclass

from ..algebra import VT, VTX3, Laurent, RatFunc, rsum
from ..qspecial import qmono
from .triples import AXES, add, admissible, delta, pair_part, primed


def _om(qe, te=0) -> RatFunc:
    """1 - q^qe t^te; exact zero when qe = te = 0."""
    if qe == 0 and te == 0:
        return RatFunc(Laurent(VT))
    return RatFunc.factored(Laurent.const(VT, 1) - qmono(VT, qe, t=te))


def _ratio(num, den):
    out = RatFunc.const(VT, 1)
    for f in num:
        out = out * f
    for f in den:
        if f.is_zero():
            return None
        out = out / f
    return out


# The mixed terms use (1 - q^{2(l'_j + 1)}); the printed (1 - q^{2(l'_j - 1)})
# contradicts the Pieri rule for Phi transported by normalization_ratio.


@dataclass
class PhiPieri:
    prefactor: RatFunc
    A: dict        # (a, b) -> A~_{a,b}, None where the printed formula is singular
    combined: dict  # (a, b) -> prefactor * A~_{a,b}, with the cancellation done symbolically


def phi_pieri_coeffs(l, axis=(1, 2)) -> PhiPieri:
    i, j = axis
    k = AXES[tuple(sorted(axis))]
    li, lj = l[i - 1], l[j - 1]
    lp = primed(l)
    lpi, lpj = lp[i - 1], lp[j - 1]
    lij = lp[k - 1]
    sl = sum(l)
    tq = lambda qe, te: RatFunc(qmono(VT, qe, t=te))

    pre_num = [_om(2 * li), _om(2 * lj)]
    pre_den = [_om(2 * li, 2), _om(2 * lj, 2)]
    parts = {
        (1, 1): (
            [tq(2 * (li + lj), 2), _om(sl + 2, 2), _om(2 * (lij + 1))],
            [_om(2 * li), _om(2 * lj), _om(2 * (li + 1)), _om(2 * (lj + 1))],
        ),
        (1, -1): (
            [tq(2 * (li - lpi + 1), 1), _om(2 * (lpi - 1), 2), _om(2 * (lpj + 1))],
            [_om(2 * li), _om(2 * (li + 1))],
        ),
        (-1, 1): (
            [tq(2 * (lj - lpj + 1), 1), _om(2 * (lpj - 1), 2), _om(2 * (lpi + 1))],
            [_om(2 * lj), _om(2 * (lj + 1))],
        ),
        (-1, -1): ([tq(2 * (2 - li - lj), -2), _om(sl - 2, 4), _om(2 * (lij - 1), 2)], []),
    }
    A, combined = {}, {}
    for ab, (num, den) in parts.items():
        A[ab] = _ratio(num, den)
        # cancel prefactor numerator factors against identical denominator factors
        pn = list(pre_num)
        dd = []
        for f in den:
            hit = next((p for p in pn if p == f), None)
            if hit is not None:
                pn.remove(hit)
            else:
                dd.append(f)
        combined[ab] = _ratio(num + pn, dd + pre_den)
    return PhiPieri(_ratio(pre_num, pre_den), A, combined)


def phi_pieri_residual(l, axis, phi) -> RatFunc:
    """(x_ij + x_ij^-1) phi_l - sum prefactor A~_{ab} phi_{l + a d_i + b d_j}."""
    i, j = axis
    x = Laurent.var(VTX3, f"x{i}{j}")
    data = phi_pieri_coeffs(l, axis)
    parts = [RatFunc(x + x**-1) * phi(l)]
    for (a, b), c in data.combined.items():
        tgt = add(add(l, delta(i), a), delta(j), b)
        if admissible(tgt):
            if c is None:
                raise ZeroDivisionError(f"phi Pieri coefficient singular at {l}, {(a, b)}")
            parts.append(-(c.in_context(VTX3) * phi(tgt)))
    return rsum(parts, VTX3)
