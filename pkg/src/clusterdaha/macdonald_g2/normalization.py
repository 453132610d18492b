"""Normalizations relating phi_l (mutation route) to Phi_l (Pieri route).

N_X7 * phi_l and Phi_l / N_AS are the bases whose (+,+) Pieri coefficient
is the constant q^-2 t^2, respectively t.  The ``*_printed`` variants keep
the literal displays, which do not have this property (see the ledger).
"""
from __future__ import annotations

from ..algebra import VT, RatFunc
from ..qspecial import qmono, qpoch
from .triples import primed


def _t(e):
    return qmono(VT, 0, t=e)


def norm_X7(l) -> RatFunc:
    """q^{sum l_a^2} (t^2 q^2; q^2)_{|l|/2} prod_a (q^2; q^2)_{l'_a} / ((t^2; q^2)_{l_a} (q^2; q^2)_{l_a})."""
    lp = primed(l)
    out = RatFunc(qmono(VT, sum(x * x for x in l))) * qpoch(qmono(VT, 2, t=2), 2, sum(l) // 2)
    for la, lpa in zip(l, lp):
        out = out * qpoch(qmono(VT, 2), 2, lpa) / (qpoch(_t(2), 2, la) * qpoch(qmono(VT, 2), 2, la))
    return out


def norm_X7_printed(l) -> RatFunc:
    lp = primed(l)
    out = RatFunc(qmono(VT, sum(x * x for x in l))) * qpoch(qmono(VT, 2, t=2), 2, sum(l) // 2)
    for la, lpa in zip(l, lp):
        out = out * qpoch(qmono(VT, 2), 2, lpa) / qpoch(qmono(VT, 2, t=2), 2, la)
    return out


def norm_AS_printed(l) -> RatFunc:
    """(t^4; q^2)_{|l|/2}^-1 prod_a (t^4; q^2)_{l_a} / (t^2; q^2)_{l'_a}."""
    lp = primed(l)
    out = qpoch(_t(4), 2, sum(l) // 2).inv()
    for la, lpa in zip(l, lp):
        out = out * qpoch(_t(4), 2, la) / qpoch(_t(2), 2, lpa)
    return out


def norm_AS(l) -> RatFunc:
    """Reciprocal of the printed factor: Phi_l / N_AS(l) has (+,+) coefficient t."""
    return norm_AS_printed(l).inv()


def normalization_ratio(l, printed=False) -> RatFunc:
    """Phi_l / phi_l = (t q^-2)^{|l|/2} N_X7(l) / N_AS(l)."""
    h = sum(l) // 2
    nx, na = (norm_X7_printed, norm_AS_printed) if printed else (norm_X7, norm_AS)
    return RatFunc(qmono(VT, -2 * h, t=h)) * nx(l) / na(l)
