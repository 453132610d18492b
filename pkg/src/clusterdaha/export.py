"""Canonical JSON for polynomials, torus elements and Weyl elements.

Schema: {"vars": [...], "terms": [{"exp": [ints], "coeff": "string"}, ...]}.
Terms are sorted by exponent vector, lexicographically decreasing; coefficients
are strings in v = q^(1/4) and t.
"""
from __future__ import annotations

import json

from .algebra import Laurent, RatFunc
from .algebra.laurent import laurent_str


def _coeff_str(c) -> str:
    if isinstance(c, Laurent):
        return laurent_str(c)
    return str(c)


def _doc(vars_, terms):
    rows = sorted(terms, key=lambda e: e[0], reverse=True)
    return {"vars": list(vars_), "terms": [{"exp": list(e), "coeff": _coeff_str(c)} for e, c in rows]}


def poly_to_json(P, names) -> dict:
    """A polynomial in the x-variables ``names`` with (v, t) coefficients."""
    P = RatFunc.lift(P)
    return _doc(names, P.x_coefficients(list(names)).items())


def torus_to_json(a) -> dict:
    """Lattice vectors in half-units: exp h stands for Y_{h/2}."""
    return _doc([f"e{i}/2" for i in range(1, a.quiver.n + 1)], a.terms.items())


def weyl_to_json(w) -> dict:
    """Exponents (m..., n...) of the normal-ordered monomial prod V^m prod U^n."""
    vars_ = [f"V{f}" for f in w.factors] + [f"U{f}" for f in w.factors]
    return _doc(vars_, ((m + n, c) for (m, n), c in w.terms.items()))


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))
