"""Quantum torus algebras on the half lattice (1/2) Lambda.

Vectors are integer tuples h in half-units, standing for lambda = h/2.
With v = q^(1/4) the structure constant is q^{(lambda, mu)} = v^{h^T eps h'}.
"""
from __future__ import annotations

from ..algebra import VT, Laurent, Scalar, scalar_str
from ..algebra.laurent import laurent_str
from .quiver import Quiver


def _coef(c) -> Laurent:
    if isinstance(c, Laurent):
        return c.in_context(VT) if c.ctx != VT else c
    return Laurent.const(VT, c)


class TorusElement:
    """Finite sum of c_h Y_{h/2} with Laurent(v, t) coefficients."""

    __slots__ = ("quiver", "terms")

    def __init__(self, quiver: Quiver, terms=None):
        self.quiver = quiver
        out = {}
        for h, c in (terms or {}).items():
            h = tuple(h)
            if len(h) != quiver.n:
                raise ValueError("lattice vector has the wrong length")
            c = _coef(c)
            if c:
                out[h] = out[h] + c if h in out else c
                if not out[h]:
                    del out[h]
        self.terms = out

    @classmethod
    def Y(cls, quiver, half=None, coeff=1, **kw):
        """Y_{h/2}; ``half`` is a full vector or a dict {vertex: halves}."""
        h = [0] * quiver.n
        if isinstance(half, dict):
            for i, a in half.items():
                h[i - 1] += a
        elif half is not None:
            h = list(half)
        return cls(quiver, {tuple(h): coeff})

    @classmethod
    def one(cls, quiver):
        return cls(quiver, {(0,) * quiver.n: 1})

    def _check(self, other):
        if self.quiver != other.quiver:
            raise ValueError("elements live on different quivers")

    def _lift(self, other):
        if isinstance(other, TorusElement):
            return other
        return TorusElement(self.quiver, {(0,) * self.quiver.n: other})

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        out = dict(self.terms)
        for h, c in other.terms.items():
            out[h] = out[h] + c if h in out else c
        return TorusElement(self.quiver, {h: c for h, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return TorusElement(self.quiver, {h: -c for h, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = _coef(c)
        return TorusElement(self.quiver, {h: c * x for h, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TorusElement):
            return self.scale(other)
        self._check(other)
        Q = self.quiver
        out = {}
        for h, a in self.terms.items():
            for k, b in other.terms.items():
                s = tuple(x + y for x, y in zip(h, k))
                c = a * b * Laurent.var(VT, "v", -Q.form(h, k))
                out[s] = out[s] + c if s in out else c
        return TorusElement(Q, {h: c for h, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = TorusElement.one(self.quiver)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            other = self._lift(other)
        return self.quiver == other.quiver and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coeff(self, h):
        return self.terms.get(tuple(h), Laurent(VT))

    def relabel(self, quiver):
        """Same coefficients viewed on another quiver with the same vertex count."""
        return TorusElement(quiver, self.terms)

    def items(self):
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self):
        return f"TorusElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for h, c in self.items():
            vec = ",".join(str(x) for x in h)
            parts.append(f"({laurent_str(c)})*Y[{vec}]/2")
        return " + ".join(parts)


def commutator_q(a: TorusElement, b: TorusElement, half_power: int) -> TorusElement:
    """q^{k/2} a b - q^{-k/2} b a (k = half_power)."""
    return (a * b).scale(Laurent.var(VT, "v", 2 * half_power)) - (b * a).scale(Laurent.var(VT, "v", -2 * half_power))
