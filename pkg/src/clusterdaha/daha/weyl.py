"""The Weyl quantum torus D_q (UV = qVU) and its tensor powers, in V-before-U normal order."""
from __future__ import annotations

from fractions import Fraction

from ..algebra import VT, Laurent
from ..algebra.laurent import laurent_str

ONE_FACTOR = ("",)
THREE_FACTORS = ("12", "13", "23")


def _coef(c) -> Laurent:
    if isinstance(c, Laurent):
        return c if c.ctx is VT else c.in_context(VT)
    return Laurent.const(VT, c)


def _v(e):
    return Laurent.var(VT, "v", e)


class WeylElement:
    """Sum of c * prod_f V_f^{m_f} U_f^{n_f}.

    ``terms`` maps ``(m, n)`` (two tuples aligned with ``factors``) to Laurent(v, t)
    coefficients.  Distinct factors commute; within a factor U V = q V U, hence
    V^m U^n V^m' U^n' = q^{n m'} V^{m+m'} U^{n+n'}.
    """

    __slots__ = ("factors", "terms")

    def __init__(self, factors=ONE_FACTOR, terms=None):
        self.factors = tuple(factors)
        out = {}
        for (m, n), c in (terms or {}).items():
            key = (tuple(m), tuple(n))
            c = _coef(c)
            if key in out:
                c = out[key] + c
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        self.terms = out

    # -- constructors
    @classmethod
    def const(cls, c=1, factors=ONE_FACTOR):
        z = (0,) * len(factors)
        return cls(factors, {(z, z): c})

    @classmethod
    def mono(cls, V=None, U=None, coeff=1, factors=ONE_FACTOR):
        """``coeff * V^m U^n``; ``V``/``U`` are ints (one factor) or dicts {factor: exponent}."""
        return cls(factors, {(cls._vec(V, factors), cls._vec(U, factors)): coeff})

    @staticmethod
    def _vec(x, factors):
        if x is None:
            return (0,) * len(factors)
        if isinstance(x, int):
            if len(factors) != 1:
                raise ValueError("give exponents per factor")
            return (x,)
        return tuple(x.get(f, 0) for f in factors)

    @classmethod
    def U(cls, e=1, factor=None, factors=ONE_FACTOR):
        return cls.mono(U=cls._one(e, factor, factors), factors=factors)

    @classmethod
    def V(cls, e=1, factor=None, factors=ONE_FACTOR):
        return cls.mono(V=cls._one(e, factor, factors), factors=factors)

    @staticmethod
    def _one(e, factor, factors):
        if factor is None:
            return e
        return {factor: e}

    # -- arithmetic
    def _lift(self, other):
        if isinstance(other, WeylElement):
            if other.factors != self.factors:
                raise ValueError("Weyl elements over different factors")
            return other
        return WeylElement.const(other, self.factors)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return WeylElement(self.factors, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.factors, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = _coef(c)
        return WeylElement(self.factors, {k: c * x for k, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return self.scale(other)
        other = self._lift(other)
        out = {}
        for (m, n), a in self.terms.items():
            for (m2, n2), b in other.terms.items():
                ph = sum(x * y for x, y in zip(n, m2))
                key = (tuple(x + y for x, y in zip(m, m2)), tuple(x + y for x, y in zip(n, n2)))
                c = a * b * _v(4 * ph)
                out[key] = out[key] + c if key in out else c
        return WeylElement(self.factors, {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse_monomial() ** (-e)
        out = WeylElement.const(1, self.factors)
        for _ in range(e):
            out = out * self
        return out

    def inverse_monomial(self):
        """Inverse of a single monomial with unit-monomial coefficient."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible here")
        ((m, n), c), = self.terms.items()
        if len(c.terms) != 1:
            raise ValueError("coefficient is not invertible")
        (key, s), = c.terms.items()
        ev, et = VT.exps(key)
        inv_c = Laurent.monomial(VT, {"v": -ev, "t": -et}, Fraction(1) / s)
        # (c V^m U^n)^-1 = c^-1 U^-n V^-m = c^-1 q^{n.m} V^-m U^-n
        ph = sum(x * y for x, y in zip(n, m))
        return WeylElement(self.factors, {(tuple(-x for x in m), tuple(-x for x in n)): inv_c * _v(4 * ph)})

    def divide_scalar(self, d: Laurent):
        """Exact division of every coefficient by ``d``."""
        return WeylElement(self.factors, {k: c.try_divide(d) for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            other = self._lift(other)
        return self.factors == other.factors and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coeff(self, m, n):
        return self.terms.get((tuple(m), tuple(n)), Laurent(VT))

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"WeylElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, n), c in self.items():
            mono = []
            for f, a, b in zip(self.factors, m, n):
                if a:
                    mono.append(f"V{f}^{a}")
                if b:
                    mono.append(f"U{f}^{b}")
            parts.append(f"({laurent_str(c)})" + ("*" + "*".join(mono) if mono else ""))
        return " + ".join(parts)


def embed_factor(a: WeylElement, factor: str, factors=THREE_FACTORS) -> WeylElement:
    """View a one-factor element as acting in ``factor`` of a tensor power."""
    if len(a.factors) != 1:
        raise ValueError("expected a one-factor element")
    i = factors.index(factor)
    out = {}
    for (m, n), c in a.terms.items():
        mm = [0] * len(factors)
        nn = [0] * len(factors)
        mm[i], nn[i] = m[0], n[0]
        out[(tuple(mm), tuple(nn))] = c
    return WeylElement(factors, out)
