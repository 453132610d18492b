"""q-series primitives: Pochhammer symbols, q-binomials, brackets, Whittaker polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import VT, VTX, Laurent, RatFunc, VarContext
from .algebra.laurent import NotLaurentError


@dataclass(frozen=True)
class QPower:
    """A power of q stored as an integer number of v = q^(1/4) steps."""

    vexp: int

    @classmethod
    def q(cls, k=1):
        k = Fraction(k)
        if (4 * k).denominator != 1:
            raise ValueError(f"q^{k} is not on the q^(1/4) grid")
        return cls(int(4 * k))

    def __add__(self, other):
        return QPower(self.vexp + other.vexp)

    def __mul__(self, n: int):
        return QPower(self.vexp * n)

    __rmul__ = __mul__

    def laurent(self, ctx=VT) -> Laurent:
        return Laurent.var(ctx, "v", self.vexp)


def qmono(ctx, qexp=0, **exps) -> Laurent:
    """Monomial ``q^qexp * prod name^e`` (``qexp`` may be a multiple of 1/4)."""
    k = Fraction(qexp) * 4
    if k.denominator != 1:
        raise ValueError("q-exponent off the q^(1/4) grid")
    e = dict(exps)
    e["v"] = e.get("v", 0) + int(k)
    return Laurent.monomial(ctx, e)


def one_minus(X) -> RatFunc:
    """``1 - X`` stored factored."""
    if isinstance(X, RatFunc):
        if X.is_laurent() and not X.nf:
            X = X.rest
        else:
            return RatFunc.const(X.ctx, 1) - X
    return RatFunc.factored(Laurent.const(X.ctx, 1) - X)


def _as_step(step, ctx) -> Laurent:
    if isinstance(step, QPower):
        return step.laurent(ctx)
    if isinstance(step, RatFunc):
        return step.to_laurent()
    return step


def pochhammer(X, step, n: int) -> RatFunc:
    """``(X; step)_n = prod_{k<n} (1 - step^k X)``.

    ``X`` is a Laurent polynomial or RatFunc, ``step`` a QPower or a monomial.
    """
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    ctx = X.ctx
    s = _as_step(step, ctx)
    out = RatFunc.const(ctx, 1)
    cur = X if isinstance(X, RatFunc) else X
    sk = Laurent.const(ctx, 1)
    for _ in range(n):
        if isinstance(X, RatFunc):
            out = out * (RatFunc.const(ctx, 1) - X * sk)
        else:
            out = out * one_minus(sk * cur)
        sk = sk * s
    return out


def qpoch(X, qstep, n: int) -> RatFunc:
    """Pochhammer with step ``q^qstep``."""
    return pochhammer(X, QPower.q(qstep), n)


def qbinom(n: int, k: int, base=QPower(8), ctx=VT) -> RatFunc:
    """Gaussian binomial in ``base`` (default q^2); a Laurent polynomial."""
    if not 0 <= k <= n:
        raise ValueError(f"qbinom needs 0 <= k <= n, got n={n}, k={k}")
    b = _as_step(base, ctx)
    r = pochhammer(b, b, n) / (pochhammer(b, b, k) * pochhammer(b, b, n - k))
    if not r.is_laurent():
        raise NotLaurentError("q-binomial did not reduce to a Laurent polynomial")
    return r


def _int(m):
    if isinstance(m, int):
        return m
    m = Fraction(m)
    if m.denominator != 1:
        raise ValueError(f"bracket argument {m} is not an integer")
    return int(m)


def bracket(n, m, ctx=VT) -> RatFunc:
    """``[n, m]_{q,t} = (q^n t^m - q^-n t^-m) / (q - q^-1)``."""
    n, m = _int(n), _int(m)
    if n == 0 and m == 0:
        return RatFunc(Laurent(ctx))
    num = qmono(ctx, n, t=m) - qmono(ctx, -n, t=-m)
    den = qmono(ctx, 1) - qmono(ctx, -1)
    return RatFunc.factored(num) / RatFunc.factored(den)


@lru_cache(maxsize=None)
def _whittaker_coeffs(l: int):
    return tuple(qbinom(l, k).to_laurent() for k in range(l + 1))


@lru_cache(maxsize=None)
def whittaker(l: int, var: str = "x", ctx: VarContext = VTX) -> Laurent:
    """``W_l(x; q^2) = sum_k binom(l, k)_{q^2} x^(l-2k)``; zero for l < 0."""
    if l < 0:
        return Laurent(ctx)
    out = Laurent(ctx)
    for k, c in enumerate(_whittaker_coeffs(l)):
        out = out + c.in_context(ctx) * Laurent.var(ctx, var, l - 2 * k)
    return out


def chu_vandermonde_sides(n: int):
    """Both sides of the terminating q-Chu-Vandermonde sum with symbolic a, c (base q)."""
    ctx = VarContext(("v", "t", "a", "c"))
    a = Laurent.var(ctx, "a")
    c = Laurent.var(ctx, "c")
    q = qmono(ctx, 1)
    terms = []
    for m in range(n + 1):
        num = pochhammer(a, q, m) * pochhammer(qmono(ctx, -n), q, m)
        den = pochhammer(c, q, m) * pochhammer(q, q, m)
        z = RatFunc(qmono(ctx, n * m, c=m, a=-m))
        terms.append(num / den * z)
    from .algebra import rsum

    lhs = rsum(terms, ctx)
    rhs = pochhammer(c * a**-1, q, n) / pochhammer(c, q, n)
    return lhs, rhs
