"""Rational functions with factored denominators.

Every denominator that occurs in this library is a product of binomials
``1 - c*X`` with ``X`` a monomial, so a rational function is stored as

    rest * prod(num factors) / prod(den factors)

where ``rest`` is an expanded Laurent polynomial and the factors are
cyclotomic polynomials ``Phi_d(X)`` of primitive, positively oriented
monomials ``X`` (irreducible, so the factored form is canonical), or, as a
fallback, "generic" normalized polynomials.  No multivariate gcd is ever
needed: cancellation is trial division by known factors.
"""
from __future__ import annotations

from math import gcd
from numbers import Rational

from .context import VarContext, delta_exps, unify
from .cyclotomic import binomial_split, cyclotomic, power_split, totient, value_at_one
from .laurent import Laurent, NotLaurentError, monomial_images
from .scalar import Scalar, div, simplify


class PoleError(ZeroDivisionError):
    """A denominator vanished under a substitution."""


# -- factors ---------------------------------------------------------------
# ('c', d, delta): Phi_d(X), X the monomial with signed packed offset delta > 0
# ('g', items):    generic polynomial, items = sorted ((delta, coeff), ...)
#                  normalized so the largest delta is 0 with coefficient 1


def _poly_cache():
    cache = {}

    def get(ctx: VarContext, f):
        key = (ctx, f)
        p = cache.get(key)
        if p is None:
            z = ctx.zero
            if f[0] == "c":
                _, d, delta = f
                p = Laurent(ctx, {z + j * delta: c for j, c in enumerate(cyclotomic(d)) if c}, _clean=True)
            else:
                p = Laurent(ctx, {z + dk: c for dk, c in f[1]}, _clean=True)
            cache[key] = p
        return p

    return get


factor_poly = _poly_cache()


def _delta_gcd(ctx, delta):
    g = 0
    for e in delta_exps(delta, ctx.n):
        g = gcd(g, e)
    return g


def _counter_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for f, m in b.items():
        out[f] = out.get(f, 0) + m
    return out


def _cancel(nf: dict, df: dict):
    common = [f for f in nf if f in df]
    if not common:
        return nf, df
    nf = dict(nf)
    df = dict(df)
    for f in common:
        m = min(nf[f], df[f])
        nf[f] -= m
        df[f] -= m
        if not nf[f]:
            del nf[f]
        if not df[f]:
            del df[f]
    return nf, df


def factor_laurent(p: Laurent):
    """Split ``p`` as ``unit * prod factors`` (unit a scalar times a monomial).

    Binomials ``c*M*(1 +- X^g)`` are split into cyclotomic factors; longer
    polynomials are trial-divided by cyclotomic candidates read off the
    support, and whatever is left becomes one generic factor.
    """
    ctx = p.ctx
    if not p.terms:
        raise ZeroDivisionError("cannot factor zero")
    factors: dict = {}
    kl, cl = p.lead()
    z = ctx.zero
    unit = Laurent(ctx, {kl: cl}, _clean=True)
    rest = p.try_divide(unit)          # leading term 1 at key zero
    if len(rest) == 1:
        return unit, factors
    if len(rest) == 2:
        (k2,) = [k for k in rest.terms if k != z]
        c2 = rest.terms[k2]
        if c2 == 1 or c2 == -1:
            # rest = 1 + c2*Y with Y = X^-g, X positive primitive
            delta = z - k2
            g = _delta_gcd(ctx, delta)
            x = delta // g
            # 1 + c2*X^-g = X^-g * (X^g + c2)
            unit = unit * Laurent(ctx, {z - delta: 1}, _clean=True)
            for e in binomial_split(g, 1 if c2 == 1 else -1):
                f = ("c", e, x)
                factors[f] = factors.get(f, 0) + 1
            return unit, factors
    if len(rest) <= 400:
        cands = set()
        for k in rest.terms:
            if k == z:
                continue
            delta = z - k
            g = _delta_gcd(ctx, delta)
            cands.add((delta // g, g))
        for x, g in sorted(cands):
            for d in range(1, 2 * g + 1):
                f = ("c", d, x)
                fp = factor_poly(ctx, f)
                while len(rest) > 1:
                    try:
                        rest = rest.try_divide(fp)
                    except NotLaurentError:
                        break
                    factors[f] = factors.get(f, 0) + 1
        if len(rest) == 1:
            return unit * rest, factors
    kl, cl = rest.lead()
    norm = Laurent(ctx, {kl: cl}, _clean=True)
    rest = rest.try_divide(norm)
    unit = unit * norm
    f = ("g", tuple(sorted((k - z, c) for k, c in rest.terms.items())))
    factors[f] = factors.get(f, 0) + 1
    return unit, factors


def _try_div_factor(p: Laurent, f):
    """Exact quotient of ``p`` by factor ``f`` or None."""
    ctx = p.ctx
    if len(p.terms) <= 1:
        return None
    if f[0] == "g":
        try:
            return p.try_divide(factor_poly(ctx, f))
        except NotLaurentError:
            return None
    _, d, delta = f
    coef = cyclotomic(d)
    deg = len(coef) - 1
    # coset decomposition along X
    exps = delta_exps(delta, ctx.n)
    i = max(j for j, e in enumerate(exps) if e)
    ei = exps[i]
    cosets: dict = {}
    for k, c in p.terms.items():
        a = ctx.exp_of(k, i)
        j = a // ei
        rep = k - j * delta
        cosets.setdefault(rep, {})[j] = c
    out = {}
    for rep, col in cosets.items():
        lo = min(col)
        hi = max(col)
        n = hi - lo + 1
        if n <= deg:
            return None
        dense = [0] * n
        for j, c in col.items():
            dense[j - lo] = c
        q = [0] * (n - deg)
        for s in range(n - deg - 1, -1, -1):
            c = dense[s + deg]
            if c:
                q[s] = c
                for t, dc in enumerate(coef[:-1]):
                    if dc:
                        dense[s + t] -= c * dc
        if any(dense[:deg]):
            return None
        for s, c in enumerate(q):
            if c:
                out[rep + (lo + s) * delta] = simplify(c)
    return Laurent(ctx, out, _clean=True)


def _reduce(rest: Laurent, df: dict, only=None):
    """Cancel den factors (optionally only those in ``only``) dividing ``rest``."""
    if len(rest.terms) <= 1 or not df:
        return rest, df
    changed = None
    for f in list(df):
        if only is not None and f not in only:
            continue
        m = df[f]
        while m:
            q = _try_div_factor(rest, f)
            if q is None:
                break
            rest = q
            m -= 1
            if changed is None:
                changed = dict(df)
            if m:
                changed[f] = m
            else:
                del changed[f]
    return rest, (changed if changed is not None else df)


def _prod(ctx, factors: dict) -> Laurent:
    out = Laurent.const(ctx, 1)
    for f, m in sorted(factors.items(), key=lambda it: _fkey(it[0])):
        p = factor_poly(ctx, f)
        for _ in range(m):
            out = out * p
    return out


def _fkey(f):
    if f[0] == "c":
        return (0, f[1], f[2], ())
    return (1, 0, 0, f[1])


def _is_coeff(c) -> bool:
    return isinstance(c, (Rational, Scalar))


class RatFunc:
    """Immutable exact rational function ``rest * prod(nf) / prod(df)``."""

    __slots__ = ("ctx", "rest", "nf", "df")

    def __init__(self, rest, nf=None, df=None, _reduced=False):
        if not isinstance(rest, Laurent):
            raise TypeError("RatFunc numerator must be a Laurent polynomial")
        self.ctx = rest.ctx
        nf = nf or {}
        df = df or {}
        if not rest.terms:
            nf, df = {}, {}
        elif not _reduced:
            nf, df = _cancel(nf, df)
            rest, df = _reduce(rest, df)
        self.rest = rest
        self.nf = nf
        self.df = df

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, ctx, c=1):
        return cls(Laurent.const(ctx, c), _reduced=True)

    @classmethod
    def factored(cls, p: Laurent):
        """Wrap ``p`` storing its cyclotomic factors separately."""
        if not p.terms:
            return cls(p, _reduced=True)
        unit, fs = factor_laurent(p)
        return cls(unit, fs, {}, _reduced=True)

    @classmethod
    def lift(cls, x, ctx=None):
        if isinstance(x, RatFunc):
            return x if ctx is None else x.in_context(unify(x.ctx, ctx))
        if isinstance(x, Laurent):
            return cls(x, _reduced=True) if ctx is None else cls(x.in_context(unify(x.ctx, ctx)), _reduced=True)
        if _is_coeff(x):
            if ctx is None:
                raise ValueError("context needed to lift a scalar")
            return cls.const(ctx, x)
        raise TypeError(f"cannot lift {type(x).__name__} to RatFunc")

    def in_context(self, ctx):
        if ctx is self.ctx:
            return self
        return RatFunc(self.rest.in_context(ctx), self.nf, self.df, _reduced=True)

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return bool(self.rest.terms)

    def is_zero(self):
        return not self.rest.terms

    def is_laurent(self):
        return not self.df

    def numerator(self) -> Laurent:
        return self.rest * _prod(self.ctx, self.nf)

    def denominator(self) -> Laurent:
        return _prod(self.ctx, self.df)

    def to_laurent(self) -> Laurent:
        if self.df:
            raise NotLaurentError("rational function has a nontrivial denominator")
        return self.numerator()

    def den_depends_on(self, names) -> bool:
        ctx = self.ctx
        idx = [ctx.index[n] for n in names if n in ctx.index]
        for f in self.df:
            if f[0] == "c":
                e = delta_exps(f[2], ctx.n)
                if any(e[i] for i in idx):
                    return True
            else:
                for dk, _ in f[1]:
                    e = delta_exps(dk, ctx.n)
                    if any(e[i] for i in idx):
                        return True
        return False

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Laurent):
            return RatFunc(other, _reduced=True)
        if _is_coeff(other):
            return RatFunc.const(self.ctx, other)
        return None

    def __mul__(self, other):
        if _is_coeff(other):
            if not other:
                return RatFunc(Laurent(self.ctx))
            return RatFunc(self.rest.scale(other), self.nf, self.df, _reduced=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        if not a.rest.terms or not b.rest.terms:
            return RatFunc(Laurent(unify(a.ctx, b.ctx)))
        if not a.df and not b.df:
            return RatFunc(a.rest * b.rest, _counter_add(a.nf, b.nf) if b.nf else a.nf, None, _reduced=True)
        # cancel factor multisets
        nf, df = _cancel(_counter_add(a.nf, b.nf), _counter_add(a.df, b.df))
        ra, df = _reduce(a.rest, df, only=b.df)
        rb, df = _reduce(b.rest, df, only=a.df)
        return RatFunc(ra * rb, nf, df, _reduced=True)

    __rmul__ = __mul__

    def __neg__(self):
        return RatFunc(-self.rest, self.nf, self.df, _reduced=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return rsum([self, other])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return rsum([self, -other])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return rsum([other, -self])

    def inv(self):
        if not self.rest.terms:
            raise ZeroDivisionError("inverse of zero rational function")
        unit, fs = factor_laurent(self.rest)
        inv_unit = unit ** -1
        nf, df = _cancel(self.df, _counter_add(self.nf, fs))
        return RatFunc(inv_unit, nf, df, _reduced=True)

    def __truediv__(self, other):
        if _is_coeff(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            return RatFunc(self.rest.scale(div(1, other)), self.nf, self.df, _reduced=True)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        if n == 0:
            return RatFunc.const(self.ctx, 1)
        nf = {f: m * n for f, m in self.nf.items()}
        df = {f: m * n for f, m in self.df.items()}
        return RatFunc(self.rest ** n, nf, df, _reduced=True)

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, RatFunc) else other
        if other is None:
            return NotImplemented
        try:
            unify(self.ctx, other.ctx)
        except ValueError:
            return False
        if self.nf == other.nf and self.df == other.df:
            return self.rest == other.rest
        if not self.rest.terms or not other.rest.terms:
            return not self.rest.terms and not other.rest.terms
        lhs, rhs = _cancel(_counter_add(self.nf, other.df), _counter_add(other.nf, self.df))
        ctx = unify(self.ctx, other.ctx)
        return self.rest * _prod(ctx, lhs) == other.rest * _prod(ctx, rhs)

    __hash__ = None

    # -- substitutions ----------------------------------------------------
    def shift_x(self, var, a):
        if not a:
            return self
        ctx = self.ctx
        if var not in ctx.index or var == "v":
            raise KeyError(f"unknown x-variable {var!r}")
        return self.subs({var: {"v": 4 * a, var: 1}})

    def subs(self, mapping: dict, target: VarContext | None = None):
        """Monomial substitution; see :meth:`Laurent.subs`."""
        target = target or self.ctx
        images, coeffs = monomial_images(self.ctx, target, mapping)
        rest = self.rest.map_monomials(images, target, coeffs)
        if not rest.terms:
            return RatFunc(rest)
        unit_n, nf, zero = _map_factors(self.ctx, target, self.nf, images, coeffs)
        if zero:
            return RatFunc(Laurent(target))
        unit_d, df, pole = _map_factors(self.ctx, target, self.df, images, coeffs)
        if pole:
            raise PoleError("denominator vanishes under substitution")
        rest = rest * unit_n
        rest = rest.try_divide(unit_d)
        return RatFunc(rest, nf, df)

    def swap_vars(self, perm: dict):
        return self.subs({a: {b: 1} for a, b in perm.items()})

    def inverse_vars(self, names):
        return self.subs({nm: {nm: -1} for nm in names})

    def specialize_q1(self):
        """Set v = 1, landing in the context without v."""
        target = VarContext(tuple(n for n in self.ctx.names if n != "v"))
        return self.subs({"v": 1}, target)

    # -- coefficients -----------------------------------------------------
    def x_coefficients(self, names):
        """``{x exponent tuple: RatFunc}`` for a function whose denominator is free of ``names``."""
        if self.den_depends_on(names):
            raise NotLaurentError("denominator depends on the polynomial variables")
        idx = [self.ctx.index[n] for n in names]
        keep_nf = {}
        expand_nf = {}
        for f, m in self.nf.items():
            if f[0] == "c" and not any(delta_exps(f[2], self.ctx.n)[i] for i in idx):
                keep_nf[f] = m
            elif f[0] == "g" and not any(delta_exps(dk, self.ctx.n)[i] for dk, _ in f[1] for i in idx):
                keep_nf[f] = m
            else:
                expand_nf[f] = m
        num = self.rest * _prod(self.ctx, expand_nf) if expand_nf else self.rest
        out = {}
        for es, part in num.split(names).items():
            out[es] = RatFunc(part, keep_nf, self.df)
        return out

    # -- display ----------------------------------------------------------
    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return ratfunc_str(self)


def _map_factors(src, target, factors, images, coeffs):
    """Push factors through a monomial map.

    Returns ``(unit Laurent, new factor dict, vanished)``.
    """
    unit = Laurent.const(target, 1)
    out: dict = {}
    z = target.zero
    for f, m in factors.items():
        if f[0] == "c" and coeffs is None:
            _, d, delta = f
            img = 0
            for e, im in zip(delta_exps(delta, src.n), images):
                if e:
                    img += e * im
            if img == 0:
                val = value_at_one(d)
                if val == 0:
                    return unit, out, True
                unit = unit.scale(val ** m)
                continue
            g = _delta_gcd(target, img)
            sign = 1 if img > 0 else -1
            x = sign * img // g
            if sign < 0:
                # Phi_d(1/Z) = Z^-phi(d) Phi_d(Z) for d >= 2, Phi_1(1/Z) = -Z^-1 Phi_1(Z)
                zdelta = g * x
                if d == 1:
                    u = Laurent(target, {z - zdelta: -1}, _clean=True)
                else:
                    u = Laurent(target, {z - totient(d) * zdelta: 1}, _clean=True)
                unit = unit * u ** m
            for e in power_split(d, g):
                nf = ("c", e, x)
                out[nf] = out.get(nf, 0) + m
        else:
            p = factor_poly(src, f).map_monomials(images, target, coeffs)
            if not p.terms:
                return unit, out, True
            u, fs = factor_laurent(p)
            unit = unit * u ** m
            for nf, k in fs.items():
                out[nf] = out.get(nf, 0) + k * m
    return unit, out, False


def rsum(items, ctx=None) -> RatFunc:
    """Sum of rational functions with a single reduction at the end."""
    items = list(items)
    if ctx is None:
        if not items:
            raise ValueError("rsum of an empty list needs a context")
        ctx = items[0].ctx
    items = [x for x in items if x.rest.terms]
    if not items:
        return RatFunc(Laurent(ctx))
    for x in items:
        ctx = unify(ctx, x.ctx)
    if len(items) == 1:
        return items[0].in_context(ctx)
    if all(not x.df and not x.nf for x in items):
        acc = items[0].rest
        for x in items[1:]:
            acc = acc + x.rest
        return RatFunc(acc.in_context(ctx), _reduced=True)
    lcm: dict = {}
    for x in items:
        for f, m in x.df.items():
            if lcm.get(f, 0) < m:
                lcm[f] = m
    common = dict(items[0].nf)
    for x in items[1:]:
        common = {f: min(m, x.nf[f]) for f, m in common.items() if f in x.nf}
    acc = {}
    for x in items:
        extra = {f: m - common.get(f, 0) for f, m in x.nf.items() if m > common.get(f, 0)}
        missing = {f: m - x.df.get(f, 0) for f, m in lcm.items() if m > x.df.get(f, 0)}
        mult = _counter_add(extra, missing)
        term = x.rest if not mult else x.rest * _prod(ctx, mult)
        for k, c in term.terms.items():
            acc[k] = acc.get(k, 0) + c
    rest = Laurent(ctx, {k: simplify(c) for k, c in acc.items() if c}, _clean=True)
    if not rest.terms:
        return RatFunc(rest)
    return RatFunc(rest, common, lcm)


def rzero(ctx) -> RatFunc:
    return RatFunc(Laurent(ctx))


def factor_str(ctx, f) -> str:
    from .laurent import laurent_str

    return f"({laurent_str(factor_poly(ctx, f))})"


def ratfunc_str(r: RatFunc) -> str:
    """Deterministic text: expanded numerator over the product of den factors."""
    from .laurent import laurent_str

    num = laurent_str(r.numerator())
    if not r.df:
        return num
    parts = []
    for f, m in sorted(r.df.items(), key=lambda it: _fkey(it[0])):
        s = factor_str(r.ctx, f)
        parts.append(s if m == 1 else f"{s}^{m}")
    den = "*".join(parts)
    if len(r.numerator()) > 1:
        num = f"({num})"
    return f"{num}/({den})" if len(parts) > 1 else f"{num}/{den}"
