"""Sparse multivariate Laurent polynomials over the Gaussian rationals."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .context import BITS, HALF, MASK, VarContext, delta_exps, unify
from .scalar import Scalar, div, scalar_str, simplify


class NotLaurentError(ArithmeticError):
    """An exact division left a remainder: the result is not a Laurent polynomial."""


def _is_coeff(c) -> bool:
    return isinstance(c, (Rational, Scalar))


class Laurent:
    """Immutable sparse Laurent polynomial.

    ``terms`` maps packed exponent keys (see :mod:`.context`) to nonzero
    coefficients (``int``, ``Fraction`` or :class:`Scalar`).
    """

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VarContext, terms=None, _clean=False):
        self.ctx = ctx
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {k: simplify(c) for k, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, ctx, c=1):
        c = simplify(c)
        return cls(ctx, {ctx.zero: c} if c else {}, _clean=True)

    @classmethod
    def var(cls, ctx, name, e=1, c=1):
        return cls.monomial(ctx, {name: e}, c)

    @classmethod
    def monomial(cls, ctx, exps, c=1):
        c = simplify(c)
        return cls(ctx, {ctx.key(exps): c} if c else {}, _clean=True)

    @classmethod
    def from_dict(cls, ctx, data):
        """Build from ``{exponent tuple: coefficient}``."""
        out = {}
        for e, c in data.items():
            k = ctx.key(e)
            out[k] = out.get(k, 0) + c
        return cls(ctx, out)

    # -- basic protocol ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Iterate ``(exponent tuple, coefficient)`` pairs, largest key first."""
        ctx = self.ctx
        for k in sorted(self.terms, reverse=True):
            yield ctx.exps(k), self.terms[k]

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and self.ctx.zero in t)

    def constant_value(self):
        if not self.terms:
            return 0
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms[self.ctx.zero]

    def is_monomial(self):
        return len(self.terms) == 1

    def lead(self):
        k = max(self.terms)
        return k, self.terms[k]

    def coeff(self, exps):
        return self.terms.get(self.ctx.key(exps), 0)

    def __eq__(self, other):
        if isinstance(other, Laurent):
            if other.ctx is not self.ctx:
                try:
                    unify(self.ctx, other.ctx)
                except ValueError:
                    return False
            return self.terms == other.terms
        if _is_coeff(other):
            return self == Laurent.const(self.ctx, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if _is_coeff(other):
            return Laurent.const(self.ctx, other)
        return None

    def in_context(self, ctx):
        if ctx is self.ctx:
            return self
        if self.ctx.is_prefix_of(ctx):
            return Laurent(ctx, self.terms, _clean=True)
        raise ValueError(f"cannot embed {self.ctx.names} into {ctx.names}")

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx = unify(self.ctx, other.ctx)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return Laurent(ctx, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Laurent(self.ctx, {k: -c for k, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = simplify(c)
        if not c:
            return Laurent(self.ctx)
        if c == 1:
            return self
        return Laurent(self.ctx, {k: simplify(v * c) for k, v in self.terms.items()}, _clean=True)

    def shift_key(self, delta: int):
        """Multiply by the monomial with signed offset ``delta``."""
        if not delta:
            return self
        return Laurent(self.ctx, {k + delta: c for k, c in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if _is_coeff(other):
            return self.scale(other)
        if not isinstance(other, Laurent):
            return NotImplemented
        ctx = unify(self.ctx, other.ctx)
        a, b = self.terms, other.terms
        if not a or not b:
            return Laurent(ctx)
        if len(a) < len(b):
            a, b = b, a
        z = ctx.zero
        if len(b) == 1:
            (kb, cb), = b.items()
            d = kb - z
            if cb == 1:
                return Laurent(ctx, {k + d: c for k, c in a.items()}, _clean=True)
            return Laurent(ctx, {k + d: simplify(c * cb) for k, c in a.items()}, _clean=True)
        out = {}
        get = out.get
        for kb, cb in b.items():
            d = kb - z
            for ka, ca in a.items():
                k = ka + d
                out[k] = get(k, 0) + ca * cb
        return Laurent(ctx, {k: simplify(c) for k, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise NotLaurentError("negative power of a non-monomial")
            (k, c), = self.terms.items()
            z = self.ctx.zero
            return Laurent(self.ctx, {z + n * (k - z): simplify(div(1, c) ** (-n))}, _clean=True)
        result = Laurent.const(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitutions ----------------------------------------------------
    def shift_x(self, var: str, a: int):
        """Substitute ``var -> q^a var`` (q = v^4)."""
        ctx = self.ctx
        if var not in ctx.index or var == "v":
            raise KeyError(f"unknown x-variable {var!r}")
        if not a:
            return self
        i = ctx.index[var]
        shift = 4 * a * ctx.units[ctx.index["v"]]
        out = {}
        for k, c in self.terms.items():
            e = ((k >> (BITS * i)) & MASK) - HALF
            out[k + e * shift] = c
        return Laurent(ctx, out, _clean=True)

    def map_monomials(self, images, target: VarContext | None = None, coeffs=None):
        """Apply a monomial map.

        ``images[i]`` is the signed offset (in ``target``) of the image of the
        i-th variable; ``coeffs[i]`` optionally gives a scalar factor
        (the image of variable i is then ``coeffs[i] * monomial``).
        """
        target = target or self.ctx
        n = self.ctx.n
        z = target.zero
        out = {}
        for k, c in self.terms.items():
            e = self.ctx.exps(k)
            nk = z
            for ei, img in zip(e, images):
                if ei:
                    nk += ei * img
            if coeffs is not None:
                for ei, ci in zip(e, coeffs):
                    if ei and ci != 1:
                        c = c * ci ** ei if ei > 0 else div(c, ci ** (-ei))
            s = out.get(nk, 0) + c
            out[nk] = s
        return Laurent(target, {k: simplify(c) for k, c in out.items() if c}, _clean=True)

    def subs(self, mapping: dict, target: VarContext | None = None):
        """Substitute variables by monomials: ``{name: {name2: e, ...} or scalar}``.

        A scalar image (e.g. ``1``) replaces the variable by that value.
        """
        target = target or self.ctx
        images, coeffs = monomial_images(self.ctx, target, mapping)
        return self.map_monomials(images, target, coeffs)

    def swap_vars(self, perm: dict):
        """Rename variables within the same context, ``perm = {old: new}``."""
        return self.subs({a: {b: 1} for a, b in perm.items()})

    def inverse_vars(self, names):
        return self.subs({nm: {nm: -1} for nm in names})

    # -- division ---------------------------------------------------------
    def exp_bounds(self):
        ctx = self.ctx
        lo = [None] * ctx.n
        hi = [None] * ctx.n
        for k in self.terms:
            e = ctx.exps(k)
            for i, x in enumerate(e):
                if lo[i] is None or x < lo[i]:
                    lo[i] = x
                if hi[i] is None or x > hi[i]:
                    hi[i] = x
        return lo, hi

    def try_divide(self, d: "Laurent") -> "Laurent":
        """Exact quotient ``self / d`` in the Laurent ring, or NotLaurentError."""
        if not isinstance(d, Laurent):
            d = Laurent.const(self.ctx, d)
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        ctx = unify(self.ctx, d.ctx)
        if not self.terms:
            return Laurent(ctx)
        z = ctx.zero
        if len(d.terms) == 1:
            (kd, cd), = d.terms.items()
            off = kd - z
            return Laurent(ctx, {k - off: div(c, cd) for k, c in self.terms.items()}, _clean=True)
        plo, phi = self.exp_bounds()
        dlo, dhi = d.exp_bounds()
        qlo = [a - b for a, b in zip(plo, dlo)]
        qhi = [a - b for a, b in zip(phi, dhi)]
        if any(a > b for a, b in zip(qlo, qhi)):
            raise NotLaurentError("not divisible")
        kd, cd = d.lead()
        dterms = [(k - kd, c) for k, c in d.terms.items() if k != kd]
        rem = dict(self.terms)
        quot = {}
        while rem:
            kr = max(rem)
            cr = rem.pop(kr)
            kq = kr - kd + z
            e = ctx.exps(kq)
            if any(x < lo or x > hi for x, lo, hi in zip(e, qlo, qhi)):
                raise NotLaurentError("not divisible")
            cq = div(cr, cd)
            quot[kq] = cq
            for off, c in dterms:
                k = kr + off
                s = rem.get(k, 0) - cq * c
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return Laurent(ctx, {k: simplify(c) for k, c in quot.items()}, _clean=True)

    def divides_by(self, d) -> bool:
        try:
            self.try_divide(d)
            return True
        except NotLaurentError:
            return False

    def __truediv__(self, other):
        if _is_coeff(other):
            return Laurent(self.ctx, {k: div(c, other) for k, c in self.terms.items()}, _clean=True)
        if isinstance(other, Laurent):
            return self.try_divide(other)
        return NotImplemented

    # -- grouping ---------------------------------------------------------
    def split(self, names):
        """Group terms by the exponents of ``names``.

        Returns ``{exponent tuple of names: Laurent in the remaining variables
        (kept in the same context, with those exponents zeroed)}``.
        """
        ctx = self.ctx
        idx = [ctx.index[n] for n in names]
        out = {}
        for k, c in self.terms.items():
            es = tuple(((k >> (BITS * i)) & MASK) - HALF for i in idx)
            kk = k
            for i, e in zip(idx, es):
                kk -= e * ctx.units[i]
            out.setdefault(es, {})[kk] = c
        return {es: Laurent(ctx, t, _clean=True) for es, t in out.items()}

    def depends_on(self, name) -> bool:
        ctx = self.ctx
        if name not in ctx.index:
            return False
        i = ctx.index[name]
        return any(((k >> (BITS * i)) & MASK) != HALF for k in self.terms)

    # -- display ----------------------------------------------------------
    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        return laurent_str(self)


def monomial_images(src: VarContext, target: VarContext, mapping: dict):
    images = []
    coeffs = []
    any_coeff = False
    for nm in src.names:
        if nm in mapping:
            img = mapping[nm]
            if isinstance(img, dict):
                images.append(target.delta(img))
                coeffs.append(1)
            elif isinstance(img, tuple):
                c, mono = img
                images.append(target.delta(mono))
                coeffs.append(simplify(c))
                any_coeff = any_coeff or c != 1
            else:
                images.append(0)
                coeffs.append(simplify(img))
                any_coeff = any_coeff or img != 1
        else:
            if nm not in target.index:
                raise ValueError(f"variable {nm} has no image in {target.names}")
            images.append(target.units[target.index[nm]])
            coeffs.append(1)
    return images, (coeffs if any_coeff else None)


def monomial_str(ctx: VarContext, exps) -> str:
    parts = []
    for nm, e in zip(ctx.names, exps):
        if e == 1:
            parts.append(nm)
        elif e:
            parts.append(f"{nm}^{e}")
    return "*".join(parts)


def laurent_str(p: Laurent) -> str:
    """Deterministic text form, terms in decreasing key order."""
    if not p.terms:
        return "0"
    out = []
    for e, c in p.items():
        mono = monomial_str(p.ctx, e)
        cs = scalar_str(c)
        if isinstance(c, Scalar) and c.im and c.re:
            cs = f"({cs})"
        if not mono:
            term = cs
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{cs}*{mono}"
        out.append(term)
    s = " + ".join(out)
    return s.replace("+ -", "- ")
