"""Symmetric q-difference operators on Laurent rings."""
from __future__ import annotations

from .algebra import VTX, VTX3, Laurent, RatFunc, VarContext, rsum
from .algebra.laurent import NotLaurentError
from .qspecial import qmono

X3 = ("x12", "x13", "x23")


class DiffOp:
    """Finite sum ``sum_s c_s(x) T^s`` with rational coefficients.

    ``terms`` maps shift vectors (tuples aligned with ``xvars``) to RatFunc
    coefficients; ``T^s`` sends ``x_i`` to ``q^{s_i} x_i``.
    """

    __slots__ = ("ctx", "xvars", "terms")

    def __init__(self, ctx: VarContext, xvars, terms=None):
        self.ctx = ctx
        self.xvars = tuple(xvars)
        out = {}
        for s, c in (terms or {}).items():
            c = RatFunc.lift(c, ctx)
            if c:
                out[tuple(s)] = c
        self.terms = out

    @classmethod
    def scalar(cls, ctx, xvars, c):
        return cls(ctx, xvars, {(0,) * len(xvars): c})

    def _zero_shift(self):
        return (0,) * len(self.xvars)

    def _check(self, other):
        if self.xvars != other.xvars:
            raise ValueError("operators act on different variables")

    def _lift(self, other):
        if isinstance(other, DiffOp):
            return other
        return DiffOp.scalar(self.ctx, self.xvars, other)

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return DiffOp(self.ctx, self.xvars, out)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp(self.ctx, self.xvars, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def scale(self, c):
        c = RatFunc.lift(c, self.ctx)
        return DiffOp(self.ctx, self.xvars, {s: c * v for s, v in self.terms.items()})

    def shift_coeff(self, c: RatFunc, s) -> RatFunc:
        mapping = {x: {"v": 4 * a, x: 1} for x, a in zip(self.xvars, s) if a}
        return c.subs(mapping) if mapping else c

    def __mul__(self, other):
        """Composition ``self o other``."""
        if not isinstance(other, DiffOp):
            return self.scale(other)
        self._check(other)
        out = {}
        for sa, ca in self.terms.items():
            for sb, cb in other.terms.items():
                s = tuple(a + b for a, b in zip(sa, sb))
                out.setdefault(s, []).append(ca * self.shift_coeff(cb, sa))
        return DiffOp(self.ctx, self.xvars, {s: rsum(cs, self.ctx) for s, cs in out.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = DiffOp.scalar(self.ctx, self.xvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            other = self._lift(other)
        if self.xvars != other.xvars:
            return False
        keys = set(self.terms) | set(other.terms)
        zero = RatFunc(Laurent(self.ctx))
        return all(self.terms.get(s, zero) == other.terms.get(s, zero) for s in keys)

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def apply(self, f, laurent=True):
        """``sum_s c_s * f(q^s x)``.

        With ``laurent=True`` the result must be a Laurent polynomial in the
        x-variables (its denominator may only involve v, t); a leftover
        x-denominator raises NotLaurentError.  A Laurent input with a
        Laurent-coefficient result is returned as Laurent.
        """
        fr = RatFunc.lift(f, self.ctx)
        parts = [c * self.shift_coeff(fr, s) for s, c in self.terms.items()]
        res = rsum(parts, fr.ctx)
        if laurent and res.den_depends_on(self.xvars):
            raise NotLaurentError("operator image is not a Laurent polynomial")
        if isinstance(f, Laurent) and res.is_laurent():
            return res.to_laurent()
        return res

    def rename(self, perm: dict):
        """Rename x-variables (a permutation ``{old: new}``) in shifts and coefficients."""
        pos = {x: i for i, x in enumerate(self.xvars)}
        out = {}
        for s, c in self.terms.items():
            ns = [0] * len(s)
            for x, a in zip(self.xvars, s):
                ns[pos[perm.get(x, x)]] = a
            out[tuple(ns)] = c.swap_vars(perm)
        return DiffOp(self.ctx, self.xvars, out)

    def embed(self, xvars, ctx=None):
        """View an operator in fewer variables as acting on a larger variable list."""
        ctx = ctx or self.ctx
        idx = [xvars.index(x) for x in self.xvars]
        out = {}
        for s, c in self.terms.items():
            ns = [0] * len(xvars)
            for i, a in zip(idx, s):
                ns[i] = a
            out[tuple(ns)] = c.in_context(ctx)
        return DiffOp(ctx, xvars, out)

    def __repr__(self):
        inner = ", ".join(f"{s}: {c}" for s, c in sorted(self.terms.items()))
        return f"DiffOp[{','.join(self.xvars)}]({{{inner}}})"


def _x(ctx, var, e=1):
    return Laurent.var(ctx, var, e)


def hcheck(n: int, var: str = "x", ctx: VarContext = VTX) -> DiffOp:
    """``H_n = q^{n/2} (x^n/(1-x^2) T + x^-n/(1-x^-2) T^-1)`` in ``var``."""
    one = Laurent.const(ctx, 1)
    qh = qmono(ctx, n / 2)
    cp = RatFunc(qh * _x(ctx, var, n)) / RatFunc.factored(one - _x(ctx, var, 2))
    cm = RatFunc(qh * _x(ctx, var, -n)) / RatFunc.factored(one - _x(ctx, var, -2))
    return DiffOp(ctx, (var,), {(1,): cp, (-1,): cm})


def mul_op(var: str = "x", ctx: VarContext = VTX, xvars=None) -> DiffOp:
    """Multiplication by ``var + var^-1``."""
    xvars = tuple(xvars) if xvars else (var,)
    return DiffOp.scalar(ctx, xvars, _x(ctx, var) + _x(ctx, var, -1))


def macdonald_op(var: str = "x", ctx: VarContext = VTX) -> DiffOp:
    """The SL_2 Macdonald operator M."""
    t = Laurent.var(ctx, "t")
    x = _x(ctx, var)
    xi = _x(ctx, var, -1)
    cp = RatFunc(t * x - t**-1 * xi) / RatFunc.factored(x - xi)
    cm = RatFunc(t * xi - t**-1 * x) / RatFunc.factored(xi - x)
    return DiffOp(ctx, (var,), {(1,): cp, (-1,): cm})


def tensor(ops, xvars=X3, ctx=VTX3) -> DiffOp:
    """Product of operators acting in disjoint variables."""
    out = DiffOp.scalar(ctx, xvars, 1)
    for op in ops:
        out = out * op.embed(xvars, ctx)
    return out


# x_ij indices of the variables, and the permutation action x_ij -> x_pi(i)pi(j)
_PAIRS = {"x12": (1, 2), "x13": (1, 3), "x23": (2, 3)}


def pair_var(i: int, j: int) -> str:
    i, j = min(i, j), max(i, j)
    return f"x{i}{j}"


def index_perm(pi: dict) -> dict:
    """Variable renaming induced by a permutation of {1,2,3}."""
    return {v: pair_var(pi[i], pi[j]) for v, (i, j) in _PAIRS.items()}


def _opA1(ctx=VTX3) -> DiffOp:
    t = Laurent.var(ctx, "t")
    x12, x13, x23 = (_x(ctx, v) for v in X3)
    one = Laurent.const(ctx, 1)
    den_common = RatFunc.factored(x12 - x12**-1) * RatFunc.factored(x13 - x13**-1)
    terms = {}
    for a in (1, -1):
        for b in (1, -1):
            m = x12**a * x13**b
            num = RatFunc.factored(one - t * m * x23) * RatFunc.factored(one - t * m * x23**-1)
            c = num / (RatFunc(t * m) * den_common) * (a * b)
            terms[(a, b, 0)] = c
    return DiffOp(ctx, X3, terms)


_OPA_CACHE: dict = {}


def genus2_opA(k: int, ctx=VTX3) -> DiffOp:
    """The genus 2 Macdonald operator O_{A_k}, k = 1, 2, 3."""
    key = (k, ctx)
    if key not in _OPA_CACHE:
        base = _opA1(ctx)
        if k == 1:
            op = base
        elif k == 2:
            op = base.rename(index_perm({1: 2, 2: 1, 3: 3}))
        elif k == 3:
            op = base.rename(index_perm({1: 3, 2: 2, 3: 1}))
        else:
            raise ValueError("k must be 1, 2 or 3")
        _OPA_CACHE[key] = op
    return _OPA_CACHE[key]


def genus2_opB(i: int, j: int, ctx=VTX3) -> DiffOp:
    """O_{B_ij}: multiplication by x_ij + x_ij^-1."""
    return mul_op(pair_var(i, j), ctx, X3)


def collect_coeffs_form(k: int, ctx=VTX3) -> DiffOp:
    """O_{A_k} written through the single-variable operators H_n.

    O_{A_1} = t^-1 H0 H0 - q^-1 (x23 + x23^-1) H1 H1 + q^-2 t H2 H2, the
    factors acting in x12 and x13.  The powers q^-n are the normalizations
    q^{-n/2} of each H_n; without them the expansion disagrees with the
    closed formula (compare M = t^-1 H0 - q^-1 t H2 in genus 1).
    """
    a, b, c = PAIR_ROLES[k]
    t = Laurent.var(ctx, "t")
    q = qmono(ctx, 1)
    h = lambda n, var: hcheck(n, var, ctx).embed(X3, ctx)
    xc = _x(ctx, c) + _x(ctx, c, -1)
    return (
        (h(0, a) * h(0, b)).scale(RatFunc(t**-1))
        - DiffOp.scalar(ctx, X3, xc * q**-1) * h(1, a) * h(1, b)
        + (h(2, a) * h(2, b)).scale(RatFunc(q**-2 * t))
    )


# for each A-cycle k: the two variables O_{A_k} shifts, then the remaining one
PAIR_ROLES = {1: ("x12", "x13", "x23"), 2: ("x12", "x23", "x13"), 3: ("x13", "x23", "x12")}
