"""The embeddings eta_0, eta_{-1} of the genus 0 operator algebra into D_q.

Elements of the operator algebra are handled as formal noncommutative words in
the generators ``"L"`` (multiplication by x + x^-1) and ``n`` (the operator
H_n), so that one and the same expression can be turned both into a DiffOp and
into a Weyl element.  eta is fixed on L and H_0 and extended to all H_n by the
ladder relation (q - q^-1) H_{n+1} = q^{1/2} H_n L - q^{-1/2} L H_n.
"""
from __future__ import annotations

from ..algebra import VT, VTX, VTX3, Laurent, RatFunc
from ..diffops import X3, DiffOp, PAIR_ROLES, hcheck, mul_op, tensor
from .weyl import ONE_FACTOR, THREE_FACTORS, WeylElement, embed_factor

CHARTS = (0, -1)
_HMAX = 12


def _v(e):
    return Laurent.var(VT, "v", e)


def _qq():
    return _v(4) - _v(-4)


class SHWord:
    """Linear combination of words in the generators, coefficients Laurent(v, t)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for w, c in (terms or {}).items():
            c = c if isinstance(c, Laurent) else Laurent.const(VT, c)
            if c:
                out[tuple(w)] = out[tuple(w)] + c if tuple(w) in out else c
        self.terms = {w: c for w, c in out.items() if c}

    @classmethod
    def gen(cls, g):
        return cls({(g,): 1})

    @classmethod
    def const(cls, c=1):
        return cls({(): c})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return SHWord(out)

    def __neg__(self):
        return SHWord({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SHWord({w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SHWord):
            return self.scale(other)
        out = {}
        for w, a in self.terms.items():
            for w2, b in other.terms.items():
                out[w + w2] = out[w + w2] + a * b if w + w2 in out else a * b
        return SHWord(out)

    def to_diffop(self, var="x", ctx=VTX) -> DiffOp:
        out = DiffOp(ctx, (var,))
        for w, c in self.terms.items():
            op = DiffOp.scalar(ctx, (var,), RatFunc(c.in_context(ctx)))
            for g in w:
                op = op * _gen_op(g, var, ctx)
            out = out + op
        return out

    def eta(self, chart: int) -> WeylElement:
        out = WeylElement()
        for w, c in self.terms.items():
            e = WeylElement.const(c)
            for g in w:
                e = e * eta_gen(chart, g)
            out = out + e
        return out


def _gen_op(g, var, ctx):
    return mul_op(var, ctx) if g == "L" else hcheck(g, var, ctx)


L = SHWord.gen("L")


def H(n):
    return SHWord.gen(n)


_ETA: dict = {}


def _base(chart):
    U = WeylElement.U
    V = WeylElement.V
    one = WeylElement.const(1)
    if chart == 0:
        Lw = V() + V(-1) * (one - U(2))
    elif chart == -1:
        Lw = V(-1) + (one - U(2)) * V()
    else:
        raise ValueError("chart must be 0 or -1")
    return Lw, U(-1)


def eta_gen(chart: int, g) -> WeylElement:
    """Image of a generator: ``"L"`` or an integer n for H_n."""
    key = (chart, g)
    if key in _ETA:
        return _ETA[key]
    Lw, H0 = _base(chart)
    if g == "L":
        val = Lw
    elif g == 0:
        val = H0
    elif isinstance(g, int) and 0 < g <= _HMAX:
        prev = eta_gen(chart, g - 1)
        val = ((prev * Lw).scale(_v(2)) - (Lw * prev).scale(_v(-2))).divide_scalar(_qq())
    elif isinstance(g, int) and -_HMAX <= g < 0:
        nxt = eta_gen(chart, g + 1)
        val = ((nxt * Lw).scale(_v(-2)) - (Lw * nxt).scale(_v(2))).divide_scalar(-_qq())
    else:
        raise ValueError(f"unknown generator {g!r}")
    _ETA[key] = val
    return val


def recognize(op: DiffOp):
    """Express a one-variable DiffOp as a generator L or H_n, or raise ValueError."""
    var = op.xvars[0]
    if op == mul_op(var, op.ctx):
        return "L"
    for n in range(-_HMAX, _HMAX + 1):
        if op == hcheck(n, var, op.ctx):
            return n
    raise ValueError("operator is not recognized as a generator L or H_n")


def eta(chart: int, op) -> WeylElement:
    """eta_0 or eta_{-1} of an SHWord, a generator, or a generator DiffOp."""
    if isinstance(op, SHWord):
        return op.eta(chart)
    if isinstance(op, DiffOp):
        if len(op.xvars) != 1:
            raise ValueError("eta acts on operators in one variable")
        op = recognize(op)
    return eta_gen(chart, op)


# ---- three variables ----

class SHWord3:
    """Sum of c * w12 (x) w13 (x) w23, each w a word in one variable's generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def slot(cls, var, word: SHWord):
        i = X3.index(var)
        out = {}
        for w, c in word.terms.items():
            k = [()] * 3
            k[i] = w
            out[tuple(k)] = c
        return cls(out)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return SHWord3(out)

    def __neg__(self):
        return SHWord3({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = c if isinstance(c, Laurent) else Laurent.const(VT, c)
        return SHWord3({w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SHWord3):
            return self.scale(other)
        out = {}
        for w, a in self.terms.items():
            for w2, b in other.terms.items():
                k = tuple(x + y for x, y in zip(w, w2))
                out[k] = out[k] + a * b if k in out else a * b
        return SHWord3(out)

    def to_diffop(self, ctx=VTX3) -> DiffOp:
        out = DiffOp(ctx, X3)
        for ws, c in self.terms.items():
            ops = [SHWord({w: 1}).to_diffop(var, ctx) for var, w in zip(X3, ws) if w]
            op = tensor(ops, X3, ctx) if ops else DiffOp.scalar(ctx, X3, 1)
            out = out + op.scale(RatFunc(c.in_context(ctx)))
        return out

    def eta(self, chart: int = -1) -> WeylElement:
        out = WeylElement(THREE_FACTORS)
        for ws, c in self.terms.items():
            e = WeylElement.const(c, THREE_FACTORS)
            for var, w in zip(X3, ws):
                if w:
                    e = e * embed_factor(SHWord({w: 1}).eta(chart), var[1:])
            out = out + e
        return out


def collect_coeffs_expr(k: int) -> SHWord3:
    """O_{A_k} = t^-1 H0 H0 - q^-1 L H1 H1 + q^-2 t H2 H2 (H's in the two shifted variables)."""
    a, b, c = PAIR_ROLES[k]
    t = Laurent.var(VT, "t")
    s = SHWord3.slot
    return (
        (s(a, H(0)) * s(b, H(0))).scale(t**-1)
        - (s(c, L) * s(a, H(1)) * s(b, H(1))).scale(_v(-4))
        + (s(a, H(2)) * s(b, H(2))).scale(_v(-8) * t)
    )


def opB_expr(i: int, j: int) -> SHWord3:
    return SHWord3.slot(f"x{min(i, j)}{max(i, j)}", L)


def eta_tensor(expr: SHWord3, chart: int = -1) -> WeylElement:
    """eta^{(x)3} of a three-variable expression."""
    return expr.eta(chart)


def macdonald_expr() -> SHWord:
    """M = t^-1 H_0 - q^-1 t H_2."""
    t = Laurent.var(VT, "t")
    return H(0).scale(t**-1) - H(2).scale(_v(-4) * t)


__all__ = [
    "CHARTS", "H", "L", "ONE_FACTOR", "SHWord", "SHWord3", "collect_coeffs_expr", "eta",
    "eta_gen", "eta_tensor", "macdonald_expr", "opB_expr", "recognize",
]
