"""Compactly supported functions on Z or Z^3 with rational-function values."""
from __future__ import annotations

from .algebra import VT, RatFunc, rsum


class LatticeFn:
    """Finitely supported map ``point -> RatFunc``; zero values are dropped.

    Points are ints (functions on Z) or tuples (functions on Z^3).
    """

    __slots__ = ("ctx", "values")

    def __init__(self, values=None, ctx=VT):
        self.ctx = ctx
        out = {}
        for n, c in (values or {}).items():
            c = RatFunc.lift(c, ctx)
            if c:
                out[n] = c
        self.values = out

    @classmethod
    def delta(cls, n, ctx=VT):
        return cls({n: RatFunc.const(ctx, 1)}, ctx)

    def __getitem__(self, n):
        c = self.values.get(n)
        return c if c is not None else RatFunc.const(self.ctx, 0)

    def support(self):
        return sorted(self.values)

    def __len__(self):
        return len(self.values)

    def __add__(self, other):
        keys = set(self.values) | set(other.values)
        return LatticeFn({k: rsum([self[k], other[k]], self.ctx) for k in keys}, self.ctx)

    def __neg__(self):
        return LatticeFn({k: -c for k, c in self.values.items()}, self.ctx)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return LatticeFn({k: v * c for k, v in self.values.items()}, self.ctx)

    def __eq__(self, other):
        if not isinstance(other, LatticeFn):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self[k] == other[k] for k in keys)

    __hash__ = None

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in sorted(self.values.items()))
        return f"LatticeFn({{{inner}}})"
