"""Variable contexts and packed exponent keys.

A monomial's exponent vector is packed into one Python int: component ``i``
lives at bit offset ``BITS*i`` biased by ``HALF``.  Multiplying monomials is
then integer addition (minus the zero offset), and a context whose names are a
prefix of another's produces identical keys, so embedding is free.
"""
from __future__ import annotations

import threading

BITS = 24
HALF = 1 << (BITS - 1)
MASK = (1 << BITS) - 1
MAXVARS = 12
# One bias for every context, so that prefix contexts produce identical keys.
ZERO = sum(HALF << (BITS * i) for i in range(MAXVARS))


class VarContext:
    """Immutable, interned ordered list of variable names."""

    _cache: dict = {}
    _lock = threading.Lock()

    def __new__(cls, names):
        names = tuple(names)
        with cls._lock:
            ctx = cls._cache.get(names)
            if ctx is None:
                if len(names) > MAXVARS:
                    raise ValueError(f"at most {MAXVARS} variables supported")
                if len(set(names)) != len(names):
                    raise ValueError(f"duplicate variable names: {names}")
                ctx = object.__new__(cls)
                ctx.names = names
                ctx.n = len(names)
                ctx.index = {nm: i for i, nm in enumerate(names)}
                ctx.zero = ZERO
                ctx.units = tuple(1 << (BITS * i) for i in range(ctx.n))
                cls._cache[names] = ctx
            return ctx

    def __reduce__(self):
        return (VarContext, (self.names,))

    def __repr__(self):
        return f"VarContext({list(self.names)})"

    def __len__(self):
        return self.n

    def has(self, name) -> bool:
        return name in self.index

    def key(self, exps) -> int:
        """Packed key of an exponent vector (sequence or ``{name: e}`` dict)."""
        if isinstance(exps, dict):
            k = self.zero
            for nm, e in exps.items():
                k += e * self.units[self.index[nm]]
            return k
        if len(exps) != self.n:
            raise ValueError("exponent vector length does not match context")
        k = self.zero
        for e, u in zip(exps, self.units):
            k += e * u
        return k

    def delta(self, exps) -> int:
        """Signed packed offset (no bias) of an exponent vector."""
        return self.key(exps) - self.zero

    def exps(self, key: int) -> tuple:
        return tuple(((key >> (BITS * i)) & MASK) - HALF for i in range(self.n))

    def exp_of(self, key: int, i: int) -> int:
        return ((key >> (BITS * i)) & MASK) - HALF

    def is_prefix_of(self, other: "VarContext") -> bool:
        return other.names[: self.n] == self.names

    def extend(self, extra) -> "VarContext":
        return VarContext(self.names + tuple(n for n in extra if n not in self.index))


def delta_exps(delta: int, n: int) -> tuple:
    """Unpack a signed offset into an exponent tuple of length ``n``."""
    out = []
    for _ in range(n):
        low = delta & MASK
        if low >= HALF:
            low -= 1 << BITS
        out.append(low)
        delta = (delta - low) >> BITS
    return tuple(out)


def unify(a: VarContext, b: VarContext) -> VarContext:
    if a is b:
        return a
    if a.is_prefix_of(b):
        return b
    if b.is_prefix_of(a):
        return a
    raise ValueError(f"incompatible contexts {a.names} and {b.names}")


# Standard contexts.  v is q^(1/4).
VT = VarContext(("v", "t"))
VTX = VarContext(("v", "t", "x"))
VTX3 = VarContext(("v", "t", "x12", "x13", "x23"))
