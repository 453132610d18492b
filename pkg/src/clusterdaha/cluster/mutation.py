"""Quantum cluster mutations, permutation morphisms and words in them."""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..algebra import Laurent, VarContext
from ..algebra.laurent import NotLaurentError
from .quiver import Quiver, mutate_quiver, permute_quiver
from .torus import TorusElement

VTZ = VarContext(("v", "t", "z"))


class NotLaurentInChart(NotLaurentError):
    pass


def monomial_vector(Q: Quiver, h, k: int):
    """Image of h under e_k -> -e'_k, e_i -> e'_i + [eps_ik]_+ e'_k."""
    k0 = k - 1
    out = list(h)
    out[k0] = -h[k0] + sum(h[i] * max(Q.eps[i][k0], 0) for i in range(Q.n) if i != k0)
    return tuple(out)


def monomial_map(a: TorusElement, k: int) -> TorusElement:
    """The monomial part mu'_k of the mutation, landing on the mutated quiver."""
    Q2 = mutate_quiver(a.quiver, k)
    return TorusElement(Q2, {monomial_vector(a.quiver, h, k): c for h, c in a.terms.items()})


def _qv(e):
    return Laurent.var(VTZ, "v", e)


def _factor(m):
    """prod_{j=1}^{|m|} (1 + q^{+-(2j-1)} z), sign of m."""
    sgn = 1 if m > 0 else -1
    out = Laurent.const(VTZ, 1)
    z = Laurent.var(VTZ, "z")
    for j in range(1, abs(m) + 1):
        out = out * (Laurent.const(VTZ, 1) + _qv(sgn * 4 * (2 * j - 1)) * z)
    return out


def dilog_conjugate(a: TorusElement, k: int) -> TorusElement:
    """f -> Psi_q(Y_k) f Psi_q(Y_k)^-1 on the chart of ``a``.

    Per monomial with m = (lambda, e_k): Y_lambda -> Y_lambda prod_{j<=m} (1 + q^{2j-1} Y_k)
    for m >= 0 and Y_lambda prod_{j<=|m|} (1 + q^{-(2j-1)} Y_k)^-1 for m < 0; the inverse
    factors are applied by exact division on each coset lambda + Z e_k.
    """
    Q = a.quiver
    k0 = k - 1
    ek = [0] * Q.n
    ek[k0] = 2
    cosets = {}
    for h, c in a.terms.items():
        num = Q.form(h, ek)  # 4 (lambda, e_k)
        if num % 4:
            raise ValueError("(lambda, e_k) is not an integer")
        m = num // 4
        r = h[k0] % 2
        n = (h[k0] - r) // 2
        h0 = tuple(r if i == k0 else x for i, x in enumerate(h))
        # Y_h = q^{n m} Y_{h0} Y_k^n
        term = c.in_context(VTZ) * _qv(4 * n * m) * Laurent.var(VTZ, "z", n)
        key = (h0, m)
        cosets[key] = cosets[key] + term if key in cosets else term
    out = {}
    for (h0, m), p in cosets.items():
        if m > 0:
            p = p * _factor(m)
        elif m < 0:
            try:
                p = p.try_divide(_factor(m))
            except NotLaurentError:
                raise NotLaurentInChart("element not Laurent in target chart") from None
        for key, c in p.terms.items():
            exps = VTZ.exps(key)
            n = exps[2]
            coeff = Laurent(VTZ, {VTZ.key((exps[0], exps[1], 0)): c}) * _qv(-4 * n * m)
            h = tuple(h0[i] + (2 * n if i == k0 else 0) for i in range(Q.n))
            c2 = _drop_z(coeff)
            out[h] = out[h] + c2 if h in out else c2
    return TorusElement(Q, {h: c for h, c in out.items() if c})


def _drop_z(c: Laurent):
    from ..algebra import VT

    return Laurent(VT, {VT.key(VTZ.exps(k)[:2]): x for k, x in c.terms.items()})


def mutate(a: TorusElement, k: int) -> TorusElement:
    """Quantum cluster mutation mu^q_k = Ad_{Psi_q(Y'_k)} o mu'_k."""
    return dilog_conjugate(monomial_map(a, k), k)


def permute(a: TorusElement, perm: dict) -> TorusElement:
    """Permutation morphism Y_i -> Y'_{perm(i)}."""
    Q2 = permute_quiver(a.quiver, perm)
    n = a.quiver.n
    p = [perm.get(i + 1, i + 1) - 1 for i in range(n)]
    out = {}
    for h, c in a.terms.items():
        h2 = [0] * n
        for i in range(n):
            h2[p[i]] = h[i]
        out[tuple(h2)] = c
    return TorusElement(Q2, out)


@dataclass(frozen=True)
class Move:
    kind: str  # "m" (mutation) or "p" (permutation)
    k: int = 0
    perm: tuple = ()  # sorted (i, perm(i)) pairs

    def inverse(self):
        if self.kind == "m":
            return self
        return Move("p", perm=tuple(sorted((b, a) for a, b in self.perm)))

    def __str__(self):
        if self.kind == "m":
            return f"m{self.k}"
        return "p(" + ",".join(f"{a}>{b}" for a, b in self.perm) + ")"


def mut(k):
    return Move("m", k)


def perm_move(*cycles):
    """Permutation from disjoint cycles, e.g. perm_move((1, 2), (3, 4))."""
    mp = {}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            mp[a] = b
    return Move("p", perm=tuple(sorted(mp.items())))


@dataclass(frozen=True)
class MCGWord:
    """Moves in application order (the first move acts first)."""

    moves: tuple = ()

    @classmethod
    def composition(cls, *factors):
        """Word for f1 o f2 o ... o fn (rightmost acts first); factors are Moves or MCGWords."""
        moves = []
        for f in reversed(factors):
            moves.extend(f.moves if isinstance(f, MCGWord) else [f])
        return cls(tuple(moves))

    def inverse(self):
        return MCGWord(tuple(m.inverse() for m in reversed(self.moves)))

    def then(self, other):
        return MCGWord(self.moves + other.moves)

    def __pow__(self, n):
        w = self if n >= 0 else self.inverse()
        out = MCGWord()
        for _ in range(abs(n)):
            out = out.then(w)
        return out

    def __str__(self):
        return " ".join(str(m) for m in self.moves)


def apply_move(a: TorusElement, m: Move) -> TorusElement:
    if m.kind == "m":
        return mutate(a, m.k)
    return permute(a, dict(m.perm))


def apply_word(a: TorusElement, w: MCGWord) -> TorusElement:
    for m in w.moves:
        a = apply_move(a, m)
    return a


def word_quiver(Q: Quiver, w: MCGWord) -> Quiver:
    for m in w.moves:
        Q = mutate_quiver(Q, m.k) if m.kind == "m" else permute_quiver(Q, dict(m.perm))
    return Q


_TOKEN = re.compile(r"m(\d+)|\(([\d ,]+)\)")


def parse_word(text: str) -> MCGWord:
    """Parse moves in application order: ``m1 m2 (1 2)(3 4) m7``."""
    moves = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos] in " ,;":
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"cannot parse move at {text[pos:]!r}")
        if mt.group(1):
            moves.append(mut(int(mt.group(1))))
        else:
            cyc = tuple(int(x) for x in re.split(r"[ ,]+", mt.group(2).strip()))
            moves.append(perm_move(cyc))
        pos = mt.end()
    return MCGWord(tuple(moves))
