"""Skew-symmetric quivers, their mutations, and the four charts used here."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Quiver:
    """Exchange matrix eps (tuple of row tuples), eps_ij = #arrows i->j - #arrows j->i.

    Vertices are labelled 1..n in the public API; rows are 0-based.
    """

    eps: tuple
    name: str = ""

    def __post_init__(self):
        n = len(self.eps)
        for i in range(n):
            if len(self.eps[i]) != n:
                raise ValueError("exchange matrix must be square")
            for j in range(n):
                if self.eps[i][j] != -self.eps[j][i]:
                    raise ValueError("exchange matrix must be skew-symmetric")

    @classmethod
    def from_arrows(cls, n, arrows, name=""):
        """``arrows``: (i, j, mult) meaning mult arrows i -> j (1-based)."""
        m = [[0] * n for _ in range(n)]
        for i, j, c in arrows:
            m[i - 1][j - 1] += c
            m[j - 1][i - 1] -= c
        return cls(tuple(tuple(r) for r in m), name)

    @property
    def n(self):
        return len(self.eps)

    def e(self, i, j):
        """eps_ij with 1-based labels."""
        return self.eps[i - 1][j - 1]

    def form(self, a, b):
        """a^T eps b for integer vectors (the pairing in half-units is form/4)."""
        return sum(a[i] * self.eps[i][j] * b[j] for i in range(self.n) if a[i] for j in range(self.n) if b[j])

    def same_arrows(self, other):
        return self.eps == other.eps

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.eps == other.eps

    def __hash__(self):
        return hash(self.eps)

    def rank(self):
        rows = [[Fraction(x) for x in r] for r in self.eps]
        r = 0
        n = self.n
        for c in range(n):
            piv = next((i for i in range(r, n) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            for i in range(n):
                if i != r and rows[i][c]:
                    f = rows[i][c] / rows[r][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            r += 1
        return r

    def det(self):
        m = [[Fraction(x) for x in r] for r in self.eps]
        n = self.n
        d = Fraction(1)
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d *= m[c][c]
            for i in range(c + 1, n):
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return int(d)


def mutate_quiver(Q: Quiver, k: int) -> Quiver:
    """Mutation at vertex k (1-based), chosen so that e_i -> e'_i + [eps_ik]_+ e'_k,
    e_k -> -e'_k is an isometry."""
    k0 = k - 1
    e = Q.eps
    n = Q.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k0 or j == k0:
                out[i][j] = -e[i][j]
            else:
                out[i][j] = e[i][j] + max(e[j][k0], 0) * e[i][k0] + max(e[i][k0], 0) * e[k0][j]
    return Quiver(tuple(tuple(r) for r in out), Q.name)


def permute_quiver(Q: Quiver, perm: dict) -> Quiver:
    """Quiver with eps'_{perm(i) perm(j)} = eps_ij (perm 1-based, missing keys fixed)."""
    n = Q.n
    p = [perm.get(i + 1, i + 1) - 1 for i in range(n)]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[p[i]][p[j]] = Q.eps[i][j]
    return Quiver(tuple(tuple(r) for r in out), Q.name)


def kronecker() -> Quiver:
    return Quiver.from_arrows(2, [(2, 1, 2)], "kronecker")


def markov() -> Quiver:
    return Quiver.from_arrows(3, [(3, 2, 2), (1, 3, 2), (2, 1, 2)], "markov")


def x6() -> Quiver:
    arrows = [(6, 2, 1), (2, 1, 2), (1, 6, 1), (6, 4, 1), (4, 3, 2), (3, 6, 1), (5, 6, 1)]
    return Quiver.from_arrows(6, arrows, "x6")


def x7() -> Quiver:
    arrows = [
        (7, 2, 1), (2, 1, 2), (1, 7, 1),
        (7, 4, 1), (4, 3, 2), (3, 7, 1),
        (7, 6, 1), (6, 5, 2), (5, 7, 1),
    ]
    return Quiver.from_arrows(7, arrows, "x7")


def build_charts() -> dict:
    return {"kronecker": kronecker(), "markov": markov(), "x6": x6(), "x7": x7()}


def to_dot(Q: Quiver, name=None) -> str:
    """DOT digraph; an arrow of multiplicity m is written as m parallel edges."""
    lines = [f"digraph {name or Q.name or 'quiver'} {{"]
    for i in range(Q.n):
        lines.append(f"  {i + 1};")
    for i in range(Q.n):
        for j in range(Q.n):
            for _ in range(max(Q.eps[i][j], 0)):
                lines.append(f"  {i + 1} -> {j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
