"""Admissible triples and the primed transform."""
from __future__ import annotations

from itertools import product

AXES = {(1, 2): 3, (1, 3): 2, (2, 3): 1}
# variable attached to the complementary index: l'_k multiplies x_ij
VAR_OF = {1: "x23", 2: "x13", 3: "x12"}


def admissible(l) -> bool:
    l1, l2, l3 = l
    return (
        min(l) >= 0
        and (l1 + l2 + l3) % 2 == 0
        and l1 <= l2 + l3
        and l2 <= l1 + l3
        and l3 <= l1 + l2
    )


def primed(l):
    """l'_k = l_ij = (l_i + l_j - l_k) / 2; requires an even sum."""
    l1, l2, l3 = l
    s = l1 + l2 + l3
    if s % 2:
        raise ValueError(f"{l} has odd sum")
    return ((s - 2 * l1) // 2, (s - 2 * l2) // 2, (s - 2 * l3) // 2)


def unprimed(lp):
    """Inverse of :func:`primed`: l_k = l'_i + l'_j."""
    a, b, c = lp
    return (b + c, a + c, a + b)


def pair_part(l, i, j):
    """l_ij = (l_i + l_j - l_k) / 2 (may be a half-integer for odd sums; returns 2*l_ij)."""
    k = 6 - i - j
    return l[i - 1] + l[j - 1] - l[k - 1]


def admissible_triples(max_sum: int):
    """All admissible triples with l1 + l2 + l3 <= max_sum, by increasing sum."""
    out = [l for l in product(range(max_sum + 1), repeat=3) if sum(l) <= max_sum and admissible(l)]
    return sorted(out, key=lambda l: (sum(l), l))


def delta(i):
    return tuple(1 if k == i else 0 for k in (1, 2, 3))


def add(a, b, s=1):
    return tuple(x + s * y for x, y in zip(a, b))
