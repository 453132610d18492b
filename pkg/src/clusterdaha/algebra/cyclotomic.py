"""Cyclotomic polynomials and how they transform under monomial maps."""
from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple:
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    r = n
    for p in set(prime_factors(n)):
        r = r // p * (p - 1)
    return r


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple:
    """Coefficients (lowest degree first) of the n-th cyclotomic polynomial.

    ``cyclotomic(1)`` is ``X - 1``.
    """
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _exact_div(poly, list(cyclotomic(d)))
    return tuple(poly)


def _exact_div(p, d):
    p = list(p)
    q = [0] * (len(p) - len(d) + 1)
    lead = d[-1]
    for i in range(len(q) - 1, -1, -1):
        c = p[i + len(d) - 1] // lead
        q[i] = c
        if c:
            for j, dj in enumerate(d):
                p[i + j] -= c * dj
    assert not any(p), "cyclotomic division not exact"
    return q


def value_at_one(d: int) -> int:
    """Phi_d(1): 0 for d = 1, p for prime powers, 1 otherwise."""
    if d == 1:
        return 0
    ps = set(prime_factors(d))
    return ps.pop() if len(ps) == 1 else 1


@lru_cache(maxsize=None)
def power_split(d: int, g: int) -> tuple:
    """Indices e with Phi_d(Y^g) = prod Phi_e(Y)."""
    if g == 1:
        return (d,)
    p = prime_factors(g)[0]
    rest = g // p
    inner = (d * p,) if d % p == 0 else (d * p, d)
    out = []
    for e in inner:
        out.extend(power_split(e, rest))
    return tuple(sorted(out))


def binomial_split(g: int, sign: int) -> tuple:
    """Factor ``Y^g - 1`` (sign=-1) or ``Y^g + 1`` (sign=+1) into Phi_e(Y) indices."""
    if sign < 0:
        return tuple(divisors(g))
    return tuple(e for e in divisors(2 * g) if g % e)
