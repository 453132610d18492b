"""Genus 2 Macdonald polynomials Phi_l from the Pieri rules (AS normalization)."""
from __future__ import annotations

import threading

from ..algebra import VT, VTX3, Laurent, RatFunc, rsum
from ..qspecial import bracket
from .triples import AXES, add, admissible, delta


class PieriSingular(ZeroDivisionError):
    pass


def pieri_coeff(l, a: int, b: int, axis=(1, 2)) -> RatFunc:
    """C_{a,b}(l) for multiplication by x_ij + x_ij^-1, axis = (i, j)."""
    i, j = axis
    k = AXES[tuple(sorted(axis))]
    li, lj, lk = l[i - 1], l[j - 1], l[k - 1]
    n1 = a * li + b * lj + lk
    n2 = a * li + b * lj - lk
    if n1 % 2 or (a + b) % 2:
        raise ValueError("Pieri coefficient needs an even-sum triple")
    num = (
        bracket(n1 // 2, (a + b + 2) // 2)
        * bracket(n2 // 2, (a + b) // 2)
        * bracket(li - 1, 2)
        * bracket(lj - 1, 2)
    )
    den = (
        bracket(li, (a + 3) // 2)
        * bracket(li - 1, (a + 3) // 2)
        * bracket(lj, (b + 3) // 2)
        * bracket(lj - 1, (b + 3) // 2)
    )
    if den.is_zero():
        raise PieriSingular(f"Pieri coefficient singular at {l}")
    return num / den * (a * b)


_table = {(0, 0, 0): RatFunc.const(VTX3, 1)}
_lock = threading.Lock()


def _xsum(var):
    x = Laurent.var(VTX3, var)
    return RatFunc(x + x**-1)


def _solve(m):
    for (i, j) in ((1, 2), (1, 3), (2, 3)):
        base = add(add(m, delta(i), -1), delta(j), -1)
        if not admissible(base):
            continue
        cpp = pieri_coeff(base, 1, 1, (i, j))
        if cpp.is_zero():
            continue
        rhs = [_xsum(f"x{i}{j}") * build_Phi(base)]
        for a, b in ((1, -1), (-1, 1), (-1, -1)):
            tgt = add(add(base, delta(i), a), delta(j), b)
            if admissible(tgt):
                rhs.append(-(pieri_coeff(base, a, b, (i, j)).in_context(VTX3) * build_Phi(tgt)))
        return rsum(rhs, VTX3) / cpp.in_context(VTX3)
    raise PieriSingular(f"no usable Pieri step reaches {m}")


def build_Phi(l) -> RatFunc:
    """Phi_l by recursion on l1 + l2 + l3; zero for non-admissible l."""
    l = tuple(l)
    if not admissible(l):
        return RatFunc(Laurent(VTX3))
    val = _table.get(l)
    if val is None:
        val = _solve(l)
        with _lock:
            _table.setdefault(l, val)
    return val


def pieri_residual(l, axis) -> RatFunc:
    """(x_ij + x_ij^-1) Phi_l - sum_ab C_ab(l) Phi_{l + a d_i + b d_j}; zero when consistent."""
    i, j = axis
    parts = [_xsum(f"x{i}{j}") * build_Phi(l)]
    for a in (1, -1):
        for b in (1, -1):
            tgt = add(add(l, delta(i), a), delta(j), b)
            if admissible(tgt):
                parts.append(-(pieri_coeff(l, a, b, axis).in_context(VTX3) * build_Phi(tgt)))
    return rsum(parts, VTX3)
