"""Trace elements and mapping class group words on the four charts."""
from __future__ import annotations

from ..algebra import VT, Laurent
from .mutation import MCGWord, mut, perm_move
from .quiver import kronecker, markov, x7
from .torus import TorusElement


def _Y(Q, coeff=1, **halves):
    """Y with half-unit exponents given as e1=..., e7=..."""
    return TorusElement.Y(Q, {int(k[1:]): v for k, v in halves.items()}, coeff)


def _q(e):
    return Laurent.var(VT, "v", 4 * e)


def three_term(Q, a, b):
    """Y_{-(e_a+e_b)/2} + Y_{(e_b-e_a)/2} + Y_{(e_a+e_b)/2}."""
    return (
        TorusElement.Y(Q, {a: -1, b: -1})
        + TorusElement.Y(Q, {a: -1, b: 1})
        + TorusElement.Y(Q, {a: 1, b: 1})
    )


def L_cyl():
    return three_term(kronecker(), 1, 2)


def cylinder_A(n_vertex):
    """Initial A-variables: e_1^v = -e_2/2, e_2^v = e_1/2."""
    Q = kronecker()
    return TorusElement.Y(Q, {2: -1}) if n_vertex == 1 else TorusElement.Y(Q, {1: 1})


def L_torus():
    Q = markov()
    l10 = three_term(Q, 1, 2)
    l01 = TorusElement.Y(Q, {1: -1, 3: -1}) + TorusElement.Y(Q, {1: 1, 3: -1}) + TorusElement.Y(Q, {1: 1, 3: 1})
    return {"L10": l10, "L01": l01}


B_PAIRS = {(1, 2): (5, 6), (1, 3): (3, 4), (2, 3): (1, 2)}
# L_{A_k}: vertex of the extra even node and the two odd nodes in the product
A_DATA = {1: (2, (3, 5), (2, 3)), 2: (4, (1, 5), (1, 3)), 3: (6, (1, 3), (1, 2))}


def L_B(i, j):
    a, b = B_PAIRS[(i, j)]
    return three_term(x7(), a, b)


def L_A(k):
    """Literal A-cycle formula, products taken left factor first."""
    Q = x7()
    even, (o1, o2), bij = A_DATA[k]
    top = {7: 2, even: 1, 1: 1, 3: 1, 5: 1}
    bot = {i: -c for i, c in top.items()}
    one = TorusElement.one(Q)
    y1 = TorusElement.Y(Q, {o1: 2})
    y2 = TorusElement.Y(Q, {o2: 2})
    f1 = one + y1.scale(_q(1))
    f2 = one + y2.scale(_q(1))
    return (
        TorusElement.Y(Q, top)
        + L_B(*bij) * TorusElement.Y(Q, {o1: 1, o2: 1})
        + TorusElement.Y(Q, bot) * f1 * f2
    )


def trace_elements() -> dict:
    out = {"L_cyl": L_cyl()}
    t = L_torus()
    out["L_(1,0)"] = t["L10"]
    out["L_(0,1)"] = t["L01"]
    for ij in B_PAIRS:
        out[f"L_B{ij[0]}{ij[1]}"] = L_B(*ij)
    for k in (1, 2, 3):
        out[f"L_A{k}"] = L_A(k)
    return out


def casimir_x7():
    """C_q = Y_{e_7 + (e_1 + ... + e_6)/2}."""
    return TorusElement.Y(x7(), {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 2})


# ---- words ----

def tau_cyl():
    return MCGWord.composition(perm_move((1, 2)), mut(1))


def tau_plus_inv():
    return MCGWord.composition(perm_move((1, 2)), mut(1))


def tau_minus():
    return MCGWord.composition(perm_move((1, 3)), mut(3))


def tau_markov():
    """tau = tau_+^-1 tau_- (tau_- acts first)."""
    return MCGWord.composition(tau_plus_inv(), tau_minus())


def tau_B(i, j):
    a, b = B_PAIRS[(i, j)]
    return MCGWord.composition(perm_move((a, b)), mut(a))


def gamma():
    return MCGWord.composition(perm_move((1, 2), (3, 4), (5, 6)), mut(7), mut(5), mut(3), mut(1), mut(7))


def sigma():
    return MCGWord.composition(perm_move((1, 5), (3, 7)), mut(7), mut(3), mut(5), mut(1), mut(7), mut(3))


COMPLEMENT = {1: (2, 3), 2: (1, 3), 3: (1, 2)}


def tau_A(k):
    """A-cycle twist sigma o tau_{B_ij} o sigma, ij the complement of k."""
    return MCGWord.composition(sigma(), tau_B(*COMPLEMENT[k]), sigma())


def dehn_twists() -> dict:
    out = {"tau_cyl": tau_cyl(), "tau_plus_inv": tau_plus_inv(), "tau_minus": tau_minus(),
           "tau_markov": tau_markov(), "gamma": gamma(), "sigma": sigma()}
    for ij in B_PAIRS:
        out[f"tau_B{ij[0]}{ij[1]}"] = tau_B(*ij)
    for k in (1, 2, 3):
        out[f"tau_A{k}"] = tau_A(k)
    return out
