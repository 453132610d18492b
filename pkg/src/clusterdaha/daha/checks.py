"""Exact verification of the Weyl-torus embeddings."""
from __future__ import annotations

import random

from ..algebra import VT, I, Laurent, RatFunc
from ..cluster.checks import Report, cylinder_An
from ..cluster.mutation import apply_word
from ..cluster.quiver import kronecker, markov, x7
from ..cluster.torus import TorusElement
from ..cluster.traces import B_PAIRS, L_A, L_B, L_cyl, L_torus, cylinder_A, tau_B
from ..lattice import LatticeFn
from .eta import L, collect_coeffs_expr, eta, eta_gen, eta_tensor, macdonald_expr, opB_expr
from ..macdonald_g1 import psi_plus, psi_plus_inv_q
from .rho import act, markov_embedding, multiply, rho0, rho_minus1, rho_X7
from .weyl import WeylElement


def _v(e):
    return Laurent.var(VT, "v", e)


def verify_g2_embed(verbose: bool = False) -> Report:
    """eta_{-1}^{(x)3}(O) = rho(L) for O_{A_k} -> L_{A_k} and O_{B_ij} -> L_{B_ij}."""
    rep = Report()
    for k in (1, 2, 3):
        lhs = eta_tensor(collect_coeffs_expr(k))
        rhs = rho_X7(L_A(k))
        rep.add(f"eta(O_A{k}) = rho(L_A{k})", lhs == rhs, "" if lhs == rhs or not verbose else f"{lhs} != {rhs}")
    for ij in B_PAIRS:
        lhs = eta_tensor(opB_expr(*ij))
        rhs = rho_X7(L_B(*ij))
        rep.add(f"eta(O_B{ij[0]}{ij[1]}) = rho(L_B{ij[0]}{ij[1]})", lhs == rhs,
                "" if lhs == rhs or not verbose else f"{lhs} != {rhs}")
    # equivariance spot check through the twist formula
    qq = _v(4) - _v(-4)
    LA, LB = L_A(1), L_B(1, 2)
    img = rho_X7(apply_word(LA, tau_B(1, 2).inverse())).scale(qq)
    a, b = rho_X7(LA), rho_X7(LB)
    rep.add("rho(tau_B12^-1(L_A1)) = twist formula image",
            img == (a * b).scale(_v(2)) - (b * a).scale(_v(-2)))
    return rep


def verify_eta_generators() -> Report:
    rep = Report()
    U, V = WeylElement.U, WeylElement.V
    one = WeylElement.const(1)
    rep.add("eta_-1(H_0) = U^-1", eta_gen(-1, 0) == U(-1))
    rep.add("eta_-1(H_1) = q^{1/2} V^-1 U^-1", eta_gen(-1, 1) == (V(-1) * U(-1)).scale(_v(2)))
    rep.add("eta_-1(H_2) = q (V^-2 U^-1 - U)", eta_gen(-1, 2) == (V(-2) * U(-1) - U(1)).scale(_v(4)))
    rep.add("eta_-1(L) = V^-1 + (1 - U^2) V", eta_gen(-1, "L") == V(-1) + (one - U(2)) * V())
    rep.add("eta_0(L) = V + V^-1 (1 - U^2)", eta_gen(0, "L") == V() + V(-1) * (one - U(2)))
    rep.add("rho_0(L_cyl) = eta_0(L)", rho0(L_cyl()) == eta_gen(0, "L"))
    rep.add("rho_-1(L_cyl) = eta_-1(L)", rho_minus1(L_cyl()) == eta_gen(-1, "L"))
    a0 = U(-1).scale(Laurent.monomial(VT, {"v": -2}, I))
    rep.add("rho_0(A_0) = i q^{-1/2} U^-1", rho0(cylinder_A(2)) == a0)
    rep.add("rho_-1(A_0) = i q^{-1/2} U^-1", rho_minus1(cylinder_A(2)) == a0)
    return rep


def verify_genus1() -> Report:
    """Markov chart: L_(1,0) -> eta_-1(x + x^-1), L_(0,1) -> eta_-1(M), central element -q t^-2."""
    rep = Report()
    m = markov_embedding()
    t = L_torus()
    rep.add("relations of the Markov embedding", m.check_relations())
    rep.add("L_(1,0) -> eta_-1(x + x^-1)", m(t["L10"]) == eta(-1, L))
    rep.add("L_(0,1) -> eta_-1(M)", m(t["L01"]) == eta(-1, macdonald_expr()))
    c = m(TorusElement.Y(markov(), {1: 2, 2: 2, 3: 2}))
    rep.add("Y_{e1+e2+e3} -> -q t^-2", c == WeylElement.const(Laurent.monomial(VT, {"v": 4, "t": -2}, -1)))
    return rep


def _intertwiner_elems():
    return {"A0": cylinder_A(2), "L": L_cyl(), "A1": cylinder_An(1)}


def reverse_weight(n: int, literal: bool = False) -> RatFunc:
    """Weight of the map (V, rho_0) -> (V_+, rho_-1): Psi^+_{q^-1}[-n-1], or [n-1] if ``literal``."""
    return psi_plus_inv_q(n - 1 if literal else -n - 1)


def intertwiner_check(radius: int = 10, literal_reverse: bool = False) -> Report:
    """mu_1 o rho_-1(a) = rho_0(a) o mu_1 on delta_l, |l| <= radius, and the reverse map."""
    rep = Report()
    fwd = lambda f: multiply(f, psi_plus)
    rev = lambda f: multiply(f, lambda n: reverse_weight(n, literal_reverse))
    for name, a in _intertwiner_elems().items():
        r0, r1 = rho0(a), rho_minus1(a)
        ok_f = ok_r = True
        for l in range(-radius, radius + 1):
            d = LatticeFn.delta(l)
            ok_f = ok_f and fwd(act(r1, d)) == act(r0, fwd(d))
            ok_r = ok_r and rev(act(r0, d)) == act(r1, rev(d))
        rep.add(f"mu_1 intertwines rho_-1 -> rho_0 on {name}", ok_f)
        rep.add(f"reverse map intertwines rho_0 -> rho_-1 on {name}", ok_r)
    kernel = all(not rev(LatticeFn.delta(l)).values for l in range(0, radius + 1))
    image_neg = all(bool(rev(LatticeFn.delta(l)).values) for l in range(-radius, 0))
    rep.add("reverse map kills functions supported on Z>=0", kernel)
    rep.add("reverse map is injective on functions supported on Z<0", image_neg)
    return rep


def _random_torus(rng, Q, nterms=3, box=2, even=()):
    out = TorusElement(Q)
    for _ in range(nterms):
        h = tuple(2 * rng.randint(-1, 1) if i + 1 in even else rng.randint(-box, box) for i in range(Q.n))
        out = out + TorusElement(Q, {h: Laurent.monomial(VT, {"v": rng.randint(-4, 4)}, rng.choice([1, -1, 2]))})
    return out


def homomorphism_sample(n: int = 100, seed: int = 0) -> Report:
    """rho(a b) = rho(a) rho(b) on random pairs, for the cylinder, Markov and X7 embeddings."""
    rng = random.Random(seed)
    rep = Report()
    cases = [("cylinder", kronecker(), rho0, ()), ("markov", markov(), markov_embedding(), ()),
             ("x7", x7(), rho_X7, (7,))]
    for name, Q, emb, even in cases:
        ok = True
        for _ in range(n // len(cases) + 1):
            a, b = _random_torus(rng, Q, even=even), _random_torus(rng, Q, even=even)
            ok = ok and emb(a * b) == emb(a) * emb(b)
        rep.add(f"{name} embedding multiplicative on random products", ok)
    return rep


def faithfulness_sample(n: int = 20, radius: int = 6, seed: int = 1) -> Report:
    """Distinct Weyl elements act differently on some delta_l, |l| <= radius (sampled)."""
    rng = random.Random(seed)
    ok = True
    for _ in range(n):
        a = WeylElement()
        for _ in range(3):
            a = a + WeylElement.mono(rng.randint(-2, 2), rng.randint(-2, 2), Laurent.monomial(VT, {"v": 4 * rng.randint(-2, 2)}))
        if a.is_zero():
            continue
        ok = ok and any(act(a, LatticeFn.delta(l)).values for l in range(-radius, radius + 1))
    rep = Report()
    rep.add("nonzero sampled elements act nontrivially", ok)
    return rep
