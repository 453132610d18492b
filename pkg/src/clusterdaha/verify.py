"""Verification suites run by the command line and the acceptance tests."""
from __future__ import annotations

import os
import time
from fractions import Fraction
from concurrent.futures import ThreadPoolExecutor

from .algebra import VTX, VTX3, Laurent, RatFunc
from .cluster import (
    Report, TorusElement, build_charts, commuting_families, markov_permutation,
    mutate, mutate_quiver, negative_control, spotcheck_suite, trace_elements, verify_classical,
    verify_twist_lemmas, verify_x7_words,
)
from .cluster.mutation import NotLaurentInChart
from .diffops import genus2_opA, hcheck, mul_op
from .qspecial import chu_vandermonde_sides, qmono, whittaker

DEFAULT_BOUNDS = {"qspecial": 30, "g1": 20, "g2": 8, "cluster": 4, "embed": 10}
SUITES = ("qspecial", "g1", "g2", "cluster", "embed")


def threads():
    try:
        return max(1, int(os.environ.get("CLUSTERDAHA_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    n = threads()
    if n > 1:
        with ThreadPoolExecutor(n) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


# ---- genus 0 ----

def whittaker_eigen(l: int) -> bool:
    """H_0 W_l = q^-l W_l."""
    W = whittaker(l)
    return hcheck(0).apply(W) == qmono(VTX, -l) * W


def whittaker_pieri(l: int) -> bool:
    """(x + x^-1) W_l = W_{l+1} + (1 - q^{2l}) W_{l-1}."""
    x = Laurent.var(VTX, "x")
    lhs = (x + x**-1) * whittaker(l)
    rhs = whittaker(l + 1) + (Laurent.const(VTX, 1) - qmono(VTX, 2 * l)) * whittaker(l - 1)
    return lhs == rhs


def hcheck_ladder(n: int) -> bool:
    """(q - q^-1) H_{n+1} = q^{1/2} H_n L - q^{-1/2} L H_n."""
    L = mul_op()
    lhs = hcheck(n + 1).scale(RatFunc(qmono(VTX, 1) - qmono(VTX, -1)))
    half = Fraction(1, 2)
    rhs = (hcheck(n) * L).scale(RatFunc(qmono(VTX, half))) - (L * hcheck(n)).scale(RatFunc(qmono(VTX, -half)))
    return lhs == rhs


def chu_vandermonde(n: int) -> bool:
    lhs, rhs = chu_vandermonde_sides(n)
    return lhs == rhs


def suite_qspecial(bound: int = 30) -> Report:
    rep = Report()
    ls = list(range(bound + 1))
    rep.add(f"H_0 W_l = q^-l W_l, l <= {bound}", all(_pmap(whittaker_eigen, ls)))
    rep.add(f"Whittaker Pieri rule, l <= {bound}", all(_pmap(whittaker_pieri, ls)))
    rep.add("Chu-Vandermonde sum, n <= 10", all(_pmap(chu_vandermonde, range(11))))
    rep.add("H_n ladder relation, |n| <= 4", all(hcheck_ladder(n) for n in range(-4, 5)))
    return rep


# ---- genus 1 ----

def g1_routes(l: int) -> bool:
    from .macdonald_g1 import macdonald_P_explicit, macdonald_P_pieri, reconstruct_P

    P = macdonald_P_pieri(l)
    return P == macdonald_P_explicit(l) and P == reconstruct_P(l)


def g1_eigen(l: int) -> bool:
    from .macdonald_g1 import check_eigen, macdonald_P_pieri

    return check_eigen(macdonald_P_pieri(l), l)


def suite_g1(bound: int = 20) -> Report:
    rep = Report()
    ls = list(range(bound + 1))
    rep.add(f"Pieri = explicit = reconstruct, l <= {bound}", all(_pmap(g1_routes, ls)))
    rep.add(f"M P_l = (q^l t + q^-l t^-1) P_l, l <= {bound}", all(_pmap(g1_eigen, ls)))
    return rep


# ---- genus 2 ----

def g2_eigen(l) -> bool:
    from .macdonald_g2 import phi_closed

    p = phi_closed(l)
    for k in (1, 2, 3):
        ev = RatFunc(qmono(VTX3, l[k - 1], t=1) + qmono(VTX3, -l[k - 1], t=-1))
        if genus2_opA(k).apply(p) != ev * p:
            return False
    return True


def g2_routes(l) -> bool:
    from .macdonald_g2 import build_Phi, normalization_ratio, phi_closed, phi_mutation

    p = phi_closed(l)
    return phi_mutation(l) == p and build_Phi(l) == normalization_ratio(l).in_context(VTX3) * p


def g2_leading(l) -> bool:
    from .macdonald_g2 import K0, phi_closed, primed

    c = phi_closed(l).x_coefficients(("x23", "x13", "x12"))
    return c.get(primed(l)) == K0(l).in_context(VTX3)


def g2_phi_pieri(l) -> bool:
    from .macdonald_g2 import phi_closed, phi_pieri_residual

    return all(phi_pieri_residual(l, ax, phi_closed).is_zero() for ax in ((1, 2), (1, 3), (2, 3)))


def g2_reduction(n: int) -> bool:
    """build_Phi on (n, n, 0) and permutations equals c_n P_n in the matching variable."""
    from .macdonald_g1 import c_l, macdonald_P_pieri
    from .macdonald_g2 import build_Phi

    P = macdonald_P_pieri(n)
    for l, var in (((n, n, 0), "x12"), ((n, 0, n), "x13"), ((0, n, n), "x23")):
        rhs = (c_l(n) * P).subs({"x": {var: 1}}, VTX3)
        if build_Phi(l) != rhs.in_context(VTX3):
            return False
    return True


def suite_g2(bound: int = 8) -> Report:
    from .macdonald_g2 import admissible_triples

    rep = Report()
    ts = admissible_triples(bound)
    rep.add(f"phi_closed joint eigenfunction of O_A1..3, |l| <= {bound}", all(_pmap(g2_eigen, ts)))
    rep.add(f"phi_mutation = phi_closed and build_Phi = ratio * phi_closed, |l| <= {bound}",
            all(_pmap(g2_routes, ts)))
    rep.add(f"leading coefficient = K0, |l| <= {bound + 2}", all(_pmap(g2_leading, admissible_triples(bound + 2))))
    pb = min(bound, 6)
    rep.add(f"phi Pieri rule on all axes, |l| <= {pb}", all(_pmap(g2_phi_pieri, admissible_triples(pb))))
    rep.add("genus reduction build_Phi((n,n,0)) = c_n P_n, n <= 6", all(_pmap(g2_reduction, range(7))))
    return rep


# ---- cluster ----

def involutivity(Q) -> bool:
    """mu_k mu_k = id on the quiver and on half-lattice monomials and traces that stay Laurent."""
    traces = [a for a in trace_elements().values() if a.quiver == Q]
    for k in range(1, Q.n + 1):
        if mutate_quiver(mutate_quiver(Q, k), k) != Q:
            return False
        elems = list(traces)
        for i in range(Q.n):
            for s in (1, -1, 2, -2):
                h = [0] * Q.n
                h[i] = s
                elems.append(TorusElement(Q, {tuple(h): 1}))
        for a in elems:
            try:
                b = mutate(mutate(a, k), k)
            except (NotLaurentInChart, ValueError):
                continue
            if b != a:
                return False
    return True


def suite_cluster(bound: int = 4) -> Report:
    rep = Report()
    for name, Q in build_charts().items():
        rep.add(f"mutation involutive on {name}", involutivity(Q))
    for part in (verify_twist_lemmas(bound), verify_x7_words(), verify_classical(), commuting_families()):
        rep.entries.extend(part.entries)
    rep.add("Markov tau acts as (3 2 1)", markov_permutation() == [{1: 3, 2: 1, 3: 2}])
    rep.entries.extend(spotcheck_suite(max_len=bound).entries)
    ctl = negative_control()
    rep.add("negative control: non-Laurent element is detected", not ctl.ok and len(ctl.failures()) == 1)
    return rep


# ---- embedding ----

def suite_embed(bound: int = 10) -> Report:
    from .daha import (
        faithfulness_sample, homomorphism_sample, intertwiner_check, verify_eta_generators, verify_g2_embed,
        verify_genus1,
    )

    rep = Report()
    for part in (verify_g2_embed(), verify_eta_generators(), verify_genus1(), intertwiner_check(bound),
                 homomorphism_sample(), faithfulness_sample()):
        rep.entries.extend(part.entries)
    return rep


RUNNERS = {
    "qspecial": suite_qspecial,
    "g1": suite_g1,
    "g2": suite_g2,
    "cluster": suite_cluster,
    "embed": suite_embed,
}


def run_suite(name: str, bound: int | None = None):
    """Run one suite; returns (Report, seconds)."""
    t0 = time.perf_counter()
    rep = RUNNERS[name](DEFAULT_BOUNDS[name] if bound is None else bound)
    return rep, time.perf_counter() - t0

