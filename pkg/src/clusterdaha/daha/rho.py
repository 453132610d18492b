"""Embeddings of cluster tori into Weyl tori, and their action on lattice functions."""
from __future__ import annotations

from ..algebra import VT, I, Laurent, RatFunc, rsum
from ..cluster.mutation import mutate
from ..cluster.quiver import Quiver, kronecker, markov, mutate_quiver, x7
from ..cluster.torus import TorusElement
from ..lattice import LatticeFn
from .weyl import ONE_FACTOR, THREE_FACTORS, WeylElement


def _v(e):
    return Laurent.var(VT, "v", e)


def _c(coeff, qexp4=0, texp=0):
    return Laurent.monomial(VT, {"v": qexp4, "t": texp}, coeff)


class TorusEmbedding:
    """Multiplicative map Y_{h/2} -> Weyl element fixed on generators.

    ``gens[i] = (step, image)``: the generator is Y_{step * e_i / 2}; a lattice
    vector h must have h_i divisible by step_i.
    """

    def __init__(self, quiver: Quiver, gens: dict, factors=ONE_FACTOR):
        self.quiver = quiver
        self.gens = gens
        self.factors = factors

    def _gvec(self, i):
        h = [0] * self.quiver.n
        h[i - 1] = self.gens[i][0]
        return h

    def check_relations(self) -> bool:
        """rho(g_i) rho(g_j) = q^{-2(g_i, g_j)} rho(g_j) rho(g_i) for all generator pairs."""
        Q = self.quiver
        for i in self.gens:
            for j in self.gens:
                if i < j:
                    F = Q.form(self._gvec(i), self._gvec(j))
                    a, b = self.gens[i][1], self.gens[j][1]
                    if a * b != (b * a).scale(_v(-2 * F)):
                        return False
        return True

    def monomial(self, h) -> WeylElement:
        Q = self.quiver
        coords = {}
        for i in range(1, Q.n + 1):
            if not h[i - 1]:
                continue
            if i not in self.gens:
                raise ValueError(f"vertex {i} has no generator image")
            step = self.gens[i][0]
            if h[i - 1] % step:
                raise ValueError(f"exponent of vertex {i} not a multiple of the generator step")
            coords[i] = h[i - 1] // step
        # Y_{sum c_i g_i} = q^{sum_{i<j} c_i c_j (g_i, g_j)} prod_i Y_{g_i}^{c_i}
        idx = sorted(coords)
        ph = 0
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                i, j = idx[a], idx[b]
                ph += coords[i] * coords[j] * Q.form(self._gvec(i), self._gvec(j))
        out = WeylElement.const(_v(ph), self.factors)
        for i in idx:
            out = out * (self.gens[i][1] ** coords[i])
        return out

    def __call__(self, a: TorusElement) -> WeylElement:
        if a.quiver != self.quiver:
            raise ValueError("element lives on another quiver")
        out = WeylElement(self.factors)
        for h, c in a.terms.items():
            out = out + self.monomial(h).scale(c)
        return out


def _U(e=1, f=None, factors=ONE_FACTOR):
    return WeylElement.U(e, f, factors)


def _V(e=1, f=None, factors=ONE_FACTOR):
    return WeylElement.V(e, f, factors)


def cylinder_embedding() -> TorusEmbedding:
    """Initial chart: Y_{e_1/2} -> i q^{-1/2} U^-1, Y_{e_2/2} -> -i V^-1 U."""
    return TorusEmbedding(kronecker(), {
        1: (1, _U(-1).scale(_c(I, -2))),
        2: (1, (_V(-1) * _U(1)).scale(_c(-I))),
    })


def cylinder_embedding_mutated() -> TorusEmbedding:
    """Chart mu_1: Y_{e'_1/2} -> -i q^{1/2} U, Y_{e'_2/2} -> i V^-1 U^-1."""
    return TorusEmbedding(mutate_quiver(kronecker(), 1), {
        1: (1, _U(1).scale(_c(-I, 2))),
        2: (1, (_V(-1) * _U(-1)).scale(_c(I))),
    })


def rho0(a: TorusElement) -> WeylElement:
    return cylinder_embedding()(a)


def rho_minus1(a: TorusElement) -> WeylElement:
    """rho_{-1}: mutate at 1 and embed the mutated chart."""
    return cylinder_embedding_mutated()(mutate(a, 1))


def markov_embedding() -> TorusEmbedding:
    return TorusEmbedding(markov(), {
        1: (1, (_V(-1) * _U(-1)).scale(_c(I))),
        2: (1, _U(1).scale(_c(-I, 2))),
        3: (1, _V(1).scale(_c(-I, 2, -1))),
    })


def x7_embedding() -> TorusEmbedding:
    F = THREE_FACTORS
    gens = {}
    for odd, even, f in ((1, 2, "23"), (3, 4, "13"), (5, 6, "12")):
        gens[odd] = (1, (_V(-1, f, F) * _U(-1, f, F)).scale(_c(I)))
        gens[even] = (1, _U(1, f, F).scale(_c(-I, 2)))
    gens[7] = (2, (_V(1, "12", F) * _V(1, "13", F) * _V(1, "23", F)).scale(_c(-1, 4, -1)))
    return TorusEmbedding(x7(), gens, F)


_X7 = None


def rho_X7(a: TorusElement) -> WeylElement:
    global _X7
    if _X7 is None:
        _X7 = x7_embedding()
    return _X7(a)


# ---- lattice representation ----

def act(w: WeylElement, f: LatticeFn) -> LatticeFn:
    """(U f)(n) = q^n f(n), (V f)(n) = f(n - 1), factorwise; points are ints for one factor."""
    one = len(w.factors) == 1
    out = {}
    for (m, n), c in w.terms.items():
        cr = RatFunc(c)
        for pt, val in f.values.items():
            p = (pt,) if one else pt
            ph = sum(a * b for a, b in zip(n, p))
            tgt = tuple(a + b for a, b in zip(p, m))
            tgt = tgt[0] if one else tgt
            term = val * cr * RatFunc(_v(4 * ph))
            out.setdefault(tgt, []).append(term)
    return LatticeFn({k: rsum(v, VT) for k, v in out.items()})


def multiply(f: LatticeFn, weight) -> LatticeFn:
    """Pointwise product with a function n -> RatFunc."""
    return LatticeFn({n: c * weight(n) for n, c in f.values.items()})
