import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterdaha.algebra import VT, Laurent, RatFunc
from clusterdaha.algebra.scalar import I
from clusterdaha.cluster import TorusElement, kronecker, x7
from clusterdaha.cluster.traces import L_A, L_B
from clusterdaha.daha import (
    THREE_FACTORS, H, L, WeylElement, act, collect_coeffs_expr, cylinder_embedding,
    cylinder_embedding_mutated, embed_factor, eta, eta_gen, eta_tensor, homomorphism_sample, intertwiner_check,
    markov_embedding, opB_expr, reverse_weight, rho0, rho_X7, verify_eta_generators, verify_g2_embed,
    verify_genus1, x7_embedding,
)
from clusterdaha.diffops import genus2_opA, genus2_opB, hcheck, mul_op
from clusterdaha.export import weyl_to_json
from clusterdaha.lattice import LatticeFn
from clusterdaha.macdonald_g1 import psi_plus_inv_q

U, V = WeylElement.U, WeylElement.V


def _v(e):
    return Laurent.var(VT, "v", e)


# ---- Weyl torus ----

def test_weyl_commutation():
    assert U() * V() == (V() * U()).scale(_v(4))
    assert (V() * U()) == WeylElement.mono(1, 1)


def test_weyl_inverse_powers():
    assert U() ** -1 == U(-1)
    assert (V() * U()) ** -1 * (V() * U()) == WeylElement.const(1)


weyl = st.lists(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-3, 3)), max_size=3
).map(lambda ts: sum((WeylElement.mono(m, n, c) for m, n, c in ts), WeylElement()))


@settings(max_examples=40)
@given(weyl, weyl, weyl)
def test_weyl_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_factors_commute():
    a = embed_factor(U() + V(), "12")
    b = embed_factor(U() * V(), "13")
    assert a * b == b * a
    assert a.factors == THREE_FACTORS


def test_weyl_json():
    doc = weyl_to_json(V(-1) + U(2))
    assert doc == {"vars": ["V", "U"], "terms": [{"exp": [0, 2], "coeff": "1"}, {"exp": [-1, 0], "coeff": "1"}]}


# ---- eta ----

def test_eta_generator_images():
    assert verify_eta_generators().ok


@pytest.mark.parametrize("n", range(-3, 5))
def test_eta_respects_ladder(n):
    qq = _v(4) - _v(-4)
    Lw = eta_gen(-1, "L")
    lhs = eta_gen(-1, n + 1).scale(qq)
    assert lhs == (eta_gen(-1, n) * Lw).scale(_v(2)) - (Lw * eta_gen(-1, n)).scale(_v(-2))


def test_eta_on_diffops():
    assert eta(-1, hcheck(0)) == U(-1)
    assert eta(0, mul_op()) == eta_gen(0, "L")
    with pytest.raises(ValueError):
        eta(-1, hcheck(0) * hcheck(1))
    with pytest.raises(ValueError):
        eta_gen(2, "L")


def test_word_to_diffop():
    w = H(1) * L - L * H(1)
    assert w.to_diffop() == hcheck(1) * mul_op() - mul_op() * hcheck(1)
    assert eta(-1, w) == eta_gen(-1, 1) * eta_gen(-1, "L") - eta_gen(-1, "L") * eta_gen(-1, 1)
    for k in (1, 2, 3):
        assert collect_coeffs_expr(k).to_diffop() == genus2_opA(k)
    assert opB_expr(1, 2).to_diffop() == genus2_opB(1, 2)


# ---- rho ----

@pytest.mark.parametrize("emb", [cylinder_embedding, cylinder_embedding_mutated, markov_embedding, x7_embedding])
def test_embedding_relations(emb):
    assert emb().check_relations()


def test_cylinder_rho_on_generators():
    Q = kronecker()
    assert rho0(TorusElement.Y(Q, {1: 1})) == U(-1).scale(Laurent.monomial(VT, {"v": -2}, I))
    assert rho0(TorusElement.Y(Q, {2: 1})) == (V(-1) * U()).scale(Laurent.const(VT, -I))


def test_x7_monomial_needs_even_step():
    with pytest.raises(ValueError):
        rho_X7(TorusElement.Y(x7(), {7: 1}))


def test_rho_multiplicative():
    assert homomorphism_sample(30, seed=3).ok


def test_genus1_embedding():
    assert verify_genus1().ok


def test_genus2_embedding():
    rep = verify_g2_embed()
    assert rep.ok, str(rep)


def test_embedding_of_A1_spelled_out():
    assert eta_tensor(collect_coeffs_expr(1)) == rho_X7(L_A(1))
    assert eta_tensor(opB_expr(2, 3)) == rho_X7(L_B(2, 3))


# ---- lattice representation ----

def test_act_on_delta():
    d = LatticeFn.delta(2)
    assert act(U(), d) == LatticeFn({2: RatFunc(_v(8))})
    assert act(V(), d) == LatticeFn.delta(3)


def test_intertwiners():
    rep = intertwiner_check(6)
    assert rep.ok, str(rep)


def test_literal_reverse_weight_fails():
    assert not intertwiner_check(4, literal_reverse=True).ok


def test_reverse_weight_values():
    assert reverse_weight(0).is_zero()
    assert reverse_weight(-1) == psi_plus_inv_q(0)
    assert reverse_weight(-3) == psi_plus_inv_q(2)
