import pytest
from hypothesis import given
from hypothesis import strategies as st

from clusterdaha.algebra import VTX3, Laurent, RatFunc
from clusterdaha.macdonald_g1 import c_l, macdonald_P_pieri
from clusterdaha.macdonald_g2 import (
    K0, admissible, admissible_triples, build_Phi, enumerate_polytope, enumerate_polytope_bruteforce,
    g_raw, normalization_ratio, phi_closed, phi_mutation, phi_pieri_coeffs, phi_pieri_residual, pieri_residual,
    primed, unprimed, xi_residual,
)
from clusterdaha.verify import g2_eigen, g2_leading

SMALL = admissible_triples(4)

triples = st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))


@given(triples)
def test_admissible_is_symmetric(l):
    a, b, c = l
    assert admissible(l) == admissible((b, c, a)) == admissible((b, a, c))


@given(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)))
def test_primed_roundtrip(lp):
    l = unprimed(lp)
    assert admissible(l)
    assert primed(l) == lp


def test_admissible_examples():
    assert admissible((1, 1, 0))
    assert not admissible((2, 0, 0))
    assert not admissible((1, 1, 1))
    assert admissible_triples(2) == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_non_admissible_is_zero():
    assert phi_closed((2, 0, 0)).is_zero()
    assert build_Phi((1, 1, 1)).is_zero()


def test_small_Phi():
    x12 = Laurent.var(VTX3, "x12")
    t = Laurent.var(VTX3, "t")
    assert build_Phi((1, 1, 0)) == RatFunc((t + t**-1) * (x12 + x12**-1))


@pytest.mark.parametrize("l", SMALL)
def test_routes_agree(l):
    p = phi_closed(l)
    assert phi_mutation(l) == p
    assert build_Phi(l) == normalization_ratio(l).in_context(VTX3) * p


def test_printed_normalizations_fail():
    l = (1, 1, 0)
    assert build_Phi(l) != normalization_ratio(l, printed=True).in_context(VTX3) * phi_closed(l)


@pytest.mark.parametrize("l", SMALL)
def test_joint_eigenfunction(l):
    assert g2_eigen(l)


@pytest.mark.parametrize("l", SMALL)
def test_leading_coefficient(l):
    assert g2_leading(l)


def test_K0_rejects_non_admissible():
    with pytest.raises(ValueError):
        K0((2, 0, 0))


@pytest.mark.parametrize("l", [(2, 2, 2), (2, 1, 1), (3, 2, 1)])
def test_polytope_enumeration_matches_box(l):
    for k in [(0, 0, 0), (1, 0, 1), (1, 1, 1), (2, 1, 0)]:
        assert sorted(enumerate_polytope(k, l)) == sorted(enumerate_polytope_bruteforce(k, l))


@pytest.mark.parametrize("l", admissible_triples(4))
@pytest.mark.parametrize("axis", [(1, 2), (1, 3), (2, 3)])
def test_pieri_consistent(l, axis):
    assert pieri_residual(l, axis).is_zero()
    assert phi_pieri_residual(l, axis, phi_closed).is_zero()


def test_phi_pieri_has_four_terms():
    data = phi_pieri_coeffs((2, 2, 2))
    assert set(data.combined) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


@pytest.mark.parametrize("n", range(0, 4))
def test_genus_reduction(n):
    P = macdonald_P_pieri(n)
    rhs = (c_l(n) * P).subs({"x": {"x12": 1}}, VTX3)
    assert build_Phi((n, n, 0)) == rhs.in_context(VTX3)


@pytest.mark.parametrize("l", [(1, 1, 0), (2, 2, 2), (2, 1, 1)])
def test_lattice_eigen_equation(l):
    g = g_raw(l)
    for k in (1, 2, 3):
        assert len(xi_residual(g, l, k)) == 0
