import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterdaha.algebra import VT, Laurent
from clusterdaha.cluster import (
    MCGWord, NotLaurentInChart, Quiver, TorusElement, apply_word, build_charts, check_infinitesimal_dehn,
    classical_GA, classical_GB, classical_specialize, commutator_q, commuting_families, kronecker,
    laurent_spotcheck, markov, markov_permutation, mut, mutate, mutate_quiver, mutation_words, negative_control,
    parse_word, perm_move, permute_quiver, to_dot, trace_elements, verify_classical, verify_twist_lemmas,
    verify_x7_words, word_quiver, x6, x7,
)
from clusterdaha.cluster.traces import L_A, L_B, L_cyl, cylinder_A, tau_B, tau_cyl
from clusterdaha.export import torus_to_json
from clusterdaha.verify import involutivity

v = Laurent.var(VT, "v")
qq = Laurent.var(VT, "v", 4) - Laurent.var(VT, "v", -4)


# ---- quivers ----

def test_chart_invariants():
    got = {name: (Q.n, Q.rank(), Q.det()) for name, Q in build_charts().items()}
    assert got == {"kronecker": (2, 2, 4), "markov": (3, 2, 0), "x6": (6, 6, 16), "x7": (7, 6, 0)}


def test_exchange_matrix_validation():
    with pytest.raises(ValueError):
        Quiver(((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Quiver(((0, 1),))


def test_kronecker_mutation_reverses_arrows():
    assert mutate_quiver(kronecker(), 1).eps == ((0, 2), (-2, 0))


def test_markov_is_mutation_invariant_up_to_reversal():
    Q = markov()
    for k in (1, 2, 3):
        M = mutate_quiver(Q, k)
        assert M.eps == tuple(tuple(-x for x in row) for row in Q.eps)


@pytest.mark.parametrize("name", ["kronecker", "markov", "x6", "x7"])
def test_mutation_involutive(name):
    assert involutivity(build_charts()[name])


@settings(max_examples=30)
@given(st.lists(st.integers(1, 7), max_size=6))
def test_word_then_inverse_is_identity_on_quiver(ks):
    w = MCGWord(tuple(mut(k) for k in ks)).then(MCGWord((perm_move((1, 2)),)))
    assert word_quiver(word_quiver(x7(), w), w.inverse()) == x7()


def test_permutation_of_quiver():
    Q = kronecker()
    assert permute_quiver(Q, {1: 2, 2: 1}).eps == ((0, 2), (-2, 0))


def test_dot_output():
    assert to_dot(kronecker(), "kronecker") == "digraph kronecker {\n  1;\n  2;\n  2 -> 1;\n  2 -> 1;\n}\n"


# ---- quantum torus ----

def _elems(Q, box=2):
    vec = st.tuples(*[st.integers(-box, box)] * Q.n)
    coeff = st.integers(-3, 3).map(lambda c: Laurent.const(VT, c))
    return st.dictionaries(vec, coeff, max_size=3).map(lambda d: TorusElement(Q, d))


@settings(max_examples=40)
@given(_elems(markov()), _elems(markov()), _elems(markov()))
def test_torus_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40)
@given(_elems(x6()), _elems(x6()))
def test_torus_distributes(a, b):
    c = TorusElement.Y(x6(), {1: 1, 3: -1})
    assert (a + b) * c == a * c + b * c


def test_torus_commutation_rule():
    Q = kronecker()
    y1 = TorusElement.Y(Q, {1: 1})
    y2 = TorusElement.Y(Q, {2: 1})
    # eps_12 = -2 so Y_{e1/2} Y_{e2/2} = v^2 Y_{(e1+e2)/2}
    assert y1 * y2 == TorusElement.Y(Q, {1: 1, 2: 1}, v**2)
    assert y2 * y1 == TorusElement.Y(Q, {1: 1, 2: 1}, v**-2)


def test_wrong_length_vector():
    with pytest.raises(ValueError):
        TorusElement(kronecker(), {(1, 2, 3): 1})


def test_mixing_quivers_rejected():
    with pytest.raises(ValueError):
        TorusElement.one(kronecker()) + TorusElement.one(markov())


# ---- mutation and words ----

@settings(max_examples=30)
@given(st.integers(1, 2), st.integers(-3, 3), st.integers(-3, 3))
def test_kronecker_monomials_mutate_back(k, a, b):
    y = TorusElement.Y(kronecker(), (a, b))
    try:
        once = mutate(y, k)
    except NotLaurentInChart:
        return
    assert mutate(once, k) == y


def test_non_laurent_raises():
    y = TorusElement.Y(kronecker(), {1: 2}) + TorusElement.Y(kronecker(), {2: 2})
    with pytest.raises(NotLaurentInChart):
        mutate(y, 1)


def test_parse_word():
    w = parse_word("m1 m2 (1 2)(3 4)")
    assert str(w) == "m1 m2 p(1>2,2>1) p(3>4,4>3)"
    assert parse_word("") == MCGWord()
    with pytest.raises(ValueError):
        parse_word("x1")


def test_composition_order():
    w = MCGWord.composition(perm_move((1, 2)), mut(1))
    assert str(w) == "m1 p(1>2,2>1)"
    assert str(w ** -1) == "p(1>2,2>1) m1"


def test_mutation_words_count():
    # 1 + 7 + 7*6 words of length <= 2
    assert len(mutation_words(7, 2)) == 50


def test_word_inverse_on_traces():
    w = parse_word("m1 m3 m7 (1 2)")
    for name in ("L_B12", "L_B13", "L_B23"):
        a = trace_elements()[name]
        assert apply_word(apply_word(a, w), w.inverse()) == a


# ---- traces and twists ----

def test_cylinder_trace_fixed():
    assert apply_word(L_cyl(), tau_cyl()) == L_cyl()


def test_infinitesimal_dehn():
    assert check_infinitesimal_dehn(3).ok


def test_twist_lemmas():
    rep = verify_twist_lemmas(2)
    assert rep.ok, str(rep)


def test_literal_twist_lemma_fails():
    LA, LB = L_A(3), L_B(1, 2)
    for s in (1, -1):
        img = apply_word(LA, tau_B(1, 2) ** s)
        assert img.scale(qq) != commutator_q(LA, LB, 1).scale(s)


def test_x7_words():
    rep = verify_x7_words()
    assert rep.ok, str(rep)


def test_markov_twist_is_a_permutation():
    assert markov_permutation() == [{1: 3, 2: 1, 3: 2}]


def test_commuting_families():
    assert commuting_families().ok


def test_classical_limit():
    assert verify_classical().ok
    assert classical_specialize(L_B(1, 2)) == classical_GB(1, 2)
    assert classical_specialize(L_A(2)) == classical_GA(2)


def test_laurent_spotcheck_and_control():
    rep = laurent_spotcheck(cylinder_A(1), [tau_cyl() ** n for n in (1, -1, 3)])
    assert rep.ok
    ctl = negative_control()
    assert [p for _, p, _ in ctl.entries] == [False, True]


def test_torus_json():
    doc = torus_to_json(L_cyl())
    assert doc == {"vars": ["e1/2", "e2/2"], "terms": [
        {"exp": [1, 1], "coeff": "1"}, {"exp": [-1, 1], "coeff": "1"}, {"exp": [-1, -1], "coeff": "1"}]}
