from fractions import Fraction

from hypothesis import strategies as st

from clusterdaha.algebra import Laurent, RatFunc, Scalar, VTX

small_int = st.integers(min_value=-5, max_value=5)
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw):
    re = draw(fracs)
    im = draw(st.one_of(st.just(Fraction(0)), fracs))
    return Scalar(re, im)


@st.composite
def laurents(draw, ctx=VTX, max_terms=4, gaussian=True):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    data = {}
    for _ in range(n):
        e = tuple(draw(st.integers(-3, 3)) for _ in range(ctx.n))
        c = draw(scalars()) if gaussian else draw(fracs)
        data[e] = c
    return Laurent.from_dict(ctx, data)


@st.composite
def nonzero_laurents(draw, ctx=VTX, max_terms=4, gaussian=True):
    p = draw(laurents(ctx, max_terms, gaussian))
    if not p:
        p = Laurent.const(ctx, draw(st.integers(1, 5)))
    return p


@st.composite
def binomial_ratfuncs(draw, ctx=VTX):
    """Rational functions whose denominators are products of 1 - M."""
    num = draw(laurents(ctx, 3, gaussian=False))
    out = RatFunc(num)
    for _ in range(draw(st.integers(0, 2))):
        e = tuple(draw(st.integers(-2, 2)) for _ in range(ctx.n))
        if not any(e):
            continue
        sign = draw(st.sampled_from([1, -1]))
        out = out / RatFunc.factored(Laurent.const(ctx, 1) - Laurent.monomial(ctx, e, sign))
    return out
