import pytest
from hypothesis import given, strategies as st

from ivpoly.errors import BadModulus, NonCoprimeModuli, NonMonicDivisor, ParseError, ZeroDenominator
from ivpoly.exact_rings import (
    IntPoly,
    RationalPolyRep,
    ResiduePoly,
    canonicalize,
    crt_coeffwise,
    format_poly,
    monic_divmod,
    parse_poly,
    parse_poly_arg,
    reduce_mod,
)

from conftest import int_polys, monic_polys

P = parse_poly


def test_zero_poly_is_empty():
    z = IntPoly([0, 0, 0])
    assert z.coeffs == ()
    assert z.degree == float("-inf")
    assert IntPoly([1, 2, 0]).degree == 1


def test_arithmetic_and_format():
    assert P("(x+1)^2") == IntPoly([1, 2, 1])
    # (x^4 - x)(x^2 - x) = x^6 - x^5 - x^3 + x^2
    assert P("(x^4-x)*(x^2-x)") == IntPoly([0, 0, 1, -1, 0, -1, 1])
    assert str(P("x^2-3*x+1")) == "x^2-3*x+1"
    assert str(IntPoly()) == "0"
    assert format_poly((-1, 0, -2)) == "-2*x^2-1"
    assert P("3 - x") == IntPoly([3, -1])
    assert P("x^2")(5) == 25


@pytest.mark.parametrize("bad", ["", "y+1", "x/2", "1.5*x", "x**", "sin(x)"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_parse_poly_arg_forms():
    assert parse_poly_arg('{"coeffs":[0,-1,1]}') == P("x^2-x")
    assert parse_poly_arg([0, -1, 1]) == P("x^2-x")
    assert parse_poly_arg("x^2 - x") == P("x^2-x")
    with pytest.raises(ParseError):
        parse_poly_arg('{"coeffs":[0.5]}')


# canonicalize ---------------------------------------------------------------

def test_canonicalize_examples():
    assert canonicalize(P("2*x^2-2*x"), 4) == RationalPolyRep(P("x^2-x"), 2)
    assert canonicalize(P("x^2-x"), 1) == RationalPolyRep(P("x^2-x"), 1)
    got = canonicalize(P("6*x"), -4)
    assert got == RationalPolyRep(P("-3*x"), 2)
    # cross-multiplication: g*d' == g'*d
    assert P("6*x").scale(got.den) == got.num.scale(-4)


def test_canonicalize_zero_and_errors():
    assert canonicalize(IntPoly(), 12) == RationalPolyRep(IntPoly(), 1)
    with pytest.raises(ZeroDenominator):
        canonicalize(P("x"), 0)
    with pytest.raises(ValueError):
        RationalPolyRep(P("2*x"), 2)


@given(int_polys(), st.integers(-60, 60).filter(bool))
def test_canonicalize_properties(g, d):
    f = canonicalize(g, d)
    assert f.den >= 1
    assert g.scale(f.den) == f.num.scale(d)
    assert canonicalize(f.num, f.den) == f


@given(int_polys(4, 9), st.integers(1, 9), int_polys(4, 9), st.integers(1, 9))
def test_rational_arithmetic_matches_fractions(g1, d1, g2, d2):
    from fractions import Fraction

    a, b = canonicalize(g1, d1), canonicalize(g2, d2)
    for x in (-2, 0, 3):
        fa = Fraction(a.num(x), a.den)
        fb = Fraction(b.num(x), b.den)
        s, p = a + b, a * b
        assert Fraction(s.num(x), s.den) == fa + fb
        assert Fraction(p.num(x), p.den) == fa * fb


def test_rational_json_round_trip():
    f = canonicalize(P("x^2-x"), 2)
    assert RationalPolyRep.from_json(f.to_json()) == f
    assert f.to_json() == {"num": {"coeffs": [0, -1, 1]}, "den": 2}


# monic_divmod ----------------------------------------------------------------

def long_division_oracle(g, h):
    """Schoolbook division by repeated subtraction of shifted multiples."""
    q, r = IntPoly(), g
    while r.degree >= h.degree:
        t = IntPoly.monomial(r.degree - h.degree, r.lc)
        q, r = q + t, r - t * h
    return q, r


def test_monic_divmod_examples():
    assert monic_divmod(P("x^3"), P("x^2+1")) == (P("x"), P("-x"))
    h = P("x^3+2*x+5")
    assert monic_divmod(h, h) == (IntPoly([1]), IntPoly())
    g = P("x^6-x^5-x^3+x^2")
    assert monic_divmod(g, P("x^2+1")) == (P("x^4-x^3-x^2+2"), IntPoly([-2]))
    assert long_division_oracle(g, P("x^2+1")) == (P("x^4-x^3-x^2+2"), IntPoly([-2]))


def test_monic_divmod_rejects_non_monic():
    with pytest.raises(NonMonicDivisor):
        monic_divmod(P("x^2"), P("2*x+1"))


@given(int_polys(10), monic_polys(0, 5))
def test_monic_divmod_recomposes(g, h):
    q, r = monic_divmod(g, h)
    assert q * h + r == g
    assert r.degree < h.degree
    assert (q, r) == long_division_oracle(g, h)


# reduce_mod -------------------------------------------------------------------

def test_reduce_mod_examples():
    assert reduce_mod(P("x^2-x"), 2) == ResiduePoly(2, (0, 1, 1))
    assert reduce_mod(P("2*x^2+4"), 2) == ResiduePoly(2, ())
    assert reduce_mod(P("x^3+5*x-7"), 3) == ResiduePoly(3, (2, 2, 0, 1))
    with pytest.raises(BadModulus):
        reduce_mod(P("x"), 1)


@given(int_polys(6, 30), int_polys(6, 30), st.integers(2, 40))
def test_reduce_mod_is_ring_homomorphism(g, h, d):
    assert reduce_mod(g + h, d) == reduce_mod(g, d) + reduce_mod(h, d)
    assert reduce_mod(g * h, d) == reduce_mod(g, d) * reduce_mod(h, d)
    assert reduce_mod(g - h, d) == reduce_mod(g, d) - reduce_mod(h, d)


# crt_coeffwise -----------------------------------------------------------------

def test_crt_examples():
    got = crt_coeffwise([(reduce_mod(P("x^2+x"), 2), 2), (reduce_mod(P("x^2+2"), 3), 3)], 2)
    assert got == P("x^2+3*x+2")
    assert crt_coeffwise([(reduce_mod(P("x"), 2), 2), (reduce_mod(P("x+1"), 3), 3)], 1) == P("x+4")
    h = P("x^3-7*x+11")
    assert crt_coeffwise([(reduce_mod(h, 5), 5)], 3) == P("x^3+3*x+1")


def test_crt_rejects_shared_factor():
    with pytest.raises(NonCoprimeModuli):
        crt_coeffwise([(reduce_mod(P("x"), 4), 4), (reduce_mod(P("x"), 6), 6)], 1)


@given(
    st.integers(1, 4),
    st.lists(st.sampled_from([2, 3, 5, 7, 11, 13, 4, 9, 25]), min_size=1, max_size=3, unique=True),
    st.data(),
)
def test_crt_reduces_back(n, moduli, data):
    import math

    if any(math.gcd(a, b) != 1 for i, a in enumerate(moduli) for b in moduli[i + 1:]):
        return
    residues = []
    for m in moduli:
        low = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
        residues.append((reduce_mod(IntPoly(low + [1]), m), m))
    k = crt_coeffwise(residues, n)
    assert k.is_monic() and k.degree == n
    assert all(0 <= c < math.prod(moduli) for c in k.coeffs[:-1])
    for r, m in residues:
        assert reduce_mod(k, m) == r
