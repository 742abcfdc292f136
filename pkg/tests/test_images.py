import random

import pytest
from hypothesis import given, strategies as st

from ivpoly.errors import InsufficientPrecision, NotIntegerValuedAtMatrix, ZeroDenominator
from ivpoly.exact_rings import IntPoly, canonicalize, monic_divmod, parse_poly
from ivpoly.images import (
    PadicMatrix,
    PadicPolyApprox,
    cancellation_modulus,
    image_at,
    padic_image,
    reduced_representative,
)
from ivpoly.matrices import IntMatrix, char_poly, companion, eval_poly_at_matrix
from ivpoly.membership import generate_family, member_via_divisibility

from conftest import int_matrices, int_polys

P = parse_poly
M = IntMatrix.of
FAM2 = canonicalize(P("(x^4-x)*(x^2-x)"), 2)
J = M([[0, -1], [1, 0]])


def test_reduced_representative_examples():
    assert reduced_representative(FAM2, J) == IntPoly([-1])
    # direct: (I - C)(-I - C) / 2 with C^2 = -I, since x^4 - x = x(x^3 - 1)
    C4 = J * J * J * J
    direct = (C4 - J) * (J * J - J)
    assert direct == IntMatrix.scalar(2, -2)
    assert image_at(FAM2, J) == -IntMatrix.identity(2)
    half = canonicalize(P("x^2-x"), 2)
    assert reduced_representative(half, M([[3]])) == IntPoly([3])
    assert P("x^2-x") == P("(x+2)*(x-3)") + 6
    assert image_at(half, M([[3]])) == M([[3]])
    assert image_at(half, M([[0]])) == M([[0]])


@given(g=int_polys(8, 50), A=int_matrices(2))
def test_integer_polynomial_images(g, A):
    f = canonicalize(g, 1)
    _, rem = monic_divmod(g, char_poly(A))
    assert reduced_representative(f, A) == rem
    assert image_at(f, A) == eval_poly_at_matrix(g, A)


def test_non_integer_valued_raises_with_evidence():
    half = canonicalize(P("x^2-x"), 2)
    C = companion(P("x^2+x+1"))
    with pytest.raises(NotIntegerValuedAtMatrix) as info:
        image_at(half, C)
    assert info.value.matrix == C
    assert info.value.char_poly == P("x^2+x+1")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_image_theorem_random(n):
    rng = random.Random(10 + n)
    members = [generate_family(2, n), generate_family(3, n) * generate_family(2, n)]
    for _ in range(40):
        f = rng.choice(members)
        C = M([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        r = reduced_representative(f, C)
        img = image_at(f, C)
        assert r.degree < n
        assert img * f.den == eval_poly_at_matrix(f.num, C)
        assert eval_poly_at_matrix(r, C) == img


@given(g=int_polys(8, 30), d=st.integers(2, 6), A=int_matrices(2, 5))
def test_failure_certifies_non_membership(g, d, A):
    f = canonicalize(g, d)
    try:
        reduced_representative(f, A)
    except NotIntegerValuedAtMatrix:
        assert not member_via_divisibility(f, 2).member


# cancellation modulus ----------------------------------------------------------------

def test_cancellation_modulus_examples():
    assert cancellation_modulus(12, 2, 3) == 5
    assert cancellation_modulus(5, 2, 4) == 4
    assert cancellation_modulus(8, 2, 1) == 4
    assert (8 * 2) % 2**4 == 0 and 2 % 2**1 == 0
    assert cancellation_modulus(-18, 3, 2) == 4
    with pytest.raises(ZeroDenominator):
        cancellation_modulus(0, 2, 1)


@given(d=st.integers(1, 200), p=st.sampled_from([2, 3, 5]), m=st.integers(1, 4))
def test_cancellation_modulus_is_sharp(d, p, m):
    k = cancellation_modulus(d, p, m)
    # contract: d*c = 0 mod p^k implies c = 0 mod p^m, checked on a full period
    for c in range(p**k):
        if (d * c) % p**k == 0:
            assert c % p**m == 0
    # one less fails: c = p^(m-1) has d*c = 0 mod p^(k-1)
    c = p ** (m - 1)
    assert (d * c) % p ** (k - 1) == 0 and c % p**m != 0


# p-adic images -------------------------------------------------------------------

def test_padic_example():
    C = PadicMatrix.from_int(J, 2, 5)
    s = padic_image(FAM2, C, 4)
    assert s == PadicPolyApprox(2, 4, (15,))
    assert s.to_json() == {"coeffs": [15], "mod": "2^4"}


def test_padic_needs_precision():
    C = PadicMatrix.from_int(J, 2, 4)
    with pytest.raises(InsufficientPrecision):
        padic_image(FAM2, C, 4)
    with pytest.raises(ValueError):
        padic_image(FAM2, PadicMatrix.from_int(J, 2, 5), 4, lift=J + IntMatrix.identity(2))


def test_padic_integer_polynomial():
    g = P("x^5-3*x+7")
    A = M([[4, 1], [2, 9]])
    C = PadicMatrix.from_int(A, 3, 3)
    s = padic_image(canonicalize(g, 1), C, 3)
    _, rem = monic_divmod(g, char_poly(C.lift()))
    assert list(s.coeffs) == [c % 27 for c in rem.coeffs]


@pytest.mark.parametrize("p", [2, 3])
def test_lift_independence_and_coherence(p):
    rng = random.Random(p)
    f = generate_family(p)
    f2 = f * f
    for fam in (f, f2):
        base = M([[rng.randint(0, 10**5) for _ in range(2)] for _ in range(2)])
        by_m = {}
        for m in range(1, 5):
            C = PadicMatrix.from_int(base, p, cancellation_modulus(fam.den, p, m))
            by_m[m] = padic_image(fam, C, m)
            for _ in range(20):
                lift = M([[a + C.modulus * rng.randint(-9, 9) for a in r] for r in C.entries])
                assert padic_image(fam, C, m, lift=lift) == by_m[m]
        for m in range(2, 5):
            for mm in range(1, m):
                assert by_m[m].reduce(mm) == by_m[mm]


def test_padic_matrix_validation():
    with pytest.raises(ValueError):
        PadicMatrix(2, 2, ((4,),))
    with pytest.raises(ValueError):
        PadicMatrix(2, 0, ((0,),))
