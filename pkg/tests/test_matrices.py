import itertools

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, symbols

from ivpoly.errors import DegreeZero, NonMonic, ParseError
from ivpoly.exact_rings import IntPoly, parse_poly, reduce_mod
from ivpoly.matrices import (
    IntMatrix,
    block_diag,
    char_poly,
    companion,
    eval_poly_at_matrix,
    eval_poly_mod,
    parse_matrix,
)

from conftest import int_matrices, int_polys, monic_polys

P = parse_poly
M = IntMatrix.of


def det_cofactor(rows):
    """Laplace expansion along the first row; entries may be IntPoly."""
    if len(rows) == 1:
        return rows[0][0]
    total = IntPoly()
    for j in range(len(rows)):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def char_poly_cofactor(A):
    n = A.n
    x = IntPoly.x()
    rows = [
        [(x if i == j else IntPoly()) - IntPoly([A[i, j]]) for j in range(n)] for i in range(n)
    ]
    return det_cofactor(rows)


def test_companion_examples():
    assert companion(P("x^2+x+1")) == M([[0, -1], [1, -1]])
    assert companion(P("x-3")) == M([[3]])
    assert companion(P("x^2+1")) == M([[0, -1], [1, 0]])


def test_companion_errors():
    with pytest.raises(NonMonic):
        companion(P("2*x^2+1"))
    with pytest.raises(DegreeZero):
        companion(IntPoly([1]))
    with pytest.raises(NonMonic):
        companion(P("x^2+1"), 3)


def test_char_poly_examples():
    assert char_poly(M([[0, -1], [1, 0]])) == P("x^2+1")
    assert char_poly(IntMatrix.identity(3)) == P("x^3-3*x^2+3*x-1")
    A = M([[2, 7], [-3, 5]])
    assert char_poly(A) == P("x^2-7*x+31")  # x^2 - tr x + det


def test_char_poly_companion_exhaustive_small():
    for n in range(1, 4):
        for low in itertools.product(range(-2, 3), repeat=n):
            h = IntPoly(list(low) + [1])
            assert char_poly(companion(h)) == h


@given(monic_polys(1, 5, 30))
def test_char_poly_companion_random(h):
    assert char_poly(companion(h)) == h


@pytest.mark.parametrize("n", [1, 2, 3])
@given(data=st.data())
def test_char_poly_matches_cofactor_and_sympy(n, data):
    A = data.draw(int_matrices(n))
    got = char_poly(A)
    assert got == char_poly_cofactor(A)
    lam = symbols("lam")
    ref = Matrix(A.entries).charpoly(lam).all_coeffs()
    assert got == IntPoly(int(c) for c in reversed(ref))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@given(data=st.data())
def test_cayley_hamilton(n, data):
    A = data.draw(int_matrices(n))
    assert eval_poly_at_matrix(char_poly(A), A).is_zero()


@given(monic_polys(1, 3, 6))
def test_companion_minimal_polynomial(h):
    # I, C, ..., C^(n-1) linearly independent over Q
    C = companion(h)
    n = C.n
    powers = [IntMatrix.identity(n)]
    for _ in range(n - 1):
        powers.append(powers[-1] * C)
    assert Matrix([p.flat() for p in powers]).rank() == n


def test_companion_no_small_annihilator():
    # enumerate monic candidates of lower degree with small coefficients
    for h in (P("x^2+x+1"), P("x^3-2*x+5"), P("x^3")):
        C = companion(h)
        for m in range(1, C.n):
            for low in itertools.product(range(-3, 4), repeat=m):
                cand = IntPoly(list(low) + [1])
                assert not eval_poly_at_matrix(cand, C).is_zero()


def test_eval_examples():
    A = M([[0, -1], [1, 0]])
    assert eval_poly_at_matrix(P("x^2+1"), A).is_zero()
    assert eval_poly_at_matrix(IntPoly([1]), M([[4, 5], [6, 7]])) == IntMatrix.identity(2)
    C = companion(P("x^2+x+1"))
    assert C * C == M([[-1, 1], [-1, 0]])
    assert eval_poly_at_matrix(P("x^2-x"), C) == M([[-1, 2], [-2, 1]])
    assert eval_poly_at_matrix(IntPoly(), C) == IntMatrix.zero(2)


def naive_eval(g, A):
    acc = IntMatrix.zero(A.n)
    power = IntMatrix.identity(A.n)
    for c in g.coeffs:
        acc = acc + power * c
        power = power * A
    return acc


@pytest.mark.parametrize("n", [1, 2, 3])
@given(g=int_polys(7), d=st.integers(2, 30), data=st.data())
def test_eval_commutes_with_reduction(n, g, d, data):
    A = data.draw(int_matrices(n))
    full = eval_poly_at_matrix(g, A)
    assert full == naive_eval(g, A)
    assert eval_poly_mod(g, A, d) == full.reduce_mod(d)


def test_block_diag_examples():
    assert block_diag(M([[2]]), M([[5]])) == M([[2, 0], [0, 5]])
    A = M([[1, 2], [3, 4]])
    assert block_diag(A, IntMatrix.zero(0)) == A
    assert block_diag(IntMatrix.zero(0), A) == A


@given(g=int_polys(5, 9), A=int_matrices(2), B=int_matrices(1))
def test_block_diag_distributes(g, A, B):
    assert eval_poly_at_matrix(g, block_diag(A, B)) == block_diag(
        eval_poly_at_matrix(g, A), eval_poly_at_matrix(g, B)
    )


def test_parse_matrix_and_json():
    A = parse_matrix("0 -1 ; 1 -1")
    assert A == M([[0, -1], [1, -1]])
    assert parse_matrix('{"n":2,"entries":[[0,-1],[1,-1]]}') == A
    assert IntMatrix.from_json(A.to_json()) == A
    for bad in ("1 2 ; 3", "a b", '{"n":3,"entries":[[1]]}'):
        with pytest.raises(ParseError):
            parse_matrix(bad)
