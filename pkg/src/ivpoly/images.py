"""Images of integer and p-adic matrices under integer-valued polynomials.

For f = g/d integer-valued on M_n(Z) and C in M_n(Z), dividing g by the
characteristic polynomial gives g = q*chi_C + d*r with deg r < n, so
f(C) = r(C) lies in Z[C].  Over Z_p the same reduction is carried out on an
integer lift of C at precision m + v_p(d), which pins r down mod p^m.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime, multiplicity

from .errors import (
    CompositeModulus,
    DimensionMismatch,
    InsufficientPrecision,
    InternalAssertionFailure,
    NotIntegerValuedAtMatrix,
    ZeroDenominator,
)
from .exact_rings import IntPoly, RationalPolyRep, monic_divmod
from .matrices import IntMatrix, char_poly, eval_poly_at_matrix


@dataclass(frozen=True, slots=True)
class PadicMatrix:
    """Matrix over Z_p known modulo p^precision; entries in [0, p^precision)."""

    p: int
    precision: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if not isprime(self.p):
            raise CompositeModulus(f"{self.p} is not prime")
        rows = tuple(tuple(int(a) for a in r) for r in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("matrix is not square")
        q = self.p**self.precision
        if any(not 0 <= a < q for r in rows for a in r):
            raise ValueError(f"entries must lie in [0, {q})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_int(cls, C: IntMatrix, p: int, precision: int) -> PadicMatrix:
        q = p**precision
        return cls(p, precision, tuple(tuple(a % q for a in r) for r in C.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    def lift(self) -> IntMatrix:
        """Least nonnegative integer lift."""
        return IntMatrix(self.entries)


@dataclass(frozen=True, slots=True)
class PadicPolyApprox:
    """s in Z_p[x] known modulo p^precision, deg s < n."""

    p: int
    precision: int
    coeffs: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p**self.precision

    def reduce(self, precision: int) -> PadicPolyApprox:
        if precision > self.precision:
            raise InsufficientPrecision("cannot raise precision by reduction")
        q = self.p**precision
        c = [a % q for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        return PadicPolyApprox(self.p, precision, tuple(c))

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "mod": f"{self.p}^{self.precision}"}


def reduced_representative(f: RationalPolyRep, C: IntMatrix) -> IntPoly:
    """r in Z[x] with deg r < n and f(C) = r(C).

    Raises NotIntegerValuedAtMatrix when d does not divide the remainder of g
    by chi_C, which certifies that f is not integer-valued on M_n(Z).
    """
    chi = char_poly(C)
    _, rem = monic_divmod(f.num, chi)
    if any(c % f.den for c in rem.coeffs):
        raise NotIntegerValuedAtMatrix(C, chi, rem, f.den)
    return IntPoly(c // f.den for c in rem.coeffs)


def image_at(f: RationalPolyRep, C: IntMatrix) -> IntMatrix:
    r = reduced_representative(f, C)
    image = eval_poly_at_matrix(r, C)
    if image * f.den != eval_poly_at_matrix(f.num, C):
        raise InternalAssertionFailure("d * f(C) != g(C)")
    return image


def p_valuation(d: int, p: int) -> int:
    if d == 0:
        raise ZeroDenominator("valuation of zero is infinite")
    return multiplicity(p, abs(d))


def cancellation_modulus(d: int, p: int, m: int) -> int:
    """Smallest k with: d*c = 0 mod p^k implies c = 0 mod p^m, namely m + v_p(d)."""
    if d == 0:
        raise ZeroDenominator("d must be nonzero")
    if m < 1:
        raise ValueError("target precision must be >= 1")
    if not isprime(p):
        raise CompositeModulus(f"{p} is not prime")
    return m + p_valuation(d, p)


def padic_image(
    f: RationalPolyRep, C: PadicMatrix, m: int, lift: IntMatrix | None = None
) -> PadicPolyApprox:
    """s mod p^m with deg s < n and f(C) = s(C) over Z_p.

    ``lift`` may be any integer matrix congruent to C modulo p^precision; the
    least nonnegative lift is used by default.  The result does not depend on
    this choice.
    """
    k = cancellation_modulus(f.den, C.p, m)
    if C.precision < k:
        raise InsufficientPrecision(
            f"need precision >= {k} = {m} + v_{C.p}({f.den}), got {C.precision}"
        )
    if lift is None:
        lift = C.lift()
    elif lift.n != C.n or not (lift - C.lift()).all_divisible_by(C.modulus):
        raise ValueError("lift is not congruent to C modulo p^precision")
    r = reduced_representative(f, lift)
    q = C.p**m
    s = [a % q for a in r.coeffs]
    while s and s[-1] == 0:
        s.pop()
    return PadicPolyApprox(C.p, m, tuple(s))
