"""Exact univariate polynomials over Z, Q (as g/d) and Z/dZ.

Coefficient sequences are ascending by degree (index i holds the coefficient
of x^i) and the zero polynomial is the empty sequence.  All values are
immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import (
    BadModulus,
    NonCoprimeModuli,
    NonMonic,
    NonMonicDivisor,
    ParseError,
    ZeroDenominator,
)

NEG_INF = float("-inf")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(a) for a in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> IntPoly:
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> IntPoly:
        return cls((0,) * k + (a,))

    @property
    def degree(self):
        """Degree; ``float('-inf')`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def _coerce(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def scale(self, k: int) -> IntPoly:
        return IntPoly(k * a for a in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj) -> IntPoly:
        try:
            coeffs = obj["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"expected {{'coeffs': [...]}}, got {obj!r}") from exc
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise ParseError("polynomial coefficients must be integers")
        return cls(coeffs)


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Render ascending coefficients as e.g. ``x^2+3*x-1``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out


@dataclass(frozen=True, slots=True)
class RationalPolyRep:
    """f = num/den in Q[x], kept canonical: den >= 1, gcd(content(num), den) = 1.

    Build instances through :func:`canonicalize` (or :meth:`of`); the
    constructor only validates.
    """

    num: IntPoly
    den: int = 1

    def __post_init__(self):
        if self.den < 1:
            raise ValueError("denominator must be positive; use canonicalize()")
        if math.gcd(self.num.content(), self.den) != 1 and self.num:
            raise ValueError("representation is not canonical; use canonicalize()")
        if not self.num and self.den != 1:
            raise ValueError("zero polynomial must have denominator 1")

    @classmethod
    def of(cls, g, d: int = 1) -> RationalPolyRep:
        if not isinstance(g, IntPoly):
            g = IntPoly(g)
        return canonicalize(g, d)

    @property
    def degree(self):
        return self.num.degree

    def is_integral(self) -> bool:
        return self.den == 1

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other: RationalPolyRep) -> RationalPolyRep:
        if isinstance(other, int):
            other = RationalPolyRep(IntPoly((other,)))
        l = self.den * other.den // math.gcd(self.den, other.den)
        return canonicalize(self.num.scale(l // self.den) + other.num.scale(l // other.den), l)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolyRep(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> RationalPolyRep:
        if isinstance(other, int):
            return canonicalize(self.num.scale(other), self.den)
        return canonicalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den}

    @classmethod
    def from_json(cls, obj) -> RationalPolyRep:
        try:
            num, den = obj["num"], obj.get("den", 1)
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"expected {{'num':..., 'den':...}}, got {obj!r}") from exc
        if not isinstance(den, int) or isinstance(den, bool):
            raise ParseError("denominator must be an integer")
        return canonicalize(IntPoly.from_json(num), den)


@dataclass(frozen=True, slots=True)
class ResiduePoly:
    """Polynomial over Z/dZ with least nonnegative coefficient representatives."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise BadModulus(f"modulus must be >= 2, got {self.modulus}")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError("residue coefficients out of range")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient")

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lift(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __add__(self, other: ResiduePoly) -> ResiduePoly:
        self._check(other)
        return reduce_mod(self.lift() + other.lift(), self.modulus)

    def __sub__(self, other: ResiduePoly) -> ResiduePoly:
        self._check(other)
        return reduce_mod(self.lift() - other.lift(), self.modulus)

    def __mul__(self, other: ResiduePoly) -> ResiduePoly:
        self._check(other)
        return reduce_mod(self.lift() * other.lift(), self.modulus)

    def _check(self, other):
        if other.modulus != self.modulus:
            raise BadModulus("moduli differ")

    def __str__(self):
        return f"{format_poly(self.coeffs)} mod {self.modulus}"


def canonicalize(g: IntPoly, d: int) -> RationalPolyRep:
    """Return the canonical (g', d') with g'/d' = g/d, d' >= 1, gcd(content, d') = 1."""
    if d == 0:
        raise ZeroDenominator("denominator is zero")
    if d < 0:
        g, d = -g, -d
    if not g:
        return RationalPolyRep(IntPoly(), 1)
    c = math.gcd(g.content(), d)
    if c != 1:
        g = IntPoly(a // c for a in g.coeffs)
        d //= c
    return RationalPolyRep(g, d)


def monic_divmod(g: IntPoly, h: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Divide g by the monic h over Z: g = q*h + r with deg r < deg h."""
    if not h.is_monic():
        raise NonMonicDivisor(f"divisor {h} is not monic")
    n = len(h.coeffs) - 1
    r = list(g.coeffs)
    if len(r) <= n:
        return IntPoly(), g
    hc = h.coeffs
    q = [0] * (len(r) - n)
    for i in range(len(r) - 1, n - 1, -1):
        c = r[i]
        if c:
            q[i - n] = c
            base = i - n
            for j in range(n):
                r[base + j] -= c * hc[j]
            r[i] = 0
    return IntPoly(q), IntPoly(r[:n])


def reduce_mod(g: IntPoly, d: int) -> ResiduePoly:
    if d < 2:
        raise BadModulus(f"modulus must be >= 2, got {d}")
    return ResiduePoly(d, _trim(a % d for a in g.coeffs))


def crt_coeffwise(residues: Sequence[tuple[ResiduePoly, int]], n: int) -> IntPoly:
    """Glue monic degree-n residues coefficient by coefficient.

    Each residue is read as a monic degree-n polynomial: coefficients of
    x^0..x^{n-1} come from the residue, the leading 1 is fixed.  Returns the
    monic lift with lower coefficients in [0, prod(moduli)).
    """
    moduli = [m for _, m in residues]
    for i, a in enumerate(moduli):
        if a < 2:
            raise BadModulus(f"modulus must be >= 2, got {a}")
        for b in moduli[i + 1:]:
            if math.gcd(a, b) != 1:
                raise NonCoprimeModuli(f"moduli {a} and {b} share a factor")
    for r, m in residues:
        if r.modulus != m:
            raise BadModulus(f"residue modulus {r.modulus} != stated modulus {m}")
        if r.degree > n or (r.degree == n and r.coeffs[-1] != 1 % m):
            raise NonMonic(f"{r} is not monic of degree {n}")
    M = math.prod(moduli)
    out = []
    for i in range(n):
        acc = 0
        for r, m in residues:
            Mi = M // m
            acc += (r.coeffs[i] if i < len(r.coeffs) else 0) * Mi * pow(Mi, -1, m)
        out.append(acc % M)
    return IntPoly(out + [1])


def parse_poly(text: str) -> IntPoly:
    """Parse an integer polynomial expression in ``x`` (``^`` or ``**`` for powers).

    Products and powers are expanded exactly, e.g. ``(x^4-x)*(x^2-x)``.
    """
    from sympy import Poly, Symbol
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    if not text or not text.strip():
        raise ParseError("empty polynomial")
    if any(ch not in "0123456789x+-*^() \t" for ch in text):
        raise ParseError(f"unexpected characters in polynomial {text!r}")
    x = Symbol("x")
    try:
        expr = parse_expr(
            text,
            local_dict={"x": x},
            transformations=standard_transformations
            + (convert_xor, implicit_multiplication_application),
            evaluate=True,
        )
        poly = Poly(expr, x, domain="ZZ")
    except Exception as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc}") from exc
    return IntPoly(int(c) for c in reversed(poly.all_coeffs()))


def parse_poly_arg(value) -> IntPoly:
    """Accept an expression string, a JSON string/object ``{"coeffs":[...]}``, or a list."""
    import json

    if isinstance(value, IntPoly):
        return value
    if isinstance(value, (list, tuple)):
        return IntPoly(value)
    if isinstance(value, dict):
        return IntPoly.from_json(value)
    s = value.strip()
    if s.startswith("{") or s.startswith("["):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return parse_poly_arg(obj)
    return parse_poly(s)
