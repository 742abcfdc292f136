"""Polynomials with n x n rational matrix coefficients.

An element of M_n(Q)[x] is stored as its list of coefficient matrices
(:class:`MatCoeffPoly`).  The isomorphism :func:`phi` carries it to the n x n
matrix of rational polynomials (:class:`MatOfPoly`) whose (i, j) entry
collects the (i, j) entries of all coefficients.  Membership in the ring of
matrix-coefficient polynomials that map M_n(Z) into M_n(Z) is decided entry by
entry through that isomorphism.

Substitution of a matrix C is always ``sum_k A_k C^k``: coefficients on the
left, powers of C on the right.  This is not multiplicative in general.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InternalAssertionFailure,
    NonMemberElement,
    NonMemberGenerator,
    ParseError,
)
from .exact_rings import IntPoly, RationalPolyRep, canonicalize
from .matrices import IntMatrix
from .membership import EnumerationBudget, MembershipVerdict, is_member, member_via_divisibility

RatRows = tuple[tuple[Fraction, ...], ...]


def _rat_rows(rows, n: int) -> RatRows:
    out = tuple(tuple(Fraction(a) for a in r) for r in rows)
    if len(out) != n or any(len(r) != n for r in out):
        raise DimensionMismatch(f"coefficient is not {n}x{n}")
    return out


def _zero_rows(n: int) -> RatRows:
    return tuple((Fraction(0),) * n for _ in range(n))


def _is_zero(rows: RatRows) -> bool:
    return all(a == 0 for r in rows for a in r)


def _rmul(a: RatRows, b: RatRows) -> RatRows:
    cols = tuple(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols) for r in a)


def _radd(a: RatRows, b: RatRows) -> RatRows:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


@dataclass(frozen=True, slots=True)
class MatCoeffPoly:
    """sum_k A_k x^k with A_k rational n x n matrices; coeffs[k] is A_k."""

    n: int
    coeffs: tuple[RatRows, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch("n must be >= 1")
        cs = [_rat_rows(A, self.n) for A in self.coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, A, n: int | None = None) -> MatCoeffPoly:
        rows = A.entries if isinstance(A, IntMatrix) else A
        return cls(n if n is not None else len(rows), (rows,))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> MatCoeffPoly:
        return cls.constant(IntMatrix.unit(n, i, j))

    @classmethod
    def scalar(cls, f: RationalPolyRep, n: int) -> MatCoeffPoly:
        """f(x) * I_n."""
        return cls(
            n,
            tuple(
                tuple(
                    tuple(Fraction(c, f.den) if i == j else Fraction(0) for j in range(n))
                    for i in range(n)
                )
                for c in f.num.coeffs
            ),
        )

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: MatCoeffPoly):
        if other.n != self.n:
            raise DimensionMismatch(f"dimensions {self.n} and {other.n} differ")

    def coeff(self, k: int) -> RatRows:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _zero_rows(self.n)

    def __add__(self, other: MatCoeffPoly) -> MatCoeffPoly:
        self._check(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return MatCoeffPoly(self.n, tuple(_radd(self.coeff(k), other.coeff(k)) for k in range(m)))

    def __neg__(self):
        return MatCoeffPoly(self.n, tuple(tuple(tuple(-a for a in r) for r in A) for A in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: MatCoeffPoly) -> MatCoeffPoly:
        return mat_poly_mul(self, other)

    def to_json(self) -> dict:
        out = []
        for A in self.coeffs:
            den = math.lcm(*(a.denominator for r in A for a in r))
            out.append(
                {"entries": [[int(a * den) for a in r] for r in A], "den": den}
            )
        return {"n": self.n, "coeffs": out}

    @classmethod
    def from_json(cls, obj) -> MatCoeffPoly:
        try:
            n = obj["n"]
            coeffs = []
            for c in obj["coeffs"]:
                den = c.get("den", 1)
                if den == 0:
                    raise ParseError("zero denominator in coefficient matrix")
                coeffs.append(tuple(tuple(Fraction(a, den) for a in r) for r in c["entries"]))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"malformed matrix-coefficient polynomial: {exc}") from exc
        try:
            return cls(n, tuple(coeffs))
        except DimensionMismatch as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True, slots=True)
class MatOfPoly:
    """n x n matrix whose entries are canonical rational polynomials."""

    entries: tuple[tuple[RationalPolyRep, ...], ...]

    def __post_init__(self):
        if any(len(r) != len(self.entries) for r in self.entries):
            raise DimensionMismatch("matrix is not square")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> RationalPolyRep:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: MatOfPoly) -> MatOfPoly:
        if other.n != self.n:
            raise DimensionMismatch("dimensions differ")
        return MatOfPoly(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __mul__(self, other: MatOfPoly) -> MatOfPoly:
        if other.n != self.n:
            raise DimensionMismatch("dimensions differ")
        n = self.n
        zero = RationalPolyRep(IntPoly())
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return MatOfPoly(tuple(rows))

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[e.to_json() for e in r] for r in self.entries]}

    @classmethod
    def from_json(cls, obj) -> MatOfPoly:
        try:
            return cls(
                tuple(tuple(RationalPolyRep.from_json(e) for e in r) for r in obj["entries"])
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed matrix of polynomials: {exc}") from exc


def _rational_poly(coeffs: Sequence[Fraction]) -> RationalPolyRep:
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return canonicalize(IntPoly(int(c * den) for c in coeffs), den)


def phi(F: MatCoeffPoly) -> MatOfPoly:
    n = F.n
    return MatOfPoly(
        tuple(
            tuple(_rational_poly([A[i][j] for A in F.coeffs]) for j in range(n))
            for i in range(n)
        )
    )


def phi_inv(M: MatOfPoly) -> MatCoeffPoly:
    n = M.n
    deg = max((len(e.num.coeffs) for r in M.entries for e in r), default=0)
    coeffs = tuple(
        tuple(
            tuple(Fraction(M.entries[i][j].num[k], M.entries[i][j].den) for j in range(n))
            for i in range(n)
        )
        for k in range(deg)
    )
    return MatCoeffPoly(n, coeffs)


def mat_poly_mul(F: MatCoeffPoly, G: MatCoeffPoly) -> MatCoeffPoly:
    """Convolution of coefficient lists; x is central, the coefficients are not."""
    F._check(G)
    if not F.coeffs or not G.coeffs:
        return MatCoeffPoly(F.n, ())
    out = [_zero_rows(F.n) for _ in range(len(F.coeffs) + len(G.coeffs) - 1)]
    for k, A in enumerate(F.coeffs):
        for l, B in enumerate(G.coeffs):
            out[k + l] = _radd(out[k + l], _rmul(A, B))
    return MatCoeffPoly(F.n, tuple(out))


def eval_matcoeff_at_matrix(F: MatCoeffPoly, C: IntMatrix) -> RatRows:
    """sum_k A_k C^k as a matrix of Fractions."""
    if C.n != F.n:
        raise DimensionMismatch(f"matrix is {C.n}x{C.n}, polynomial has n={F.n}")
    n = F.n
    acc = _zero_rows(n)
    power = _rat_rows(IntMatrix.identity(n).entries, n)
    Cr = _rat_rows(C.entries, n)
    for A in F.coeffs:
        acc = _radd(acc, _rmul(A, power))
        power = _rmul(power, Cr)
    return acc


def entry_scalarize(F: MatCoeffPoly, j: int, k: int) -> RationalPolyRep:
    """c_jk(x), the (j, k) entry of phi(F), with 1-based indices.

    Cross-checked against the matrix-unit sandwich sum_i e_ij F e_ki, which
    must equal c_jk(x) * I_n in M_n(Q)[x].
    """
    n = F.n
    if not (1 <= j <= n and 1 <= k <= n):
        raise IndexOutOfRange(f"entry ({j}, {k}) outside 1..{n}")
    c = phi(F)[j - 1, k - 1]
    sandwich = MatCoeffPoly(n, ())
    for i in range(n):
        sandwich = sandwich + MatCoeffPoly.unit(n, i, j - 1) * F * MatCoeffPoly.unit(n, k - 1, i)
    if sandwich != MatCoeffPoly.scalar(c, n):
        raise InternalAssertionFailure(f"sandwich sum for entry ({j}, {k}) is not c_jk * I_n")
    return c


@dataclass(frozen=True, slots=True)
class MatrixMembershipReport:
    member: bool
    entry: tuple[int, int] | None
    verdict: MembershipVerdict | None

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "entry": list(self.entry) if self.entry else None,
            "witness": self.verdict.witness.to_json()
            if self.verdict is not None and self.verdict.witness is not None
            else None,
        }


def member_matrix_poly(
    F: MatCoeffPoly, budget: EnumerationBudget | None = None, jobs: int = 1
) -> MatrixMembershipReport:
    """F maps M_n(Z) into M_n(Z) iff every entry of phi(F) lies in Int(M_n(Z))."""
    M = phi(F)
    for i in range(F.n):
        for j in range(F.n):
            v = member_via_divisibility(M[i, j], F.n, budget, jobs=jobs)
            if not v.member:
                return MatrixMembershipReport(False, (i + 1, j + 1), v)
    return MatrixMembershipReport(True, None, None)


@dataclass(frozen=True, slots=True)
class IntegralitySample:
    ok: bool
    trials: int
    matrix: IntMatrix | None = None
    value: RatRows | None = None


def random_int_matrix(rng: random.Random, n: int, bound: int = 9) -> IntMatrix:
    return IntMatrix.of([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def sample_check_integrality(
    F: MatCoeffPoly,
    trials: int = 100,
    seed: int = 0,
    bound: int = 9,
    matrices: Sequence[IntMatrix] = (),
) -> IntegralitySample:
    """Evaluate F at the given matrices, then at random ones, stopping at the first non-integral value."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    count = 0
    for t in range(len(matrices) + trials):
        C = matrices[t] if t < len(matrices) else random_int_matrix(rng, F.n, bound)
        count += 1
        val = eval_matcoeff_at_matrix(F, C)
        if any(a.denominator != 1 for r in val for a in r):
            return IntegralitySample(False, count, C, val)
    return IntegralitySample(True, count)


def mn_ideal_generators(
    gens: Sequence[RationalPolyRep], n: int, budget: EnumerationBudget | None = None
) -> list[MatCoeffPoly]:
    """Generators g * e_ij of M_n(I) as a two-sided ideal, for I generated by gens."""
    out = []
    for g in gens:
        if not is_member(g, n, budget):
            raise NonMemberGenerator(f"{g} is not in Int(M_{n}(Z))")
        gI = MatCoeffPoly.scalar(g, n)
        for i in range(n):
            for j in range(n):
                out.append(gI * MatCoeffPoly.unit(n, i, j))
    return out


def entry_ideal_generators(
    elems: Sequence[MatCoeffPoly], budget: EnumerationBudget | None = None
) -> list[RationalPolyRep]:
    """Distinct nonzero entries of phi(F) over all F, in first-seen order."""
    out: list[RationalPolyRep] = []
    seen = set()
    for F in elems:
        report = member_matrix_poly(F, budget)
        if not report.member:
            raise NonMemberElement(f"element fails at entry {report.entry}")
        for r in phi(F).entries:
            for c in r:
                if c and c not in seen:
                    seen.add(c)
                    out.append(c)
    return out
