"""Square matrices over Z and Z/dZ, companion matrices and characteristic polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import DegreeZero, DimensionMismatch, NonMonic, ParseError
from .exact_rings import IntPoly


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """n x n integer matrix; entries is a tuple of row tuples.

    ``n == 0`` is permitted only as the neutral element of :func:`block_diag`.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise DimensionMismatch("matrix is not square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> IntMatrix:
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> IntMatrix:
        """Matrix unit with a 1 at (i, j), 0-based."""
        return cls(tuple(tuple(int(r == i and c == j) for c in range(n)) for r in range(n)))

    @classmethod
    def scalar(cls, n: int, a: int) -> IntMatrix:
        return cls(tuple(tuple(a if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def flat(self) -> list[int]:
        return [a for row in self.entries for a in row]

    def _check(self, other: IntMatrix):
        if other.n != self.n:
            raise DimensionMismatch(f"dimensions {self.n} and {other.n} differ")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check(other)
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check(other)
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def __neg__(self):
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.entries))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(tuple(tuple(other * a for a in r) for r in self.entries))
        self._check(other)
        cols = tuple(zip(*other.entries))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries)
        )

    __rmul__ = __mul__

    def __matmul__(self, other):
        return self * other

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.n))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def all_divisible_by(self, d: int) -> bool:
        return all(a % d == 0 for row in self.entries for a in row)

    def reduce_mod(self, d: int) -> ResidueMatrix:
        return ResidueMatrix(d, tuple(tuple(a % d for a in r) for r in self.entries))

    def __str__(self):
        return " ; ".join(" ".join(str(a) for a in r) for r in self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, obj) -> IntMatrix:
        try:
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"expected {{'n':..., 'entries':[...]}}, got {obj!r}") from exc
        m = cls.of(entries)
        if "n" in obj and obj["n"] != m.n:
            raise ParseError(f"declared n={obj['n']} but entries are {m.n}x{m.n}")
        return m


@dataclass(frozen=True, slots=True)
class ResidueMatrix:
    """n x n matrix over Z/dZ with entries in [0, d)."""

    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if any(len(r) != len(self.entries) for r in self.entries):
            raise DimensionMismatch("matrix is not square")
        if any(not 0 <= a < self.modulus for r in self.entries for a in r):
            raise ValueError("entries out of range")

    @property
    def n(self) -> int:
        return len(self.entries)

    def flat(self) -> list[int]:
        return [a for row in self.entries for a in row]

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def lift(self) -> IntMatrix:
        return IntMatrix(self.entries)


def parse_matrix(text: str) -> IntMatrix:
    """Parse ``"0 -1 ; 1 -1"`` (rows separated by ``;``) or matrix JSON."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return IntMatrix.from_json(obj) if isinstance(obj, dict) else IntMatrix.of(obj)
    try:
        rows = [[int(tok) for tok in row.split()] for row in s.split(";")]
    except ValueError as exc:
        raise ParseError(f"bad matrix text {text!r}") from exc
    try:
        return IntMatrix.of(rows)
    except DimensionMismatch as exc:
        raise ParseError(f"matrix {text!r} is not square") from exc


def companion(h: IntPoly, n: int | None = None) -> IntMatrix:
    """Companion matrix: 1s on the subdiagonal, last column -a_0, ..., -a_{n-1}."""
    if not h.is_monic():
        raise NonMonic(f"{h} is not monic")
    deg = len(h.coeffs) - 1
    if n is not None and n != deg:
        raise NonMonic(f"{h} has degree {deg}, expected {n}")
    if deg < 1:
        raise DegreeZero("companion matrix needs degree >= 1")
    rows = [[0] * deg for _ in range(deg)]
    for i in range(1, deg):
        rows[i][i - 1] = 1
    for i in range(deg):
        rows[i][deg - 1] = -h.coeffs[i]
    return IntMatrix.of(rows)


def char_poly(A: IntMatrix) -> IntPoly:
    """det(xI - A) by the Faddeev-LeVerrier recurrence; every division is exact."""
    n = A.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = IntMatrix.zero(n)
    I = IntMatrix.identity(n)
    for k in range(1, n + 1):
        M = A * M + I * coeffs[n - k + 1]
        t = (A * M).trace()
        if t % k:
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier")
        coeffs[n - k] = -t // k
    return IntPoly(coeffs)


def eval_poly_at_matrix(g: IntPoly, A: IntMatrix) -> IntMatrix:
    """Horner evaluation of g at A over Z."""
    n = A.n
    acc = IntMatrix.zero(n)
    for c in reversed(g.coeffs):
        acc = acc * A
        if c:
            acc = acc + IntMatrix.scalar(n, c)
    return acc


def eval_poly_mod(g: IntPoly, A: IntMatrix | ResidueMatrix, d: int) -> ResidueMatrix:
    """g(A) reduced into Z/dZ, computed entirely mod d."""
    gbar = [c % d for c in g.coeffs]
    n = A.n
    flat = [a % d for a in A.flat()]
    out = kernels.matrix_eval_mod(gbar, flat, n, d)
    return ResidueMatrix(d, tuple(tuple(out[i * n:(i + 1) * n]) for i in range(n)))


def block_diag(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    n, m = A.n, B.n
    rows = [list(r) + [0] * m for r in A.entries] + [[0] * n + list(r) for r in B.entries]
    return IntMatrix.of(rows)
