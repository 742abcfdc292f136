"""Deciding f = g/d in Int(M_n(Z)).

Three independent routes are provided:

* ``divisibility``: g must be divisible modulo dZ[x] by every monic h of
  degree n; only the d^n residue classes of h matter.
* ``companion``: g(C_h) must vanish mod d for the companion matrix C_h of
  every monic residue class h.
* ``irreducible-companion``: as ``companion`` but each class is first lifted
  to a monic polynomial irreducible over Z, so only companion matrices of
  irreducible polynomials are tested.

Witnesses are the first failing residue class in enumeration order, where
class number ``i`` has coefficient a_j equal to digit j of ``i`` in base d.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from sympy import factorint, isprime

from . import kernels
from .errors import (
    BadModulus,
    BudgetExceeded,
    CompositeModulus,
    DegreeDrop,
    InternalAssertionFailure,
    NonMonic,
)
from .exact_rings import IntPoly, RationalPolyRep, canonicalize, crt_coeffwise, reduce_mod
from .matrices import companion, eval_poly_mod

DEFAULT_MAX_CASES = 10**6

ORACLES = ("divisibility", "companion", "irreducible-companion")


@dataclass(frozen=True, slots=True)
class EnumerationBudget:
    max_cases: int = DEFAULT_MAX_CASES

    def __post_init__(self):
        if self.max_cases < 1:
            raise ValueError("max_cases must be >= 1")

    @classmethod
    def from_env(cls) -> EnumerationBudget:
        raw = os.environ.get("IVPOLY_BUDGET")
        return cls(int(raw)) if raw else cls()

    def check(self, n: int, d: int) -> int:
        total = d**n
        if total > self.max_cases:
            raise BudgetExceeded(total, self.max_cases)
        return total


@dataclass(frozen=True, slots=True)
class MembershipVerdict:
    member: bool
    witness: IntPoly | None
    oracle: str
    cases: int
    modulus: int = 1
    witnesses: tuple[IntPoly, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.member == (self.witness is not None):
            raise ValueError("witness must be present exactly when member is False")

    def to_json(self) -> dict:
        out = {
            "member": self.member,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "oracle": self.oracle,
            "cases": self.cases,
        }
        if self.witnesses is not None:
            out["witnesses"] = [w.to_json() for w in self.witnesses]
        return out


def _monic_from_index(idx: int, n: int, d: int) -> IntPoly:
    return IntPoly(kernels.index_to_coeffs(idx, n, d) + [1])


def enumerate_monic(n: int, d: int, budget: EnumerationBudget | None = None) -> Iterator[IntPoly]:
    """Yield the d^n monic degree-n polynomials with coefficients in [0, d)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if d < 2:
        raise BadModulus(f"modulus must be >= 2, got {d}")
    total = (budget or EnumerationBudget.from_env()).check(n, d)
    for idx in range(total):
        yield _monic_from_index(idx, n, d)


# --- polynomials over GF(p), ascending coefficient lists, [] is zero ---------

def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_rem(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _gf_trim(a[:db])


def _gf_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _gf_rem([c % p for c in out], m, p)


def _gf_powmod(a, e, m, p):
    result, base = [1], _gf_rem(a, m, p)
    while e:
        if e & 1:
            result = _gf_mulmod(result, base, m, p)
        base = _gf_mulmod(base, base, m, p)
        e >>= 1
    return result


def _gf_gcd(a, b, p):
    a, b = _gf_trim(list(a)), _gf_trim(list(b))
    while b:
        a, b = b, _gf_rem(a, b, p)
    return a


def is_irreducible_mod_p(h: IntPoly, p: int) -> bool:
    """Ben-Or test: h is irreducible over F_p iff gcd(x^(p^i) - x, h) = 1 for i <= n/2."""
    if p < 2 or not isprime(p):
        raise CompositeModulus(f"{p} is not prime")
    if not h.is_monic():
        raise NonMonic(f"{h} is not monic")
    hbar = [c % p for c in h.coeffs]
    if hbar[-1] == 0:
        raise DegreeDrop(f"leading coefficient of {h} vanishes mod {p}")
    n = len(hbar) - 1
    if n < 1:
        raise DegreeDrop("degree must be >= 1")
    frob = [0, 1]
    for _ in range(n // 2):
        frob = _gf_powmod(frob, p, hbar, p)
        diff = list(frob) + [0] * max(0, 2 - len(frob))
        diff[1] = (diff[1] - 1) % p
        g = _gf_gcd(hbar, _gf_trim(diff), p)
        if len(g) > 1:
            return False
    return True


@dataclass(frozen=True, slots=True)
class IrreducibleLift:
    poly: IntPoly
    prime: int

    def to_json(self) -> dict:
        return {"k": self.poly.to_json(), "p": self.prime}


def irreducible_lift(h: IntPoly, d: int) -> IrreducibleLift:
    """Monic k = h mod dZ[x], irreducible over Z because it is irreducible mod a prime p not dividing d.

    Primes are tried in increasing order; within a prime, candidates
    h_j + d*t_j (t_j in [0, p), t_0 fastest) are glued by coefficientwise CRT
    and the first one irreducible mod p is returned.
    """
    if not h.is_monic():
        raise NonMonic(f"{h} is not monic")
    if len(h.coeffs) < 2:
        raise ValueError("degree must be >= 1")
    if d < 2:
        raise BadModulus(f"modulus must be >= 2, got {d}")
    return _lift_cached(reduce_mod(h, d).coeffs, len(h.coeffs) - 1, d)


@lru_cache(maxsize=1 << 16)
def _lift_cached(hbar: tuple[int, ...], n: int, d: int) -> IrreducibleLift:
    h = IntPoly(hbar)
    low = [h[j] for j in range(n)]
    p = 1
    while True:
        p += 1
        if not isprime(p) or d % p == 0:
            continue
        for t in range(p**n):
            digits = kernels.index_to_coeffs(t, n, p)
            target = reduce_mod(IntPoly([(low[j] + d * digits[j]) for j in range(n)] + [1]), p)
            k = crt_coeffwise([(reduce_mod(h, d), d), (target, p)], n)
            if is_irreducible_mod_p(k, p):
                return IrreducibleLift(k, p)
        # every class mod p is hit when gcd(d, p) = 1, so this is unreachable
        raise InternalAssertionFailure(f"no irreducible monic of degree {n} mod {p}")


# --- enumeration drivers -------------------------------------------------------

def _scan_chunk(kind, gbar, n, d, start, stop, first_only):
    if kind == "divisibility":
        return kernels.scan_divisibility(gbar, n, d, start, stop, first_only)
    if kind == "companion":
        return kernels.scan_companion(gbar, n, d, start, stop, first_only)
    fails = []
    for idx in range(start, stop):
        k = irreducible_lift(_monic_from_index(idx, n, d), d).poly
        flat = [a % d for a in companion(k).flat()]
        if any(kernels.matrix_eval_mod(gbar, flat, n, d)):
            fails.append(idx)
            if first_only:
                break
    return fails


def _scan(kind, gbar, n, d, total, first_only, jobs):
    if jobs <= 1 or total < 2 * jobs:
        return _scan_chunk(kind, gbar, n, d, 0, total, first_only)
    step = -(-total // jobs)
    bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(
            _scan_chunk,
            *zip(*[(kind, gbar, n, d, a, b, first_only) for a, b in bounds]),
        )
        fails = [i for part in parts for i in part]
    return fails[:1] if first_only else fails


def _decide(kind, f: RationalPolyRep, n, budget, all_witnesses, jobs) -> MembershipVerdict:
    if n < 1:
        raise ValueError("dimension must be >= 1")
    d = f.den
    if d == 1:
        return MembershipVerdict(True, None, kind, 0, 1, () if all_witnesses else None)
    budget = budget or EnumerationBudget.from_env()
    total = budget.check(n, d)
    gbar = [c % d for c in f.num.coeffs]
    fails = _scan(kind, gbar, n, d, total, not all_witnesses, jobs)
    witnesses = tuple(_monic_from_index(i, n, d) for i in fails)
    if not fails:
        return MembershipVerdict(True, None, kind, total, d, witnesses if all_witnesses else None)
    cases = total if all_witnesses else fails[0] + 1
    return MembershipVerdict(
        False, witnesses[0], kind, cases, d, witnesses if all_witnesses else None
    )


def member_via_divisibility(f, n, budget=None, all_witnesses=False, jobs=1) -> MembershipVerdict:
    return _decide("divisibility", f, n, budget, all_witnesses, jobs)


def member_via_companion(f, n, budget=None, all_witnesses=False, jobs=1) -> MembershipVerdict:
    return _decide("companion", f, n, budget, all_witnesses, jobs)


def member_via_irreducible_companion(
    f, n, budget=None, all_witnesses=False, jobs=1
) -> MembershipVerdict:
    return _decide("irreducible-companion", f, n, budget, all_witnesses, jobs)


ORACLE_FUNCS = {
    "divisibility": member_via_divisibility,
    "companion": member_via_companion,
    "irreducible-companion": member_via_irreducible_companion,
}


def is_member(f: RationalPolyRep, n: int, budget=None, jobs=1) -> bool:
    """Membership through the prime-power split (smallest enumeration)."""
    if f.den == 1:
        return True
    return all(v.member for _, v in prime_power_split(f, n, budget, jobs=jobs))


def prime_power_split(
    f: RationalPolyRep, n: int, budget=None, jobs=1
) -> list[tuple[int, MembershipVerdict]]:
    """Decide g/p^e separately for every prime power p^e exactly dividing d.

    Divisibility modulo d is divisibility modulo each p^e, so the overall
    verdict is the conjunction of the parts.
    """
    if f.den < 2:
        raise BadModulus("prime_power_split needs d >= 2")
    parts = []
    for p, e in sorted(factorint(f.den).items()):
        q = p**e
        parts.append((q, member_via_divisibility(canonicalize(f.num, q), n, budget, jobs=jobs)))
    return parts


def value_test_n1(f: RationalPolyRep) -> bool:
    """n = 1 criterion over Z: d | g(a) for every a in [0, d)."""
    return all(f.num(a) % f.den == 0 for a in range(f.den))


def generate_family(p: int, n: int = 2, budget=None) -> RationalPolyRep:
    """prod_{i=1..n} (x^(p^i) - x) / p, self-checked as a member of Int(M_n(Z))."""
    if not isprime(p):
        raise CompositeModulus(f"{p} is not prime")
    if n < 1:
        raise ValueError("dimension must be >= 1")
    x = IntPoly.x()
    g = IntPoly((1,))
    for i in range(1, n + 1):
        g = g * (IntPoly.monomial(p**i) - x)
    f = canonicalize(g, p)
    verdict = member_via_divisibility(f, n, budget)
    if not verdict.member or f.den != p:
        raise InternalAssertionFailure(f"family element for p={p}, n={n} failed self-check")
    return f
