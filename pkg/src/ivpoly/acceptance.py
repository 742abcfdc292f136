"""Randomized end-to-end checks of the library's theorem-level guarantees.

Each ``check_*`` function returns a :class:`CheckResult`.  The pytest
acceptance module runs them at full size; ``ivpoly selftest`` runs them with
``quick=True``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from sympy import GF, Poly, Symbol

from .exact_rings import IntPoly, RationalPolyRep, canonicalize, parse_poly, reduce_mod
from .images import (
    PadicMatrix,
    cancellation_modulus,
    image_at,
    padic_image,
    reduced_representative,
)
from .matrices import IntMatrix, block_diag, companion, eval_poly_at_matrix
from .matrix_poly import (
    MatCoeffPoly,
    entry_scalarize,
    mat_poly_mul,
    member_matrix_poly,
    phi,
    phi_inv,
    random_int_matrix,
    sample_check_integrality,
)
from .membership import (
    generate_family,
    irreducible_lift,
    is_member,
    member_via_companion,
    member_via_divisibility,
    member_via_irreducible_companion,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


# --- instance generators ---------------------------------------------------------

_X = IntPoly.x()

# numerators divisible mod p by every monic polynomial of degree <= n
_PRIME_BLOCKS = {
    (2, 1): _X**2 - _X,
    (3, 1): _X**3 - _X,
    (5, 1): _X**5 - _X,
    (7, 1): _X**7 - _X,
    (2, 2): (_X**4 - _X) * (_X**2 - _X),
}


def random_poly(rng: random.Random, deg: int, bound: int = 50) -> IntPoly:
    return IntPoly(rng.randint(-bound, bound) for _ in range(deg + 1))


def random_candidate(rng: random.Random, n: int, max_deg: int = 8) -> RationalPolyRep:
    """A random g/d with d in [2, 12], deg g <= max_deg, coefficients in [-50, 50].

    A third of the draws are uniform; the rest are built around numerators
    known to be divisible by all monic polynomials of some degree, and half
    of those are perturbed by one coefficient, so members and near-misses
    both occur.
    """
    d = rng.randint(2, 12)
    kind = rng.random()
    primes = [p for p in (2, 3, 5, 7) if d % p == 0]
    if kind < 1 / 3 or not primes:
        return canonicalize(random_poly(rng, rng.randint(0, max_deg)), d)
    p = rng.choice(primes)
    blocks = [(k, b) for k, b in _PRIME_BLOCKS.items() if k[0] == p and b.degree <= max_deg]
    (_, _), block = rng.choice(blocks)
    room = max_deg - block.degree
    mult = random_poly(rng, rng.randint(0, room), 3) if room >= 0 else IntPoly((1,))
    if not mult:
        mult = IntPoly((1,))
    g = (block * mult).scale(d // p)
    g = g + random_poly(rng, rng.randint(0, max_deg), 4).scale(d)
    if kind > 2 / 3:
        i = rng.randint(0, max_deg)
        g = g + IntPoly.monomial(i, rng.choice((-1, 1)))
    g = IntPoly(max(-50, min(50, c)) for c in g.coeffs)
    return canonicalize(g, d)


def member_pool(n: int) -> list[RationalPolyRep]:
    """Certified members of Int(M_n(Z)) with nontrivial denominators."""
    pool = [generate_family(2, n), generate_family(3, n)]
    if n <= 2:
        pool.append(generate_family(5, n) if n == 1 else generate_family(2, 2) * 3)
    f = pool[0]
    pool.append(f * f)
    pool.append(f + canonicalize(_X**3 - 5, 1))
    pool.append(f * pool[1] + pool[1])
    return pool


# --- criteria ---------------------------------------------------------------------

def check_three_oracles(quick=False, seed=1) -> CheckResult:
    rng = random.Random(seed)
    trials = 60 if quick else 500
    t0 = time.perf_counter()
    members = disagreements = 0
    first_bad = None
    for _ in range(trials):
        n = rng.choice((1, 2, 3))
        f = random_candidate(rng, n)
        a = member_via_divisibility(f, n)
        b = member_via_companion(f, n)
        c = member_via_irreducible_companion(f, n)
        members += a.member
        if not (a.member == b.member == c.member and a.witness == b.witness == c.witness):
            disagreements += 1
            first_bad = first_bad or (str(f), n)
    dt = time.perf_counter() - t0
    ok = disagreements == 0 and (quick or dt < 300)
    detail = f"{trials} instances ({members} members), {disagreements} disagreements"
    if first_bad:
        detail += f", first at f={first_bad[0]} n={first_bad[1]}"
    return CheckResult("three-oracle agreement", ok, detail, dt)


def check_known_members() -> CheckResult:
    t0 = time.perf_counter()
    problems = []
    for p in (2, 3, 5):
        g = (IntPoly.monomial(p * p) - _X) * (IntPoly.monomial(p) - _X)
        f = canonicalize(g, p)
        if f != generate_family(p):
            problems.append(f"family p={p} differs")
        for oracle in (member_via_divisibility, member_via_companion, member_via_irreducible_companion):
            if not oracle(f, 2).member:
                problems.append(f"{oracle.__name__} rejects p={p}")
    half = canonicalize(parse_poly("x^2-x"), 2)
    if not member_via_divisibility(half, 1).member:
        problems.append("(x^2-x)/2 rejected at n=1")
    v = member_via_divisibility(half, 2, all_witnesses=True)
    target = parse_poly("x^2+x+1")
    if v.member:
        problems.append("(x^2-x)/2 accepted at n=2")
    elif target not in v.witnesses:
        problems.append("x^2+x+1 not among witnesses")
    if eval_poly_at_matrix(half.num, companion(target)).all_divisible_by(2):
        problems.append("g(companion(x^2+x+1)) has only even entries")
    ok = not problems
    detail = "exact verdicts match" if ok else "; ".join(problems)
    return CheckResult("known members / non-members", ok, detail, time.perf_counter() - t0)


def check_image_theorem(quick=False, seed=3) -> CheckResult:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    pairs = 40 if quick else 240
    pools = {n: member_pool(n) for n in (1, 2, 3)}
    problems = []
    for _ in range(pairs):
        n = rng.choice((1, 2, 3))
        f = rng.choice(pools[n])
        C = random_int_matrix(rng, n)
        r = reduced_representative(f, C)
        img = image_at(f, C)
        gC = eval_poly_at_matrix(f.num, C)
        if not (r.degree < n and img * f.den == gC and eval_poly_at_matrix(r, C) == img):
            problems.append(f"f={f} C={C}")
    f = generate_family(2)
    C = IntMatrix.of([[0, -1], [1, 0]])
    if image_at(f, C) != -IntMatrix.identity(2) or reduced_representative(f, C) != IntPoly((-1,)):
        problems.append("fixed case differs from -I_2, r=-1")
    ok = not problems
    detail = f"{pairs} pairs + fixed case, " + ("all exact" if ok else f"{len(problems)} failures")
    return CheckResult("image theorem f(C) = r(C)", ok, detail, time.perf_counter() - t0)


def _random_lift(rng, C: PadicMatrix) -> IntMatrix:
    q = C.modulus
    return IntMatrix.of([[a + q * rng.randint(-50, 50) for a in row] for row in C.entries])


def check_padic(quick=False, seed=4) -> CheckResult:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    pairs = 10 if quick else 100
    problems = []
    count = 0
    for p in (2, 3):
        fam = generate_family(p)
        fams = [(fam, 2), (fam * fam, 2), (canonicalize(IntPoly.monomial(p) - _X, p), 1)]
        for f, n in fams:
            base = random_int_matrix(rng, n, 10**6)
            results = {}
            for m in range(1, 7):
                k = cancellation_modulus(f.den, p, m)
                C = PadicMatrix.from_int(base, p, k)
                s = padic_image(f, C, m)
                results[m] = s
                for _ in range(pairs):
                    count += 1
                    L1, L2 = _random_lift(rng, C), _random_lift(rng, C)
                    s1 = padic_image(f, C, m, lift=L1)
                    s2 = padic_image(f, C, m, lift=L2)
                    if s1 != s2 or s1 != s:
                        problems.append(f"lift dependence p={p} m={m} f={f}")
                    # s(C') = f(C') mod p^m on the lift itself
                    sv = eval_poly_at_matrix(IntPoly(s1.coeffs), L1)
                    fv = image_at(f, L1)
                    if not (sv - fv).all_divisible_by(p**m):
                        problems.append(f"s(C) != f(C) mod p^{m}")
            for m in range(2, 7):
                for mm in range(1, m):
                    if results[m].reduce(mm) != results[mm]:
                        problems.append(f"coherence p={p} m={m} m'={mm}")
    ok = not problems
    detail = f"{count} lift pairs, p in {{2,3}}, m in 1..6, " + (
        "lift-independent and coherent" if ok else problems[0]
    )
    return CheckResult("p-adic lift independence", ok, detail, time.perf_counter() - t0)


def _random_rat_matcoeff(rng, n, deg) -> MatCoeffPoly:
    from fractions import Fraction

    return MatCoeffPoly(
        n,
        tuple(
            tuple(
                tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n))
                for _ in range(n)
            )
            for _ in range(deg + 1)
        ),
    )


def random_member_matcoeff(rng, n, pool) -> MatCoeffPoly:
    """Assemble sum_{i,l} e_ik (f_il I_n) e_kl from member entries f_il."""
    F = MatCoeffPoly(n, ())
    for i in range(n):
        for l in range(n):
            if rng.random() < 0.25:
                f = canonicalize(random_poly(rng, rng.randint(0, 3), 5), 1)
            else:
                f = rng.choice(pool)
            k = rng.randrange(n)
            F = F + MatCoeffPoly.unit(n, i, k) * MatCoeffPoly.scalar(f, n) * MatCoeffPoly.unit(n, k, l)
    return F


def check_matrix_coefficients(quick=False, seed=5) -> CheckResult:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    problems = []
    rounds = 30 if quick else 200
    for _ in range(rounds):
        n = rng.randint(1, 3)
        F = _random_rat_matcoeff(rng, n, rng.randint(0, 4))
        M = phi(F)
        if phi_inv(M) != F or phi(phi_inv(M)) != M:
            problems.append("phi round trip")
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if entry_scalarize(F, j, k) != M[j - 1, k - 1]:
                    problems.append("scalarization")
    trials = 50 if quick else 500
    n_members = 3 if quick else 8
    sampled = 0
    for n in (1, 2):
        pool = member_pool(n)
        for _ in range(n_members):
            F = random_member_matcoeff(rng, n, pool)
            if not member_matrix_poly(F).member:
                problems.append("assembled element rejected")
                continue
            rep = sample_check_integrality(F, trials, seed=rng.randrange(2**32))
            sampled += rep.trials
            if not rep.ok:
                problems.append(f"member evaluates non-integrally at {rep.matrix}")
    bad = MatCoeffPoly.scalar(canonicalize(parse_poly("x^2-x"), 2), 2)
    if member_matrix_poly(bad).member:
        problems.append("(x^2-x)/2 * I_2 accepted")
    ok = not problems
    detail = (
        f"{rounds} round trips with all sandwiches, {sampled} integrality samples on members, "
        + ("consistent" if ok else problems[0])
    )
    return CheckResult("matrix-coefficient isomorphism", ok, detail, time.perf_counter() - t0)


def check_werner_closure(quick=False, seed=6) -> CheckResult:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    pairs = 15 if quick else 100
    pools = {n: member_pool(n) for n in (1, 2)}
    failures = 0
    for _ in range(pairs):
        n = rng.choice((1, 2))
        F = random_member_matcoeff(rng, n, pools[n])
        G = random_member_matcoeff(rng, n, pools[n])
        if not member_matrix_poly(mat_poly_mul(F, G)).member:
            failures += 1
    ok = failures == 0
    return CheckResult(
        "closure under multiplication", ok, f"{pairs} member pairs, {failures} non-member products",
        time.perf_counter() - t0,
    )


def check_monotonicity(quick=False, seed=7) -> CheckResult:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    trials = 40 if quick else 300
    problems = []
    for _ in range(trials):
        n = rng.choice((2, 3))
        m = rng.randint(1, n - 1)
        f = random_candidate(rng, n)
        big = member_via_divisibility(f, n)
        small = member_via_divisibility(f, m)
        if big.member and not small.member:
            problems.append(f"member at {n} but not at {m}: {f}")
        if not small.member:
            A = companion(small.witness)
            embedded = block_diag(A, IntMatrix.zero(n - m))
            if eval_poly_at_matrix(f.num, embedded).all_divisible_by(f.den):
                problems.append(f"block embedding integral for {f}")
            if big.member:
                problems.append(f"oracle accepts {f} at {n} despite block witness")
    ok = not problems
    return CheckResult(
        "monotonicity in n", ok,
        f"{trials} trials, " + ("no counterexample" if ok else problems[0]),
        time.perf_counter() - t0,
    )


def _irreducible_sympy(k: IntPoly, p: int) -> bool:
    x = Symbol("x")
    return Poly(list(reversed(k.coeffs)), x, domain=GF(p)).is_irreducible


def check_irreducible_lift(quick=False, seed=8) -> CheckResult:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    trials = 40 if quick else 200
    problems = []
    for _ in range(trials):
        n = rng.randint(1, 4)
        h = IntPoly([rng.randint(-100, 100) for _ in range(n)] + [1])
        d = rng.randint(2, 30)
        lift = irreducible_lift(h, d)
        k, p = lift.poly, lift.prime
        if not (
            k.is_monic()
            and k.degree == n
            and reduce_mod(k - h, d).coeffs == ()
            and d % p != 0
            and _irreducible_sympy(k, p)
        ):
            problems.append(f"h={h} d={d} -> {k} (p={p})")
    ok = not problems
    return CheckResult(
        "irreducible lift contract", ok,
        f"{trials} random (h, d), " + ("all certified" if ok else problems[0]),
        time.perf_counter() - t0,
    )


def run_all(quick=False) -> list[CheckResult]:
    return [
        check_three_oracles(quick),
        check_known_members(),
        check_image_theorem(quick),
        check_padic(quick),
        check_matrix_coefficients(quick),
        check_werner_closure(quick),
        check_monotonicity(quick),
        check_irreducible_lift(quick),
    ]
