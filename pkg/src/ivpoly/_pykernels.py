"""Pure-Python residue-ring kernels; reference behaviour for ``_ckernels``.

All inputs are already reduced into [0, d).  Monic polynomials of degree n
are addressed by their enumeration index: coefficient a_j is digit j of the
index in base d (a_0 varies fastest).
"""


def index_to_coeffs(idx, n, d):
    out = []
    for _ in range(n):
        idx, a = divmod(idx, d)
        out.append(a)
    return out


def rem_monic_mod(g, h_low, d):
    """Remainder of g by the monic x^n + h_low over Z/dZ, as n coefficients."""
    n = len(h_low)
    r = list(g)
    for i in range(len(r) - 1, n - 1, -1):
        c = r[i]
        if c:
            base = i - n
            for j in range(n):
                r[base + j] = (r[base + j] - c * h_low[j]) % d
            r[i] = 0
    r = r[:n]
    return r + [0] * (n - len(r))


def scan_divisibility(g, n, d, start, stop, first_only):
    fails = []
    for idx in range(start, stop):
        h_low = index_to_coeffs(idx, n, d)
        if any(rem_monic_mod(g, h_low, d)):
            fails.append(idx)
            if first_only:
                break
    return fails


def matrix_eval_mod(g, flat, n, d):
    """g(A) mod d by Horner; A and the result are row-major flat lists."""
    acc = [0] * (n * n)
    rng = range(n)
    for c in reversed(g):
        acc = [
            sum(acc[i * n + k] * flat[k * n + j] for k in rng) % d
            for i in rng
            for j in rng
        ]
        if c:
            for i in rng:
                acc[i * n + i] = (acc[i * n + i] + c) % d
    return acc


def companion_flat(h_low, n, d):
    flat = [0] * (n * n)
    for i in range(1, n):
        flat[i * n + i - 1] = 1
    for i in range(n):
        flat[i * n + n - 1] = (-h_low[i]) % d
    return flat


def scan_companion(g, n, d, start, stop, first_only):
    fails = []
    for idx in range(start, stop):
        flat = companion_flat(index_to_coeffs(idx, n, d), n, d)
        if any(matrix_eval_mod(g, flat, n, d)):
            fails.append(idx)
            if first_only:
                break
    return fails
