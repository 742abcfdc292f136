"""Backend selection for the residue-ring hot loops.

The compiled ``_ckernels`` extension is used when it imports and the modulus
fits in a machine word; otherwise the pure-Python ``_pykernels`` run.  Set
``IVPOLY_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("IVPOLY_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

# products of two residues must fit in a signed 64-bit word
WORD_MODULUS_LIMIT = 2**31

BACKEND = "cython" if _ckernels is not None else "python"


def backend_for(d):
    if _ckernels is not None and d <= WORD_MODULUS_LIMIT:
        return _ckernels
    return _pykernels


def rem_monic_mod(g, h_low, d):
    return backend_for(d).rem_monic_mod(g, h_low, d)


def scan_divisibility(g, n, d, start, stop, first_only=True):
    return backend_for(d).scan_divisibility(g, n, d, start, stop, first_only)


def matrix_eval_mod(g, flat, n, d):
    return backend_for(d).matrix_eval_mod(g, flat, n, d)


def scan_companion(g, n, d, start, stop, first_only=True):
    return backend_for(d).scan_companion(g, n, d, start, stop, first_only)


index_to_coeffs = _pykernels.index_to_coeffs
