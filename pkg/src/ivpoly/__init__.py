"""Integer-valued polynomials on integer matrix rings.

Decides membership of g/d in Int(M_n(Z)), computes images of integer and
p-adic matrices, and handles polynomials with matrix coefficients through the
isomorphism with matrices of polynomials.
"""

__version__ = "0.1.0"

from .errors import BudgetExceeded, IvpolyError, NotIntegerValuedAtMatrix
from .exact_rings import (
    IntPoly,
    RationalPolyRep,
    ResiduePoly,
    canonicalize,
    crt_coeffwise,
    monic_divmod,
    parse_poly,
    reduce_mod,
)
from .images import (
    PadicMatrix,
    PadicPolyApprox,
    cancellation_modulus,
    image_at,
    padic_image,
    reduced_representative,
)
from .matrices import (
    IntMatrix,
    ResidueMatrix,
    block_diag,
    char_poly,
    companion,
    eval_poly_at_matrix,
    parse_matrix,
)
from .matrix_poly import (
    MatCoeffPoly,
    MatOfPoly,
    entry_ideal_generators,
    entry_scalarize,
    eval_matcoeff_at_matrix,
    mat_poly_mul,
    member_matrix_poly,
    mn_ideal_generators,
    phi,
    phi_inv,
    sample_check_integrality,
)
from .membership import (
    EnumerationBudget,
    MembershipVerdict,
    enumerate_monic,
    generate_family,
    irreducible_lift,
    is_irreducible_mod_p,
    member_via_companion,
    member_via_divisibility,
    member_via_irreducible_companion,
    prime_power_split,
)
