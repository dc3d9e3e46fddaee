"""Computational toolkit for Birkhoff-James orthogonality, operator norms
and norm attainment sets on finite-dimensional l_p spaces."""

__version__ = "0.1.0"

from .errors import (
    DegenerateOperatorError,
    DomainError,
    IsometryLikeError,
    IsometryMultipleError,
    UnsupportedExponentError,
)
from .space_core import (
    INF,
    DerivPair,
    Exponent,
    Vec,
    deriv_oracle,
    one_sided_derivative,
    p_norm,
    p_norm_enclosure,
    norm_pow,
    support_coords,
)
from .orthogonality import (
    OrthVerdict,
    SymmetryVerdict,
    bj_bruteforce,
    bj_orthogonal,
    check_left_symmetric,
    check_right_symmetric,
    in_minus,
    in_plus,
)
from .operators import (
    AttainmentSet,
    Operator2,
    WHOLE_PLANE,
    apply,
    daugavet_residual,
    invariant_line_check,
    is_isometry_multiple,
    kernel,
    mt_numeric,
    operator_norm_exact,
    operator_norm_numeric,
)
from .exact_enum import (
    RootBox,
    SignedPoly,
    candidate_polynomials,
    isolate_real_roots,
    mt_bound,
    mt_exact,
    orth_direction,
)
from .theorem_verify import CheckReport, random_operator, run_suite, verify_all

__all__ = [name for name in dir() if not name.startswith("_")]
