"""Exact decision procedures for the equation z'' = z' f(z) with rational f."""

from .affine import (
    AffineMap,
    CanonicalFormWitness,
    StabilizerGroup,
    acl_profile,
    affine_stabilizer,
    affine_transporter,
    canonical_form_detect,
    relation_report,
)
from .algebra import Poly, RatFunc, compose_affine, resultant
from .classifier import (
    ClassificationReport,
    classify_poizat,
    generic_fiber_squarefree,
    lienard_family_orthogonality,
    rosenlicht_classify,
)
from .darboux import clear_denominators, darboux_polynomials, jouanolou_report, odani_check
from .expr import ParseError, parse_ratfunc, parse_vector_field
from .forms import check_invariant_volume, derivation_from_poizat
from .hermite import (
    hermite_reduce,
    is_exact_derivative,
    is_log_derivative_multiple,
    nonzero_residue_count,
    rational_antiderivative,
)
from .puiseux import PuiseuxSeries, log_derivative_residue
from .report import report_from_json, report_to_json

__version__ = "0.1.0"
