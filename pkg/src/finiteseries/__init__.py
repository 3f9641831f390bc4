"""Exact tools for power series whose coefficients take finitely many values.

Polynomials and truncated series with rational coefficients, P-recursive
sequences, support classification, rational reconstruction with verification,
semilinear sets, lattice points on varieties, and a slicing construction that
turns a two-variable prefix plus a recurrence into a rational function.
"""

from .classify import (
    EmpiricalFinite,
    FiniteCertified,
    SyndeticCertified,
    integer_root_bound,
    max_gap,
    support_classify,
    syndetic_witness,
)
from .errors import *  # noqa: F401,F403
from .pipeline import (
    allowed_primes,
    build_G,
    gamma_set,
    in_semigroup,
    main_theorem_d2,
    run_pipeline_d2,
    vanishing_test,
)
from .poly import MultiPoly, parse_poly, parse_rational_parts
from .precursive import (
    MultiCoeffRecurrence,
    OdeOperator,
    UniPRecurrence,
    normalize_q,
    ode_to_recurrence,
    unroll_uni,
    validate_multirec,
)
from .rationality import SzegoForm, certify_periodic, detect_szego, guess_rational, rational_fit
from .semilinear import (
    LinearSet,
    SemilinearSet,
    contains,
    gf_linear,
    gf_semilinear,
    indicator_prefix,
    is_free,
    multiplicity_prefix,
)
from .series import DensePrefix, RationalGF, hadamard, prefix_mul_poly, rf_equal, series_expand, slice_extract
from .varieties import (
    CurveFactor,
    LinearSystem,
    classify_factor,
    curve_gf,
    linear_system_gf,
    mahler_growth_witness,
    minimal_solutions,
    np3_demo,
)

__version__ = "0.1.0"
