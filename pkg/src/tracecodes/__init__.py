"""Few-weight p-ary linear codes from trace evaluations over the local ring
F_p + uF_p + vF_p + uvF_p, via the Gray isometry onto F_p^4.

The package builds the evaluation codes, computes exact Lee-weight
distributions by enumeration, mirrors the closed-form weight tables as
predictions, and certifies optimality (Griesmer), dual distance and
secret-sharing structure.
"""

from .analysis import (
    DEFAULT_WORK_BUDGET,
    IdealSurvey,
    IdentityReport,
    Prediction,
    WeightDistribution,
    codeword_lee_weight,
    compare_with_predictions,
    distribution_by_class,
    distribution_exhaustive,
    gray_symbol_histogram,
    lee_weights_bulk,
    predict,
    predict_subcode,
    semiprimitive_exponent,
    subcode_report,
    survey_ideal_and_units,
    theta,
    theta_of_vector,
    verify_identities,
)
from .bounds import (
    DualDistanceResult,
    GriesmerVerdict,
    SssVerdict,
    dual_lee_distance,
    griesmer_optimal,
    griesmer_sum,
    minimal_codewords_bruteforce,
    minimality_check,
    sphere_packing_excludes,
)
from .construction import (
    DEFAULT_SEED,
    CodeParams,
    DerivedParams,
    Variant,
    coord_at,
    coord_index,
    derive_params,
    enumerate_coords,
    eval_field_subcode,
    evaluate,
    export_gray_words,
    group_action_spotcheck,
    subcode_distribution,
)
from .errors import ParameterError, WeightConstancyError, WorkBudgetExceeded
from .field import (
    Field,
    MultChar,
    count_zero_traces,
    cyclotomic_class,
    gauss_sum,
    parse_modulus,
)
from .ring import (
    RingClass,
    RingElem,
    big_trace,
    classify,
    frobenius,
    gray,
    gray_inverse,
    is_unit,
    lee_weight,
    ring_inv,
    ring_mul,
)

__version__ = "0.1.0"
