"""Decide, construct, and certify spectra and frame spectra of measures."""

from .errors import InconsistencyError, InvalidInputError
from .exact import (
    CycSum,
    cyclotomic_polynomial,
    evaluate_cyc,
    extended_gcd,
    reduce_rational,
    root_sum_is_zero,
)
from .sets import FiniteRationalSet, Irrational, fraction_str, parse_fraction
from .spectral import (
    SpectralDecision,
    certify_spectral_pair,
    construct_line_spectrum,
    decide_line_set,
    decide_three_point,
    is_spectral_pair,
    scale_translate,
    search_spectrum,
)
from .arrows import (
    Affine,
    ArrowFact,
    PermutationAction,
    Session,
    close,
    extract_permutation,
    new_session,
    rationality_obstruction,
    symbol,
)
from .measures import (
    AtomicMeasure,
    FrameReport,
    IFSMeasure,
    atomic_transform,
    cantor4_measure,
    completeness_defect,
    frame_bounds,
    gram_matrix,
    ifs_transform,
    jp_spectrum,
)
from .representation import (
    FiniteRep,
    WanderingReport,
    correlation,
    evaluate_group_element,
    generator_shift,
    is_wandering,
    measure_from_representation,
    multiplication_representation,
    permutation_representation,
    shift_for_time,
)

__version__ = "0.1.0"
