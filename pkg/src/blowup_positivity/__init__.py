"""Positivity of line bundles on blow-ups of the projective plane at general points.

Classes ``dH - sum n_i E_i`` live in :mod:`.lattice`; the Weyl group action
and (-1)-classes in :mod:`.weyl`; ampleness / global generation / very
ampleness certifiers in :mod:`.criteria`; the finite-field dimension oracle
in :mod:`.interpolation`.
"""

from .criteria import (
    CERTIFIERS,
    Hypothesis,
    Outcome,
    Property,
    UniformBundle,
    Verdict,
    ample_by_nef_decomposition,
    ample_general,
    ample_nagata_conditional,
    ample_r9,
    ample_uniform,
    ample_uniform_lambda,
    certify,
    gg_general,
    gg_uniform,
    min_degree,
    necessary_obstructions,
    st_criterion,
    va_uniform,
)
from .inequalities import LemmaOutcome, MultiplicityVector, lemma_key, lemma_key1, lemma_key2, xu_lower_bound
from .interpolation import (
    SystemDimensionReport,
    actual_dimension,
    curve_class_effective,
    is_special,
    predicted_dimension,
)
from .lattice import DivisorClass, canonical_class, intersect, is_minus_one_class, normalize, profile
from .weyl import (
    NefStatus,
    certify_nef,
    enumerate_exceptional_classes,
    exceptional_patterns,
    is_exceptional_class,
    reduce_to_fundamental,
    reflect,
    simple_roots,
)

__version__ = "0.1.0"
