"""Exact computations around Harper's vertex-isoperimetric theorem on Q_n."""

from .classifier import ClassificationResult, EnumerationMode, enumerate_extremal, predicted_classes
from .constructions import (
    ConstructionSpec,
    build_A_i,
    build_B,
    build_C,
    build_G,
    build_prop10,
    build_punctured_ball,
    build_two_ball_union,
    construct,
)
from .cube import (
    Family,
    SectionPair,
    Vertex,
    complement_family,
    distance,
    hamming_ball,
    join_sections,
    layer,
    neighborhood,
    neighborhood_sizes,
    sections,
    t_neighborhood,
)
from .errors import DimensionError, FamilyParseError, HarperLabError, InfeasibleError, UnsupportedDimensionError
from .extremality import (
    BallSandwich,
    ExtremalityReport,
    ball_sandwich,
    balls_contained,
    compress_codim1,
    extremality_report,
    is_extremal,
    is_hamming_ball,
    is_neighborhood_minimal,
)
from .isomorphism import (
    Automorphism,
    apply_automorphism,
    are_isomorphic,
    canonical_form,
    check_isomorphism,
    transposition_fixes,
)
from .orders import (
    OrderKind,
    compare,
    f_value,
    g_value,
    harper_min,
    harper_min_t,
    initial_segment_colex,
    initial_segment_simplicial,
    kk_min_lower_shadow,
    kk_min_upper_shadow,
    simplicial_order,
)
from .serialization import RunReport, __version__, emit_family, parse_family
from .shadows import local_lym_margin, lower_shadow, uniform_sections, upper_shadow
from .statements import Verdict, verify_statement
from .uniform import UniformFamily
