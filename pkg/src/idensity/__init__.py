"""Exact ideal-density machinery on the reals.

Subpackages cover: symbolic subsets of N with exact natural density
(`indexsets`, `ideals`), piecewise symbolic sequences with ideal
limsup/liminf (`sequences`), the rational interval-set measure algebra
(`intervals`), ideal-density classification and the density-one operator
(`density`), and the induced topology layer (`topology`). The `idensity`
command line front end drives all of it on textual inputs.
"""

from .errors import (
    GoldenMismatch,
    GrammarOverflow,
    IdensityError,
    InvalidGenerator,
    InvariantBreach,
    MalformedInterval,
    NormalizationOverflow,
    ParseError,
    PartitionViolation,
    PreconditionViolation,
    UnsupportedSparseIntersection,
)
from .ideals import Ideal, ideal_contains, in_filter
from .indexsets import (
    ArithmeticProgression,
    Complement,
    CUBES,
    Difference,
    FiniteSet,
    IndexSet,
    Intersection,
    NATURALS,
    NormalForm,
    SQUARES,
    SparseAtom,
    SparseKind,
    Union,
    fin,
    is_empty,
    is_finite,
    member,
    natural_density,
    normalize,
    parse_index_set,
    powers_of,
    render_index_set,
)
from .intervals import (
    EMPTY_SET,
    IntervalSet,
    Iv,
    REALS,
    Window,
    boolean,
    canonicalize,
    complement,
    closed,
    intersect,
    is_null,
    measure,
    measure_in_window,
    open_iv,
    parse_interval_set,
    render_interval_set,
    singleton,
    subset,
    subtract,
    symm_diff,
    union,
)
from .sequences import (
    Approach,
    Constant,
    Linear,
    Piece,
    PieceLimitReport,
    PiecewiseSequence,
    PowerDecay,
    Reciprocal,
    ShiftedReciprocal,
    deviation_indices,
    evaluate,
    exceeds_on_nonsmall_set,
    ideal_convergent_limit,
    ideal_liminf,
    ideal_limsup,
    is_ideal_bounded,
    negate_sequence,
    parse_law,
    piece_limits,
    render_law,
    shift_sequence,
    sum_sequences,
    undercuts_on_nonsmall_set,
)
from .density import (
    ArmPair,
    DensityClassification,
    DensityOutcome,
    LocalSignature,
    WindowGenerator,
    classical_density,
    classify_density,
    density_along,
    density_one_points,
    is_admissible,
    is_density_point,
    is_dispersion_point,
    local_signature,
    ratio_sequence,
    shrinking_indices,
)
from .topology import (
    LemmaReport,
    OpenNullDecomposition,
    check_finite_closure,
    check_operator_laws,
    decompose_measurable,
    is_density_open,
    is_usual_open,
)

__version__ = "0.1.0"
