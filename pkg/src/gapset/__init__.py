"""Numerical semigroups, almost symmetric semigroups of high type, and counting by genus."""

from .bijection import (
    forward,
    high_type_as_characterization,
    image_pf,
    inverse,
    recover_from_pf,
)
from .descent import (
    CountReport,
    DescentState,
    count_by_genus,
    descent_step,
    descent_step_general,
    enumerate_almost_symmetric_high_type,
    enumerate_genus,
    initial_state,
)
from .errors import (
    DomainError,
    GapsetError,
    GapsetViolation,
    InternalConsistencyError,
    InvalidPFError,
    MalformedInputError,
    NotCofiniteError,
)
from .ideals import RelativeIdeal, gaps_of_shifted_canonical, is_relative_ideal, shifted_canonical, star_dual
from .semigroup import (
    InvariantSummary,
    NumericalSemigroup,
    from_gaps,
    from_generators,
    invariants,
    is_almost_symmetric,
    is_almost_symmetric_definitional,
    minimal_generators,
    pseudo_frobenius,
    validate_gapset,
)

__version__ = "0.1.0"
