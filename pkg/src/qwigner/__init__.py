"""Generalized Wigner distributions of tuples of Hermitian matrices.

Characteristic functions, regularized grids, Weyl-ordered moments and the
geometry of the joint numerical range and singular support.
"""

from .core import (
    DEFAULT_TOL,
    PAULI,
    ConvergenceFailure,
    DegreeTooHigh,
    DimensionMismatch,
    NotHermitian,
    NotNormalized,
    NotPsd,
    OperatorTuple,
    PencilEigen,
    QWignerError,
    Tolerances,
    combine,
    eigendecompose,
    expectation_tuple,
    maximally_mixed,
    pencil,
    random_hermitian,
    random_state,
    validate_state,
    validate_tuple,
)
from .charfn import char_function, char_function_blocks, char_function_many, check_reducing
from .grid import (
    GridSpec,
    WignerGrid,
    auto_spec,
    compute_wigner_grid,
    emit,
    grid_moment,
    marginal,
    negativity_report,
    read_grid_csv,
)
from .moments import (
    MomentTable,
    check_multinomial,
    commutator_orthogonality,
    info_complete,
    quantize,
    weyl_moment,
    weyl_span_dimension,
)
from .geometry import jnr_boundary, nearly_commuting_ellipses, singular_set, support_function
from .catalog import make
from .io import dump_system, load_system

__version__ = "0.1.0"
