"""Power partial isometry index and ascent of finite complex matrices."""

from ._backend import BACKEND
from .core import (
    DEFAULT_CONFIG,
    ToleranceConfig,
    adjoint,
    as_matrix,
    direct_sum,
    is_projection,
    is_unitary,
    multiply,
    nullity,
    power,
    rank,
)
from .errors import (
    InfeasibleError,
    InputError,
    NumericError,
    PPIError,
    PreconditionError,
    ToleranceDiagnosticError,
)
from .isometry import (
    INFINITY,
    BlockCheck,
    BlockForm,
    IndexReport,
    analyze,
    canonical_form,
    is_partial_isometry,
    ppi_index,
    verify_block_form,
)
from .spectral import (
    KernelChain,
    algebraic_multiplicity_zero,
    ascent,
    geometric_multiplicity_zero,
    kernel_chain,
)
from .synthesis import (
    FeasibilityVerdict,
    WitnessRecipe,
    feasible,
    feasible_pairs,
    jordan_block,
    sn_matrix,
    synthesize,
)

__version__ = "0.1.0"
