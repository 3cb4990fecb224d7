"""Exact computations for twisted commutative algebras and their GL-algebra counterparts."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .dims import (
    LengthOracle,
    schur_dim,
    specht_dim,
    ssyt_count_oracle,
    syt_count_oracle,
    two_row_length_estimate,
    weyl_dim,
)
from .errors import (
    GroupTooLargeError,
    GuardError,
    ModularError,
    SingularMatrixError,
    TcaError,
    UnsupportedLengthError,
)
from .fields import FieldSpec
from .growth import (
    GrowthTable,
    SlopeEstimate,
    estimate_slope,
    gk_free_tca,
    gk_sl2_invariants,
    gk_sym_triv2,
)
from .invariants import (
    InvariantSpace,
    MatrixGroup,
    close_group,
    equivariant_character,
    fixed_space,
    flat_weight_crosscheck,
    molien_dims,
    new_generators_dims,
)
from .partitions import (
    Partition,
    conjugate,
    double,
    enumerate_partitions,
    hook_lengths,
    is_p_restricted,
)
from .symfunc import SchurExpansion, flat_weight_dim, lr_product, monoidality_check
from .tensor_algebra import (
    SnCharacter,
    character_table,
    schur_weyl_decompose,
    sn_act,
    tensor_power_character,
)

__version__ = "0.1.0"
