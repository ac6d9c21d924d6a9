"""Quantum mechanics over sets: exact Z2 state spaces, partition logic and the two-slit experiment."""

from .brakets import BraKetContext, Branch, born, braket, measure_attribute, norm_squared, resolution_check, transform
from .catalog import builtin_two_slit, double_primed_basis, primed_basis, two_slit_dynamics
from .dsd import (
    Dsd,
    DsdClassification,
    DsdKind,
    circumflex,
    circumflex_basis,
    classify,
    dsd_from_attribute,
    failing_part,
    maximal_dsd,
    proto_join,
    se_span,
    validate_dsd,
)
from .errors import (
    CapacityError,
    DegenerateError,
    DomainError,
    EmptyEventError,
    InvalidBasisError,
    InvalidDynamicsError,
    NormalizationError,
    NotABasisError,
    QMSetsError,
    ValidationError,
)
from .gf2space import (
    Basis,
    Gf2Matrix,
    Subspace,
    SubsetVector,
    Universe,
    add,
    change_of_basis,
    intersect,
    is_nonsingular,
    span,
    sum_of,
)
from .kernels import BACKEND
from .partitions import (
    NumericalAttribute,
    Partition,
    covering_pairs,
    dit_set,
    enumerate_partitions,
    indit_set,
    inverse_image,
    join,
    logical_entropy,
    luders_join,
    meet,
    refines,
)
from .scenario import Evolve, OutcomeTree, Reduce, Scenario, evolve, lattice_trajectory, run_scenario
from .superposition import (
    DensityMatrix,
    RelationMatrix,
    born_profile,
    density_from_relation,
    is_pure,
    mixture,
    pure_density,
    rel_diagonal,
    rel_square,
    support_matrix,
)

__version__ = "0.1.0"
