"""Exact Hilbert depth and Stanley depth of multigraded monomial modules."""

from .lattice import (
    DimensionError,
    DomainError,
    Interval,
    Order,
    box_iter,
    g_set,
    meet_join,
    partial_cmp,
    q_interval,
    rho,
    z_set,
)
from .module_spec import (
    ComponentBasisElement,
    HilbertTable,
    ModuleElement,
    ModuleSpec,
    MonomialIdeal,
    SpecError,
    Summand,
    UnsupportedSpecError,
    component_basis,
    determine_g,
    extend_scalars,
    hilbert_table,
    is_dim_le_1,
    multiply,
    parse_spec,
    specialize_ideal_spec,
    specialize_table,
)
from .partitions import (
    HilbertComponent,
    HilbertDecomposition,
    HilbertPartition,
    InconsistentPartitionError,
    count_partitions,
    depth_of_partition,
    enumerate_partitions,
    exists_partition,
    hdepth,
    induced_decomposition,
    iter_partitions,
    partition_from_decomposition,
    specialize_partition,
)
from .stanley import (
    PreconditionError,
    StanleyCandidate,
    StanleyDecomposition,
    annihilator_free,
    check_stanley_candidate,
    diagnose_candidate,
    generic_stanley_check,
    necessary_filter,
    stdepth,
    stdepth_dim1,
)

__version__ = "0.1.0"


def module_hdepth(spec: ModuleSpec) -> tuple[int, HilbertPartition]:
    """Hilbert depth of a module, computed on its table at ``spec.g``."""
    return hdepth(hilbert_table(spec))
