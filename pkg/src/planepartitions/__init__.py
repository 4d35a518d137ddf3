"""Exact machinery for the plane-partition generating function.

Three independent routes to the same series live here: brute-force
enumeration of plane partitions by volume, the transfer-operator evolution
of Young-diagram states under interlacing expansions, and the closed-form
infinite product.  Supporting cast: exact truncated q-series arithmetic,
diagonal slicing, commutation checks at rational points, and skew
tableau censuses.
"""

from .fock import (
    CommutationReport,
    FockState,
    apply_lowering,
    apply_raising,
    apply_weight,
    chain_matrix_element,
    commutation_check,
    commutation_lhs_truncated,
    commutation_tail_bound,
    interlacings_above,
    interlacings_below,
    transfer_partition_function,
    vacuum,
    vacuum_amplitude,
)
from .partitions import (
    Partition,
    PlanePartition,
    SliceSequence,
    contains,
    count_plane_partitions,
    diagonal_slices,
    enumerate_partitions,
    interlaces,
    make_partition,
    make_plane_partition,
    partitions_of,
    plane_partitions_of,
    skew_ssyt_series,
    unslice,
    volume,
)
from .qseries import ExactRational, QSeries, finite_grid_product, macmahon_product

__all__ = [
    "CommutationReport",
    "ExactRational",
    "FockState",
    "Partition",
    "PlanePartition",
    "QSeries",
    "SliceSequence",
    "apply_lowering",
    "apply_raising",
    "apply_weight",
    "chain_matrix_element",
    "commutation_check",
    "commutation_lhs_truncated",
    "commutation_tail_bound",
    "contains",
    "count_plane_partitions",
    "diagonal_slices",
    "enumerate_partitions",
    "finite_grid_product",
    "interlaces",
    "interlacings_above",
    "interlacings_below",
    "macmahon_product",
    "make_partition",
    "make_plane_partition",
    "partitions_of",
    "plane_partitions_of",
    "skew_ssyt_series",
    "transfer_partition_function",
    "unslice",
    "vacuum",
    "vacuum_amplitude",
    "volume",
]
