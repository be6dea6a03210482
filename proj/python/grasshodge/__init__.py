"""Exact twisted Hodge numbers of Grassmannians via t-core partitions."""

from ._core import (
    DomainError,
    LimitExceeded,
    __version__,
    alpha_sequence,
    boundary_partition,
    bounded_partitions,
    bwb_outcome,
    classify_extremal_n,
    classify_extremal_n_minus_1,
    classify_small_t,
    coarsen,
    complement,
    conjugate,
    core_count_series,
    count_tcore_of_size,
    hodge_number,
    hodge_table,
    hook_length,
    i_form_excluded,
    is_bounded,
    is_t_core,
    j_form_excluded,
    knijt_witnesses,
    make_partition,
    necessary_battery,
    run_suite,
    schur_dim,
    semiperimeter,
    skew_inverse,
    t3_nonvanishing,
    t_interior,
    tcore_bounded_partitions,
)

__all__ = [
    "DomainError",
    "LimitExceeded",
    "__version__",
    "alpha_sequence",
    "boundary_partition",
    "bounded_partitions",
    "bwb_outcome",
    "classify_extremal_n",
    "classify_extremal_n_minus_1",
    "classify_small_t",
    "coarsen",
    "complement",
    "conjugate",
    "core_count_series",
    "count_tcore_of_size",
    "hodge_number",
    "hodge_table",
    "hook_length",
    "i_form_excluded",
    "is_bounded",
    "is_t_core",
    "j_form_excluded",
    "knijt_witnesses",
    "make_partition",
    "necessary_battery",
    "run_suite",
    "schur_dim",
    "semiperimeter",
    "skew_inverse",
    "t3_nonvanishing",
    "t_interior",
    "tcore_bounded_partitions",
]
