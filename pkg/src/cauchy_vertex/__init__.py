"""Exact partitions, Schur polynomials, a partition-indexed Fock space and
half plane partitions, with checkers for Cauchy-type identities."""

from .fock import (
    FockState,
    apply_half_vertex,
    basis_from_composition,
    inner_product,
    inner_product_shuffle_oracle,
    pair,
    vacuum_product_state,
)
from .hpp import (
    Chain,
    HalfPlanePartition,
    enumerate_chains,
    enumerate_hpps,
    enumerate_plane_partitions,
    from_chain,
    hpp_stats,
    slices,
)
from .partitions import (
    CapError,
    Partition,
    conjugate,
    enumerate_interlacing_above,
    enumerate_partitions_in_box,
    interlaces,
    straighten,
    z_lambda,
)
from .poly import MultiPoly, QSeries, coefficient_of, expand_factor_product, poly_mul
from .schur import SchurContext, complete_homogeneous, schur, schur_by_branching
from .verify import (
    Report,
    verify_cauchy_truncated,
    verify_correlation,
    verify_dual_cauchy,
    verify_fock,
    verify_limit_series,
    verify_macmahon,
    verify_q_box,
)

__version__ = "0.1.0"
