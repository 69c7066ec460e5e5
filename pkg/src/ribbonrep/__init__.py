"""Exact character values of S_n and G wr S_n through ribbon peeling."""

from .characters import (
    AbelianGroupSpec,
    CharacterTable,
    centralizer_order,
    character_table,
    chi_sn,
    class_size,
    psi_wreath,
    psi_zero_colored,
)
from .cyclotomic import CyclotomicInt, cyc_add, cyc_as_integer, cyc_conj, cyc_mul, cyc_neg, cyc_root
from .partitions import (
    BoundarySequence,
    Composition,
    Partition,
    RowColorSequence,
    anchor_position,
    beta_numbers,
    boundary_sequence,
    dimension,
    partition_from_boundary,
    partitions,
    row_color_sequence,
)
from .quotient import (
    ColoredCycleType,
    NonEmptyCoreError,
    RPartitePartition,
    enumerate_par_r,
    phi_r,
    r_core,
    r_quotient,
    rpartite_partitions,
)
from .ribbons import (
    PeelStep,
    PeelTrace,
    RPartiteRibbonTableau,
    enumerate_mu_peelings,
    enumerate_rpartite_tableaux,
    peel,
    peel_candidates,
    peel_mod,
)
from .signs import SignReport, d_r_distance, inv_r, sign2_closed, sign_r, sign_report
from .verify import VerificationReport, verify_degree_fact, verify_identity, verify_identity_abelian

__version__ = "0.1.0"
