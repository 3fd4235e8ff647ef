"""Finite multiplicative lattices, lattice modules, and a theorem verifier."""

from .classify import MClassification, classify_m, minimal_primes_over, rad_m
from .expansion import (
    ExpansionL,
    ExpansionM,
    from_table_l,
    from_table_m,
    is_delta_primary,
    is_delta_primary_alt,
    is_delta_primary_l,
    is_deltaL_primary,
    is_meet_preserving_l,
    is_meet_preserving_m,
    make_delta0,
    make_delta0_l,
    make_delta1,
    make_delta1_l,
    make_delta2,
    make_delta2_l,
    make_E_delta,
    meet_expansions,
    meet_expansions_l,
)
from .generators import gen_frame, gen_zn
from .lattice import (
    Lattice,
    MulLattice,
    ValidationReport,
    build_lattice,
    is_2abs_l,
    is_2abs_primary_l,
    is_pg_lattice,
    is_primary_l,
    is_prime_l,
    is_principal_l,
    radical_l,
    residual_ll,
    validate_mul,
)
from .module import (
    InstanceBundle,
    LatticeModule,
    check_meet_distribution,
    is_faithful,
    is_multiplication_module,
    is_pg_module,
    is_principal_m,
    make_bundle,
    residual_ma,
    residual_mm,
    self_module,
    validate_module,
)

__all__ = [name for name in dir() if not name.startswith("_")]
