//! Modular invariants: the commutant of {S, T}, exhaustive search for
//! non-negative integer invariants and their classification.

mod classify;
mod commutant;
mod mass;
mod search;

pub use classify::{
    name_su2_invariant, permutation_criterion, su2_ade_catalog, su2_named_invariant, su3_named_invariants,
    verify_invariant, Catalog, CatalogEntry, InvariantReport, NamedInvariant,
    PermutationCriterion, CATALOG_MAX_LEVEL, INVARIANT_TOL,
};
pub use commutant::{commutant_basis, CommutantBasis, COMMUTANT_TOL, MAX_DENOMINATOR};
pub use mass::MassMatrix;
pub use search::{
    enumerate_invariants, enumerate_invariants_with, EntryBound, Enumeration, DEFAULT_BUDGET,
};
