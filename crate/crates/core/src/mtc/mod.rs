//! Modular data and fusion rings.

mod families;
mod fusion;
mod modular;
mod verlinde;

pub use families::{
    cyclic_group_dual, cyclic_group_ring, ising_fusion_ring, ising_modular_data, ising_twists,
    su2_conformal_weight, su2_fusion_closed_form, su2_modular_data, sun_max_level,
    sun_modular_data, sun_weights, SU2_MAX_LEVEL,
};
pub(crate) use families::su2_fusion_any_level;
pub(crate) use modular::unitarity_residual;
pub use fusion::{FusionAxioms, FusionRing, Label};
pub use modular::{central_charge_from_twists, Family, ModularData, UNITARITY_TOL};
pub use verlinde::{
    check_modular, modular_data_from_twists, verlinde_fusion, ModularCheck, FUSION_ROUNDING_TOL,
    MODULAR_TOL,
};
