//! Norms along `C_p`: tensor powers with their transfers, the presented model for
//! the `C₂`-norm of `ℤ[x]`, and Burnside rings of cyclic groups.

mod burnside;
mod tambara;
mod tensor_power;

pub use burnside::{witt_burnside_compare, BurnsideElement, BURNSIDE_MAX_ORDER};
pub use tambara::{
    build_tambara_model, naive_comparison, unit_generates_burnside_ring, verify_phi_norm_identity, AxiomReport,
    NaiveComparison, TambaraModel,
};
pub use tensor_power::{
    norm_linear_mod_transfer, verify_binomial_transfer, BinomialTransferReport, EquivariantTensorPower,
    GeometricFixedPoints,
};
