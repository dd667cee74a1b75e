//! Finite-rank algebras, their cyclic bar constructions (absolute, relative,
//! twisted, with bimodule coefficients) and Hochschild homology.

mod algebra;
mod bar;
mod hh;
mod sdcyc;

pub use algebra::{Automorphism, Bimodule, FiniteRankAlgebra, TensorBasis, Vector};
pub use bar::{
    bar_with_coefficients, bar_with_coefficients_budget, cyclic_bar, cyclic_bar_relative, cyclic_bar_with_budget,
    twisted_cyclic_bar, twisted_cyclic_bar_with_budget, DEFAULT_MAX_BASIS,
};
pub use hh::{
    free_module_shape, hochschild_complex, hochschild_homology, hochschild_homology_groups, kahler_differentials,
    kahler_presentation,
};
pub(crate) use algebra::{collect, tensor_product_of};
pub(crate) use bar::check_budget;
pub use sdcyc::{sdcyc_identification_report, verify_sdcyc_identification};
