//! Exact algebra for cyclic bar constructions and their equivariant structure.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: integers, polynomials, presented rings over ℤ, Smith normal
//!   form and homology of integer chain complexes.
//! * [`witt`]: p-typical Witt vectors of finite length.
//! * [`simplicial`]: finite simplicial sets and modules, edgewise
//!   subdivision, Λₙᵒᵖ structures and chain complexes.
//! * [`hochschild`]: finite-rank algebras and their (twisted, relative,
//!   bimodule) cyclic bar constructions.
//! * [`adams`]: Adams operations as tensors with the covering maps of the
//!   simplicial circle.
//! * [`norm`]: tensor-power norms, transfer ideals, the presented Tambara
//!   model for the C₂-norm of ℤ[x], and Burnside rings of cyclic groups.
//!
//! Everything is exact; there is no floating-point arithmetic anywhere.

pub mod adams;
pub mod error;
pub mod exact;
pub mod hochschild;
pub mod norm;
pub mod simplicial;
pub mod witt;

pub use error::{Error, Result};
