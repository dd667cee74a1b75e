//! Exact arithmetic: coefficient rings, sparse polynomials, presented rings,
//! integer matrices and homology.

mod groebner;
mod homology;
mod matrix;
mod poly;
mod ring;
mod sparse;

pub use groebner::{PresentedRing, DEFAULT_BASIS_BOUND};
pub use homology::{
    cokernel_shape, homology_at, homology_of_zmod_complex, kernel_basis, lattice_quotient_shape,
    AbelianGroupShape,
};
pub use matrix::{IntMatrix, SmithDecomposition};
pub use poly::{poly_arith, Monomial, PolyElement, PolyOp, PolyRing};
pub use ring::{is_prime, BaseRing, ScalarRing};
pub use sparse::SparseMatrix;
