use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::ring::{is_prime, BaseRing};
use crate::error::{Error, Result};

/// A finitely generated abelian group `ℤ^free_rank ⊕ ⊕ ℤ/t_i` with `t_i | t_{i+1}`.
///
/// For vector spaces over a field the group is recorded by its dimension in
/// `free_rank` with empty torsion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupShape {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupShape {
    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupShape { free_rank: rank, torsion: Vec::new() }
    }

    /// Normalizes an arbitrary list of cyclic orders into a divisibility chain.
    pub fn new(free_rank: usize, cyclic_orders: &[BigInt]) -> Self {
        let orders: Vec<BigInt> = cyclic_orders.iter().filter(|t| !t.is_one()).cloned().collect();
        let extra_free = orders.iter().filter(|t| t.is_zero()).count();
        let finite: Vec<BigInt> = orders.into_iter().filter(|t| !t.is_zero()).map(|t| t.abs()).collect();
        let n = finite.len();
        let snf = IntMatrix::diagonal(&finite, n, n).smith_normal_form();
        AbelianGroupShape { free_rank: free_rank + extra_free, torsion: torsion_part(&snf.invariant_factors()) }
    }

    pub fn from_ints(free_rank: usize, torsion: &[i64]) -> Self {
        Self::new(free_rank, &torsion.iter().map(|t| BigInt::from(*t)).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order if finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Self {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        Self::new(self.free_rank + other.free_rank, &t)
    }
}

fn torsion_part(factors: &[BigInt]) -> Vec<BigInt> {
    factors.iter().filter(|d| !d.is_one()).cloned().collect()
}

impl fmt::Display for AbelianGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("ℤ/{t}"));
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `ℤ^rows / (column span of m)`.
pub fn cokernel_shape(m: &IntMatrix) -> AbelianGroupShape {
    let snf = m.smith_normal_form();
    let f = snf.invariant_factors();
    AbelianGroupShape { free_rank: m.rows() - f.len(), torsion: torsion_part(&f) }
}

/// Basis (as columns) of the integer kernel of `m`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = m.smith_normal_form();
    let r = snf.rank();
    let cols: Vec<Vec<BigInt>> = (r..m.cols()).map(|j| snf.v.column(j)).collect();
    IntMatrix::from_columns(m.cols(), &cols)
}

/// `span(lattice) / span(sub)` for a sublattice given by generators.
pub fn lattice_quotient_shape(lattice: &IntMatrix, sub: &IntMatrix) -> Result<AbelianGroupShape> {
    if lattice.rows() != sub.rows() {
        return Err(Error::DimensionMismatch("lattice and sublattice live in different ambient ranks".into()));
    }
    let snf = lattice.smith_normal_form();
    let factors = snf.invariant_factors();
    let r = factors.len();
    // coordinates of each generator of `sub` in the basis u⁻¹·d_i·e_i of the lattice
    let mut coords = Vec::with_capacity(sub.cols());
    for j in 0..sub.cols() {
        let y = snf.u.mul_vec(&sub.column(j));
        let mut c = Vec::with_capacity(r);
        for (i, yi) in y.iter().enumerate() {
            if i < r {
                if !yi.is_multiple_of(&factors[i]) {
                    return Err(Error::InvalidArgument("generator lies outside the lattice".into()));
                }
                c.push(yi / &factors[i]);
            } else if !yi.is_zero() {
                return Err(Error::InvalidArgument("generator lies outside the lattice".into()));
            }
        }
        coords.push(c);
    }
    Ok(cokernel_shape(&IntMatrix::from_columns(r, &coords)))
}

fn check_composable(d_in: &IntMatrix, d_out: &IntMatrix, modulus: Option<&BigInt>) -> Result<()> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch(format!(
            "incoming differential has {} rows, outgoing has {} columns",
            d_in.rows(),
            d_out.cols()
        )));
    }
    let sq = d_out * d_in;
    let vanishes = match modulus {
        None => sq.is_zero(),
        Some(m) => sq.reduce_mod(m).is_zero(),
    };
    if vanishes {
        Ok(())
    } else {
        Err(Error::NotAComplex("d ∘ d ≠ 0".into()))
    }
}

/// `ker(d_out) / im(d_in)` with coefficients in ℤ, ℤ/p (p prime) or ℚ.
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix, coefficients: &BaseRing) -> Result<AbelianGroupShape> {
    match coefficients {
        BaseRing::Integers => {
            check_composable(d_in, d_out, None)?;
            let snf_in = d_in.smith_normal_form();
            let r_in = snf_in.rank();
            let r_out = d_out.rank_rational();
            Ok(AbelianGroupShape {
                free_rank: d_in.rows() - r_in - r_out,
                torsion: torsion_part(&snf_in.invariant_factors()),
            })
        }
        BaseRing::Rationals => {
            check_composable(d_in, d_out, None)?;
            Ok(AbelianGroupShape::free(d_in.rows() - d_in.rank_rational() - d_out.rank_rational()))
        }
        BaseRing::IntegersMod(p) if is_prime(p) => {
            check_composable(d_in, d_out, Some(p))?;
            Ok(AbelianGroupShape::free(d_in.rows() - d_in.rank_mod_prime(p) - d_out.rank_mod_prime(p)))
        }
        BaseRing::IntegersMod(m) => Err(Error::InvalidRing(format!(
            "homology over ℤ/{m} is not supported for composite moduli; use homology_of_zmod_complex"
        ))),
        BaseRing::Polynomial { .. } => Err(Error::InvalidRing("homology over a polynomial ring".into())),
    }
}

/// Homology of a complex of free ℤ/m-modules, returned as an abelian group:
/// `{x : d_out x ≡ 0} / (im d_in + m·ℤⁿ)`.
pub fn homology_of_zmod_complex(d_in: &IntMatrix, d_out: &IntMatrix, m: &BigInt) -> Result<AbelianGroupShape> {
    check_composable(d_in, d_out, Some(m))?;
    let n = d_in.rows();
    let b = d_out.rows();
    let mi = IntMatrix::diagonal(&vec![m.clone(); b], b, b);
    let k = kernel_basis(&d_out.hconcat(&mi));
    let cycles: Vec<Vec<BigInt>> = (0..k.cols()).map(|j| k.column(j)[..n].to_vec()).collect();
    let cycles = IntMatrix::from_columns(n, &cycles);
    let boundaries = d_in.hconcat(&IntMatrix::diagonal(&vec![m.clone(); n], n, n));
    lattice_quotient_shape(&cycles, &boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn multiplication_by_n() {
        let d_in = IntMatrix::from_rows(&[vec![5]]);
        let d_out = IntMatrix::zeros(0, 1);
        let h = homology_at(&d_in, &d_out, &BaseRing::Integers).unwrap();
        assert_eq!(h, AbelianGroupShape::from_ints(0, &[5]));
    }

    #[test]
    fn exact_and_trivial() {
        let id = IntMatrix::identity(1);
        assert!(homology_at(&id, &IntMatrix::zeros(0, 1), &BaseRing::Integers).unwrap().is_zero());
        let h = homology_at(&IntMatrix::zeros(3, 0), &IntMatrix::zeros(0, 3), &BaseRing::Integers).unwrap();
        assert_eq!(h, AbelianGroupShape::free(3));
    }

    #[test]
    fn non_complex_rejected() {
        let id = IntMatrix::identity(1);
        assert!(matches!(homology_at(&id, &id, &BaseRing::Integers), Err(Error::NotAComplex(_))));
    }

    #[test]
    fn composite_modulus_rejected() {
        let z = IntMatrix::zeros(1, 1);
        assert!(homology_at(&z, &z, &BaseRing::IntegersMod(int(4))).is_err());
        let h = homology_at(&IntMatrix::from_rows(&[vec![2]]), &IntMatrix::zeros(0, 1), &BaseRing::IntegersMod(int(2)));
        assert_eq!(h.unwrap(), AbelianGroupShape::free(1));
    }

    #[test]
    fn zmod_complex() {
        // ℤ/4 --(·2)--> ℤ/4: kernel {0,2}, cokernel ℤ/2
        let two = IntMatrix::from_rows(&[vec![2]]);
        let m = int(4);
        let h0 = homology_of_zmod_complex(&two, &IntMatrix::zeros(0, 1), &m).unwrap();
        assert_eq!(h0, AbelianGroupShape::from_ints(0, &[2]));
        let h1 = homology_of_zmod_complex(&IntMatrix::zeros(1, 0), &two, &m).unwrap();
        assert_eq!(h1, AbelianGroupShape::from_ints(0, &[2]));
    }

    #[test]
    fn shape_normalization() {
        let s = AbelianGroupShape::from_ints(1, &[2, 3, 1]);
        assert_eq!(s.torsion, vec![int(6)]);
        assert_eq!(s.to_string(), "ℤ ⊕ ℤ/6");
        assert_eq!(AbelianGroupShape::from_ints(0, &[2, 2]).to_string(), "ℤ/2 ⊕ ℤ/2");
    }

    #[test]
    fn lattice_quotient() {
        let l = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        let s = IntMatrix::from_rows(&[vec![4], vec![0]]);
        assert_eq!(lattice_quotient_shape(&l, &s).unwrap(), AbelianGroupShape::from_ints(1, &[2]));
        let outside = IntMatrix::from_rows(&[vec![1], vec![0]]);
        assert!(lattice_quotient_shape(&l, &outside).is_err());
    }
}
