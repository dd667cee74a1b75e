use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{
    homology_at, homology_of_zmod_complex, is_prime, AbelianGroupShape, BaseRing, IntMatrix, ScalarRing,
    SparseMatrix,
};

use super::module::SimplicialModule;
use super::ops::SimplicialObject;

/// A chain complex of free modules `C_0 ← C_1 ← ⋯ ← C_top` with
/// `differentials[k−1] = d_k : C_k → C_{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    base: ScalarRing,
    ranks: Vec<usize>,
    differentials: Vec<IntMatrix>,
}

/// A homology group together with whether the truncation leaves it trustworthy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub shape: AbelianGroupShape,
    /// `false` in the top stored degree, whose incoming boundaries are missing.
    pub reliable: bool,
}

impl ChainComplex {
    /// Checks shapes and `d ∘ d = 0` (modulo the characteristic for ℤ/m).
    pub fn new(base: ScalarRing, ranks: Vec<usize>, differentials: Vec<IntMatrix>) -> Result<Self> {
        if ranks.is_empty() || differentials.len() + 1 != ranks.len() {
            return Err(Error::DimensionMismatch("need one differential per positive degree".into()));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.cols() != ranks[k + 1] || d.rows() != ranks[k] {
                return Err(Error::DimensionMismatch(format!("d_{} has the wrong shape", k + 1)));
            }
        }
        let differentials: Vec<IntMatrix> = match base.modulus() {
            Some(m) => differentials.iter().map(|d| d.reduce_mod(m)).collect(),
            None => differentials,
        };
        for k in 1..differentials.len() {
            let sq = &differentials[k - 1] * &differentials[k];
            let zero = match base.modulus() {
                Some(m) => sq.reduce_mod(m).is_zero(),
                None => sq.is_zero(),
            };
            if !zero {
                return Err(Error::NotAComplex(format!("d_{} ∘ d_{} ≠ 0", k, k + 1)));
            }
        }
        Ok(ChainComplex { base, ranks, differentials })
    }

    pub fn base(&self) -> &ScalarRing {
        &self.base
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `d_k : C_k → C_{k−1}` for `k ≥ 1`.
    pub fn differential(&self, k: usize) -> &IntMatrix {
        &self.differentials[k - 1]
    }

    fn d_in(&self, k: usize) -> IntMatrix {
        if k < self.top() {
            self.differentials[k].clone()
        } else {
            IntMatrix::zeros(self.ranks[k], 0)
        }
    }

    fn d_out(&self, k: usize) -> IntMatrix {
        if k == 0 {
            IntMatrix::zeros(0, self.ranks[0])
        } else {
            self.differentials[k - 1].clone()
        }
    }

    /// `H_k`. Over ℤ/m the result is the underlying abelian group; over ℚ it is the
    /// dimension, recorded as `free_rank`.
    pub fn homology(&self, k: usize) -> Result<HomologyGroup> {
        if k > self.top() {
            return Err(Error::InsufficientTruncation(format!("degree {k} beyond truncation {}", self.top())));
        }
        let (din, dout) = (self.d_in(k), self.d_out(k));
        let shape = match &self.base {
            ScalarRing::Integers => homology_at(&din, &dout, &BaseRing::Integers)?,
            ScalarRing::Rationals => homology_at(&din, &dout, &BaseRing::Rationals)?,
            ScalarRing::IntegersMod(m) => homology_of_zmod_complex(&din, &dout, m)?,
        };
        Ok(HomologyGroup { degree: k, shape, reliable: k < self.top() })
    }

    /// Dimension of `H_k` over a field base (ℚ or ℤ/p).
    pub fn homology_dimension(&self, k: usize) -> Result<usize> {
        let base = match &self.base {
            ScalarRing::Rationals => BaseRing::Rationals,
            ScalarRing::IntegersMod(p) if is_prime(p) => BaseRing::IntegersMod(p.clone()),
            other => return Err(Error::InvalidRing(format!("{other} is not a field"))),
        };
        Ok(homology_at(&self.d_in(k), &self.d_out(k), &base)?.free_rank)
    }

    /// `H_0, …, H_{top−1}`: the degrees the truncation determines.
    pub fn reliable_homology(&self) -> Result<Vec<AbelianGroupShape>> {
        (0..self.top()).map(|k| self.homology(k).map(|h| h.shape)).collect()
    }
}

/// `d = Σ (−1)^i d_i`.
pub fn moore_complex(m: &SimplicialModule) -> Result<ChainComplex> {
    let diffs = (1..=m.top())
        .map(|k| {
            let mut d = SparseMatrix::zeros(m.ranks()[k - 1], m.ranks()[k]);
            for (i, f) in m.faces(k).iter().enumerate() {
                let signed = if i % 2 == 0 { f.clone() } else { f.scale(&BigInt::from(-1)) };
                d = d.checked_add(&signed)?;
            }
            Ok(d.to_dense())
        })
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(m.base().clone(), m.ranks().to_vec(), diffs)
}

/// Projection `C_k → N_k` and a section `N_k → C_k` for the quotient by degenerate
/// elements, which must span an integral direct summand.
struct Quotient {
    projection: IntMatrix,
    section: IntMatrix,
}

fn degenerate_quotient(m: &SimplicialModule, k: usize) -> Result<Quotient> {
    let n = m.ranks()[k];
    if k == 0 {
        return Ok(Quotient { projection: IntMatrix::identity(n), section: IntMatrix::identity(n) });
    }
    let mut span = IntMatrix::zeros(n, 0);
    for s in m.degeneracies(k - 1) {
        span = span.hconcat(&s.to_dense());
    }
    if let Some(md) = m.base().modulus() {
        span = span.reduce_mod(md);
    }
    let snf = span.smith_normal_form();
    let factors = snf.invariant_factors();
    let unit_only = factors.iter().all(One::is_one)
        || m.base().modulus().is_some_and(|md| factors.iter().all(|f| num_integer::Integer::gcd(f, md).is_one()));
    if !(unit_only || matches!(m.base(), ScalarRing::Rationals)) {
        return Err(Error::StructureViolation(format!(
            "degenerate elements at level {k} do not span a direct summand"
        )));
    }
    let r = factors.len();
    let q = n - r;
    let mut projection = IntMatrix::zeros(q, n);
    let mut section = IntMatrix::zeros(n, q);
    for a in 0..q {
        for b in 0..n {
            projection.set(a, b, snf.u.get(r + a, b).clone());
            section.set(b, a, snf.u_inv.get(b, r + a).clone());
        }
    }
    Ok(Quotient { projection, section })
}

/// The Moore complex modulo the subcomplex spanned by degenerate elements.
pub fn normalized_complex(m: &SimplicialModule) -> Result<ChainComplex> {
    let moore = moore_complex(m)?;
    let quotients = (0..=m.top()).map(|k| degenerate_quotient(m, k)).collect::<Result<Vec<_>>>()?;
    let ranks = quotients.iter().map(|q| q.projection.rows()).collect();
    let diffs = (1..=m.top())
        .map(|k| &(&quotients[k - 1].projection * moore.differential(k)) * &quotients[k].section)
        .collect();
    ChainComplex::new(m.base().clone(), ranks, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::simplicial_circle;

    #[test]
    fn constant_module_homology() {
        let m = SimplicialModule::constant(ScalarRing::Integers, 2, 4).unwrap();
        let c = moore_complex(&m).unwrap();
        let h = c.reliable_homology().unwrap();
        assert_eq!(h[0], AbelianGroupShape::free(2));
        assert!(h[1..].iter().all(AbelianGroupShape::is_zero));
        let n = normalized_complex(&m).unwrap();
        assert_eq!(n.ranks(), &[2, 0, 0, 0, 0]);
        assert!(!c.homology(4).unwrap().reliable);
    }

    #[test]
    fn circle_homology() {
        let s1 = simplicial_circle(4).unwrap();
        let m = SimplicialModule::free_on(&s1, ScalarRing::Integers).unwrap();
        let moore = moore_complex(&m).unwrap();
        let norm = normalized_complex(&m).unwrap();
        assert_eq!(norm.ranks(), &[1, 1, 0, 0, 0]);
        for k in 0..4 {
            let expect = if k <= 1 { AbelianGroupShape::free(1) } else { AbelianGroupShape::zero() };
            assert_eq!(moore.homology(k).unwrap().shape, expect);
            assert_eq!(norm.homology(k).unwrap().shape, expect);
        }
    }

    #[test]
    fn non_complex_rejected() {
        let d1 = IntMatrix::from_rows(&[vec![1]]);
        let d2 = IntMatrix::from_rows(&[vec![1]]);
        let r = ChainComplex::new(ScalarRing::Integers, vec![1, 1, 1], vec![d1, d2]);
        assert!(matches!(r, Err(Error::NotAComplex(_))));
    }
}
