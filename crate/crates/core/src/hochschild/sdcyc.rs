use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::exact::SparseMatrix;
use crate::simplicial::{
    edgewise_subdivide_lambda, LambdaObject, RelationFailure, RelationReport, SimplicialObject,
};

use super::algebra::{tensor_product_of, Bimodule, FiniteRankAlgebra, TensorBasis};
use super::bar::{bar_with_coefficients, check_budget, cyclic_bar, twisted_rotation, DEFAULT_MAX_BASIS};

/// Reindexing at level `k`: position `j(k+1) + m` of `R^{⊗n(k+1)}` becomes
/// component `j` of factor `m` of `(R^{⊗n})^{⊗(k+1)}`.
fn reindexing(d: usize, n: usize, k: usize) -> SparseMatrix {
    let flat = TensorBasis::new(d, n * (k + 1));
    let inner = TensorBasis::new(d, n);
    let outer = TensorBasis::new(inner.size(), k + 1);
    SparseMatrix::from_function(flat.size(), flat.size(), |idx| {
        let v = flat.decode(idx);
        let factors: Vec<usize> = (0..=k).map(|m| inner.encode(&(0..n).map(|j| v[j * (k + 1) + m]).collect::<Vec<_>>())).collect();
        outer.encode(&factors)
    })
}

/// `g ⊗ ⋯ ⊗ g` on `A^{⊗(k+1)}`.
fn diagonal_action(a: &FiniteRankAlgebra, k: usize) -> SparseMatrix {
    let basis = TensorBasis::new(a.rank(), k + 1);
    SparseMatrix::from_map(basis.size(), basis.size(), |idx| {
        let factors: Vec<_> = basis.decode(idx).into_iter().map(|f| a.apply_g(&vec![(f, BigInt::one())])).collect();
        tensor_product_of(&basis, &factors)
    })
}

/// Compares `sd_n` of the cyclic bar construction of `R` with the bar construction
/// of `A = R^{⊗n}` with coefficients in `^gA` (`g` the cyclic shift of tensor
/// factors), levels `0..=top`: faces, degeneracies, the `C_n` generator against
/// `g^{⊗(k+1)}`, and the subdivided cyclic operator against `(x_0, …, x_k) ↦ (g x_k, x_0, …)`.
pub fn sdcyc_identification_report(r: &FiniteRankAlgebra, n: usize, top: usize) -> Result<RelationReport> {
    check_budget(r.rank(), n * (top + 1), DEFAULT_MAX_BASIS)?;
    let x = cyclic_bar(r, n * (top + 1) - 1)?;
    let sd = edgewise_subdivide_lambda(&x, n, top)?;
    let a = FiniteRankAlgebra::tensor_power(r, n)?;
    let b = bar_with_coefficients(&a, &Bimodule::twisted(&a)?, top)?;
    let modulus = r.base().modulus();
    let p: Vec<SparseMatrix> = (0..=top).map(|k| reindexing(r.rank(), n, k)).collect();
    let mut checked = 0;
    let mut first: Option<RelationFailure> = None;
    'levels: for k in 0..=top {
        let mut cases: Vec<(String, SparseMatrix, SparseMatrix)> = Vec::new();
        if k > 0 {
            for i in 0..=k {
                cases.push((format!("d{i}"), p[k - 1].compose(&sd.face(k, i))?, b.face(k, i).compose(&p[k])?));
            }
        }
        if k < top {
            for i in 0..=k {
                cases.push((
                    format!("s{i}"),
                    p[k + 1].compose(&sd.degeneracy(k, i))?,
                    b.degeneracy(k, i).compose(&p[k])?,
                ));
            }
        }
        let generator = x.subdivision_generator(n, k)?;
        cases.push(("C_n generator".into(), p[k].compose(&generator)?, diagonal_action(&a, k).compose(&p[k])?));
        cases.push(("cyclic operator".into(), p[k].compose(&sd.alpha(k))?, twisted_rotation(&a, k).compose(&p[k])?));
        for (relation, lhs, rhs) in cases {
            checked += 1;
            if !lhs.eq_mod(&rhs, modulus) {
                first = Some(RelationFailure { level: k, relation });
                break 'levels;
            }
        }
    }
    Ok(RelationReport { checked, first_failure: first })
}

pub fn verify_sdcyc_identification(r: &FiniteRankAlgebra, n: usize, top: usize) -> Result<bool> {
    Ok(sdcyc_identification_report(r, n, top)?.passed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ScalarRing;

    #[test]
    fn small_cases() {
        let r = FiniteRankAlgebra::dual_numbers(ScalarRing::Integers).unwrap();
        assert!(verify_sdcyc_identification(&r, 1, 3).unwrap());
        assert!(verify_sdcyc_identification(&r, 2, 2).unwrap());
        let c2 = FiniteRankAlgebra::cyclic_group_ring(ScalarRing::Integers, 2).unwrap();
        assert!(verify_sdcyc_identification(&c2, 3, 1).unwrap());
    }

    #[test]
    fn noncommutative_case() {
        let t2 = FiniteRankAlgebra::upper_triangular(ScalarRing::Integers).unwrap();
        let report = sdcyc_identification_report(&t2, 2, 1).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure);
        assert!(report.checked > 0);
    }
}
