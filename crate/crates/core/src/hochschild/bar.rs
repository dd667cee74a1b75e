use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{ScalarRing, SparseMatrix};
use crate::simplicial::{LambdaModule, SimplicialModule};

use super::algebra::{Bimodule, FiniteRankAlgebra, TensorBasis};

/// Largest level rank a bar construction will build by default.
pub const DEFAULT_MAX_BASIS: usize = 1 << 16;

pub(crate) fn check_budget(rank: usize, levels: usize, max_basis: usize) -> Result<()> {
    let size = (rank as u128).checked_pow(levels as u32).unwrap_or(u128::MAX);
    if size > max_basis as u128 {
        return Err(Error::BudgetExceeded(format!("rank {rank}^{levels} exceeds {max_basis}")));
    }
    Ok(())
}

/// `d_i` on `R^{⊗(k+1)}` for `i < k`: multiply factors `i` and `i+1`.
fn inner_face(r: &FiniteRankAlgebra, k: usize, i: usize) -> SparseMatrix {
    let src = TensorBasis::new(r.rank(), k + 1);
    let tgt = TensorBasis::new(r.rank(), k);
    SparseMatrix::from_map(tgt.size(), src.size(), |idx| {
        let a = src.decode(idx);
        r.product(a[i], a[i + 1])
            .iter()
            .map(|(c, x)| {
                let mut b = Vec::with_capacity(k);
                b.extend_from_slice(&a[..i]);
                b.push(*c);
                b.extend_from_slice(&a[i + 2..]);
                (tgt.encode(&b), x.clone())
            })
            .collect::<Vec<_>>()
    })
}

/// `s_i` on `R^{⊗(k+1)}`: insert the unit as factor `i+1`.
fn unit_insertion(r: &FiniteRankAlgebra, k: usize, i: usize) -> SparseMatrix {
    let src = TensorBasis::new(r.rank(), k + 1);
    let tgt = TensorBasis::new(r.rank(), k + 2);
    SparseMatrix::from_map(tgt.size(), src.size(), |idx| {
        let a = src.decode(idx);
        r.unit()
            .iter()
            .map(|(c, x)| {
                let mut b = a.clone();
                b.insert(i + 1, *c);
                (tgt.encode(&b), x.clone())
            })
            .collect::<Vec<_>>()
    })
}

/// `(a_0, …, a_k) ↦ (g a_k, a_0, …, a_{k−1})`.
pub(crate) fn twisted_rotation(r: &FiniteRankAlgebra, k: usize) -> SparseMatrix {
    let basis = TensorBasis::new(r.rank(), k + 1);
    SparseMatrix::from_map(basis.size(), basis.size(), |idx| {
        let a = basis.decode(idx);
        r.apply_g(&vec![(a[k], BigInt::from(1))])
            .into_iter()
            .map(|(c, x)| {
                let mut b = Vec::with_capacity(k + 1);
                b.push(c);
                b.extend_from_slice(&a[..k]);
                (basis.encode(&b), x)
            })
            .collect::<Vec<_>>()
    })
}

fn build_twisted(r: &FiniteRankAlgebra, n: usize, top: usize, max_basis: usize) -> Result<LambdaModule> {
    check_budget(r.rank(), top + 1, max_basis)?;
    let d = r.rank();
    let ranks: Vec<usize> = (0..=top).map(|k| d.pow(k as u32 + 1)).collect();
    let alpha: Vec<SparseMatrix> = (0..=top).map(|k| twisted_rotation(r, k)).collect();
    let mut faces = vec![Vec::new()];
    for k in 1..=top {
        let mut level: Vec<SparseMatrix> = (0..k).map(|i| inner_face(r, k, i)).collect();
        let last = level[0].compose(&alpha[k])?;
        level.push(last);
        faces.push(level);
    }
    let degeneracies = (0..=top)
        .map(|k| if k == top { Vec::new() } else { (0..=k).map(|i| unit_insertion(r, k, i)).collect() })
        .collect();
    let module = SimplicialModule::unchecked(r.base().clone(), ranks, faces, degeneracies)?;
    LambdaModule::new(module, n, alpha)
}

/// The cyclic bar construction `[k] ↦ R^{⊗(k+1)}` through level `top`, with the
/// sign-free cyclic operator `t(a_0, …, a_k) = (a_k, a_0, …, a_{k−1})`.
pub fn cyclic_bar(r: &FiniteRankAlgebra, top: usize) -> Result<LambdaModule> {
    cyclic_bar_with_budget(r, top, DEFAULT_MAX_BASIS)
}

pub fn cyclic_bar_with_budget(r: &FiniteRankAlgebra, top: usize, max_basis: usize) -> Result<LambdaModule> {
    build_twisted(&r.without_automorphism(), 1, top, max_basis)
}

/// The cyclic bar construction with tensors over `over`, which must be the
/// ring `R` is free over.
pub fn cyclic_bar_relative(r: &FiniteRankAlgebra, over: &ScalarRing, top: usize) -> Result<LambdaModule> {
    if r.base() != over {
        return Err(Error::RingMismatch(format!("{} is an algebra over {}, not {over}", r.name(), r.base())));
    }
    cyclic_bar(r, top)
}

/// The Λₙᵒᵖ-module with `α_q(a_0, …, a_q) = (g a_q, a_0, …, a_{q−1})` and
/// `d_q = d_0 ∘ α_q`, where `g` is the declared automorphism of order `n`.
pub fn twisted_cyclic_bar(r: &FiniteRankAlgebra, top: usize) -> Result<LambdaModule> {
    twisted_cyclic_bar_with_budget(r, top, DEFAULT_MAX_BASIS)
}

pub fn twisted_cyclic_bar_with_budget(r: &FiniteRankAlgebra, top: usize, max_basis: usize) -> Result<LambdaModule> {
    let n = r
        .automorphism()
        .ok_or_else(|| Error::InvalidArgument(format!("{} has no automorphism", r.name())))?
        .order;
    build_twisted(r, n, top, max_basis)
}

/// `[k] ↦ M ⊗ R^{⊗k}`, basis index `m + rank(M) · (index in R^{⊗k})`.
/// `d_0(m ⊗ r_1 ⊗ ⋯) = m r_1 ⊗ ⋯`, `d_k(m ⊗ ⋯ ⊗ r_k) = r_k m ⊗ ⋯`, inner faces
/// multiply, `s_i` inserts the unit after factor `i`.
pub fn bar_with_coefficients(r: &FiniteRankAlgebra, m: &Bimodule, top: usize) -> Result<SimplicialModule> {
    bar_with_coefficients_budget(r, m, top, DEFAULT_MAX_BASIS)
}

pub fn bar_with_coefficients_budget(
    r: &FiniteRankAlgebra,
    m: &Bimodule,
    top: usize,
    max_basis: usize,
) -> Result<SimplicialModule> {
    let (d, mr) = (r.rank(), m.rank());
    check_budget(d, top, max_basis / mr.max(1))?;
    let size = |k: usize| mr * d.pow(k as u32);
    let split = |k: usize, idx: usize| (idx % mr, TensorBasis::new(d, k).decode(idx / mr));
    let join = |a: usize, rest: &[usize]| a + mr * TensorBasis::new(d, rest.len()).encode(rest);
    let ranks: Vec<usize> = (0..=top).map(size).collect();
    let mut faces = vec![Vec::new()];
    for k in 1..=top {
        let mut level = Vec::with_capacity(k + 1);
        level.push(SparseMatrix::from_map(size(k - 1), size(k), |idx| {
            let (a, rs) = split(k, idx);
            m.right_basis(rs[0], a).iter().map(|(b, x)| (join(*b, &rs[1..]), x.clone())).collect::<Vec<_>>()
        }));
        for i in 1..k {
            level.push(SparseMatrix::from_map(size(k - 1), size(k), |idx| {
                let (a, rs) = split(k, idx);
                r.product(rs[i - 1], rs[i])
                    .iter()
                    .map(|(c, x)| {
                        let mut b = rs[..i - 1].to_vec();
                        b.push(*c);
                        b.extend_from_slice(&rs[i + 1..]);
                        (join(a, &b), x.clone())
                    })
                    .collect::<Vec<_>>()
            }));
        }
        level.push(SparseMatrix::from_map(size(k - 1), size(k), |idx| {
            let (a, rs) = split(k, idx);
            m.left_basis(rs[k - 1], a).iter().map(|(b, x)| (join(*b, &rs[..k - 1]), x.clone())).collect::<Vec<_>>()
        }));
        faces.push(level);
    }
    let degeneracies = (0..=top)
        .map(|k| {
            if k == top {
                return Vec::new();
            }
            (0..=k)
                .map(|i| {
                    SparseMatrix::from_map(size(k + 1), size(k), |idx| {
                        let (a, rs) = split(k, idx);
                        r.unit()
                            .iter()
                            .map(|(c, x)| {
                                let mut b = rs.clone();
                                b.insert(i, *c);
                                (join(a, &b), x.clone())
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect()
        })
        .collect();
    SimplicialModule::unchecked(r.base().clone(), ranks, faces, degeneracies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{check_lambda_relations, check_simplicial_identities, LambdaObject, SimplicialObject};
    use num_traits::One;

    fn neg_eps() -> FiniteRankAlgebra {
        FiniteRankAlgebra::dual_numbers(ScalarRing::Integers)
            .unwrap()
            .with_automorphism(vec![vec![(0, BigInt::one())], vec![(1, BigInt::from(-1))]], 2)
            .unwrap()
    }

    #[test]
    fn cyclic_bar_shapes_and_relations() {
        let r = FiniteRankAlgebra::upper_triangular(ScalarRing::Integers).unwrap();
        let x = cyclic_bar(&r, 3).unwrap();
        assert_eq!(x.module().ranks(), &[3, 9, 27, 81]);
        assert!(check_simplicial_identities(&x).passed());
        assert!(check_lambda_relations(&x).passed());
    }

    #[test]
    fn twisted_bar_relations() {
        let x = twisted_cyclic_bar(&neg_eps(), 3).unwrap();
        assert_eq!(x.n(), 2);
        assert!(check_lambda_relations(&x).passed());
        assert!(x.alpha(0).pow(2).is_identity());
        assert!(!x.alpha(0).is_identity());
    }

    #[test]
    fn identity_twist_is_cyclic_bar() {
        let r = FiniteRankAlgebra::dual_numbers(ScalarRing::Integers).unwrap();
        let id = r.with_automorphism(vec![vec![(0, BigInt::one())], vec![(1, BigInt::one())]], 1).unwrap();
        assert_eq!(twisted_cyclic_bar(&id, 3).unwrap(), cyclic_bar(&r, 3).unwrap());
    }

    #[test]
    fn regular_coefficients_recover_cyclic_bar() {
        let r = FiniteRankAlgebra::upper_triangular(ScalarRing::Integers).unwrap();
        let b = bar_with_coefficients(&r, &Bimodule::regular(&r).unwrap(), 3).unwrap();
        assert!(check_simplicial_identities(&b).passed());
        assert_eq!(&b, cyclic_bar(&r, 3).unwrap().module());
    }

    #[test]
    fn twisted_coefficients_recover_twisted_bar() {
        let r = neg_eps();
        let b = bar_with_coefficients(&r, &Bimodule::twisted(&r).unwrap(), 3).unwrap();
        assert_eq!(&b, twisted_cyclic_bar(&r, 3).unwrap().module());
    }

    #[test]
    fn relative_over_itself_is_constant() {
        let a = ScalarRing::integers_mod(4).unwrap();
        let r = FiniteRankAlgebra::product_ring(a.clone(), 1).unwrap();
        let x = cyclic_bar_relative(&r, &a, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(x.level_size(k), 1);
            assert!((0..=k).all(|i| k == 0 || x.face(k, i).is_identity()));
            assert!(x.alpha(k).is_identity());
        }
        assert!(cyclic_bar_relative(&r, &ScalarRing::Integers, 2).is_err());
    }

    #[test]
    fn budget_enforced() {
        let r = FiniteRankAlgebra::upper_triangular(ScalarRing::Integers).unwrap();
        assert!(matches!(cyclic_bar_with_budget(&r, 3, 80), Err(Error::BudgetExceeded(_))));
        assert!(cyclic_bar_with_budget(&r, 3, 81).is_ok());
    }
}
