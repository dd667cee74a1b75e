//! Adams operations `ψʳ` on the cyclic bar construction of a commutative algebra,
//! realised as the Loday tensor `R ⊗ X` applied to the covering maps `q_r` of the
//! simplicial circle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, SparseMatrix};
use crate::hochschild::{check_budget, collect, tensor_product_of, FiniteRankAlgebra, TensorBasis, Vector, DEFAULT_MAX_BASIS};
use crate::simplicial::{
    covering_map_q, edgewise_subdivide_sset, simplicial_circle, FiniteSimplicialSet, LambdaModule, SimplicialModule,
    LambdaObject, SimplicialModuleMap, SimplicialMorphism, SimplicialObject,
};

/// `R^{⊗S} → R^{⊗T}` induced by `f : S → T`: factors with equal image are
/// multiplied, missed points of `T` receive the unit.
pub fn tensor_induced(r: &FiniteRankAlgebra, f: &[usize], target_size: usize) -> SparseMatrix {
    let src = TensorBasis::new(r.rank(), f.len());
    let tgt = TensorBasis::new(r.rank(), target_size);
    SparseMatrix::from_map(tgt.size(), src.size(), |idx| {
        let digits = src.decode(idx);
        let mut factors: Vec<Vector> = vec![r.unit().clone(); target_size];
        for (s, &t) in f.iter().enumerate() {
            factors[t] = r.mul(&factors[t], &vec![(digits[s], BigInt::one())]);
        }
        tensor_from(r, &tgt, &factors)
    })
}

fn tensor_from(r: &FiniteRankAlgebra, basis: &TensorBasis, factors: &[Vector]) -> Vector {
    collect(r.base(), tensor_product_of(basis, factors))
}

/// `R ⊗ X`: level `k` is `R^{⊗X_k}`, structure maps induced from those of `X`.
#[derive(Clone, Debug)]
pub struct LodayTensor {
    pub algebra: FiniteRankAlgebra,
    pub sset: FiniteSimplicialSet,
    pub module: SimplicialModule,
}

impl LodayTensor {
    /// The Λₙᵒᵖ-module inherited from a cyclic structure on `X`, if any.
    pub fn lambda_module(&self) -> Result<Option<LambdaModule>> {
        let Some(l) = self.sset.lambda() else { return Ok(None) };
        let sizes = self.sset.sizes();
        let alpha = l.alpha.iter().enumerate().map(|(k, a)| tensor_induced(&self.algebra, a, sizes[k])).collect();
        LambdaModule::new(self.module.clone(), l.n, alpha).map(Some)
    }
}

pub fn loday_tensor(r: &FiniteRankAlgebra, x: &FiniteSimplicialSet) -> Result<LodayTensor> {
    loday_tensor_with_budget(r, x, DEFAULT_MAX_BASIS)
}

pub fn loday_tensor_with_budget(r: &FiniteRankAlgebra, x: &FiniteSimplicialSet, max_basis: usize) -> Result<LodayTensor> {
    if !r.is_commutative() {
        return Err(Error::InvalidArgument(format!("{} is not commutative", r.name())));
    }
    let sizes = x.sizes().to_vec();
    let top = sizes.len() - 1;
    for &s in &sizes {
        let size = (r.rank() as u128).checked_pow(s as u32).unwrap_or(u128::MAX);
        if size > max_basis as u128 {
            return Err(Error::BudgetExceeded(format!("rank {}^{s} exceeds {max_basis}", r.rank())));
        }
    }
    let ranks = sizes.iter().map(|&s| r.rank().pow(s as u32)).collect();
    let faces = (0..=top)
        .map(|k| if k == 0 { vec![] } else { (0..=k).map(|i| tensor_induced(r, &x.face(k, i), sizes[k - 1])).collect() })
        .collect();
    let degeneracies = (0..=top)
        .map(|k| if k == top { vec![] } else { (0..=k).map(|i| tensor_induced(r, &x.degeneracy(k, i), sizes[k + 1])).collect() })
        .collect();
    let module = SimplicialModule::new(r.base().clone(), ranks, faces, degeneracies)?;
    Ok(LodayTensor { algebra: r.clone(), sset: x.clone(), module })
}

/// `ψʳ = R ⊗ q_r : R ⊗ sd_r S¹ → R ⊗ S¹` through level `top`.
#[derive(Clone, Debug)]
pub struct AdamsMap {
    pub r: usize,
    pub source: LodayTensor,
    pub target: LodayTensor,
    pub map: SimplicialModuleMap,
}

pub fn adams_map(alg: &FiniteRankAlgebra, r: usize, top: usize) -> Result<AdamsMap> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if top == 0 {
        // the circle model starts at level 1
        let full = adams_map(alg, r, 1)?;
        let cut = |t: &LodayTensor| -> Result<LodayTensor> {
            Ok(LodayTensor { algebra: t.algebra.clone(), sset: t.sset.truncate(0)?, module: t.module.truncate(0)? })
        };
        let map = SimplicialMorphism { levels: full.map.levels[..1].to_vec() };
        return Ok(AdamsMap { r, source: cut(&full.source)?, target: cut(&full.target)?, map });
    }
    let circle = simplicial_circle(r * (top + 1) - 1)?;
    let source = loday_tensor(alg, &edgewise_subdivide_sset(&circle, r, top)?)?;
    let target = loday_tensor(alg, &simplicial_circle(top)?)?;
    let q = covering_map_q(r, top)?;
    let levels = q
        .levels
        .iter()
        .enumerate()
        .map(|(k, f)| tensor_induced(alg, f, k + 1))
        .collect();
    let map = SimplicialMorphism { levels };
    if !map.commutes_with_structure(&source.module, &target.module) {
        return Err(Error::StructureViolation(format!("ψ^{r} does not commute with the structure maps")));
    }
    Ok(AdamsMap { r, source, target, map })
}

/// Basis bound for the level maps compared by [`verify_adams_composition`].
pub const COMPOSITION_MAX_BASIS: usize = 1 << 20;

/// The level maps of `ψʳ` through `top`, without building source and target.
fn adams_levels(alg: &FiniteRankAlgebra, r: usize, top: usize) -> Result<Vec<SparseMatrix>> {
    check_budget(alg.rank(), r * (top + 1), COMPOSITION_MAX_BASIS)?;
    let q = covering_map_q(r, top)?;
    Ok(q.levels.iter().enumerate().map(|(k, f)| tensor_induced(alg, f, k + 1)).collect())
}

/// `ψʳ ∘ sd_r(ψˢ) = ψ^{rs}` levelwise, with `sd_r sd_s S¹` and `sd_{rs} S¹` compared
/// as simplicial sets first.
pub fn verify_adams_composition(alg: &FiniteRankAlgebra, r: usize, s: usize, top: usize) -> Result<bool> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidArgument("r and s must be positive".into()));
    }
    let inner = r * (top + 1) - 1;
    let circle = simplicial_circle((r * s * (top + 1) - 1).max(1))?;
    let iterated = edgewise_subdivide_sset(&edgewise_subdivide_sset(&circle, s, inner)?, r, top)?;
    if iterated != edgewise_subdivide_sset(&circle, r * s, top)? {
        return Ok(false);
    }
    let psi_r = adams_levels(alg, r, top)?;
    let psi_s = adams_levels(alg, s, inner)?;
    let psi_rs = adams_levels(alg, r * s, top)?;
    for k in 0..=top {
        let lhs = psi_r[k].compose(&psi_s[r * (k + 1) - 1])?;
        if !lhs.eq_mod(&psi_rs[k], alg.base().modulus()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// On `sd_n` of source and target, `τ^r ∘ ψʳ = ψʳ ∘ σ` where `σ` and `τ` generate
/// the rotation by `1/n` of the source and target circles.
pub fn verify_adams_equivariance(alg: &FiniteRankAlgebra, r: usize, n: usize, top: usize) -> Result<bool> {
    if n == 0 || r.gcd(&n) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({r}, {n}) ≠ 1")));
    }
    let psi = adams_map(alg, r, n * (top + 1) - 1)?;
    let source = psi.source.lambda_module()?.ok_or_else(|| Error::Internal("source lost its cyclic structure".into()))?;
    let target = psi.target.lambda_module()?.ok_or_else(|| Error::Internal("target lost its cyclic structure".into()))?;
    for k in 0..=top {
        let level = n * (k + 1) - 1;
        // source α is t at level r(level+1)−1 of S¹; rotating by 1/n takes r(k+1) steps
        let sigma = source.alpha(level).pow(r * (k + 1));
        let tau = target.alpha(level).pow(k + 1);
        let lhs = tau.pow(r).compose(&psi.map.levels[level])?;
        let rhs = psi.map.levels[level].compose(&sigma)?;
        if !lhs.eq_mod(&rhs, alg.base().modulus()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ψʳ` on `HH_0(R) = R`: the section `a ↦ a ⊗ 1 ⊗ ⋯ ⊗ 1` into level 0 of the
/// source followed by `ψʳ` at level 0, as a matrix on the basis of `R`.
pub fn adams_on_h0(alg: &FiniteRankAlgebra, r: usize) -> Result<SparseMatrix> {
    let psi = adams_map(alg, r, 1)?;
    let section = TensorBasis::new(alg.rank(), r);
    let units: Vec<Vector> = vec![alg.unit().clone(); r - 1];
    let s = SparseMatrix::from_map(section.size(), alg.rank(), |a| {
        let mut factors = vec![vec![(a, BigInt::one())]];
        factors.extend(units.iter().cloned());
        tensor_from(alg, &section, &factors)
    });
    psi.map.levels[0].compose(&s)
}

/// Whether `ψʳ` sends the unit to the unit and is multiplicative at every level.
pub fn verify_adams_multiplicative(alg: &FiniteRankAlgebra, r: usize, top: usize) -> Result<bool> {
    let psi = adams_map(alg, r, top)?;
    let sizes_src = psi.source.sset.sizes().to_vec();
    let sizes_tgt = psi.target.sset.sizes().to_vec();
    for k in 0..=top {
        let m = &psi.map.levels[k];
        let src = TensorBasis::new(alg.rank(), sizes_src[k]);
        let tgt = TensorBasis::new(alg.rank(), sizes_tgt[k]);
        let apply = |v: &Vector| -> Vector {
            let mut terms = Vec::new();
            for (j, c) in v {
                for (i, x) in m.column(*j) {
                    terms.push((*i, c * x));
                }
            }
            collect(alg.base(), terms)
        };
        let mul = |basis: &TensorBasis, x: &Vector, y: &Vector| -> Vector {
            let mut terms = Vec::new();
            for (a, c) in x {
                for (b, e) in y {
                    let (da, db) = (basis.decode(*a), basis.decode(*b));
                    let factors: Vec<Vector> = (0..basis.len).map(|t| alg.product(da[t], db[t]).clone()).collect();
                    terms.extend(tensor_from(alg, basis, &factors).into_iter().map(|(i, z)| (i, c * e * z)));
                }
            }
            collect(alg.base(), terms)
        };
        let unit_src = tensor_from(alg, &src, &vec![alg.unit().clone(); sizes_src[k]]);
        let unit_tgt = tensor_from(alg, &tgt, &vec![alg.unit().clone(); sizes_tgt[k]]);
        if apply(&unit_src) != unit_tgt {
            return Ok(false);
        }
        for a in 0..src.size() {
            for b in a..src.size() {
                let (x, y) = (vec![(a, BigInt::one())], vec![(b, BigInt::one())]);
                if apply(&mul(&src, &x, &y)) != mul(&tgt, &apply(&x), &apply(&y)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The permutation of orbit types `C_{pⁿ}/C_{pʲ}` (basis index `j`) induced by the
/// automorphism `x ↦ r x` of `C_{pⁿ}`.
pub fn adams_on_burnside(p: u64, n: u32, r: u64) -> Result<IntMatrix> {
    if p < 2 || r.gcd(&p) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({r}, {p}) ≠ 1")));
    }
    let order = p.checked_pow(n).ok_or_else(|| Error::InvalidArgument("group too large".into()))?;
    let mut m = IntMatrix::zeros(n as usize + 1, n as usize + 1);
    for j in 0..=n {
        let sub = p.pow(j);
        let step = order / sub;
        let mut image: Vec<u64> = (0..sub).map(|a| (a * step % order) * (r % order) % order).collect();
        image.sort_unstable();
        image.dedup();
        let target = (0..=n)
            .find(|&i| {
                let s = p.pow(i);
                let g = order / s;
                image.len() as u64 == s && image.iter().all(|x| x % g == 0)
            })
            .ok_or_else(|| Error::Internal("image of a subgroup is not a subgroup".into()))?;
        m.set(target as usize, j as usize, BigInt::one());
    }
    Ok(m)
}
