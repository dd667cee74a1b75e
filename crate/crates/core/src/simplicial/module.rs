use crate::error::{Error, Result};
use crate::exact::{ScalarRing, SparseMatrix};

use super::ops::{check_simplicial_identities, subdivide_maps, LambdaObject, SimplicialObject};
use super::sset::{FiniteSimplicialSet, SimplicialMorphism};

/// A truncated simplicial module: free modules of the given ranks over ℤ, ℤ/m or ℚ,
/// with integer structure matrices (`d_i : M_k → M_{k−1}` has `rank(M_{k−1})` rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialModule {
    base: ScalarRing,
    ranks: Vec<usize>,
    faces: Vec<Vec<SparseMatrix>>,
    degeneracies: Vec<Vec<SparseMatrix>>,
}

pub type SimplicialModuleMap = SimplicialMorphism<SparseMatrix>;

fn normalize(base: &ScalarRing, m: SparseMatrix) -> SparseMatrix {
    match base.modulus() {
        Some(n) => m.reduce_mod(n),
        None => m,
    }
}

impl SimplicialModule {
    pub fn new(
        base: ScalarRing,
        ranks: Vec<usize>,
        faces: Vec<Vec<SparseMatrix>>,
        degeneracies: Vec<Vec<SparseMatrix>>,
    ) -> Result<Self> {
        let m = Self::unchecked(base, ranks, faces, degeneracies)?;
        if let Some(f) = check_simplicial_identities(&m).first_failure {
            return Err(Error::StructureViolation(f.to_string()));
        }
        Ok(m)
    }

    /// Validates shapes only.
    pub(crate) fn unchecked(
        base: ScalarRing,
        ranks: Vec<usize>,
        faces: Vec<Vec<SparseMatrix>>,
        degeneracies: Vec<Vec<SparseMatrix>>,
    ) -> Result<Self> {
        let top = ranks.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("no levels".into()))?;
        if faces.len() != top + 1 || degeneracies.len() != top + 1 {
            return Err(Error::DimensionMismatch("one list of faces and degeneracies per level".into()));
        }
        for k in 0..=top {
            let nf = if k == 0 { 0 } else { k + 1 };
            let nd = if k == top { 0 } else { k + 1 };
            if faces[k].len() != nf || degeneracies[k].len() != nd {
                return Err(Error::DimensionMismatch(format!("wrong number of structure maps at level {k}")));
            }
            if faces[k].iter().any(|f| f.cols() != ranks[k] || f.rows() != ranks[k - 1])
                || degeneracies[k].iter().any(|s| s.cols() != ranks[k] || s.rows() != ranks[k + 1])
            {
                return Err(Error::DimensionMismatch(format!("structure map of wrong shape at level {k}")));
            }
        }
        let faces = faces.into_iter().map(|l| l.into_iter().map(|m| normalize(&base, m)).collect()).collect();
        let degeneracies =
            degeneracies.into_iter().map(|l| l.into_iter().map(|m| normalize(&base, m)).collect()).collect();
        Ok(SimplicialModule { base, ranks, faces, degeneracies })
    }

    /// The constant simplicial module of the given rank.
    pub fn constant(base: ScalarRing, rank: usize, top: usize) -> Result<Self> {
        let id = SparseMatrix::identity(rank);
        let faces = (0..=top).map(|k| if k == 0 { vec![] } else { vec![id.clone(); k + 1] }).collect();
        let degens = (0..=top).map(|k| if k == top { vec![] } else { vec![id.clone(); k + 1] }).collect();
        Self::new(base, vec![rank; top + 1], faces, degens)
    }

    /// The free module on a simplicial set.
    pub fn free_on(x: &FiniteSimplicialSet, base: ScalarRing) -> Result<Self> {
        let top = x.top();
        let func = |f: Vec<usize>, rows: usize| SparseMatrix::from_function(rows, f.len(), |j| f[j]);
        let faces = (0..=top)
            .map(|k| if k == 0 { vec![] } else { (0..=k).map(|i| func(x.face(k, i), x.level_size(k - 1))).collect() })
            .collect();
        let degens = (0..=top)
            .map(|k| if k == top { vec![] } else { (0..=k).map(|i| func(x.degeneracy(k, i), x.level_size(k + 1))).collect() })
            .collect();
        Self::new(base, x.sizes().to_vec(), faces, degens)
    }

    pub fn base(&self) -> &ScalarRing {
        &self.base
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn faces(&self, k: usize) -> &[SparseMatrix] {
        &self.faces[k]
    }

    pub fn degeneracies(&self, k: usize) -> &[SparseMatrix] {
        &self.degeneracies[k]
    }

    /// The same module truncated at a lower level.
    pub fn truncate(&self, top: usize) -> Result<Self> {
        if top > self.top() {
            return Err(Error::InsufficientTruncation(format!("cannot extend level {} to {top}", self.top())));
        }
        let mut degens: Vec<Vec<SparseMatrix>> = self.degeneracies[..=top].to_vec();
        degens[top].clear();
        Ok(SimplicialModule {
            base: self.base.clone(),
            ranks: self.ranks[..=top].to_vec(),
            faces: self.faces[..=top].to_vec(),
            degeneracies: degens,
        })
    }
}

impl SimplicialObject for SimplicialModule {
    type Map = SparseMatrix;

    fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    fn level_size(&self, k: usize) -> usize {
        self.ranks[k]
    }

    fn face(&self, k: usize, i: usize) -> SparseMatrix {
        self.faces[k][i].clone()
    }

    fn degeneracy(&self, k: usize, i: usize) -> SparseMatrix {
        self.degeneracies[k][i].clone()
    }

    fn identity(&self, k: usize) -> SparseMatrix {
        SparseMatrix::identity(self.ranks[k])
    }

    fn compose(&self, f: &SparseMatrix, g: &SparseMatrix) -> SparseMatrix {
        normalize(&self.base, f.compose(g).expect("composable structure maps"))
    }

    fn maps_equal(&self, f: &SparseMatrix, g: &SparseMatrix) -> bool {
        f.eq_mod(g, self.base.modulus())
    }
}

/// A simplicial module with Λₙᵒᵖ-operators `α_q`. Construction checks shapes and the
/// simplicial identities; the Λ relations are checked by
/// [`check_lambda_relations`](super::check_lambda_relations).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaModule {
    module: SimplicialModule,
    n: usize,
    alpha: Vec<SparseMatrix>,
}

impl LambdaModule {
    pub fn new(module: SimplicialModule, n: usize, alpha: Vec<SparseMatrix>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic order must be positive".into()));
        }
        if alpha.len() != module.ranks.len() {
            return Err(Error::DimensionMismatch("one α operator per level".into()));
        }
        for (k, a) in alpha.iter().enumerate() {
            if a.rows() != module.ranks[k] || a.cols() != module.ranks[k] {
                return Err(Error::DimensionMismatch(format!("α_{k} has the wrong shape")));
            }
        }
        let alpha = alpha.into_iter().map(|a| normalize(&module.base, a)).collect();
        Ok(LambdaModule { module, n, alpha })
    }

    pub fn module(&self) -> &SimplicialModule {
        &self.module
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphas(&self) -> &[SparseMatrix] {
        &self.alpha
    }

    /// A copy with `α_q` replaced, for deliberately corrupted inputs.
    pub fn with_alpha(&self, q: usize, m: SparseMatrix) -> Result<Self> {
        let mut alpha = self.alpha.clone();
        alpha[q] = m;
        Self::new(self.module.clone(), self.n, alpha)
    }

    pub fn truncate(&self, top: usize) -> Result<Self> {
        Self::new(self.module.truncate(top)?, self.n, self.alpha[..=top].to_vec())
    }

    /// Generator of the `C_r`-action on level `k` of `sd_r` of this object:
    /// `α_{r(k+1)−1}^{k+1}`.
    pub fn subdivision_generator(&self, r: usize, k: usize) -> Result<SparseMatrix> {
        let level = r * (k + 1) - 1;
        if level > self.top() {
            return Err(Error::InsufficientTruncation(format!("need level {level}")));
        }
        Ok(normalize(&self.module.base, self.alpha[level].pow(k + 1)))
    }
}

impl SimplicialObject for LambdaModule {
    type Map = SparseMatrix;

    fn top(&self) -> usize {
        self.module.top()
    }

    fn level_size(&self, k: usize) -> usize {
        self.module.level_size(k)
    }

    fn face(&self, k: usize, i: usize) -> SparseMatrix {
        self.module.face(k, i)
    }

    fn degeneracy(&self, k: usize, i: usize) -> SparseMatrix {
        self.module.degeneracy(k, i)
    }

    fn identity(&self, k: usize) -> SparseMatrix {
        self.module.identity(k)
    }

    fn compose(&self, f: &SparseMatrix, g: &SparseMatrix) -> SparseMatrix {
        self.module.compose(f, g)
    }

    fn maps_equal(&self, f: &SparseMatrix, g: &SparseMatrix) -> bool {
        self.module.maps_equal(f, g)
    }
}

impl LambdaObject for LambdaModule {
    fn cyclic_order(&self) -> usize {
        self.n
    }

    fn alpha(&self, q: usize) -> SparseMatrix {
        self.alpha[q].clone()
    }
}

/// `sd_r M` through level `top`.
pub fn edgewise_subdivide_module(m: &SimplicialModule, r: usize, top: usize) -> Result<SimplicialModule> {
    let s = subdivide_maps(m, r, top)?;
    SimplicialModule::new(m.base.clone(), s.sizes, s.faces, s.degeneracies)
}

/// `sd_r L` through level `top`, a Λ_{nr}ᵒᵖ-module with `α'_k = α_{r(k+1)−1}`.
pub fn edgewise_subdivide_lambda(l: &LambdaModule, r: usize, top: usize) -> Result<LambdaModule> {
    let module = edgewise_subdivide_module(&l.module, r, top)?;
    let alpha = (0..=top).map(|k| l.alpha[r * (k + 1) - 1].clone()).collect();
    LambdaModule::new(module, l.n * r, alpha)
}

/// Identity morphism of a simplicial module.
pub fn identity_morphism(m: &SimplicialModule) -> SimplicialModuleMap {
    SimplicialMorphism { levels: (0..=m.top()).map(|k| m.identity(k)).collect() }
}

/// Levelwise `f ∘ g`, reduced in `base`.
pub fn compose_module_maps(base: &ScalarRing, f: &SimplicialModuleMap, g: &SimplicialModuleMap) -> Result<SimplicialModuleMap> {
    if f.levels.len() != g.levels.len() {
        return Err(Error::DimensionMismatch("morphisms with different truncations".into()));
    }
    let levels = f
        .levels
        .iter()
        .zip(&g.levels)
        .map(|(a, b)| a.compose(b).map(|c| normalize(base, c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialMorphism { levels })
}

/// Levelwise equality of module maps, entries read in `base`.
pub fn module_maps_equal(base: &ScalarRing, f: &SimplicialModuleMap, g: &SimplicialModuleMap) -> bool {
    f.levels.len() == g.levels.len() && f.levels.iter().zip(&g.levels).all(|(a, b)| a.eq_mod(b, base.modulus()))
}
