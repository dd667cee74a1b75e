use crate::error::{Error, Result};

use super::ops::{check_lambda_relations, check_simplicial_identities, subdivide_maps, LambdaObject, SimplicialObject};

/// A function between finite sets `{0..n}`, stored as its value list.
pub type SetMap = Vec<usize>;

/// Λₙᵒᵖ-operators on a simplicial set: `α_q` at every level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaOperators<M> {
    pub n: usize,
    pub alpha: Vec<M>,
}

/// A simplicial set truncated at level `top`, with optional Λₙᵒᵖ-operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    sizes: Vec<usize>,
    faces: Vec<Vec<SetMap>>,
    degeneracies: Vec<Vec<SetMap>>,
    lambda: Option<LambdaOperators<SetMap>>,
}

impl FiniteSimplicialSet {
    /// Validates shapes and checks all simplicial (and Λ, if present) identities.
    pub fn new(
        sizes: Vec<usize>,
        faces: Vec<Vec<SetMap>>,
        degeneracies: Vec<Vec<SetMap>>,
        lambda: Option<LambdaOperators<SetMap>>,
    ) -> Result<Self> {
        let top = sizes.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("no levels".into()))?;
        if faces.len() != top + 1 || degeneracies.len() != top + 1 {
            return Err(Error::DimensionMismatch("one list of faces and degeneracies per level".into()));
        }
        for k in 0..=top {
            let nf = if k == 0 { 0 } else { k + 1 };
            let nd = if k == top { 0 } else { k + 1 };
            if faces[k].len() != nf || degeneracies[k].len() != nd {
                return Err(Error::DimensionMismatch(format!("wrong number of structure maps at level {k}")));
            }
            for f in &faces[k] {
                check_function(f, sizes[k], sizes[k - 1])?;
            }
            for s in &degeneracies[k] {
                check_function(s, sizes[k], sizes[k + 1])?;
            }
        }
        if let Some(l) = &lambda {
            if l.alpha.len() != top + 1 || l.n == 0 {
                return Err(Error::DimensionMismatch("one α operator per level, n ≥ 1".into()));
            }
            for (k, a) in l.alpha.iter().enumerate() {
                check_function(a, sizes[k], sizes[k])?;
            }
        }
        let x = FiniteSimplicialSet { sizes, faces, degeneracies, lambda };
        let report = if x.lambda.is_some() { check_lambda_relations(&x) } else { check_simplicial_identities(&x) };
        if let Some(f) = report.first_failure {
            return Err(Error::StructureViolation(f.to_string()));
        }
        Ok(x)
    }

    /// The constant simplicial set on `size` points (trivial cyclic structure).
    pub fn constant(size: usize, top: usize) -> Result<Self> {
        let id: SetMap = (0..size).collect();
        let faces = (0..=top).map(|k| if k == 0 { vec![] } else { vec![id.clone(); k + 1] }).collect();
        let degens = (0..=top).map(|k| if k == top { vec![] } else { vec![id.clone(); k + 1] }).collect();
        let lambda = LambdaOperators { n: 1, alpha: vec![id.clone(); top + 1] };
        Self::new(vec![size; top + 1], faces, degens, Some(lambda))
    }

    /// Levels `0..=top` of this simplicial set.
    pub fn truncate(&self, top: usize) -> Result<Self> {
        if top >= self.sizes.len() {
            return Err(Error::InsufficientTruncation(format!("cannot extend level {} to {top}", self.sizes.len() - 1)));
        }
        let mut degeneracies = self.degeneracies[..=top].to_vec();
        degeneracies[top].clear();
        Ok(FiniteSimplicialSet {
            sizes: self.sizes[..=top].to_vec(),
            faces: self.faces[..=top].to_vec(),
            degeneracies,
            lambda: self.lambda.as_ref().map(|l| LambdaOperators { n: l.n, alpha: l.alpha[..=top].to_vec() }),
        })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn lambda(&self) -> Option<&LambdaOperators<SetMap>> {
        self.lambda.as_ref()
    }

    pub fn without_lambda(&self) -> Self {
        FiniteSimplicialSet { lambda: None, ..self.clone() }
    }

    /// Whether simplex `x` at level `k` is in the image of some degeneracy.
    pub fn is_degenerate(&self, k: usize, x: usize) -> bool {
        k > 0 && self.degeneracies[k - 1].iter().any(|s| s.contains(&x))
    }

    pub fn nondegenerate(&self, k: usize) -> Vec<usize> {
        (0..self.sizes[k]).filter(|&x| !self.is_degenerate(k, x)).collect()
    }
}

fn check_function(f: &SetMap, domain: usize, codomain: usize) -> Result<()> {
    if f.len() != domain || f.iter().any(|&v| v >= codomain) {
        return Err(Error::DimensionMismatch(format!("map {f:?} is not a function {domain} → {codomain}")));
    }
    Ok(())
}

impl SimplicialObject for FiniteSimplicialSet {
    type Map = SetMap;

    fn top(&self) -> usize {
        self.sizes.len() - 1
    }

    fn level_size(&self, k: usize) -> usize {
        self.sizes[k]
    }

    fn face(&self, k: usize, i: usize) -> SetMap {
        self.faces[k][i].clone()
    }

    fn degeneracy(&self, k: usize, i: usize) -> SetMap {
        self.degeneracies[k][i].clone()
    }

    fn identity(&self, k: usize) -> SetMap {
        (0..self.sizes[k]).collect()
    }

    fn compose(&self, f: &SetMap, g: &SetMap) -> SetMap {
        g.iter().map(|&x| f[x]).collect()
    }

    fn maps_equal(&self, f: &SetMap, g: &SetMap) -> bool {
        f == g
    }
}

impl LambdaObject for FiniteSimplicialSet {
    fn cyclic_order(&self) -> usize {
        self.lambda.as_ref().map_or(1, |l| l.n)
    }

    fn alpha(&self, q: usize) -> SetMap {
        match &self.lambda {
            Some(l) => l.alpha[q].clone(),
            None => self.identity(q),
        }
    }
}

/// `S¹ = Δ[1]/∂Δ[1]` through level `top`, with its cyclic structure.
///
/// Level `k` has simplices `0..=k`: label `j ≥ 1` is the map `[k] → [1]` with
/// exactly `j` zeros, and `0` is the collapsed basepoint. Labels coincide with
/// tensor positions in the cyclic bar construction.
pub fn simplicial_circle(top: usize) -> Result<FiniteSimplicialSet> {
    if top < 1 {
        return Err(Error::InvalidArgument("the circle needs truncation at least 1".into()));
    }
    let sizes = (0..=top).map(|k| k + 1).collect();
    let faces = (0..=top)
        .map(|k| {
            if k == 0 {
                vec![]
            } else {
                (0..=k).map(|i| (0..=k).map(|j| (j - usize::from(i < j)) % k).collect()).collect()
            }
        })
        .collect();
    let degens = (0..=top)
        .map(|k| if k == top { vec![] } else { (0..=k).map(|i| (0..=k).map(|j| j + usize::from(i < j)).collect()).collect() })
        .collect();
    let alpha = (0..=top).map(|k| (0..=k).map(|j| (j + 1) % (k + 1)).collect()).collect();
    FiniteSimplicialSet::new(sizes, faces, degens, Some(LambdaOperators { n: 1, alpha }))
}

/// `sd_r X` through level `top`. A Λₙᵒᵖ-structure on `X` becomes a Λ_{nr}ᵒᵖ-structure
/// with `α'_k = α_{r(k+1)−1}`; for cyclic `X` the generator of the `C_r`-action is
/// `α'_k^{k+1}`.
pub fn edgewise_subdivide_sset(x: &FiniteSimplicialSet, r: usize, top: usize) -> Result<FiniteSimplicialSet> {
    let m = subdivide_maps(x, r, top)?;
    let lambda = x
        .lambda
        .as_ref()
        .map(|l| LambdaOperators { n: l.n * r, alpha: (0..=top).map(|k| l.alpha[r * (k + 1) - 1].clone()).collect() });
    FiniteSimplicialSet::new(m.sizes, m.faces, m.degeneracies, lambda)
}

/// The `C_r`-generator on level `k` of `sd_r X` for a cyclic `X`.
pub fn subdivision_group_generator(x: &FiniteSimplicialSet, r: usize, k: usize) -> Result<SetMap> {
    let level = r * (k + 1) - 1;
    if level > x.top() {
        return Err(Error::InsufficientTruncation(format!("need level {level}")));
    }
    let t = x.alpha(level);
    let mut g = x.identity(level);
    for _ in 0..=k {
        g = x.compose(&t, &g);
    }
    Ok(g)
}

/// Levelwise functions between two truncated simplicial objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMorphism<M> {
    pub levels: Vec<M>,
}

pub type SimplicialSetMap = SimplicialMorphism<SetMap>;

impl<M: Clone + std::fmt::Debug> SimplicialMorphism<M> {
    /// Checks `f ∘ d_i = d_i ∘ f` and `f ∘ s_i = s_i ∘ f` at all levels; `compose`
    /// and `equal` are taken from the target.
    pub fn commutes_with_structure<X, Y>(&self, source: &X, target: &Y) -> bool
    where
        X: SimplicialObject<Map = M>,
        Y: SimplicialObject<Map = M>,
    {
        let top = source.top().min(target.top()).min(self.levels.len() - 1);
        for k in 0..=top {
            if k > 0 {
                for i in 0..=k {
                    let lhs = target.compose(&self.levels[k - 1], &source.face(k, i));
                    let rhs = target.compose(&target.face(k, i), &self.levels[k]);
                    if !target.maps_equal(&lhs, &rhs) {
                        return false;
                    }
                }
            }
            if k < top {
                for i in 0..=k {
                    let lhs = target.compose(&self.levels[k + 1], &source.degeneracy(k, i));
                    let rhs = target.compose(&target.degeneracy(k, i), &self.levels[k]);
                    if !target.maps_equal(&lhs, &rhs) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `q_r : sd_r S¹ → S¹` through level `top`: label `j` at level `k` maps to `j mod (k+1)`.
pub fn covering_map_q(r: usize, top: usize) -> Result<SimplicialSetMap> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let levels = (0..=top).map(|k| (0..r * (k + 1)).map(|j| j % (k + 1)).collect()).collect();
    Ok(SimplicialMorphism { levels })
}

/// `sd_r f` for a morphism `f : X → Y`: level `k` is `f_{r(k+1)−1}`.
pub fn subdivide_morphism<M: Clone>(f: &SimplicialMorphism<M>, r: usize, top: usize) -> Result<SimplicialMorphism<M>> {
    let need = r * (top + 1) - 1;
    if need >= f.levels.len() {
        return Err(Error::InsufficientTruncation(format!("morphism stops before level {need}")));
    }
    Ok(SimplicialMorphism { levels: (0..=top).map(|k| f.levels[r * (k + 1) - 1].clone()).collect() })
}

/// `f ∘ g` levelwise for set maps.
pub fn compose_set_maps(f: &SimplicialSetMap, g: &SimplicialSetMap) -> SimplicialSetMap {
    SimplicialMorphism {
        levels: f.levels.iter().zip(&g.levels).map(|(a, b)| b.iter().map(|&x| a[x]).collect()).collect(),
    }
}

/// Whether `sd_r sd_s X` and `sd_{rs} X` have identical structure maps through `top`.
pub fn subdivision_compatible(x: &FiniteSimplicialSet, r: usize, s: usize, top: usize) -> Result<bool> {
    let inner_top = r * (top + 1) - 1;
    let rs = edgewise_subdivide_sset(&edgewise_subdivide_sset(x, s, inner_top)?, r, top)?;
    let direct = edgewise_subdivide_sset(x, r * s, top)?;
    Ok(rs == direct)
}

/// Whether `q_r ∘ sd_r(q_s) = q_{rs}` through `top`, under `sd_r sd_s S¹ = sd_{rs} S¹`.
pub fn covering_maps_compatible(r: usize, s: usize, top: usize) -> Result<bool> {
    let qs = covering_map_q(s, r * (top + 1) - 1)?;
    let composite = compose_set_maps(&covering_map_q(r, top)?, &subdivide_morphism(&qs, r, top)?);
    Ok(composite == covering_map_q(r * s, top)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_counts() {
        let s1 = simplicial_circle(6).unwrap();
        assert_eq!(s1.sizes()[0], 1);
        assert_eq!(s1.sizes()[1], 2);
        assert_eq!(s1.sizes()[2], 3);
        assert_eq!(s1.nondegenerate(1), vec![1]);
        // every 2-simplex is degenerate: s₀, s₁ of the 1-simplex and the degenerate basepoint
        assert_eq!(s1.nondegenerate(2), Vec::<usize>::new());
        assert!(check_simplicial_identities(&s1).passed());
        assert!(check_lambda_relations(&s1).passed());
    }

    #[test]
    fn subdivision_basics() {
        let s1 = simplicial_circle(5).unwrap();
        let sd2 = edgewise_subdivide_sset(&s1, 2, 2).unwrap();
        assert_eq!(sd2.sizes()[0], 2);
        assert_eq!(sd2.lambda().unwrap().n, 2);
        let sd1 = edgewise_subdivide_sset(&s1, 1, 5).unwrap();
        assert_eq!(sd1, s1);
        assert!(matches!(edgewise_subdivide_sset(&s1, 2, 3), Err(Error::InsufficientTruncation(_))));
    }

    #[test]
    fn covering_map_examples() {
        let q2 = covering_map_q(2, 1).unwrap();
        assert_eq!(q2.levels[0], vec![0, 0]);
        let s1 = simplicial_circle(3).unwrap();
        let q1 = covering_map_q(1, 3).unwrap();
        assert_eq!(q1.levels, (0..=3).map(|k| (0..=k).collect::<Vec<_>>()).collect::<Vec<_>>());
        let sd2 = edgewise_subdivide_sset(&s1, 2, 1).unwrap();
        assert!(q2.commutes_with_structure(&sd2, &s1));
    }

    #[test]
    fn group_generator_has_order_r() {
        let s1 = simplicial_circle(5).unwrap();
        for k in 0..=2 {
            let g = subdivision_group_generator(&s1, 2, k).unwrap();
            let id: SetMap = (0..2 * (k + 1)).collect();
            assert_ne!(g, id);
            assert_eq!(s1.compose(&g, &g), id);
        }
    }

    #[test]
    fn broken_structure_rejected() {
        let s1 = simplicial_circle(2).unwrap();
        let mut faces = s1.faces.clone();
        faces[2][0] = vec![0, 0, 0];
        let bad = FiniteSimplicialSet::new(s1.sizes.clone(), faces, s1.degeneracies.clone(), None);
        assert!(matches!(bad, Err(Error::StructureViolation(_))));
    }
}
