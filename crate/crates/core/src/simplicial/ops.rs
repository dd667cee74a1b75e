use std::fmt;

use crate::error::{Error, Result};

/// A monotone map `[k] → [l]`, stored as its list of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("monotone map from the empty ordinal".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) || values.iter().any(|&v| v > target) {
            return Err(Error::InvalidArgument(format!("{values:?} is not a monotone map into [{target}]")));
        }
        Ok(MonotoneMap { target, values })
    }

    pub fn identity(k: usize) -> Self {
        MonotoneMap { target: k, values: (0..=k).collect() }
    }

    /// `δ_i : [l−1] → [l]`, skipping `i`.
    pub fn coface(l: usize, i: usize) -> Self {
        assert!(l >= 1 && i <= l);
        MonotoneMap { target: l, values: (0..l).map(|v| if v < i { v } else { v + 1 }).collect() }
    }

    /// `σ_i : [l+1] → [l]`, hitting `i` twice.
    pub fn codegeneracy(l: usize, i: usize) -> Self {
        assert!(i <= l);
        MonotoneMap { target: l, values: (0..=l + 1).map(|v| if v <= i { v } else { v - 1 }).collect() }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, v: usize) -> usize {
        self.values[v]
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &MonotoneMap) -> MonotoneMap {
        assert_eq!(other.target, self.source());
        MonotoneMap { target: self.target, values: other.values.iter().map(|&v| self.values[v]).collect() }
    }

    /// The `r`-fold concatenation `θ ⊔ ⋯ ⊔ θ : [r(k+1)−1] → [r(l+1)−1]`.
    pub fn concatenate(&self, r: usize) -> MonotoneMap {
        assert!(r >= 1);
        let (k1, l1) = (self.source() + 1, self.target + 1);
        let values = (0..r * k1).map(|v| (v / k1) * l1 + self.values[v % k1]).collect();
        MonotoneMap { target: r * l1 - 1, values }
    }

    /// Values of `[l]` not hit, ascending.
    pub fn missed(&self) -> Vec<usize> {
        (0..=self.target).filter(|v| !self.values.contains(v)).collect()
    }

    /// Positions `i` with `θ(i) = θ(i+1)`, ascending.
    pub fn repeats(&self) -> Vec<usize> {
        (0..self.source()).filter(|&i| self.values[i] == self.values[i + 1]).collect()
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]→[{}] {:?}", self.source(), self.target, self.values)
    }
}

/// A truncated simplicial object: levels `0..=top()`, faces `d_i : X_k → X_{k−1}`
/// and degeneracies `s_i : X_k → X_{k+1}` (defined for `k < top()`).
pub trait SimplicialObject {
    type Map: Clone + fmt::Debug;

    fn top(&self) -> usize;
    fn level_size(&self, k: usize) -> usize;
    fn face(&self, k: usize, i: usize) -> Self::Map;
    fn degeneracy(&self, k: usize, i: usize) -> Self::Map;
    fn identity(&self, k: usize) -> Self::Map;
    /// `f ∘ g`.
    fn compose(&self, f: &Self::Map, g: &Self::Map) -> Self::Map;
    fn maps_equal(&self, f: &Self::Map, g: &Self::Map) -> bool;

    /// `X(θ) : X_l → X_k` for `θ : [k] → [l]`, via the epi-mono factorization
    /// `θ = δ ∘ ε`: faces for the missed values, then degeneracies for the repeats.
    fn induced(&self, theta: &MonotoneMap) -> Self::Map {
        let l = theta.target();
        let mut f = self.identity(l);
        let mut level = l;
        for &j in theta.missed().iter().rev() {
            f = self.compose(&self.face(level, j), &f);
            level -= 1;
        }
        for &i in &theta.repeats() {
            f = self.compose(&self.degeneracy(level, i), &f);
            level += 1;
        }
        debug_assert_eq!(level, theta.source());
        f
    }
}

/// A simplicial object with operators `α_q : X_q → X_q` of a Λₙᵒᵖ-structure.
pub trait LambdaObject: SimplicialObject {
    fn cyclic_order(&self) -> usize;
    fn alpha(&self, q: usize) -> Self::Map;
}

/// The first relation found to fail, with the level at which it was tested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub level: usize,
    pub relation: String,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at level {}", self.relation, self.level)
    }
}

/// Outcome of an exhaustive relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    pub first_failure: Option<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

struct Checker<'a, X: SimplicialObject + ?Sized> {
    x: &'a X,
    checked: usize,
}

impl<X: SimplicialObject + ?Sized> Checker<'_, X> {
    fn check(&mut self, level: usize, name: impl FnOnce() -> String, lhs: X::Map, rhs: X::Map) -> std::result::Result<(), RelationFailure> {
        self.checked += 1;
        if self.x.maps_equal(&lhs, &rhs) {
            Ok(())
        } else {
            Err(RelationFailure { level, relation: name() })
        }
    }
}

fn simplicial_identities_inner<X: SimplicialObject + ?Sized>(x: &X, ch: &mut Checker<'_, X>) -> std::result::Result<(), RelationFailure> {
    let top = x.top();
    let c = |f: &X::Map, g: &X::Map| x.compose(f, g);
    for k in 0..=top {
        // d_i d_j = d_{j−1} d_i, i < j, on X_k
        if k >= 2 {
            for j in 1..=k {
                for i in 0..j {
                    ch.check(
                        k,
                        || format!("d{i} d{j} = d{} d{i}", j - 1),
                        c(&x.face(k - 1, i), &x.face(k, j)),
                        c(&x.face(k - 1, j - 1), &x.face(k, i)),
                    )?;
                }
            }
        }
        if k < top {
            // d_i s_j on X_k, with d_i on X_{k+1}
            for j in 0..=k {
                for i in 0..=k + 1 {
                    let lhs = c(&x.face(k + 1, i), &x.degeneracy(k, j));
                    let rhs = if i < j {
                        c(&x.degeneracy(k - 1, j - 1), &x.face(k, i))
                    } else if i == j || i == j + 1 {
                        x.identity(k)
                    } else {
                        c(&x.degeneracy(k - 1, j), &x.face(k, i - 1))
                    };
                    ch.check(k, || format!("d{i} s{j}"), lhs, rhs)?;
                }
            }
        }
        if k + 1 < top {
            // s_i s_j = s_{j+1} s_i, i ≤ j
            for j in 0..=k {
                for i in 0..=j {
                    ch.check(
                        k,
                        || format!("s{i} s{j} = s{} s{i}", j + 1),
                        c(&x.degeneracy(k + 1, i), &x.degeneracy(k, j)),
                        c(&x.degeneracy(k + 1, j + 1), &x.degeneracy(k, i)),
                    )?;
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive check of the simplicial identities at every stored level.
pub fn check_simplicial_identities<X: SimplicialObject + ?Sized>(x: &X) -> RelationReport {
    let mut ch = Checker { x, checked: 0 };
    let failure = simplicial_identities_inner(x, &mut ch).err();
    RelationReport { checked: ch.checked, first_failure: failure }
}

fn lambda_relations_inner<X: LambdaObject + ?Sized>(x: &X, ch: &mut Checker<'_, X>) -> std::result::Result<(), RelationFailure> {
    let top = x.top();
    let n = x.cyclic_order();
    let c = |f: &X::Map, g: &X::Map| x.compose(f, g);
    let alpha: Vec<X::Map> = (0..=top).map(|q| x.alpha(q)).collect();
    for (q, a) in alpha.iter().enumerate() {
        let mut power = x.identity(q);
        for _ in 0..n * (q + 1) {
            power = c(a, &power);
        }
        ch.check(q, || format!("α{q}^{} = id", n * (q + 1)), power, x.identity(q))?;
    }
    for q in 1..=top {
        ch.check(q, || format!("d0 α{q} = d{q}"), c(&x.face(q, 0), &alpha[q]), x.face(q, q))?;
    }
    for q in 1..=top {
        for i in 1..=q {
            ch.check(
                q,
                || format!("d{i} α{q} = α{} d{}", q - 1, i - 1),
                c(&x.face(q, i), &alpha[q]),
                c(&alpha[q - 1], &x.face(q, i - 1)),
            )?;
        }
    }
    for q in 0..top {
        for i in 1..=q {
            ch.check(
                q,
                || format!("s{i} α{q} = α{} s{}", q + 1, i - 1),
                c(&x.degeneracy(q, i), &alpha[q]),
                c(&alpha[q + 1], &x.degeneracy(q, i - 1)),
            )?;
        }
    }
    for q in 0..top {
        ch.check(
            q,
            || format!("s0 α{q} = α{}² s{q}", q + 1),
            c(&x.degeneracy(q, 0), &alpha[q]),
            c(&alpha[q + 1], &c(&alpha[q + 1], &x.degeneracy(q, q))),
        )?;
    }
    Ok(())
}

/// Exhaustive check of the simplicial identities and the five Λₙᵒᵖ relations.
pub fn check_lambda_relations<X: LambdaObject + ?Sized>(x: &X) -> RelationReport {
    let mut ch = Checker { x, checked: 0 };
    let failure = simplicial_identities_inner(x, &mut ch).and_then(|_| lambda_relations_inner(x, &mut ch)).err();
    RelationReport { checked: ch.checked, first_failure: failure }
}

/// Structure maps of the edgewise subdivision `sd_r X` through level `top`.
pub(crate) struct SubdividedMaps<M> {
    pub sizes: Vec<usize>,
    pub faces: Vec<Vec<M>>,
    pub degeneracies: Vec<Vec<M>>,
}

/// `(sd_r X)_k = X_{r(k+1)−1}` with `sd_r X(θ) = X(θ ⊔ ⋯ ⊔ θ)`.
pub(crate) fn subdivide_maps<X: SimplicialObject + ?Sized>(x: &X, r: usize, top: usize) -> Result<SubdividedMaps<X::Map>> {
    if r == 0 {
        return Err(Error::InvalidArgument("subdivision index must be positive".into()));
    }
    let need = r * (top + 1) - 1;
    if need > x.top() {
        return Err(Error::InsufficientTruncation(format!(
            "sd_{r} through level {top} needs level {need}, object stops at {}",
            x.top()
        )));
    }
    let sizes = (0..=top).map(|k| x.level_size(r * (k + 1) - 1)).collect();
    let faces = (0..=top)
        .map(|k| if k == 0 { Vec::new() } else { (0..=k).map(|i| x.induced(&MonotoneMap::coface(k, i).concatenate(r))).collect() })
        .collect();
    let degeneracies = (0..=top)
        .map(|k| {
            if k == top {
                Vec::new()
            } else {
                (0..=k).map(|i| x.induced(&MonotoneMap::codegeneracy(k, i).concatenate(r))).collect()
            }
        })
        .collect();
    Ok(SubdividedMaps { sizes, faces, degeneracies })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coface_codegeneracy() {
        assert_eq!(MonotoneMap::coface(2, 1).values(), &[0, 2]);
        assert_eq!(MonotoneMap::codegeneracy(1, 0).values(), &[0, 0, 1]);
        assert!(MonotoneMap::new(1, vec![1, 0]).is_err());
    }

    #[test]
    fn concatenation() {
        let d = MonotoneMap::coface(1, 0); // [0] → [1], 0 ↦ 1
        assert_eq!(d.concatenate(3).values(), &[1, 3, 5]);
        assert_eq!(MonotoneMap::identity(2).concatenate(2), MonotoneMap::identity(5));
        // (θ^{⊔r})^{⊔s} = θ^{⊔rs}
        let s = MonotoneMap::codegeneracy(1, 1);
        assert_eq!(s.concatenate(2).concatenate(3), s.concatenate(6));
    }

    #[test]
    fn missed_and_repeats() {
        let t = MonotoneMap::new(4, vec![0, 0, 2, 2, 3]).unwrap();
        assert_eq!(t.missed(), vec![1, 4]);
        assert_eq!(t.repeats(), vec![0, 2]);
    }
}
