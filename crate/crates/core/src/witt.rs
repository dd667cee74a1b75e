//! p-typical Witt vectors of finite length.
//!
//! Addition, multiplication and Frobenius are computed by specializing
//! universal integer polynomials, built once per `(p, n)` from the ghost
//! recursion and cached.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{is_prime, PolyElement, PolyRing, ScalarRing};

/// Default largest length accepted by [`witt_rigidity_check`].
pub const RIGIDITY_DEFAULT_BOUND: usize = 4;

/// Default bound on `|R₀|^n` for [`frobenius_fixed_points`].
pub const FIXED_POINT_DEFAULT_BUDGET: u64 = 1 << 16;

#[derive(Clone, PartialEq, Eq)]
pub struct WittVector {
    p: u64,
    coords: Vec<PolyElement>,
}

impl WittVector {
    pub fn new(p: u64, coords: Vec<PolyElement>) -> Result<Self> {
        check_prime(p)?;
        let Some(first) = coords.first() else {
            return Err(Error::LengthUnderflow("Witt vectors have length at least 1".into()));
        };
        let ring = first.ring().clone();
        if coords.iter().any(|c| c.ring() != &ring) {
            return Err(Error::RingMismatch("Witt coordinates in different rings".into()));
        }
        Ok(WittVector { p, coords })
    }

    pub fn zero(p: u64, n: usize, ring: &Arc<PolyRing>) -> Result<Self> {
        Self::new(p, vec![PolyElement::zero(ring); n])
    }

    pub fn one(p: u64, n: usize, ring: &Arc<PolyRing>) -> Result<Self> {
        teichmuller(&PolyElement::one(ring), p, n)
    }

    pub fn from_ints(p: u64, ring: &Arc<PolyRing>, coords: &[i64]) -> Result<Self> {
        Self::new(p, coords.iter().map(|c| PolyElement::constant(ring, *c)).collect())
    }

    /// The generic vector `(x₀, …, x_{n−1})` whose coordinates are the variables
    /// `offset, …, offset+n−1` of `ring`.
    pub fn generic(p: u64, n: usize, ring: &Arc<PolyRing>, offset: usize) -> Result<Self> {
        Self::new(p, (0..n).map(|i| PolyElement::var(ring, offset + i)).collect())
    }

    /// `k · [1]` for `k ≥ 0`, by double-and-add.
    pub fn from_natural(p: u64, n: usize, ring: &Arc<PolyRing>, k: u64) -> Result<Self> {
        let mut acc = Self::zero(p, n, ring)?;
        let mut base = Self::one(p, n, ring)?;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = witt_add(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = witt_add(&base, &base)?;
            }
        }
        Ok(acc)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coords(&self) -> &[PolyElement] {
        &self.coords
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.coords[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(PolyElement::is_zero)
    }

    fn compatible(&self, other: &WittVector) -> Result<()> {
        if self.p != other.p {
            return Err(Error::InvalidArgument(format!("primes {} and {} differ", self.p, other.p)));
        }
        if self.len() != other.len() {
            return Err(Error::InvalidArgument(format!("lengths {} and {} differ", self.len(), other.len())));
        }
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring(), other.ring())));
        }
        Ok(())
    }
}

impl fmt::Debug for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[p={}]({})", self.p, self.coords.iter().join(", "))
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(", "))
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(&BigInt::from(p)) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p} is not prime")))
    }
}

fn pow_u64(p: u64, e: usize) -> u64 {
    p.checked_pow(e as u32).expect("exponent overflow")
}

/// `w_i = Σ_{j≤i} p^j x_j^{p^{i−j}}`.
pub fn ghost_component(p: u64, coords: &[PolyElement], i: usize) -> PolyElement {
    let ring = coords[0].ring();
    let mut out = PolyElement::zero(ring);
    for (j, x) in coords.iter().enumerate().take(i + 1) {
        let term = x.pow(pow_u64(p, i - j)).scale_int(BigInt::from(p).pow(j as u32));
        out = &out + &term;
    }
    out
}

pub fn ghost(w: &WittVector) -> Vec<PolyElement> {
    (0..w.len()).map(|i| ghost_component(w.p, &w.coords, i)).collect()
}

/// Solves `ghost(c) = targets` coordinate by coordinate over ℤ, dividing by `p^i`
/// at step `i`. Inexact division is an internal error.
fn solve_ghost(p: u64, targets: &[PolyElement]) -> Result<Vec<PolyElement>> {
    let mut out: Vec<PolyElement> = Vec::with_capacity(targets.len());
    for (i, t) in targets.iter().enumerate() {
        let mut rest = t.clone();
        for (j, c) in out.iter().enumerate() {
            let term = c.pow(pow_u64(p, i - j)).scale_int(BigInt::from(p).pow(j as u32));
            rest = &rest - &term;
        }
        out.push(rest.exact_div_int(&BigInt::from(p).pow(i as u32))?);
    }
    Ok(out)
}

/// Universal sum and product polynomials `S_i, P_i ∈ ℤ[a₀..a_{n−1}, b₀..b_{n−1}]`.
#[derive(Debug)]
pub struct WittUniversalTables {
    pub p: u64,
    pub length: usize,
    pub ring: Arc<PolyRing>,
    pub sum_polys: Vec<PolyElement>,
    pub prod_polys: Vec<PolyElement>,
}

impl WittUniversalTables {
    pub fn a(&self) -> WittVector {
        WittVector::generic(self.p, self.length, &self.ring, 0).unwrap()
    }

    pub fn b(&self) -> WittVector {
        WittVector::generic(self.p, self.length, &self.ring, self.length).unwrap()
    }

    /// Whether `ghost(S) = ghost(a) + ghost(b)` and `ghost(P) = ghost(a)·ghost(b)`
    /// hold as polynomial identities.
    pub fn verify_ghost_identities(&self) -> bool {
        let ga = ghost(&self.a());
        let gb = ghost(&self.b());
        let s = WittVector::new(self.p, self.sum_polys.clone()).unwrap();
        let m = WittVector::new(self.p, self.prod_polys.clone()).unwrap();
        let gs = ghost(&s);
        let gm = ghost(&m);
        (0..self.length).all(|i| gs[i] == &ga[i] + &gb[i] && gm[i] == &ga[i] * &gb[i])
    }
}

fn generic_ring(prefixes: &[char], n: usize) -> Arc<PolyRing> {
    let names: Vec<String> = prefixes.iter().flat_map(|c| (0..n).map(move |i| format!("{c}{i}"))).collect();
    PolyRing::from_names(ScalarRing::Integers, names)
}

/// Computes the universal tables from scratch.
pub fn build_universal_tables(p: u64, n: usize) -> Result<WittUniversalTables> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::LengthUnderflow("length must be at least 1".into()));
    }
    let ring = generic_ring(&['a', 'b'], n);
    let a = WittVector::generic(p, n, &ring, 0)?;
    let b = WittVector::generic(p, n, &ring, n)?;
    let ga = ghost(&a);
    let gb = ghost(&b);
    let sums: Vec<PolyElement> = ga.iter().zip(&gb).map(|(x, y)| x + y).collect();
    let prods: Vec<PolyElement> = ga.iter().zip(&gb).map(|(x, y)| x * y).collect();
    Ok(WittUniversalTables {
        p,
        length: n,
        sum_polys: solve_ghost(p, &sums)?,
        prod_polys: solve_ghost(p, &prods)?,
        ring,
    })
}

type Cache<T> = OnceLock<RwLock<HashMap<(u64, usize), Arc<T>>>>;

fn cached<T>(cache: &'static Cache<T>, key: (u64, usize), build: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
    let lock = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().expect("cache poisoned").get(&key) {
        return Ok(t.clone());
    }
    let mut guard = lock.write().expect("cache poisoned");
    if let Some(t) = guard.get(&key) {
        return Ok(t.clone());
    }
    let built = Arc::new(build()?);
    guard.insert(key, built.clone());
    Ok(built)
}

/// Cached [`build_universal_tables`].
pub fn universal_tables(p: u64, n: usize) -> Result<Arc<WittUniversalTables>> {
    static CACHE: Cache<WittUniversalTables> = OnceLock::new();
    cached(&CACHE, (p, n), || build_universal_tables(p, n))
}

/// Universal Frobenius polynomials `F_i ∈ ℤ[a₀..a_{n−1}]`, `i < n−1`, with
/// `ghost(F)_i = ghost(a)_{i+1}`.
#[derive(Debug)]
pub struct FrobeniusTable {
    pub p: u64,
    pub length: usize,
    pub ring: Arc<PolyRing>,
    pub polys: Vec<PolyElement>,
}

pub fn frobenius_table(p: u64, n: usize) -> Result<Arc<FrobeniusTable>> {
    static CACHE: Cache<FrobeniusTable> = OnceLock::new();
    cached(&CACHE, (p, n), || {
        check_prime(p)?;
        if n < 2 {
            return Err(Error::LengthUnderflow("Frobenius needs length at least 2".into()));
        }
        let ring = generic_ring(&['a'], n);
        let a = WittVector::generic(p, n, &ring, 0)?;
        let ga = ghost(&a);
        Ok(FrobeniusTable { p, length: n, polys: solve_ghost(p, &ga[1..])?, ring })
    })
}

fn specialize(polys: &[PolyElement], values: &[PolyElement], target: &Arc<PolyRing>) -> Result<Vec<PolyElement>> {
    polys.iter().map(|f| f.substitute(values, target)).collect()
}

/// Sum polynomials alone; addition at large lengths should not pay for products.
fn sum_polynomials(p: u64, n: usize) -> Result<Arc<Vec<PolyElement>>> {
    static CACHE: Cache<Vec<PolyElement>> = OnceLock::new();
    cached(&CACHE, (p, n), || {
        check_prime(p)?;
        let ring = generic_ring(&['a', 'b'], n);
        let ga = ghost(&WittVector::generic(p, n, &ring, 0)?);
        let gb = ghost(&WittVector::generic(p, n, &ring, n)?);
        let sums: Vec<PolyElement> = ga.iter().zip(&gb).map(|(x, y)| x + y).collect();
        solve_ghost(p, &sums)
    })
}

pub fn witt_add(u: &WittVector, v: &WittVector) -> Result<WittVector> {
    u.compatible(v)?;
    let sums = sum_polynomials(u.p, u.len())?;
    let values: Vec<PolyElement> = u.coords.iter().chain(&v.coords).cloned().collect();
    WittVector::new(u.p, specialize(&sums, &values, u.ring())?)
}

pub fn witt_mul(u: &WittVector, v: &WittVector) -> Result<WittVector> {
    u.compatible(v)?;
    let t = universal_tables(u.p, u.len())?;
    let values: Vec<PolyElement> = u.coords.iter().chain(&v.coords).cloned().collect();
    WittVector::new(u.p, specialize(&t.prod_polys, &values, u.ring())?)
}

/// `F: W_n → W_{n−1}`.
pub fn frobenius(w: &WittVector) -> Result<WittVector> {
    if w.len() < 2 {
        return Err(Error::LengthUnderflow("Frobenius needs length at least 2".into()));
    }
    let t = frobenius_table(w.p, w.len())?;
    WittVector::new(w.p, specialize(&t.polys, &w.coords, w.ring())?)
}

/// `V: W_n → W_{n+1}`, `(a₀, …) ↦ (0, a₀, …)`.
pub fn verschiebung(w: &WittVector) -> WittVector {
    let mut coords = vec![PolyElement::zero(w.ring())];
    coords.extend(w.coords.iter().cloned());
    WittVector { p: w.p, coords }
}

/// `R: W_n → W_{n−1}`, dropping the last coordinate.
pub fn restrict(w: &WittVector) -> Result<WittVector> {
    if w.len() < 2 {
        return Err(Error::LengthUnderflow("restriction needs length at least 2".into()));
    }
    Ok(WittVector { p: w.p, coords: w.coords[..w.len() - 1].to_vec() })
}

pub fn teichmuller(a: &PolyElement, p: u64, n: usize) -> Result<WittVector> {
    let mut coords = vec![PolyElement::zero(a.ring()); n];
    if let Some(c) = coords.first_mut() {
        *c = a.clone();
    }
    WittVector::new(p, coords)
}

/// Permutations `σ` of the `m` ghost factors compatible with restriction: the
/// permuted map `(x_i) ↦ (x_{σ(i)})` followed by projection onto the first
/// `m−1` factors equals projection followed by some surviving `σ'` of length `m−1`.
fn surviving_permutations(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut levels: Vec<Vec<Vec<usize>>> = vec![vec![vec![0]]];
    for m in 2..=n {
        let prev = levels.last().unwrap();
        let next: Vec<Vec<usize>> = (0..m)
            .permutations(m)
            .filter(|sigma| prev.iter().any(|tau| (0..m - 1).all(|i| sigma[i] == tau[i])))
            .collect();
        levels.push(next);
    }
    levels
}

/// The induction showing that a natural ring endomorphism of `W_n`, which
/// over ℚ-algebras can only permute the ghost factors and must commute with
/// restriction, is the identity. Also checks symbolically that restriction is
/// the projection on ghost coordinates for every length up to `n`.
pub fn witt_rigidity_check(p: u64, n: usize) -> Result<bool> {
    witt_rigidity_check_bounded(p, n, RIGIDITY_DEFAULT_BOUND)
}

pub fn witt_rigidity_check_bounded(p: u64, n: usize, bound: usize) -> Result<bool> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::LengthUnderflow("length must be at least 1".into()));
    }
    if n > bound {
        return Err(Error::BudgetExceeded(format!("rigidity check length {n} exceeds bound {bound}")));
    }
    for m in 2..=n {
        let ring = generic_ring(&['a'], m);
        let w = WittVector::generic(p, m, &ring, 0)?;
        let g = ghost(&w);
        let gr = ghost(&restrict(&w)?);
        if gr[..] != g[..m - 1] {
            return Ok(false);
        }
    }
    let identity_only = surviving_permutations(n)
        .iter()
        .enumerate()
        .all(|(m, perms)| perms.len() == 1 && perms[0] == (0..=m).collect::<Vec<_>>());
    Ok(identity_only)
}

/// All `w ∈ W_n(ℤ/m)` with `F(w) = R(w)`; for `n = 1` this is all of `ℤ/m`.
pub fn frobenius_fixed_points(p: u64, n: usize, modulus: u64, budget: u64) -> Result<Vec<WittVector>> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::LengthUnderflow("length must be at least 1".into()));
    }
    let scalars = ScalarRing::integers_mod(modulus)?;
    let size = modulus.checked_pow(n as u32).filter(|s| *s <= budget);
    let Some(size) = size else {
        return Err(Error::BudgetExceeded(format!("|W_{n}(ℤ/{modulus})| exceeds {budget}")));
    };
    let ring = PolyRing::new(scalars, &[]);
    let mut out = Vec::new();
    for idx in 0..size {
        let coords: Vec<i64> = (0..n).map(|i| ((idx / modulus.pow(i as u32)) % modulus) as i64).collect();
        let w = WittVector::from_ints(p, &ring, &coords)?;
        if n == 1 || frobenius(&w)? == restrict(&w)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// Constant coordinates as integers, when every coordinate is constant and integral.
pub fn integer_coords(w: &WittVector) -> Option<Vec<i64>> {
    w.coords
        .iter()
        .map(|c| {
            if !c.is_constant() {
                return None;
            }
            let k = c.constant_term();
            if k.is_integer() {
                k.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

/// Additive order of `[1]` in `W_n(𝔽_p)`, found by repeated addition up to `limit`.
pub fn additive_order_of_one(p: u64, n: usize, limit: u64) -> Result<Option<u64>> {
    let ring = PolyRing::new(ScalarRing::integers_mod(p)?, &[]);
    let one = WittVector::one(p, n, &ring)?;
    let mut acc = one.clone();
    for k in 1..=limit {
        if acc.is_zero() {
            return Ok(Some(k));
        }
        acc = witt_add(&acc, &one)?;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zx() -> Arc<PolyRing> {
        PolyRing::integers(&[])
    }

    #[test]
    fn ghost_examples() {
        let r = zx();
        let g = ghost(&WittVector::from_ints(2, &r, &[0, 1]).unwrap());
        assert_eq!(g, vec![PolyElement::constant(&r, 0), PolyElement::constant(&r, 2)]);
        let g = ghost(&WittVector::from_ints(3, &r, &[1, 1]).unwrap());
        assert_eq!(g, vec![PolyElement::constant(&r, 1), PolyElement::constant(&r, 4)]);
    }

    #[test]
    fn teichmuller_ghost_is_power_sequence() {
        let r = PolyRing::integers(&["x"]);
        let x = PolyElement::var(&r, 0);
        let g = ghost(&teichmuller(&x, 3, 3).unwrap());
        assert_eq!(g, vec![x.clone(), x.pow(3), x.pow(9)]);
    }

    #[test]
    fn tables_p2_n2() {
        let t = build_universal_tables(2, 2).unwrap();
        let r = &t.ring;
        let v = |i| PolyElement::var(r, i);
        let (a0, a1, b0, b1) = (v(0), v(1), v(2), v(3));
        assert_eq!(t.sum_polys[1], &(&a1 + &b1) - &(&a0 * &b0));
        let p1 = &(&(&a0.pow(2) * &b1) + &(&b0.pow(2) * &a1)) + &(&a1 * &b1).scale_int(2);
        assert_eq!(t.prod_polys[1], p1);
    }

    #[test]
    fn tables_length_one() {
        let t = build_universal_tables(5, 1).unwrap();
        let a0 = PolyElement::var(&t.ring, 0);
        let b0 = PolyElement::var(&t.ring, 1);
        assert_eq!(t.sum_polys[0], &a0 + &b0);
        assert_eq!(t.prod_polys[0], &a0 * &b0);
    }

    #[test]
    fn cache_returns_same_table() {
        let a = universal_tables(2, 2).unwrap();
        let b = universal_tables(2, 2).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn v1_squared() {
        let r = zx();
        let v1 = WittVector::from_ints(2, &r, &[0, 1]).unwrap();
        let sq = witt_mul(&v1, &v1).unwrap();
        assert_eq!(integer_coords(&sq), Some(vec![0, 2]));
    }

    #[test]
    fn teichmuller_multiplicative() {
        let r = PolyRing::integers(&["a", "b"]);
        let a = PolyElement::var(&r, 0);
        let b = PolyElement::var(&r, 1);
        let prod = witt_mul(&teichmuller(&a, 2, 3).unwrap(), &teichmuller(&b, 2, 3).unwrap()).unwrap();
        assert_eq!(prod, teichmuller(&(&a * &b), 2, 3).unwrap());
    }

    #[test]
    fn add_zero() {
        let r = PolyRing::integers(&["x", "y"]);
        let u = WittVector::generic(3, 2, &r, 0).unwrap();
        assert_eq!(witt_add(&u, &WittVector::zero(3, 2, &r).unwrap()).unwrap(), u);
    }

    #[test]
    fn frobenius_of_teichmuller() {
        let r = PolyRing::integers(&["a"]);
        let a = PolyElement::var(&r, 0);
        let f = frobenius(&teichmuller(&a, 2, 3).unwrap()).unwrap();
        assert_eq!(f, teichmuller(&a.pow(2), 2, 2).unwrap());
    }

    #[test]
    fn length_underflow() {
        let r = zx();
        let w = WittVector::from_ints(2, &r, &[1]).unwrap();
        assert!(matches!(frobenius(&w), Err(Error::LengthUnderflow(_))));
        assert!(matches!(restrict(&w), Err(Error::LengthUnderflow(_))));
    }

    #[test]
    fn mismatches_rejected() {
        let r = zx();
        let u = WittVector::from_ints(2, &r, &[1, 0]).unwrap();
        let v = WittVector::from_ints(3, &r, &[1, 0]).unwrap();
        let w = WittVector::from_ints(2, &r, &[1, 0, 0]).unwrap();
        assert!(witt_add(&u, &v).is_err());
        assert!(witt_mul(&u, &w).is_err());
        assert!(WittVector::from_ints(4, &r, &[1]).is_err());
    }

    #[test]
    fn rigidity_examples() {
        assert!(witt_rigidity_check(2, 3).unwrap());
        assert!(witt_rigidity_check(2, 1).unwrap());
        assert!(witt_rigidity_check(3, 2).unwrap());
        assert!(witt_rigidity_check(2, 5).is_err());
        // the transposition of the two factors is rejected at length 2
        let levels = surviving_permutations(2);
        assert_eq!(levels[1], vec![vec![0, 1]]);
    }

    #[test]
    fn fixed_points_over_prime_field_are_everything() {
        // Over 𝔽_p the Witt Frobenius is the coordinatewise p-th power, which is
        // the identity on 𝔽_p, so F and R agree on every vector.
        let fixed = frobenius_fixed_points(2, 2, 2, FIXED_POINT_DEFAULT_BUDGET).unwrap();
        assert_eq!(fixed.len(), 4);
        let fixed3 = frobenius_fixed_points(3, 2, 3, FIXED_POINT_DEFAULT_BUDGET).unwrap();
        let coords: Vec<_> = fixed3.iter().filter_map(integer_coords).collect();
        assert!(coords.contains(&vec![1, 0]) && coords.contains(&vec![0, 0]));
    }

    #[test]
    fn fixed_points_over_z_mod_4() {
        // F(a₀,a₁)₀ = a₀² + 2a₁ and R(a₀,a₁) = a₀; brute-force the congruence
        let fixed = frobenius_fixed_points(2, 2, 4, FIXED_POINT_DEFAULT_BUDGET).unwrap();
        let expected: Vec<Vec<i64>> = (0..16)
            .map(|i: i64| vec![i % 4, i / 4])
            .filter(|c| (c[0] * c[0] + 2 * c[1] - c[0]).rem_euclid(4) == 0)
            .collect();
        let got: Vec<Vec<i64>> = fixed.iter().filter_map(integer_coords).collect();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 8);
    }

    #[test]
    fn fixed_points_length_one_and_budget() {
        assert_eq!(frobenius_fixed_points(5, 1, 7, 100).unwrap().len(), 7);
        assert!(matches!(frobenius_fixed_points(2, 3, 4, 10), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn additive_order() {
        assert_eq!(additive_order_of_one(2, 3, 100).unwrap(), Some(8));
        assert_eq!(additive_order_of_one(3, 2, 100).unwrap(), Some(9));
    }
}
