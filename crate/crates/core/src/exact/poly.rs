use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{rat, BaseRing, ScalarRing};
use crate::error::{Error, Result};

/// An exponent vector. Ordered by degree-reverse-lexicographic order with
/// respect to the declared variable order (first variable largest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Reindexes variables: exponent of variable `i` moves to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            e[perm[i]] = x;
        }
        Monomial(e)
    }

    /// All exponent vectors in `nvars` variables of total degree `degree`,
    /// in increasing monomial order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=left {
                prefix.push(e);
                rec(nvars, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial ring over one of the scalar rings, with named variables in
/// a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    scalars: ScalarRing,
    variables: Vec<String>,
}

impl PolyRing {
    pub fn new(scalars: ScalarRing, variables: &[&str]) -> Arc<Self> {
        Arc::new(PolyRing {
            scalars,
            variables: variables.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn from_names(scalars: ScalarRing, variables: Vec<String>) -> Arc<Self> {
        Arc::new(PolyRing { scalars, variables })
    }

    pub fn integers(variables: &[&str]) -> Arc<Self> {
        Self::new(ScalarRing::Integers, variables)
    }

    /// Flattens a (possibly nested) base ring.
    pub fn from_base(base: &BaseRing) -> Arc<Self> {
        Self::from_names(base.scalars(), base.variables())
    }

    pub fn scalars(&self) -> &ScalarRing {
        &self.scalars
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.variables.is_empty() {
            write!(f, "{}", self.scalars)
        } else {
            write!(f, "{}[{}]", self.scalars, self.variables.join(","))
        }
    }
}

/// A sparse polynomial in canonical form: no zero coefficients, every
/// coefficient the canonical representative in the scalar ring.
#[derive(Clone, Debug)]
pub struct PolyElement {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for PolyElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for PolyElement {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    Neg,
}

/// Exact ring arithmetic on two elements of the same ring. `Neg` ignores `b`.
pub fn poly_arith(a: &PolyElement, b: &PolyElement, op: PolyOp) -> Result<PolyElement> {
    match op {
        PolyOp::Add => a.checked_add(b),
        PolyOp::Mul => a.checked_mul(b),
        PolyOp::Neg => Ok(-a),
    }
}

impl PolyElement {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        PolyElement { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<PolyRing>, c: impl Into<BigInt>) -> Self {
        Self::from_rational(ring, rat(c))
    }

    pub fn from_rational(ring: &Arc<PolyRing>, c: BigRational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "exponent vector length mismatch");
        let mut p = Self::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), index), rat(1))
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring
            .variable_index(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no variable {name} in {ring}")))?;
        Ok(Self::var(ring, i))
    }

    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// Builds a polynomial from `(integer coefficient, exponents)` pairs.
    pub fn from_int_terms(ring: &Arc<PolyRing>, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(ring, terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), rat(*c))))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading term in degrevlex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *entry = self.ring.scalars.normalize(&*entry + c);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check_ring(&self, other: &PolyElement) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn checked_add(&self, other: &PolyElement) -> Result<PolyElement> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PolyElement) -> Result<PolyElement> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &PolyElement) -> Result<PolyElement> {
        self.check_ring(other)?;
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = acc.entry(m1.product(m2)).or_insert_with(BigRational::zero);
                *e += c1 * c2;
            }
        }
        let mut out = Self::zero(&self.ring);
        for (m, c) in acc {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> PolyElement {
        let mut out = Self::zero(&self.ring);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn scale_int(&self, c: impl Into<BigInt>) -> PolyElement {
        self.scale(&rat(c))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> PolyElement {
        let mut out = Self::zero(&self.ring);
        for (k, a) in &self.terms {
            out.add_term(k.product(m), a * c);
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> PolyElement {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients as integers. Fails over ℚ when a coefficient is not integral.
    pub fn integer_terms(&self) -> Result<Vec<(Monomial, BigInt)>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.is_integer() {
                    Ok((m.clone(), c.to_integer()))
                } else {
                    Err(Error::InvalidArgument(format!("non-integral coefficient {c}")))
                }
            })
            .collect()
    }

    /// Divides every coefficient by `d`, requiring exact integral division.
    pub fn exact_div_int(&self, d: &BigInt) -> Result<PolyElement> {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let q = c / BigRational::from_integer(d.clone());
            if !q.is_integer() {
                return Err(Error::Internal(format!("inexact division of {c} by {d}")));
            }
            out.add_term(m.clone(), q);
        }
        Ok(out)
    }

    /// Evaluates at `values` (one per variable), all in `target`.
    /// The canonical map from this ring's scalars into the target's must exist.
    pub fn substitute(&self, values: &[PolyElement], target: &Arc<PolyRing>) -> Result<PolyElement> {
        if values.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "substitution needs {} values, got {}",
                self.ring.nvars(),
                values.len()
            )));
        }
        for v in values {
            if v.ring() != target {
                return Err(Error::RingMismatch(format!("substituted value lives in {}, not {target}", v.ring())));
            }
        }
        if !self.ring.scalars.maps_into(&target.scalars) {
            return Err(Error::RingMismatch(format!(
                "no ring map {} -> {}",
                self.ring.scalars, target.scalars
            )));
        }
        let mut powers: Vec<Vec<PolyElement>> = vec![vec![PolyElement::one(target)]; values.len()];
        let mut out = PolyElement::zero(target);
        for (m, c) in &self.terms {
            let mut term = PolyElement::from_rational(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &values[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// The same polynomial viewed in another ring with the same number of variables.
    pub fn map_into(&self, target: &Arc<PolyRing>) -> Result<PolyElement> {
        if target.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch(format!("{} and {target} have different variables", self.ring)));
        }
        if !self.ring.scalars.maps_into(&target.scalars) {
            return Err(Error::RingMismatch(format!("no ring map {} -> {}", self.ring.scalars, target.scalars)));
        }
        Ok(PolyElement::from_terms(target, self.terms.iter().map(|(m, c)| (m.clone(), c.clone()))))
    }

    /// Permutes variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> PolyElement {
        PolyElement::from_terms(&self.ring, self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())))
    }

    /// Part of total (weighted) degree exactly `d`.
    pub fn homogeneous_part(&self, weights: &[u32], d: u32) -> PolyElement {
        PolyElement::from_terms(
            &self.ring,
            self.terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(weights) == d)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.variables[i].clone()),
                    _ => factors.push(format!("{}^{e}", self.ring.variables[i])),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&PolyElement> for &PolyElement {
            type Output = PolyElement;
            fn $method(self, rhs: &PolyElement) -> PolyElement {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $trait<PolyElement> for PolyElement {
            type Output = PolyElement;
            fn $method(self, rhs: PolyElement) -> PolyElement {
                (&self).$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &PolyElement {
    type Output = PolyElement;
    fn neg(self) -> PolyElement {
        self.scale(&rat(-1))
    }
}

impl Neg for PolyElement {
    type Output = PolyElement;
    fn neg(self) -> PolyElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zx() -> Arc<PolyRing> {
        PolyRing::integers(&["x", "gx"])
    }

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::integers(&["x"]);
        let x = PolyElement::var(&r, 0);
        let one = PolyElement::one(&r);
        let lhs = &(&x + &one) * &(&x - &one);
        let expected = PolyElement::from_int_terms(&r, &[(1, &[2]), (-1, &[0])]);
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "x^2 - 1");
    }

    #[test]
    fn additive_identity() {
        let r = zx();
        let a = PolyElement::from_int_terms(&r, &[(3, &[1, 2]), (-5, &[0, 0])]);
        assert_eq!(poly_arith(&a, &PolyElement::zero(&r), PolyOp::Add).unwrap(), a);
    }

    #[test]
    fn binomial_square() {
        let r = zx();
        let s = &PolyElement::var(&r, 0) + &PolyElement::var(&r, 1);
        let sq = s.pow(2);
        let expected = PolyElement::from_int_terms(&r, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = PolyElement::var(&zx(), 0);
        let b = PolyElement::var(&PolyRing::integers(&["x"]), 0);
        assert!(matches!(poly_arith(&a, &b, PolyOp::Mul), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn degrevlex_order() {
        // x > y > z; degrevlex: x*z < y^2 since the last exponent decides.
        let xz = Monomial::new(vec![1, 0, 1]);
        let yy = Monomial::new(vec![0, 2, 0]);
        let xx = Monomial::new(vec![2, 0, 0]);
        assert!(xz < yy);
        assert!(yy < xx);
        assert!(Monomial::new(vec![0, 0, 3]) > xx);
    }

    #[test]
    fn modular_coefficients_reduce() {
        let r = PolyRing::new(ScalarRing::integers_mod(2).unwrap(), &["x"]);
        let x = PolyElement::var(&r, 0);
        let one = PolyElement::one(&r);
        // (x+1)^2 = x^2 + 1 in characteristic 2
        assert_eq!((&x + &one).pow(2), &x.pow(2) + &one);
    }

    #[test]
    fn substitution_into_other_ring() {
        let src = PolyRing::integers(&["a", "b"]);
        let f = PolyElement::from_int_terms(&src, &[(1, &[1, 1]), (2, &[0, 1])]);
        let tgt = PolyRing::integers(&["x"]);
        let x = PolyElement::var(&tgt, 0);
        let v = f.substitute(&[x.clone(), &x + &PolyElement::one(&tgt)], &tgt).unwrap();
        // x(x+1) + 2(x+1) = x^2 + 3x + 2
        assert_eq!(v, PolyElement::from_int_terms(&tgt, &[(1, &[2]), (3, &[1]), (2, &[0])]));
    }

    #[test]
    fn enumerate_monomials() {
        assert_eq!(Monomial::all_of_degree(2, 3).len(), 4);
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
        assert!(Monomial::all_of_degree(0, 1).is_empty());
    }
}
