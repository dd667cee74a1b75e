//! Strong Gröbner bases over ℤ and the presented rings built on them.
//!
//! The completion is Buchberger's algorithm adapted to a Euclidean
//! coefficient domain: for every pair both the S-polynomial (which cancels
//! leading terms after scaling to the lcm of the leading coefficients) and
//! the G-polynomial (whose leading coefficient is the gcd of the two leading
//! coefficients) are reduced against the current basis. Reduction replaces a
//! coefficient by its least non-negative residue modulo the smallest
//! applicable leading coefficient, which makes normal forms unique once the
//! basis is strong.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{Monomial, PolyElement, PolyRing};
use super::ring::ScalarRing;
use crate::error::{Error, Result};

pub const DEFAULT_BASIS_BOUND: usize = 10_000;

/// A finitely presented commutative ring ℤ[generators]/(relations), together
/// with a reduced strong Gröbner basis of the relation ideal.
#[derive(Clone, Debug)]
pub struct PresentedRing {
    ring: Arc<PolyRing>,
    relations: Vec<PolyElement>,
    basis: Vec<PolyElement>,
}

impl PresentedRing {
    pub fn new(generators: &[&str], relations: Vec<PolyElement>) -> Result<Self> {
        Self::with_bound(generators, relations, DEFAULT_BASIS_BOUND)
    }

    pub fn with_bound(generators: &[&str], relations: Vec<PolyElement>, bound: usize) -> Result<Self> {
        let ring = PolyRing::integers(generators);
        Self::over(&ring, relations, bound)
    }

    /// Presentation in an existing polynomial ring over ℤ.
    pub fn over(ring: &Arc<PolyRing>, relations: Vec<PolyElement>, bound: usize) -> Result<Self> {
        if *ring.scalars() != ScalarRing::Integers {
            return Err(Error::InvalidRing(format!("presented rings are defined over ℤ, not {}", ring.scalars())));
        }
        for r in &relations {
            if r.ring() != ring {
                return Err(Error::RingMismatch(format!("relation {r} is not in {ring}")));
            }
        }
        let basis = groebner_completion(&relations, bound)?;
        Ok(PresentedRing { ring: ring.clone(), relations, basis })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[String] {
        self.ring.variables()
    }

    pub fn relations(&self) -> &[PolyElement] {
        &self.relations
    }

    pub fn basis(&self) -> &[PolyElement] {
        &self.basis
    }

    pub fn generator(&self, name: &str) -> Result<PolyElement> {
        PolyElement::var_named(&self.ring, name)
    }

    /// Unique normal form of `f` modulo the relations.
    pub fn reduce(&self, f: &PolyElement) -> PolyElement {
        reduce_by(f, &self.basis)
    }

    pub fn is_zero(&self, f: &PolyElement) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn equal(&self, a: &PolyElement, b: &PolyElement) -> bool {
        self.reduce(&(a - b)).is_zero()
    }

    pub fn mul(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        self.reduce(&(a * b))
    }

    /// A new presentation with extra relations (a quotient ring).
    pub fn quotient(&self, extra: Vec<PolyElement>) -> Result<PresentedRing> {
        let mut rels = self.relations.clone();
        rels.extend(extra);
        PresentedRing::over(&self.ring, rels, DEFAULT_BASIS_BOUND)
    }

    /// Whether both presentations define the same quotient of the same
    /// polynomial ring.
    pub fn same_ideal(&self, other: &PresentedRing) -> bool {
        self.ring == other.ring
            && self.basis.iter().all(|g| other.is_zero(g))
            && other.basis.iter().all(|g| self.is_zero(g))
    }

    /// Additive order of the residue class of monomial `m` among standard
    /// monomials: `Some(0)` means free, `Some(c)` means ℤ/c, `None` means the
    /// monomial is zero modulo lower terms (c = 1).
    pub fn monomial_torsion(&self, m: &Monomial) -> Option<BigInt> {
        let mut g = BigInt::zero();
        for b in &self.basis {
            let (lm, lc) = b.leading_term().expect("basis elements are nonzero");
            if lm.divides(m) {
                g = g.gcd(&lc.to_integer());
            }
        }
        if g == BigInt::from(1) {
            None
        } else {
            Some(g)
        }
    }
}

impl fmt::Display for PresentedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
        write!(f, "ℤ[{}]/({})", self.ring.variables().join(","), rels.join(", "))
    }
}

fn leading(f: &PolyElement) -> (Monomial, BigInt) {
    let (m, c) = f.leading_term().expect("nonzero polynomial");
    (m.clone(), c.to_integer())
}

fn normalize_sign(f: PolyElement) -> PolyElement {
    match f.leading_term() {
        Some((_, c)) if c.is_negative() => -f,
        _ => f,
    }
}

/// Full Euclidean reduction of `f` by `basis`.
fn reduce_by(f: &PolyElement, basis: &[PolyElement]) -> PolyElement {
    let leads: Vec<(Monomial, BigInt)> = basis.iter().map(leading).collect();
    let mut rest = f.clone();
    let mut done = PolyElement::zero(f.ring());
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.to_integer())) {
        let pick = leads
            .iter()
            .enumerate()
            .filter(|(_, (lm, _))| lm.divides(&m))
            .min_by(|(_, (_, a)), (_, (_, b))| a.abs().cmp(&b.abs()));
        let mut remainder = c.clone();
        if let Some((i, (lm, lc))) = pick {
            let q = c.div_floor(&lc.abs()) * lc.signum();
            if !q.is_zero() {
                let shift = m.quotient(lm);
                rest = &rest - &basis[i].mul_monomial(&shift, &BigRational::from_integer(q));
            }
            remainder = rest.coefficient(&m).to_integer();
        }
        if !remainder.is_zero() {
            let t = PolyElement::monomial(f.ring(), m.clone(), BigRational::from_integer(remainder));
            done = &done + &t;
            rest = &rest - &t;
        }
    }
    done
}

fn s_polynomial(f: &PolyElement, g: &PolyElement) -> PolyElement {
    let (mf, cf) = leading(f);
    let (mg, cg) = leading(g);
    let l = mf.lcm(&mg);
    let lc = cf.lcm(&cg);
    let a = BigRational::from_integer(&lc / &cf);
    let b = BigRational::from_integer(&lc / &cg);
    &f.mul_monomial(&l.quotient(&mf), &a) - &g.mul_monomial(&l.quotient(&mg), &b)
}

fn g_polynomial(f: &PolyElement, g: &PolyElement) -> PolyElement {
    let (mf, cf) = leading(f);
    let (mg, cg) = leading(g);
    let l = mf.lcm(&mg);
    let e = cf.extended_gcd(&cg);
    &f.mul_monomial(&l.quotient(&mf), &BigRational::from_integer(e.x))
        + &g.mul_monomial(&l.quotient(&mg), &BigRational::from_integer(e.y))
}

/// Computes a reduced strong Gröbner basis over ℤ of the ideal generated by
/// `relations`, in degrevlex order.
pub(crate) fn groebner_completion(relations: &[PolyElement], bound: usize) -> Result<Vec<PolyElement>> {
    let mut basis: Vec<PolyElement> = Vec::new();
    for r in relations {
        let red = reduce_by(r, &basis);
        if !red.is_zero() {
            basis.push(normalize_sign(red));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (fi, fj) = (basis[i].clone(), basis[j].clone());
        for h in [s_polynomial(&fi, &fj), g_polynomial(&fi, &fj)] {
            let red = reduce_by(&h, &basis);
            if red.is_zero() {
                continue;
            }
            basis.push(normalize_sign(red));
            if basis.len() > bound {
                return Err(Error::BasisSizeExceeded { bound });
            }
            let k = basis.len() - 1;
            for i2 in 0..k {
                pairs.push((i2, k));
            }
        }
    }
    Ok(interreduce(basis))
}

fn interreduce(mut basis: Vec<PolyElement>) -> Vec<PolyElement> {
    // Drop elements whose leading term is a multiple of another's.
    let mut changed = true;
    while changed {
        changed = false;
        'outer: for i in 0..basis.len() {
            let (mi, ci) = leading(&basis[i]);
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let (mj, cj) = leading(&basis[j]);
                let dominated = mj.divides(&mi) && ci.is_multiple_of(&cj);
                let tie = mj == mi && ci == cj && j < i;
                if (dominated && !(mj == mi && ci == cj)) || tie {
                    basis.remove(i);
                    changed = true;
                    break 'outer;
                }
            }
        }
    }
    // Tail-reduce each element against the others.
    let n = basis.len();
    for i in 0..n {
        let (m, c) = leading(&basis[i]);
        let others: Vec<PolyElement> = basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let head = PolyElement::monomial(basis[i].ring(), m.clone(), BigRational::from_integer(c));
        let tail = &basis[i] - &head;
        basis[i] = &head + &reduce_by(&tail, &others);
    }
    basis.sort_by(|a, b| leading(a).0.cmp(&leading(b).0).then(leading(a).1.cmp(&leading(b).1)));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    fn tyu() -> Arc<PolyRing> {
        PolyRing::integers(&["t", "y", "u"])
    }

    fn tambara_relations(r: &Arc<PolyRing>) -> Vec<PolyElement> {
        vec![
            PolyElement::from_int_terms(r, &[(1, &[2, 0, 0]), (-2, &[1, 0, 0])]),
            PolyElement::from_int_terms(r, &[(1, &[1, 1, 0]), (-2, &[0, 1, 0])]),
        ]
    }

    #[test]
    fn ty_reduces_to_2y() {
        let r = tyu();
        let pr = PresentedRing::over(&r, tambara_relations(&r), DEFAULT_BASIS_BOUND).unwrap();
        let t = pr.generator("t").unwrap();
        let y = pr.generator("y").unwrap();
        assert_eq!(pr.reduce(&(&t * &y)), y.scale_int(2));
    }

    #[test]
    fn no_relations_is_identity() {
        let pr = PresentedRing::new(&["a", "b"], vec![]).unwrap();
        let a = pr.generator("a").unwrap();
        let f = &a.pow(3) + &pr.generator("b").unwrap();
        assert_eq!(pr.reduce(&f), f);
    }

    #[test]
    fn t_cubed_is_4t() {
        // Hand rewriting t^2 -> 2t: t^3 = t*t^2 -> 2t^2 -> 4t.
        let r = PolyRing::integers(&["t"]);
        let rel = PolyElement::from_int_terms(&r, &[(1, &[2]), (-2, &[1])]);
        let pr = PresentedRing::over(&r, vec![rel], DEFAULT_BASIS_BOUND).unwrap();
        let t = pr.generator("t").unwrap();
        assert_eq!(pr.reduce(&t.pow(3)), t.scale_int(4));
    }

    #[test]
    fn constant_relation_reduces_coefficients() {
        let r = PolyRing::integers(&["u"]);
        let pr = PresentedRing::over(&r, vec![PolyElement::constant(&r, 2)], DEFAULT_BASIS_BOUND).unwrap();
        let u = pr.generator("u").unwrap();
        assert_eq!(pr.reduce(&u.scale_int(5)), u);
        assert_eq!(pr.reduce(&u.scale_int(-1)), u);
        assert!(pr.is_zero(&u.scale_int(6)));
        assert_eq!(pr.monomial_torsion(&Monomial::new(vec![3])), Some(BigInt::from(2)));
    }

    #[test]
    fn mixed_coefficient_ideal_needs_g_polynomials() {
        // (2x, 3x) = (x); the G-polynomial of the pair recovers x itself.
        let r = PolyRing::integers(&["x"]);
        let x = PolyElement::var(&r, 0);
        let pr = PresentedRing::over(&r, vec![x.scale_int(2), x.scale_int(3)], DEFAULT_BASIS_BOUND).unwrap();
        assert_eq!(pr.basis(), &[x.clone()]);
        assert!(pr.is_zero(&x));
    }

    #[test]
    fn strong_basis_mixed() {
        // (4, 2x+2): contains 2x^2 + ... check a known member and a non-member.
        let r = PolyRing::integers(&["x"]);
        let x = PolyElement::var(&r, 0);
        let one = PolyElement::one(&r);
        let g = &x.scale_int(2) + &one.scale_int(2);
        let pr = PresentedRing::over(&r, vec![one.scale_int(4), g.clone()], DEFAULT_BASIS_BOUND).unwrap();
        // (x - 1) * (2x + 2) = 2x^2 - 2 is in the ideal.
        assert!(pr.is_zero(&(&(&x - &one) * &g)));
        assert!(!pr.is_zero(&one.scale_int(2)));
        assert!(pr.is_zero(&(&x.pow(2).scale_int(2) + &one.scale_int(2))));
    }

    #[test]
    fn basis_bound_is_enforced() {
        let r = PolyRing::integers(&["x", "y"]);
        let rels = vec![
            PolyElement::from_int_terms(&r, &[(1, &[3, 0]), (-1, &[0, 1])]),
            PolyElement::from_int_terms(&r, &[(1, &[1, 2]), (-1, &[1, 0])]),
            PolyElement::from_int_terms(&r, &[(2, &[2, 1]), (3, &[0, 0])]),
        ];
        assert!(matches!(
            PresentedRing::over(&r, rels, 1),
            Err(Error::BasisSizeExceeded { bound: 1 })
        ));
    }

    #[test]
    fn same_ideal_detects_equal_presentations() {
        let r = PolyRing::integers(&["t"]);
        let t = PolyElement::var(&r, 0);
        let a = PresentedRing::over(&r, vec![&t.pow(2) - &t.scale_int(2)], 10).unwrap();
        let b = PresentedRing::over(&r, vec![(&t.pow(2) - &t.scale_int(2)).scale(&rat(-1)), &t.pow(3) - &t.scale_int(4)], 10).unwrap();
        assert!(a.same_ideal(&b));
    }
}
