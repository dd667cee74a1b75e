use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_prime, PolyElement, PolyRing};
use crate::witt::{ghost, universal_tables, WittVector};

/// Largest group order accepted by the Burnside routines.
pub const BURNSIDE_MAX_ORDER: u64 = 1 << 20;

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// An element of the Burnside ring `A(C_n)` in the basis `[C_n/C_d]`, `d | n`
/// in increasing order.
#[derive(Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    n: u64,
    divisors: Vec<u64>,
    coeffs: Vec<BigInt>,
    marks: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn new(n: u64, coeffs: Vec<BigInt>) -> Result<Self> {
        if n == 0 || n > BURNSIDE_MAX_ORDER {
            return Err(Error::BudgetExceeded(format!("group order {n} outside 1..={BURNSIDE_MAX_ORDER}")));
        }
        let divisors = divisors(n);
        if coeffs.len() != divisors.len() {
            return Err(Error::DimensionMismatch(format!("A(C{n}) has rank {}", divisors.len())));
        }
        let marks = divisors
            .iter()
            .map(|&e| {
                divisors
                    .iter()
                    .zip(&coeffs)
                    .filter(|(d, _)| *d % e == 0)
                    .map(|(d, c)| c * BigInt::from(n / d))
                    .sum()
            })
            .collect();
        Ok(BurnsideElement { n, divisors, coeffs, marks })
    }

    pub fn zero(n: u64) -> Result<Self> {
        Self::new(n, vec![BigInt::zero(); divisors(n).len()])
    }

    /// `[C_n/C_n]`.
    pub fn one(n: u64) -> Result<Self> {
        Self::orbit(n, n)
    }

    /// `[C_n/C_d]`.
    pub fn orbit(n: u64, d: u64) -> Result<Self> {
        if n == 0 || n % d != 0 {
            return Err(Error::InvalidArgument(format!("{d} does not divide {n}")));
        }
        let coeffs = divisors(n).iter().map(|&e| if e == d { BigInt::one() } else { BigInt::zero() }).collect();
        Self::new(n, coeffs)
    }

    pub fn from_ints(n: u64, coeffs: &[i64]) -> Result<Self> {
        Self::new(n, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Inverts the marks homomorphism, which is upper triangular in the divisor order.
    pub fn from_marks(n: u64, marks: &[BigInt]) -> Result<Self> {
        let divs = divisors(n);
        if marks.len() != divs.len() {
            return Err(Error::DimensionMismatch(format!("A(C{n}) has {} marks", divs.len())));
        }
        let mut coeffs = vec![BigInt::zero(); divs.len()];
        for (idx, &e) in divs.iter().enumerate().rev() {
            let known: BigInt = divs
                .iter()
                .enumerate()
                .filter(|(j, d)| *j > idx && *d % e == 0)
                .map(|(j, d)| &coeffs[j] * BigInt::from(n / d))
                .sum();
            let rest = &marks[idx] - known;
            let (q, r) = rest.div_rem(&BigInt::from(n / e));
            if !r.is_zero() {
                return Err(Error::InvalidArgument(format!("marks are not those of an element of A(C{n})")));
            }
            coeffs[idx] = q;
        }
        Self::new(n, coeffs)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `|X^{C_e}|` for each `e | n`, in the divisor order.
    pub fn marks(&self) -> &[BigInt] {
        &self.marks
    }

    pub fn is_zero(&self) -> bool {
        self.marks.iter().all(Zero::is_zero)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch(format!("A(C{}) vs A(C{})", self.n, other.n)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Self::new(self.n, self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.n, self.coeffs.iter().map(|c| -c).collect()).expect("same shape")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.n, self.coeffs.iter().map(|x| x * c).collect()).expect("same shape")
    }

    /// Product through pointwise multiplication of marks.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let marks: Vec<BigInt> = self.marks.iter().zip(&other.marks).map(|(a, b)| a * b).collect();
        Self::from_marks(self.n, &marks)
    }

    /// Restriction to `C_m ⊂ C_n`: `[C_n/C_d] ↦ (n·gcd(m,d)/(d·m)) [C_m/C_{gcd(m,d)}]`.
    pub fn restrict(&self, m: u64) -> Result<Self> {
        if self.n % m != 0 {
            return Err(Error::InvalidArgument(format!("{m} does not divide {}", self.n)));
        }
        let mut out = Self::zero(m)?;
        for (d, c) in self.divisors.iter().zip(&self.coeffs) {
            let g = m.gcd(d);
            let count = BigInt::from(self.n / d * g / m);
            out = out.add(&Self::orbit(m, g)?.scale(&(c * count)))?;
        }
        Ok(out)
    }

    /// Induction from `C_m` to `C_n`: `[C_m/C_e] ↦ [C_n/C_e]`.
    pub fn induce(&self, n: u64) -> Result<Self> {
        if n % self.n != 0 {
            return Err(Error::InvalidArgument(format!("{} does not divide {n}", self.n)));
        }
        let mut out = Self::zero(n)?;
        for (e, c) in self.divisors.iter().zip(&self.coeffs) {
            out = out.add(&Self::orbit(n, *e)?.scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .divisors
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| if c.is_one() { format!("[C{}/C{d}]", self.n) } else { format!("{c}[C{}/C{d}]", self.n) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `Δ^j f(0)` for `j = 0, …, deg f`; `f` is integer valued exactly when all are integers.
fn forward_differences(f: &PolyElement) -> Result<Vec<BigRational>> {
    let ring = f.ring();
    let deg = f.total_degree().unwrap_or(0) as usize;
    let values: Vec<BigRational> = (0..=deg)
        .map(|a| Ok(f.substitute(&[PolyElement::constant(ring, a as i64)], ring)?.constant_term()))
        .collect::<Result<_>>()?;
    let mut row = values;
    let mut out = Vec::with_capacity(deg + 1);
    while !row.is_empty() {
        out.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(out)
}

/// Compares `W₂(ℤ)` (ghost coordinates `(w₀, w₁)`) with `A(C_p)` (marks at `C_p`
/// and at `e`) along `(a₀, a₁) ↦ a₀·1 + ((a₀^p − a₀)/p + a₁)·[C_p/e]`.
///
/// Checks, symbolically in `a₀, a₁`: `(a₀^p − a₀)/p` is integer valued, the
/// marks of the image are the ghost components, ghost components add and multiply
/// pointwise, and the marks of basis products in `A(C_p)` agree with the product
/// of the underlying `C_p`-sets. Both images are then exactly the pairs with
/// `m₂ ≡ m₁ mod p`.
pub fn witt_burnside_compare(p: u64) -> Result<bool> {
    if !is_prime(&BigInt::from(p)) || p > 13 {
        return Err(Error::InvalidArgument(format!("{p} is not a prime ≤ 13")));
    }
    let q = PolyRing::new(crate::exact::ScalarRing::Rationals, &["a0"]);
    let a0 = PolyElement::var(&q, 0);
    let fermat = (&a0.pow(p) - &a0).scale(&BigRational::new(BigInt::one(), BigInt::from(p)));
    if !forward_differences(&fermat)?.iter().all(|c| c.is_integer()) {
        return Ok(false);
    }

    let ring = PolyRing::new(crate::exact::ScalarRing::Rationals, &["a0", "a1"]);
    let (b0, b1) = (PolyElement::var(&ring, 0), PolyElement::var(&ring, 1));
    let ct = &(&b0.pow(p) - &b0).scale(&BigRational::new(BigInt::one(), BigInt::from(p))) + &b1;
    // marks at C_p and at e of a0·[C_p/C_p] + ct·[C_p/e]
    let marks = [b0.clone(), &b0 + &ct.scale_int(p as i64)];
    let w = WittVector::generic(p, 2, &PolyRing::integers(&["a0", "a1"]), 0)?;
    let gh: Vec<PolyElement> = ghost(&w).iter().map(|g| g.map_into(&ring)).collect::<Result<_>>()?;
    if gh[0] != marks[0] || gh[1] != marks[1] {
        return Ok(false);
    }
    if !universal_tables(p, 2)?.verify_ghost_identities() {
        return Ok(false);
    }

    let t = BurnsideElement::orbit(p, 1)?;
    let one = BurnsideElement::one(p)?;
    // C_p/e × C_p/e is p free orbits
    if t.mul(&t)? != t.scale(&BigInt::from(p)) || one.mul(&t)? != t || one.mul(&one)? != one {
        return Ok(false);
    }
    let congruent = |m: &[BigInt]| (&m[1] - &m[0]).mod_floor(&BigInt::from(p)).is_zero();
    Ok(congruent(one.marks()) && congruent(t.marks()) && one.marks()[0].is_positive())
}
