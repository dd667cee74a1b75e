use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient rings that carry actual arithmetic: ℤ, ℤ/m and ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarRing {
    Integers,
    IntegersMod(BigInt),
    Rationals,
}

impl ScalarRing {
    pub fn integers_mod(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::InvalidRing(format!("ℤ/{m} requires modulus ≥ 2")));
        }
        Ok(ScalarRing::IntegersMod(m))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            ScalarRing::IntegersMod(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            ScalarRing::Integers => false,
            ScalarRing::Rationals => true,
            ScalarRing::IntegersMod(m) => is_prime(m),
        }
    }

    /// Canonical representative of `c` in this ring.
    ///
    /// Panics if a non-integral rational is pushed into ℤ or ℤ/m: every
    /// caller only produces integral values for those rings.
    pub fn normalize(&self, c: BigRational) -> BigRational {
        match self {
            ScalarRing::Rationals => c,
            ScalarRing::Integers => {
                assert!(c.is_integer(), "non-integral coefficient {c} in ℤ");
                c
            }
            ScalarRing::IntegersMod(m) => {
                assert!(c.is_integer(), "non-integral coefficient {c} in ℤ/{m}");
                BigRational::from_integer(c.to_integer().mod_floor(m))
            }
        }
    }

    pub fn normalize_int(&self, c: BigInt) -> BigInt {
        match self {
            ScalarRing::IntegersMod(m) => c.mod_floor(m),
            _ => c,
        }
    }

    /// Whether the canonical image of ℤ in `self` maps onward into `target`.
    pub fn maps_into(&self, target: &ScalarRing) -> bool {
        match (self, target) {
            (ScalarRing::Integers, _) => true,
            (ScalarRing::Rationals, ScalarRing::Rationals) => true,
            (ScalarRing::IntegersMod(m), ScalarRing::IntegersMod(n)) => m.is_multiple_of(n),
            _ => false,
        }
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarRing::Integers => write!(f, "ℤ"),
            ScalarRing::Rationals => write!(f, "ℚ"),
            ScalarRing::IntegersMod(m) => write!(f, "ℤ/{m}"),
        }
    }
}

/// A commutative base ring: ℤ, ℤ/m, ℚ, or a polynomial ring over another
/// base ring in a list of named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    IntegersMod(BigInt),
    Rationals,
    Polynomial {
        base: Box<BaseRing>,
        variables: Vec<String>,
    },
}

impl BaseRing {
    pub fn integers_mod(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        ScalarRing::integers_mod(m.clone())?;
        Ok(BaseRing::IntegersMod(m))
    }

    /// `base[variables]`. Variable names must be distinct from each other
    /// and from every variable of `base`.
    pub fn polynomial(base: BaseRing, variables: &[&str]) -> Result<Self> {
        let mut seen = base.variables();
        for v in variables {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if seen.iter().any(|s| s == v) {
                return Err(Error::InvalidRing(format!("variable {v} shadows an existing variable")));
            }
            seen.push(v.to_string());
        }
        if let BaseRing::IntegersMod(m) = &base {
            ScalarRing::integers_mod(m.clone())?;
        }
        Ok(BaseRing::Polynomial {
            base: Box::new(base),
            variables: variables.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn scalars(&self) -> ScalarRing {
        match self {
            BaseRing::Integers => ScalarRing::Integers,
            BaseRing::IntegersMod(m) => ScalarRing::IntegersMod(m.clone()),
            BaseRing::Rationals => ScalarRing::Rationals,
            BaseRing::Polynomial { base, .. } => base.scalars(),
        }
    }

    /// All variables, innermost ring first.
    pub fn variables(&self) -> Vec<String> {
        match self {
            BaseRing::Polynomial { base, variables } => {
                let mut v = base.variables();
                v.extend(variables.iter().cloned());
                v
            }
            _ => Vec::new(),
        }
    }

    pub fn is_scalar(&self) -> bool {
        !matches!(self, BaseRing::Polynomial { .. })
    }
}

impl From<ScalarRing> for BaseRing {
    fn from(s: ScalarRing) -> Self {
        match s {
            ScalarRing::Integers => BaseRing::Integers,
            ScalarRing::IntegersMod(m) => BaseRing::IntegersMod(m),
            ScalarRing::Rationals => BaseRing::Rationals,
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Polynomial { base, variables } => write!(f, "{base}[{}]", variables.join(",")),
            other => write!(f, "{}", other.scalars()),
        }
    }
}

/// Deterministic primality test by trial division; moduli in this crate are small.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return true;
        }
        if small % 2 == 0 {
            return false;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                return false;
            }
            d += 2;
        }
        return true;
    }
    let two = BigInt::from(2);
    if n.is_even() {
        return false;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += &two;
    }
    true
}

pub(crate) fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_must_be_at_least_two() {
        assert!(BaseRing::integers_mod(1).is_err());
        assert!(BaseRing::integers_mod(0).is_err());
        assert!(BaseRing::integers_mod(2).is_ok());
    }

    #[test]
    fn polynomial_rejects_shadowing() {
        let zx = BaseRing::polynomial(BaseRing::Integers, &["x"]).unwrap();
        assert!(BaseRing::polynomial(zx.clone(), &["x"]).is_err());
        let zxy = BaseRing::polynomial(zx, &["y"]).unwrap();
        assert_eq!(zxy.variables(), vec!["x".to_string(), "y".to_string()]);
        assert!(BaseRing::polynomial(BaseRing::Integers, &["a", "a"]).is_err());
    }

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|n| is_prime(&BigInt::from(*n))).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn normalize_mod() {
        let r = ScalarRing::integers_mod(4).unwrap();
        assert_eq!(r.normalize(rat(-1)), rat(3));
        assert!(!r.is_field());
        assert!(ScalarRing::integers_mod(7).unwrap().is_field());
    }
}
