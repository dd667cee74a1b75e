use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use thh_algebra::exact::PolyElement;
use thh_algebra::norm::{norm_linear_mod_transfer, BurnsideElement, EquivariantTensorPower};

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Product of finite `C_n`-sets, extended bilinearly from orbits.
fn gset_product(x: &BurnsideElement, y: &BurnsideElement) -> BurnsideElement {
    let n = x.n();
    let mut out = BurnsideElement::zero(n).unwrap();
    for (a, ca) in x.divisors().iter().zip(x.coefficients()) {
        for (b, cb) in y.divisors().iter().zip(y.coefficients()) {
            let g = a.gcd(b);
            let count = BigInt::from(n * g / (a * b)) * ca * cb;
            out = out.add(&BurnsideElement::orbit(n, g).unwrap().scale(&count)).unwrap();
        }
    }
    out
}

fn element(n: u64, seed: &[i64]) -> BurnsideElement {
    let d = divisors(n).len();
    BurnsideElement::from_ints(n, &seed[..d]).unwrap()
}

fn seeds() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn marks_are_injective(n in 1u64..=16, s in seeds()) {
        let x = element(n, &s);
        prop_assert_eq!(BurnsideElement::from_marks(n, x.marks()).unwrap(), x.clone());
        prop_assert_eq!(x.is_zero(), s[..divisors(n).len()].iter().all(|&c| c == 0));
    }

    #[test]
    fn marks_are_multiplicative(n in 1u64..=16, s in seeds(), t in seeds()) {
        let (x, y) = (element(n, &s), element(n, &t));
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(&xy, &gset_product(&x, &y));
        for ((m, a), b) in xy.marks().iter().zip(x.marks()).zip(y.marks()) {
            prop_assert_eq!(m, &(a * b));
        }
    }

    #[test]
    fn frobenius_reciprocity(n in 1u64..=16, k in 0usize..6, s in seeds(), t in seeds()) {
        let divs = divisors(n);
        let m = divs[k % divs.len()];
        let x = element(n, &s);
        let y = element(m, &t);
        let lhs = x.restrict(m).unwrap().mul(&y).unwrap().induce(n).unwrap();
        prop_assert_eq!(lhs, x.mul(&y.induce(n).unwrap()).unwrap());
        prop_assert_eq!(x.restrict(m).unwrap().restrict(1).unwrap(), x.restrict(1).unwrap());
    }
}

#[test]
fn invariant_bases_match_orbit_counts() {
    for (k, p) in [(1, 2), (1, 3), (2, 2), (1, 5), (2, 3)] {
        let names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let t = EquivariantTensorPower::new(&refs, p, 4).unwrap();
        for d in 0..=4 {
            assert!(t.verify_invariant_basis(d), "k={k} p={p} d={d}");
            assert_eq!(t.orbit_sum_basis(d).len(), t.burnside_orbit_count(d));
        }
    }
}

#[test]
fn norm_is_additive_modulo_transfers() {
    for p in [2, 3] {
        let t = EquivariantTensorPower::new(&["x", "y"], p, 2 * p as u32).unwrap();
        let base = t.base_ring().clone();
        let (x, y) = (PolyElement::var(&base, 0), PolyElement::var(&base, 1));
        let one = PolyElement::one(&base);
        for (f, h) in [(&x, &y), (&(&x + &one), &y.scale_int(2)), (&one, &one)] {
            assert!(norm_linear_mod_transfer(&t, f, h).unwrap(), "p={p}");
        }
    }
}
