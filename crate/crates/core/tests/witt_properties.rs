use std::sync::Arc;

use proptest::prelude::*;
use thh_algebra::exact::{PolyElement, PolyRing, ScalarRing};
use thh_algebra::witt::*;

fn generic3(p: u64, n: usize) -> (Arc<PolyRing>, WittVector, WittVector, WittVector) {
    let names: Vec<String> = ['a', 'b', 'c'].iter().flat_map(|c| (0..n).map(move |i| format!("{c}{i}"))).collect();
    let ring = PolyRing::from_names(ScalarRing::Integers, names);
    let a = WittVector::generic(p, n, &ring, 0).unwrap();
    let b = WittVector::generic(p, n, &ring, n).unwrap();
    let c = WittVector::generic(p, n, &ring, 2 * n).unwrap();
    (ring, a, b, c)
}

#[test]
fn ghost_is_a_ring_map_symbolically() {
    for p in [2, 3] {
        for n in 1..=3 {
            let t = universal_tables(p, n).unwrap();
            assert!(t.verify_ghost_identities(), "p={p} n={n}");
        }
    }
}

#[test]
fn witt_ring_axioms_symbolically() {
    for p in [2, 3] {
        for n in 1..=3 {
            let (ring, a, b, c) = generic3(p, n);
            let one = WittVector::one(p, n, &ring).unwrap();
            let zero = WittVector::zero(p, n, &ring).unwrap();
            let add = |x: &WittVector, y: &WittVector| witt_add(x, y).unwrap();
            let mul = |x: &WittVector, y: &WittVector| witt_mul(x, y).unwrap();
            assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)), "add assoc p={p} n={n}");
            assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)), "mul assoc p={p} n={n}");
            assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)), "distrib p={p} n={n}");
            assert_eq!(add(&a, &b), add(&b, &a));
            assert_eq!(mul(&a, &b), mul(&b, &a));
            assert_eq!(mul(&a, &one), a);
            assert_eq!(add(&a, &zero), a);
        }
    }
}

#[test]
fn fv_is_multiplication_by_p() {
    for p in [2, 3] {
        for n in 1..=3 {
            let ring = PolyRing::from_names(ScalarRing::Integers, (0..n).map(|i| format!("x{i}")).collect());
            let w = WittVector::generic(p, n, &ring, 0).unwrap();
            let p1 = WittVector::from_natural(p, n, &ring, p).unwrap();
            let fv = frobenius(&verschiebung(&w)).unwrap();
            assert_eq!(fv, witt_mul(&p1, &w).unwrap(), "p={p} n={n}");
        }
    }
}

#[test]
fn fv_over_polynomial_coordinates() {
    // random-looking but fixed coordinates in ℤ[x]
    let ring = PolyRing::integers(&["x"]);
    let x = PolyElement::var(&ring, 0);
    let one = PolyElement::one(&ring);
    let w = WittVector::new(2, vec![&x + &one, x.pow(2).scale_int(3), &x - &one]).unwrap();
    let fv = frobenius(&verschiebung(&w)).unwrap();
    let two = WittVector::from_natural(2, 3, &ring, 2).unwrap();
    assert_eq!(fv, witt_mul(&two, &w).unwrap());
}

#[test]
fn v1_squared_is_p_v1() {
    for p in [2, 3, 5] {
        for n in 2..=3 {
            let ring = PolyRing::integers(&[]);
            let mut coords = vec![0i64; n];
            coords[1] = 1;
            let v1 = WittVector::from_ints(p, &ring, &coords).unwrap();
            let pv1 = witt_mul(&WittVector::from_natural(p, n, &ring, p).unwrap(), &v1).unwrap();
            assert_eq!(witt_mul(&v1, &v1).unwrap(), pv1, "p={p} n={n}");
        }
    }
}

#[test]
fn v_projection_formula() {
    for p in [2, 3] {
        for n in 2..=3 {
            let names: Vec<String> =
                (0..n - 1).map(|i| format!("a{i}")).chain((0..n).map(|i| format!("w{i}"))).collect();
            let ring = PolyRing::from_names(ScalarRing::Integers, names);
            let a = WittVector::generic(p, n - 1, &ring, 0).unwrap();
            let w = WittVector::generic(p, n, &ring, n - 1).unwrap();
            let lhs = witt_mul(&verschiebung(&a), &w).unwrap();
            let rhs = verschiebung(&witt_mul(&a, &frobenius(&w).unwrap()).unwrap());
            assert_eq!(lhs, rhs, "p={p} n={n}");
        }
    }
}

#[test]
fn ghost_shift_under_frobenius_and_verschiebung() {
    for p in [2, 3, 5] {
        let ring = PolyRing::integers(&["x0", "x1", "x2"]);
        let w = WittVector::generic(p, 3, &ring, 0).unwrap();
        let g = ghost(&w);
        assert_eq!(ghost(&frobenius(&w).unwrap())[..], g[1..]);
        let gv = ghost(&verschiebung(&w));
        assert!(gv[0].is_zero());
        for i in 1..4 {
            assert_eq!(gv[i], g[i - 1].scale_int(p as i64));
        }
    }
}

#[test]
fn prime_field_witt_groups_are_cyclic() {
    for (p, max_n) in [(2u64, 6usize), (3, 3), (5, 2), (7, 2)] {
        for n in 1..=max_n {
            let size = p.pow(n as u32);
            assert!(size <= 64);
            assert_eq!(additive_order_of_one(p, n, size).unwrap(), Some(size), "p={p} n={n}");
        }
    }
}

#[test]
fn rigidity_grid() {
    for p in [2, 3, 5] {
        for n in 1..=4 {
            assert!(witt_rigidity_check(p, n).unwrap(), "p={p} n={n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ghost_homomorphism_on_integers(c in prop::collection::vec(-5i64..=5, 6)) {
        let ring = PolyRing::integers(&[]);
        let u = WittVector::from_ints(3, &ring, &c[..3]).unwrap();
        let v = WittVector::from_ints(3, &ring, &c[3..]).unwrap();
        let gs = ghost(&witt_add(&u, &v).unwrap());
        let gm = ghost(&witt_mul(&u, &v).unwrap());
        let gu = ghost(&u);
        let gv = ghost(&v);
        for i in 0..3 {
            prop_assert_eq!(&gs[i], &(&gu[i] + &gv[i]));
            prop_assert_eq!(&gm[i], &(&gu[i] * &gv[i]));
        }
    }

    #[test]
    fn restriction_is_a_ring_map(c in prop::collection::vec(0i64..4, 6)) {
        let ring = PolyRing::new(ScalarRing::integers_mod(4).unwrap(), &[]);
        let u = WittVector::from_ints(2, &ring, &c[..3]).unwrap();
        let v = WittVector::from_ints(2, &ring, &c[3..]).unwrap();
        let r = |w: &WittVector| restrict(w).unwrap();
        prop_assert_eq!(r(&witt_add(&u, &v).unwrap()), witt_add(&r(&u), &r(&v)).unwrap());
        prop_assert_eq!(r(&witt_mul(&u, &v).unwrap()), witt_mul(&r(&u), &r(&v)).unwrap());
    }
}
