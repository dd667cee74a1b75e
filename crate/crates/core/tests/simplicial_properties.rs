use proptest::prelude::*;
use thh_algebra::exact::{AbelianGroupShape, ScalarRing};
use thh_algebra::simplicial::{
    check_lambda_relations, check_simplicial_identities, covering_map_q, covering_maps_compatible,
    edgewise_subdivide_sset, moore_complex, normalized_complex, simplicial_circle, subdivision_compatible,
    subdivision_group_generator, FiniteSimplicialSet, SimplicialModule,
};

fn permutation_order(p: &[usize]) -> usize {
    let mut q: Vec<usize> = (0..p.len()).collect();
    for n in 1.. {
        q = q.iter().map(|&x| p[x]).collect();
        if q.iter().enumerate().all(|(i, &x)| i == x) {
            return n;
        }
    }
    unreachable!()
}

#[test]
fn circle_structure() {
    let s1 = simplicial_circle(6).unwrap();
    assert!(check_lambda_relations(&s1).passed());
    for k in 0..=6 {
        assert_eq!(s1.sizes()[k], k + 1);
        assert_eq!(s1.nondegenerate(k).len(), usize::from(k <= 1));
    }
}

#[test]
fn subdivision_of_the_circle() {
    for r in 1..=3 {
        for top in 0..=2 {
            let s1 = simplicial_circle(r * (top + 1)).unwrap();
            let sd = edgewise_subdivide_sset(&s1, r, top).unwrap();
            assert!(check_simplicial_identities(&sd).passed());
            for k in 0..=top {
                assert_eq!(sd.sizes()[k], r * (k + 1));
                let g = subdivision_group_generator(&s1, r, k).unwrap();
                assert_eq!(permutation_order(&g), r, "r={r} k={k}");
            }
        }
    }
    let s1 = simplicial_circle(4).unwrap();
    assert_eq!(edgewise_subdivide_sset(&s1, 1, 4).unwrap().without_lambda(), s1.without_lambda());
    assert!(edgewise_subdivide_sset(&s1, 3, 1).is_err());
}

#[test]
fn homology_of_the_circle() {
    for base in [ScalarRing::Integers, ScalarRing::integers_mod(4).unwrap()] {
        let m = SimplicialModule::free_on(&simplicial_circle(4).unwrap(), base.clone()).unwrap();
        let moore = moore_complex(&m).unwrap();
        let norm = normalized_complex(&m).unwrap();
        let line = |b: &ScalarRing| match b.modulus() {
            Some(n) => AbelianGroupShape::new(0, &[n.clone()]),
            None => AbelianGroupShape::free(1),
        };
        for k in 0..4 {
            let want = if k <= 1 { line(&base) } else { AbelianGroupShape::zero() };
            assert_eq!(moore.homology(k).unwrap().shape, want, "Moore H_{k}");
            assert_eq!(norm.homology(k).unwrap().shape, want, "normalized H_{k}");
        }
        assert!(norm.ranks()[2..].iter().all(|&r| r == 0));
    }
}

#[test]
fn constant_module_homology() {
    let m = SimplicialModule::constant(ScalarRing::Integers, 3, 4).unwrap();
    let c = moore_complex(&m).unwrap();
    assert_eq!(c.homology(0).unwrap().shape, AbelianGroupShape::free(3));
    for k in 1..4 {
        assert!(c.homology(k).unwrap().shape.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn iterated_subdivision(r in 1usize..=3, s in 1usize..=3, top in 0usize..=2) {
        let x = simplicial_circle(r * s * (top + 1)).unwrap();
        prop_assert!(subdivision_compatible(&x, r, s, top).unwrap());
        prop_assert!(covering_maps_compatible(r, s, top).unwrap());
    }

    #[test]
    fn covering_maps_are_surjective_simplicial_maps(r in 1usize..=4, top in 1usize..=3) {
        let q = covering_map_q(r, top).unwrap();
        let src = edgewise_subdivide_sset(&simplicial_circle(r * (top + 1)).unwrap(), r, top).unwrap();
        let tgt = simplicial_circle(top).unwrap();
        prop_assert!(q.commutes_with_structure(&src, &tgt));
        for (k, f) in q.levels.iter().enumerate() {
            let mut hit = vec![false; k + 1];
            for &v in f {
                hit[v] = true;
            }
            prop_assert!(hit.iter().all(|&h| h));
        }
    }

    #[test]
    fn constant_sets_are_simplicial(size in 1usize..=5, top in 0usize..=4) {
        let x = FiniteSimplicialSet::constant(size, top).unwrap();
        prop_assert!(check_simplicial_identities(&x).passed());
        let m = SimplicialModule::free_on(&x, ScalarRing::Integers).unwrap();
        let n = normalized_complex(&m).unwrap();
        prop_assert_eq!(n.ranks()[0], size);
        prop_assert!(n.ranks()[1..].iter().all(|&r| r == 0));
    }
}
