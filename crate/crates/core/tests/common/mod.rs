#![allow(dead_code)]

use num_bigint::BigInt;
use thh_algebra::exact::ScalarRing;
use thh_algebra::hochschild::{FiniteRankAlgebra, Vector};

pub fn zmod(m: u64) -> ScalarRing {
    ScalarRing::integers_mod(m).unwrap()
}

fn basis_vector(i: usize, c: i64) -> Vector {
    vec![(i, BigInt::from(c))]
}

/// Commutative algebras of rank at most 3 used throughout the tests.
pub fn commutative_algebras() -> Vec<FiniteRankAlgebra> {
    let z = ScalarRing::Integers;
    vec![
        FiniteRankAlgebra::truncated_polynomial(z.clone(), 1).unwrap(),
        FiniteRankAlgebra::truncated_polynomial(zmod(4), 1).unwrap(),
        FiniteRankAlgebra::truncated_polynomial(ScalarRing::Rationals, 1).unwrap(),
        FiniteRankAlgebra::dual_numbers(z.clone()).unwrap(),
        FiniteRankAlgebra::dual_numbers(zmod(4)).unwrap(),
        FiniteRankAlgebra::dual_numbers(zmod(3)).unwrap(),
        FiniteRankAlgebra::dual_numbers(ScalarRing::Rationals).unwrap(),
        FiniteRankAlgebra::cyclic_group_ring(z.clone(), 2).unwrap(),
        FiniteRankAlgebra::cyclic_group_ring(zmod(2), 2).unwrap(),
        FiniteRankAlgebra::cyclic_group_ring(z.clone(), 3).unwrap(),
        FiniteRankAlgebra::product_ring(z.clone(), 2).unwrap(),
        FiniteRankAlgebra::product_ring(z.clone(), 3).unwrap(),
        FiniteRankAlgebra::truncated_polynomial(z.clone(), 3).unwrap(),
        FiniteRankAlgebra::truncated_polynomial(zmod(2), 3).unwrap(),
    ]
}

/// Algebras of rank at most 2 together with automorphisms of order 1, 2 or 3.
pub fn twisted_algebras() -> Vec<FiniteRankAlgebra> {
    let z = ScalarRing::Integers;
    let mut out = Vec::new();
    for r in commutative_algebras().into_iter().filter(|r| r.rank() <= 2) {
        let id = (0..r.rank()).map(|i| basis_vector(i, 1)).collect();
        out.push(r.with_automorphism(id, 1).unwrap());
    }
    let scale_eps = |base: ScalarRing, c: i64, order: usize| {
        FiniteRankAlgebra::dual_numbers(base).unwrap().with_automorphism(vec![basis_vector(0, 1), basis_vector(1, c)], order).unwrap()
    };
    out.push(scale_eps(z.clone(), -1, 2));
    out.push(scale_eps(zmod(4), 3, 2));
    out.push(scale_eps(zmod(7), 2, 3));
    out.push(scale_eps(zmod(7), 4, 3));
    out.push(scale_eps(zmod(7), 6, 2));
    let swap = vec![basis_vector(1, 1), basis_vector(0, 1)];
    out.push(FiniteRankAlgebra::product_ring(z.clone(), 2).unwrap().with_automorphism(swap.clone(), 2).unwrap());
    out.push(FiniteRankAlgebra::product_ring(zmod(7), 2).unwrap().with_automorphism(swap, 2).unwrap());
    let sign = vec![basis_vector(0, 1), basis_vector(1, -1)];
    out.push(FiniteRankAlgebra::cyclic_group_ring(z.clone(), 2).unwrap().with_automorphism(sign.clone(), 2).unwrap());
    out.push(FiniteRankAlgebra::cyclic_group_ring(zmod(7), 2).unwrap().with_automorphism(sign, 2).unwrap());
    out
}

/// Rank-≤2 algebras used for the subdivision and Adams grids.
pub fn small_algebras() -> Vec<FiniteRankAlgebra> {
    commutative_algebras().into_iter().filter(|r| r.rank() <= 2).collect()
}
