mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use thh_algebra::adams::{
    adams_map, adams_on_burnside, adams_on_h0, verify_adams_composition, verify_adams_equivariance,
};
use thh_algebra::exact::{AbelianGroupShape, PolyElement, IntMatrix, PolyRing, PresentedRing, ScalarRing, SparseMatrix};
use thh_algebra::hochschild::{
    cyclic_bar, free_module_shape, hochschild_complex, hochschild_homology, kahler_differentials, twisted_cyclic_bar,
    verify_sdcyc_identification, FiniteRankAlgebra,
};
use thh_algebra::norm::{
    build_tambara_model, verify_binomial_transfer, verify_phi_norm_identity, witt_burnside_compare, BurnsideElement,
    EquivariantTensorPower,
};
use thh_algebra::simplicial::{check_lambda_relations, moore_complex, normalized_complex, ChainComplex, SimplicialModule};
use thh_algebra::witt::{
    additive_order_of_one, frobenius, universal_tables, verschiebung, witt_mul, witt_rigidity_check, WittVector,
};
use thh_algebra::Result;

type Outcome = Result<std::result::Result<(), String>>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if let Err(e) = ensure($cond, || format!($($msg)+)) {
            return Ok(Err(e));
        }
    };
}

fn naive_norm() -> Outcome {
    let t = EquivariantTensorPower::new(&["x"], 2, 6)?;
    let (x, gx) = (t.var(0, 0), t.var(1, 0));
    let two = PolyElement::constant(t.ring(), 2);
    check!(t.transfer(&x)? == &x + &gx, "tr(x) ≠ x + gx");
    check!(t.transfer_ideal_matches(&[two.clone(), &x + &gx])?, "transfer ideal ≠ (2, x + gx) through degree 6");

    let phi = t.geometric_fixed_points()?;
    let expected = PresentedRing::new(&["Nx"], vec![PolyElement::constant(&PolyRing::integers(&["Nx"]), 2)])?;
    check!(phi.quotient.same_ideal(&expected), "quotient is not ℤ/2[Nx]");
    check!(phi.verify()?, "quotient map is not a ring surjection killing transfers");
    for d in 0..=6u32 {
        let want = if d % 2 == 0 { AbelianGroupShape::from_ints(0, &[2]) } else { AbelianGroupShape::zero() };
        check!(phi.per_degree[d as usize] == want, "degree {d}: invariants/tr = {:?}", phi.per_degree[d as usize]);
    }
    let nx = PolyElement::var(phi.quotient.ring(), 0);
    check!(t.norm_diagonal(&PolyElement::var(t.base_ring(), 0))? == &x * &gx, "N(x) ≠ x·gx");
    check!(phi.project(&(&x * &gx))? == nx, "x·gx does not map to the generator");
    for m in 0..=3u64 {
        let xm = PolyElement::var(t.base_ring(), 0).pow(m);
        check!(phi.quotient.equal(&phi.norm_then_project(&xm)?, &nx.pow(m)), "x^{m} does not map to (x·gx)^{m}");
    }
    Ok(Ok(()))
}

fn tambara() -> Outcome {
    let model = build_tambara_model(5)?;
    let report = model.verify_axioms()?;
    check!(report.passed(), "axiom failed: {:?}", report.first_failure());
    check!(verify_phi_norm_identity(&model)?, "Φ∘N identity fails");
    let t = model.top_generator("t");
    let n = model.norm(&PolyElement::constant(model.base(), -1))?;
    check!(model.top().equal(&n, &(&t - &PolyElement::one(model.top().ring()))), "N(−1) = {n}");
    Ok(Ok(()))
}

fn binomial() -> Outcome {
    for p in [2, 3, 5] {
        let r = verify_binomial_transfer(p, p as u32)?;
        check!(r.holds, "p = {p}: {r:?}");
    }
    Ok(Ok(()))
}

fn witt_suite() -> Outcome {
    for p in [2, 3] {
        for n in 1..=3 {
            check!(universal_tables(p, n)?.verify_ghost_identities(), "ghost identities p={p} n={n}");
            let ring = PolyRing::from_names(ScalarRing::Integers, (0..n).map(|i| format!("x{i}")).collect());
            let w = WittVector::generic(p, n, &ring, 0)?;
            let fv = frobenius(&verschiebung(&w))?;
            check!(fv == witt_mul(&WittVector::from_natural(p, n, &ring, p)?, &w)?, "FV ≠ p for p={p} n={n}");
            if n >= 2 {
                let empty = PolyRing::integers(&[]);
                let mut c = vec![0i64; n];
                c[1] = 1;
                let v1 = WittVector::from_ints(p, &empty, &c)?;
                let pv1 = witt_mul(&WittVector::from_natural(p, n, &empty, p)?, &v1)?;
                check!(witt_mul(&v1, &v1)? == pv1, "V(1)² ≠ p·V(1) for p={p} n={n}");
            }
        }
    }
    check!(additive_order_of_one(2, 3, 8)? == Some(8), "W₃(𝔽₂) is not cyclic of order 8");
    for p in [2, 3, 5] {
        for n in 1..=4 {
            check!(witt_rigidity_check(p, n)?, "rigidity fails for p={p} n={n}");
        }
    }
    Ok(Ok(()))
}

fn lambda_relations() -> Outcome {
    for r in common::twisted_algebras() {
        let l = twisted_cyclic_bar(&r, 3)?;
        let report = check_lambda_relations(&l);
        check!(report.passed(), "{} (n={}): {:?}", r.name(), l.n(), report.first_failure);
    }
    Ok(Ok(()))
}

fn sdcyc() -> Outcome {
    for r in common::small_algebras() {
        for n in 1..=3 {
            for top in 0..=2 {
                check!(verify_sdcyc_identification(&r, n, top)?, "{} n={n} D={top}", r.name());
            }
        }
    }
    Ok(Ok(()))
}

fn adams_suite() -> Outcome {
    let algebras = common::small_algebras();
    for r in &algebras {
        let psi1 = adams_map(r, 1, 2)?;
        check!(psi1.map.levels.iter().all(SparseMatrix::is_identity), "ψ¹ ≠ id on {}", r.name());
        for a in [2, 3] {
            for b in [2, 3] {
                for top in 0..=1 {
                    check!(verify_adams_composition(r, a, b, top)?, "ψ^{a}ψ^{b} ≠ ψ^{} on {} at D={top}", a * b, r.name());
                }
            }
        }
        for (a, n) in [(3, 2), (2, 3)] {
            check!(verify_adams_equivariance(r, a, n, 1)?, "equivariance (r,n)=({a},{n}) on {}", r.name());
        }
    }
    for r in common::commutative_algebras() {
        for a in 1..=3 {
            check!(adams_on_h0(&r, a)?.is_identity(), "ψ^{a} ≠ id on HH₀({})", r.name());
        }
    }
    for p in [2u64, 3] {
        for n in 1..=3u32 {
            for a in 1..=5u64 {
                if a % p == 0 {
                    continue;
                }
                let m = adams_on_burnside(p, n, a)?;
                check!(m == IntMatrix::identity(m.rows()), "ψ^{a} on A(C{}) is not the identity", p.pow(n));
            }
        }
    }
    Ok(Ok(()))
}

fn homology_below_top(c: &ChainComplex) -> Result<Vec<AbelianGroupShape>> {
    (0..c.top()).map(|k| Ok(c.homology(k)?.shape)).collect()
}

fn moore_matches_normalized(m: &SimplicialModule) -> Result<bool> {
    Ok(homology_below_top(&moore_complex(m)?)? == homology_below_top(&normalized_complex(m)?)?)
}

fn hochschild_oracle() -> Outcome {
    let z = ScalarRing::Integers;
    let named = [
        FiniteRankAlgebra::dual_numbers(z.clone())?,
        FiniteRankAlgebra::cyclic_group_ring(z.clone(), 2)?,
        FiniteRankAlgebra::dual_numbers(common::zmod(4))?,
    ];
    let hh1 = hochschild_homology(&named[0], 1, 3)?;
    check!(hh1 == AbelianGroupShape::from_ints(1, &[2]), "HH₁(ℤ[ε]/(ε²)) = {hh1:?}");
    for r in named.iter().chain(common::commutative_algebras().iter()) {
        let hh0 = hochschild_homology(r, 0, 2)?;
        check!(hh0 == free_module_shape(r.base(), r.rank()), "HH₀({}) = {hh0:?}", r.name());
        let hh1 = hochschild_homology(r, 1, 3)?;
        let omega = kahler_differentials(r)?;
        check!(hh1 == omega, "HH₁({}) = {hh1:?} but Ω¹ = {omega:?}", r.name());
    }
    for r in common::commutative_algebras() {
        check!(moore_matches_normalized(cyclic_bar(&r, 3)?.module())?, "Moore ≠ normalized on the bar of {}", r.name());
        let c = hochschild_complex(&r, 3)?;
        check!(c.top() == 3, "Hochschild complex of {} truncated wrongly", r.name());
    }
    for r in common::twisted_algebras() {
        check!(moore_matches_normalized(twisted_cyclic_bar(&r, 3)?.module())?, "Moore ≠ normalized on {}", r.name());
    }
    check!(moore_matches_normalized(&SimplicialModule::constant(z, 3, 4)?)?, "Moore ≠ normalized on a constant module");
    Ok(Ok(()))
}

fn burnside() -> Outcome {
    let one = BurnsideElement::one(2)?;
    let t = BurnsideElement::orbit(2, 1)?;
    check!(one.marks() == [BigInt::from(1), BigInt::from(1)], "marks(1) = {:?}", one.marks());
    check!(t.marks() == [BigInt::from(2), BigInt::from(0)], "marks(t) = {:?}", t.marks());
    check!(t.mul(&t)? == t.scale(&BigInt::from(2)), "t² ≠ 2t");
    // ℤ[t]/(t² − 2t) is free on 1, t, which map to the basis [C₂/C₂], [C₂/e]
    let ring = PolyRing::integers(&["t"]);
    let tt = PolyElement::var(&ring, 0);
    let presented = PresentedRing::over(&ring, vec![&tt.pow(2) - &tt.scale_int(2)], 64)?;
    let standard: Vec<u64> = (0..4u64).filter(|&d| presented.reduce(&tt.pow(d)) == tt.pow(d)).collect();
    check!(standard == [0, 1], "standard monomials of ℤ[t]/(t²−2t): {standard:?}");
    check!(presented.reduce(&tt.pow(3)) == tt.scale_int(4), "t³ ≠ 4t");
    check!(t.mul(&t)?.mul(&t)? == t.scale(&BigInt::from(4)), "[C₂/e]³ ≠ 4[C₂/e]");
    for p in [2, 3, 5, 7, 11, 13] {
        check!(witt_burnside_compare(p)?, "Witt–Burnside comparison fails at p={p}");
    }
    Ok(Ok(()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("naive norm of ℤ[x] for C₂: invariants/tr = ℤ/2[x·gx]", naive_norm),
        ("Tambara model for the C₂-norm of ℤ[x]", tambara),
        ("binomial expansion with transfers, p ∈ {2, 3, 5}", binomial),
        ("Witt vector suite", witt_suite),
        ("Λₙᵒᵖ relations of twisted cyclic bars", lambda_relations),
        ("subdivided cyclic bar as bar with twisted coefficients", sdcyc),
        ("Adams operations", adams_suite),
        ("Hochschild homology against Kähler differentials", hochschild_oracle),
        ("Burnside rings and the Witt comparison", burnside),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let status = match outcome {
            Ok(Ok(Ok(()))) => Ok(()),
            Ok(Ok(Err(msg))) => Err(msg),
            Ok(Err(e)) => Err(format!("error: {e}")),
            Err(_) => Err("panicked".to_string()),
        };
        let secs = start.elapsed().as_secs_f64();
        match status {
            Ok(()) => println!("PASS {}: {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {}: {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
