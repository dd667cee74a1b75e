use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{cokernel_shape, AbelianGroupShape, IntMatrix, ScalarRing};
use crate::simplicial::{moore_complex, ChainComplex};

use super::algebra::{collect, FiniteRankAlgebra};
use super::bar::cyclic_bar;

/// Moore complex of the cyclic bar construction through level `top`.
pub fn hochschild_complex(r: &FiniteRankAlgebra, top: usize) -> Result<ChainComplex> {
    moore_complex(cyclic_bar(r, top)?.module())
}

/// `HH_i(R)` computed from the bar construction truncated at `top ≥ i + 1`.
pub fn hochschild_homology(r: &FiniteRankAlgebra, i: usize, top: usize) -> Result<AbelianGroupShape> {
    if top < i + 1 {
        return Err(Error::InsufficientTruncation(format!("HH_{i} needs the complex through level {}", i + 1)));
    }
    Ok(hochschild_complex(r, top)?.homology(i)?.shape)
}

/// `HH_0, …, HH_{top−1}`.
pub fn hochschild_homology_groups(r: &FiniteRankAlgebra, top: usize) -> Result<Vec<AbelianGroupShape>> {
    hochschild_complex(r, top)?.reliable_homology()
}

/// The underlying group of a free module of the given rank over the base.
pub fn free_module_shape(base: &ScalarRing, rank: usize) -> AbelianGroupShape {
    match base {
        ScalarRing::IntegersMod(m) => AbelianGroupShape::new(0, &vec![m.clone(); rank]),
        _ => AbelianGroupShape::free(rank),
    }
}

/// Presentation of `Ω¹_{R/base}` as an abelian group: generators `e_a · de_j`
/// (index `a · d + j`), one relation column per `e_a · (d(e_i e_j) − e_i de_j − e_j de_i)`.
pub fn kahler_presentation(r: &FiniteRankAlgebra) -> Result<IntMatrix> {
    if !r.is_commutative() {
        return Err(Error::InvalidArgument(format!("{} is not commutative", r.name())));
    }
    let d = r.rank();
    let e = |i: usize| vec![(i, BigInt::one())];
    // x · de_j for x ∈ R, as a vector on the generators
    let times_d = |x: &Vec<(usize, BigInt)>, j: usize| x.iter().map(|(a, c)| (a * d + j, c.clone())).collect::<Vec<_>>();
    let mut columns = Vec::new();
    for a in 0..d {
        for i in 0..d {
            for j in i..d {
                let mut terms = Vec::new();
                for (k, c) in r.product(i, j) {
                    terms.push((a * d + k, c.clone()));
                }
                let ai = r.mul(&e(a), &e(i));
                let aj = r.mul(&e(a), &e(j));
                terms.extend(times_d(&ai, j).into_iter().map(|(g, x)| (g, -x)));
                terms.extend(times_d(&aj, i).into_iter().map(|(g, x)| (g, -x)));
                let rel = collect(r.base(), terms);
                let mut col = vec![BigInt::from(0); d * d];
                for (g, x) in rel {
                    col[g] = x;
                }
                columns.push(col);
            }
        }
    }
    if let Some(m) = r.base().modulus() {
        for g in 0..d * d {
            let mut col = vec![BigInt::from(0); d * d];
            col[g] = m.clone();
            columns.push(col);
        }
    }
    Ok(IntMatrix::from_columns(d * d, &columns))
}

/// `Ω¹_{R/base}` by presentation and Smith reduction. Over ℚ only the dimension
/// is meaningful and is returned as `free_rank`.
pub fn kahler_differentials(r: &FiniteRankAlgebra) -> Result<AbelianGroupShape> {
    let rel = kahler_presentation(r)?;
    Ok(match r.base() {
        ScalarRing::Rationals => AbelianGroupShape::free(rel.rows() - rel.rank_rational()),
        _ => cokernel_shape(&rel),
    })
}
