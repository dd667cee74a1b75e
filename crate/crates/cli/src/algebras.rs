//! Named algebras accepted on the command line.
//!
//! Syntax: `KIND[:PARAM]@BASE` with `BASE` one of `z`, `q`, `z/N`, e.g.
//! `dual@z`, `group:2@z/3`, `product:2@z`, `truncated:3@q`, `triangular@z`.

use num_bigint::BigInt;
use thh_algebra::exact::ScalarRing;
use thh_algebra::hochschild::FiniteRankAlgebra;

pub fn parse_base(s: &str) -> Result<ScalarRing, String> {
    match s {
        "z" | "Z" => Ok(ScalarRing::Integers),
        "q" | "Q" => Ok(ScalarRing::Rationals),
        _ => {
            let m = s
                .strip_prefix("z/")
                .or_else(|| s.strip_prefix("Z/"))
                .and_then(|m| m.parse::<u64>().ok())
                .ok_or_else(|| format!("unknown base ring `{s}` (expected z, q or z/N)"))?;
            ScalarRing::integers_mod(m).map_err(|e| e.to_string())
        }
    }
}

pub fn parse_algebra(spec: &str) -> Result<FiniteRankAlgebra, String> {
    let (kind, base) = spec.split_once('@').unwrap_or((spec, "z"));
    let base = parse_base(base)?;
    let (kind, param) = match kind.split_once(':') {
        Some((k, p)) => (k, Some(p.parse::<usize>().map_err(|_| format!("bad parameter in `{spec}`"))?)),
        None => (kind, None),
    };
    let need = |p: Option<usize>| p.filter(|&n| n >= 1).ok_or_else(|| format!("`{kind}` needs a positive parameter"));
    let built = match kind {
        "dual" => FiniteRankAlgebra::dual_numbers(base),
        "group" => FiniteRankAlgebra::cyclic_group_ring(base, need(param)?),
        "product" => FiniteRankAlgebra::product_ring(base, need(param)?),
        "truncated" => FiniteRankAlgebra::truncated_polynomial(base, need(param)?),
        "triangular" => FiniteRankAlgebra::upper_triangular(base),
        _ => return Err(format!("unknown algebra `{kind}`")),
    };
    built.map_err(|e| e.to_string())
}

/// Commutative algebras of rank at most 3.
pub fn default_algebras() -> Vec<FiniteRankAlgebra> {
    ["truncated:1@z", "dual@z", "dual@z/4", "dual@q", "group:2@z", "group:3@z", "product:2@z", "truncated:3@z"]
        .iter()
        .map(|s| parse_algebra(s).expect("built-in algebra"))
        .collect()
}

/// Rank-≤2 algebras with automorphisms of order 1, 2 and 3.
pub fn twisted_algebras() -> Vec<FiniteRankAlgebra> {
    let v = |i: usize, c: i64| vec![(i, BigInt::from(c))];
    let with = |spec: &str, images, order| parse_algebra(spec).unwrap().with_automorphism(images, order).unwrap();
    vec![
        with("dual@z", vec![v(0, 1), v(1, 1)], 1),
        with("dual@z", vec![v(0, 1), v(1, -1)], 2),
        with("dual@z/7", vec![v(0, 1), v(1, 2)], 3),
        with("group:2@z", vec![v(0, 1), v(1, -1)], 2),
        with("product:2@z", vec![v(1, 1), v(0, 1)], 2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_algebra("dual@z/4").unwrap().base(), &ScalarRing::integers_mod(4).unwrap());
        assert_eq!(parse_algebra("group:3").unwrap().rank(), 3);
        assert!(!parse_algebra("triangular@q").unwrap().is_commutative());
        assert!(parse_algebra("group@z").is_err());
        assert!(parse_algebra("dual@z/1").is_err());
        assert!(parse_algebra("frobnicate@z").is_err());
        assert_eq!(default_algebras().len(), 8);
        assert_eq!(twisted_algebras().len(), 5);
    }
}
