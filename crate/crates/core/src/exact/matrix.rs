use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A dense matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// `u * m * v == d` with `d` diagonal, each diagonal entry dividing the next,
/// and `u`, `v` unimodular. The inverses of `u` and `v` are tracked alongside.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*x));
            }
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn diagonal(entries: &[BigInt], rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn reduce_mod(&self, m: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.mod_floor(m)).collect() }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    /// Rank over ℚ (fraction-free elimination).
    pub fn rank_rational(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
            a.swap_rows(rank, p);
            for i in rank + 1..a.rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                let g = a.get(rank, c).clone();
                for j in c..a.cols {
                    let v = a.get(i, j) * &g - a.get(rank, j) * &f;
                    a.set(i, j, v);
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }

    /// Rank over 𝔽_p.
    pub fn rank_mod_prime(&self, p: &BigInt) -> usize {
        let p64 = p.to_u64().expect("prime fits in u64") as u128;
        let mut a: Vec<Vec<u128>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).mod_floor(p).to_u64().unwrap() as u128).collect())
            .collect();
        let inv = |x: u128| -> u128 {
            // Fermat inverse
            let mut r = 1u128;
            let mut b = x % p64;
            let mut e = p64 - 2;
            while e > 0 {
                if e & 1 == 1 {
                    r = r * b % p64;
                }
                b = b * b % p64;
                e >>= 1;
            }
            r
        };
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&i| a[i][c] != 0) else { continue };
            a.swap(rank, piv);
            let iv = inv(a[rank][c]);
            for j in c..self.cols {
                a[rank][j] = a[rank][j] * iv % p64;
            }
            for i in 0..self.rows {
                if i != rank && a[i][c] != 0 {
                    let f = a[i][c];
                    for j in c..self.cols {
                        a[i][j] = (a[i][j] + p64 * p64 - f * a[rank][j] % p64) % p64;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            if !v.is_zero() {
                self.data[target * self.cols + j] += v;
            }
        }
    }

    /// `col[target] += factor * col[source]`
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, source) * factor;
            if !v.is_zero() {
                self.data[i * self.cols + target] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c).clone();
            self.set(i, c, v);
        }
    }

    /// Smith normal form with transformation matrices.
    pub fn smith_normal_form(&self) -> SmithDecomposition {
        let (r, c) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = Self::identity(r);
        let mut u_inv = Self::identity(r);
        let mut v = Self::identity(c);
        let mut v_inv = Self::identity(c);

        macro_rules! row_add {
            ($t:expr, $s:expr, $f:expr) => {{
                let f: BigInt = $f;
                d.add_row($t, $s, &f);
                u.add_row($t, $s, &f);
                u_inv.add_col($s, $t, &(-&f));
            }};
        }
        macro_rules! col_add {
            ($t:expr, $s:expr, $f:expr) => {{
                let f: BigInt = $f;
                d.add_col($t, $s, &f);
                v.add_col($t, $s, &f);
                v_inv.add_row($s, $t, &(-&f));
            }};
        }
        macro_rules! row_swap {
            ($a:expr, $b:expr) => {{
                d.swap_rows($a, $b);
                u.swap_rows($a, $b);
                u_inv.swap_cols($a, $b);
            }};
        }
        macro_rules! col_swap {
            ($a:expr, $b:expr) => {{
                d.swap_cols($a, $b);
                v.swap_cols($a, $b);
                v_inv.swap_rows($a, $b);
            }};
        }

        for t in 0..r.min(c) {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = d.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            row_swap!(t, bi);
            col_swap!(t, bj);
            loop {
                let mut clean = true;
                for i in t + 1..r {
                    if !d.get(i, t).is_zero() {
                        let q = d.get(i, t).div_floor(d.get(t, t));
                        row_add!(i, t, -q);
                        if !d.get(i, t).is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..c {
                    if !d.get(t, j).is_zero() {
                        let q = d.get(t, j).div_floor(d.get(t, t));
                        col_add!(j, t, -q);
                        if !d.get(t, j).is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    // move the smallest remainder in row/column t to the pivot
                    let mut best = (t, t);
                    for i in t + 1..r {
                        let x = d.get(i, t);
                        if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..c {
                        let x = d.get(t, j);
                        if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                            best = (t, j);
                        }
                    }
                    if best.0 != t {
                        row_swap!(t, best.0);
                    }
                    if best.1 != t {
                        col_swap!(t, best.1);
                    }
                    continue;
                }
                // divisibility of the trailing block by the pivot
                let piv = d.get(t, t).clone();
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&piv)));
                match bad {
                    Some(i) => row_add!(t, i, BigInt::one()),
                    None => break,
                }
            }
            if d.get(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
                u_inv.negate_col(t);
            }
        }
        SmithDecomposition { d, u, v, u_inv, v_inv }
    }

    /// Integer solution `x` of `self * x = b`, if one exists.
    pub fn solve_integer(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let snf = self.smith_normal_form();
        self.solve_with(&snf, b)
    }

    pub(crate) fn solve_with(&self, snf: &SmithDecomposition, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows);
        let y = snf.u.mul_vec(b);
        let factors = snf.invariant_factors();
        let mut z = vec![BigInt::zero(); self.cols];
        for (i, yi) in y.iter().enumerate() {
            if i < factors.len() {
                if !yi.is_multiple_of(&factors[i]) {
                    return None;
                }
                z[i] = yi / &factors[i];
            } else if !yi.is_zero() {
                return None;
            }
        }
        Some(snf.v.mul_vec(&z))
    }

    /// Whether the column lattices of `self` and `other` coincide.
    pub fn same_column_lattice(&self, other: &IntMatrix) -> bool {
        self.column_lattice_contains(other) && other.column_lattice_contains(self)
    }

    /// Whether every column of `other` lies in the ℤ-span of the columns of `self`.
    pub fn column_lattice_contains(&self, other: &IntMatrix) -> bool {
        assert_eq!(self.rows, other.rows);
        if other.cols == 0 {
            return true;
        }
        if self.cols == 0 {
            return other.is_zero();
        }
        let snf = self.smith_normal_form();
        (0..other.cols).all(|j| self.solve_with(&snf, &other.column(j)).is_some())
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) -> SmithDecomposition {
        let s = m.smith_normal_form();
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(m.cols()));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn snf_2468() {
        // Invariant factors: gcd of entries is 2, |det| / 2 = 8 / 2 = 4.
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = check_snf(&m);
        assert_eq!(s.d, IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]));
    }

    #[test]
    fn snf_identity_and_zero() {
        let i = IntMatrix::identity(3);
        assert_eq!(check_snf(&i).d, i);
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(check_snf(&z).d, z);
    }

    #[test]
    fn snf_rectangular() {
        let m = IntMatrix::from_rows(&[vec![3, 6, 9], vec![6, 6, 6]]);
        let s = check_snf(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(3), BigInt::from(6)]);
    }

    #[test]
    fn determinant_and_ranks() {
        let m = IntMatrix::from_rows(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(18));
        let sing = IntMatrix::from_rows(&[vec![2, 4], vec![1, 2]]);
        assert_eq!(sing.rank_rational(), 1);
        let m2 = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m2.rank_mod_prime(&BigInt::from(2)), 1);
        assert_eq!(m2.rank_mod_prime(&BigInt::from(5)), 2);
    }

    #[test]
    fn integer_solve() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.solve_integer(&[BigInt::from(4), BigInt::from(9)]), Some(vec![BigInt::from(2), BigInt::from(3)]));
        assert_eq!(m.solve_integer(&[BigInt::from(1), BigInt::from(0)]), None);
    }
}
