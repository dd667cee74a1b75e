use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Column-sparse integer matrix. Column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<BTreeMap<usize, BigInt>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![BTreeMap::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_map(n, n, |j| vec![(j, BigInt::one())])
    }

    /// Builds the matrix column by column; repeated row indices are summed.
    pub fn from_map<F, I>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize) -> I,
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            for (i, v) in f(j) {
                assert!(i < rows, "row index {i} out of range {rows}");
                m.add_entry(i, j, v);
            }
        }
        m
    }

    /// Matrix of a function between finite sets, `j ↦ e_{f(j)}`.
    pub fn from_function(rows: usize, cols: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::from_map(rows, cols, |j| [(f(j), BigInt::one())])
    }

    pub fn from_dense(m: &IntMatrix) -> Self {
        Self::from_map(m.rows(), m.cols(), |j| {
            (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect::<Vec<_>>()
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, BigInt> {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.cols[j].get(&i).cloned().unwrap_or_default()
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.cols[j];
        let e = col.entry(i).or_insert_with(BigInt::zero);
        *e += v;
        if e.is_zero() {
            col.remove(&i);
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols() && self.cols.iter().enumerate().all(|(j, c)| c.len() == 1 && c.get(&j).is_some_and(One::is_one))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "compose {}x{} after {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols());
        for (j, col) in other.cols.iter().enumerate() {
            for (k, a) in col {
                for (i, b) in &self.cols[*k] {
                    out.add_entry(*i, j, a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> SparseMatrix {
        assert_eq!(self.rows, self.cols(), "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = base.compose(&acc).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base).unwrap();
            }
        }
        acc
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols());
        let mut out = vec![BigInt::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] += a * x;
            }
        }
        out
    }

    pub fn checked_add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.shape_check(other)?;
        let mut out = self.clone();
        for (j, col) in other.cols.iter().enumerate() {
            for (i, v) in col {
                out.add_entry(*i, j, v.clone());
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.checked_add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> SparseMatrix {
        Self::from_map(self.rows, self.cols(), |j| self.cols[j].iter().map(|(i, v)| (*i, v * c)).collect::<Vec<_>>())
    }

    /// Entries reduced to `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> SparseMatrix {
        Self::from_map(self.rows, self.cols(), |j| {
            self.cols[j].iter().map(|(i, v)| (*i, v.mod_floor(m))).collect::<Vec<_>>()
        })
    }

    /// Equality of the induced maps with entries read modulo `m` (or exactly, if `None`).
    pub fn eq_mod(&self, other: &SparseMatrix, m: Option<&BigInt>) -> bool {
        match m {
            None => self == other,
            Some(m) => self.rows == other.rows && self.cols() == other.cols() && self.reduce_mod(m) == other.reduce_mod(m),
        }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                d.set(*i, j, v.clone());
            }
        }
        d
    }

    /// `P⁻¹ · self · Q` for basis permutations given as index maps: row `i` moves to
    /// `row_perm[i]` and column `j` to `col_perm[j]`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols());
        let mut out = Self::zeros(self.rows, self.cols());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out.add_entry(row_perm[*i], col_perm[j], v.clone());
            }
        }
        out
    }

    fn shape_check(&self, other: &SparseMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix {}x{} {{", self.rows, self.cols())?;
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                write!(f, " ({i},{j})={v}")?;
            }
        }
        write!(f, " }}")
    }
}
