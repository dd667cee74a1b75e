use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{ScalarRing, SparseMatrix};

/// A sparse vector in a free module: `(basis index, coefficient)` pairs.
pub type Vector = Vec<(usize, BigInt)>;

/// Combines repeated indices, reduces in `base` and drops zeros.
pub(crate) fn collect(base: &ScalarRing, terms: impl IntoIterator<Item = (usize, BigInt)>) -> Vector {
    let mut acc: std::collections::BTreeMap<usize, BigInt> = std::collections::BTreeMap::new();
    for (i, c) in terms {
        *acc.entry(i).or_insert_with(BigInt::zero) += c;
    }
    acc.into_iter().map(|(i, c)| (i, base.normalize_int(c))).filter(|(_, c)| !c.is_zero()).collect()
}

/// An automorphism `g` with `g^n = id`, given by the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub images: Vec<Vector>,
    pub order: usize,
}

/// An associative unital algebra, free of rank `d` over ℤ, ℤ/m or ℚ, given by
/// integer structure constants `e_i e_j = Σ c_{ij}^k e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRankAlgebra {
    name: String,
    base: ScalarRing,
    basis_names: Vec<String>,
    products: Vec<Vector>,
    unit: Vector,
    commutative: bool,
    automorphism: Option<Automorphism>,
}

impl FiniteRankAlgebra {
    /// `products[i * d + j]` is `e_i · e_j`. Checks associativity, the unit laws, the
    /// commutativity flag, and (if given) that `g` is an algebra map with `g^n = id`.
    pub fn new(
        name: &str,
        base: ScalarRing,
        basis_names: Vec<String>,
        products: Vec<Vector>,
        unit: Vector,
        commutative: bool,
        automorphism: Option<Automorphism>,
    ) -> Result<Self> {
        let d = basis_names.len();
        if d == 0 {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        if products.len() != d * d {
            return Err(Error::DimensionMismatch(format!("need {} products, got {}", d * d, products.len())));
        }
        let in_range = |v: &Vector| v.iter().all(|(i, _)| *i < d);
        if !products.iter().all(in_range) || !in_range(&unit) {
            return Err(Error::DimensionMismatch("basis index out of range".into()));
        }
        let products = products.into_iter().map(|v| collect(&base, v)).collect();
        let unit = collect(&base, unit);
        let automorphism = match automorphism {
            Some(a) => {
                if a.images.len() != d || !a.images.iter().all(in_range) || a.order == 0 {
                    return Err(Error::DimensionMismatch("automorphism has the wrong shape".into()));
                }
                Some(Automorphism { images: a.images.into_iter().map(|v| collect(&base, v)).collect(), order: a.order })
            }
            None => None,
        };
        let alg = FiniteRankAlgebra { name: name.to_string(), base, basis_names, products, unit, commutative, automorphism };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let d = self.rank();
        let e = |i: usize| vec![(i, BigInt::one())];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.mul(&self.mul(&e(i), &e(j)), &e(k));
                    let rhs = self.mul(&e(i), &self.mul(&e(j), &e(k)));
                    if lhs != rhs {
                        return Err(Error::StructureViolation(format!("associativity fails on e{i} e{j} e{k}")));
                    }
                }
            }
            if self.mul(&self.unit, &e(i)) != e(i) || self.mul(&e(i), &self.unit) != e(i) {
                return Err(Error::StructureViolation(format!("unit law fails on e{i}")));
            }
        }
        if self.commutative {
            for i in 0..d {
                for j in 0..i {
                    if self.products[i * d + j] != self.products[j * d + i] {
                        return Err(Error::StructureViolation(format!("declared commutative but e{i} e{j} ≠ e{j} e{i}")));
                    }
                }
            }
        }
        if let Some(a) = &self.automorphism {
            for i in 0..d {
                for j in 0..d {
                    let lhs = self.apply_g(&self.mul(&e(i), &e(j)));
                    let rhs = self.mul(&self.apply_g(&e(i)), &self.apply_g(&e(j)));
                    if lhs != rhs {
                        return Err(Error::StructureViolation(format!("g is not multiplicative on e{i} e{j}")));
                    }
                }
            }
            if self.apply_g(&self.unit) != self.unit {
                return Err(Error::StructureViolation("g does not fix the unit".into()));
            }
            let g = self.g_matrix();
            if !g.pow(a.order).reduce_mod_opt(&self.base).is_identity() {
                return Err(Error::StructureViolation(format!("g^{} ≠ id", a.order)));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &ScalarRing {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn automorphism(&self) -> Option<&Automorphism> {
        self.automorphism.as_ref()
    }

    /// `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i * self.rank() + j]
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut terms = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                for (k, c) in self.product(*i, *j) {
                    terms.push((*k, x * y * c));
                }
            }
        }
        collect(&self.base, terms)
    }

    /// `g(v)`, or `v` when no automorphism is declared.
    pub fn apply_g(&self, v: &Vector) -> Vector {
        match &self.automorphism {
            None => v.clone(),
            Some(a) => collect(
                &self.base,
                v.iter().flat_map(|(i, x)| a.images[*i].iter().map(move |(k, c)| (*k, x * c))),
            ),
        }
    }

    /// `g` as a matrix, identity if none is declared.
    pub fn g_matrix(&self) -> SparseMatrix {
        let d = self.rank();
        SparseMatrix::from_map(d, d, |j| self.apply_g(&vec![(j, BigInt::one())]))
    }

    /// The same algebra with a different automorphism.
    pub fn with_automorphism(&self, images: Vec<Vector>, order: usize) -> Result<Self> {
        Self::new(
            &self.name,
            self.base.clone(),
            self.basis_names.clone(),
            self.products.clone(),
            self.unit.clone(),
            self.commutative,
            Some(Automorphism { images, order }),
        )
    }

    pub fn without_automorphism(&self) -> Self {
        FiniteRankAlgebra { automorphism: None, ..self.clone() }
    }

    /// `ℤ[ε]/(ε²)` (over `base`), basis `1, ε`.
    pub fn dual_numbers(base: ScalarRing) -> Result<Self> {
        let one = |i: usize| vec![(i, BigInt::one())];
        Self::new(
            &format!("{base}[ε]/(ε²)"),
            base,
            vec!["1".into(), "ε".into()],
            vec![one(0), one(1), one(1), vec![]],
            one(0),
            true,
            None,
        )
    }

    /// `base[x]/(x^k)`, basis `1, x, …, x^{k−1}`.
    pub fn truncated_polynomial(base: ScalarRing, k: usize) -> Result<Self> {
        let names = (0..k).map(|i| if i == 0 { "1".to_string() } else { format!("x^{i}") }).collect();
        let products = (0..k * k)
            .map(|ij| {
                let s = ij / k + ij % k;
                if s < k {
                    vec![(s, BigInt::one())]
                } else {
                    vec![]
                }
            })
            .collect();
        Self::new(&format!("{base}[x]/(x^{k})"), base, names, products, vec![(0, BigInt::one())], true, None)
    }

    /// The group ring of `C_n`, basis `1, g, …, g^{n−1}`.
    pub fn cyclic_group_ring(base: ScalarRing, n: usize) -> Result<Self> {
        let names = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g^{i}") }).collect();
        let products = (0..n * n).map(|ij| vec![((ij / n + ij % n) % n, BigInt::one())]).collect();
        Self::new(&format!("{base}[C{n}]"), base, names, products, vec![(0, BigInt::one())], true, None)
    }

    /// `base^k` with coordinatewise multiplication (orthogonal idempotents).
    pub fn product_ring(base: ScalarRing, k: usize) -> Result<Self> {
        let names = (0..k).map(|i| format!("e{i}")).collect();
        let products = (0..k * k).map(|ij| if ij / k == ij % k { vec![(ij / k, BigInt::one())] } else { vec![] }).collect();
        let unit = (0..k).map(|i| (i, BigInt::one())).collect();
        Self::new(&format!("{base}^{k}"), base, names, products, unit, true, None)
    }

    /// Upper triangular 2×2 matrices, basis `e11, e12, e22`.
    pub fn upper_triangular(base: ScalarRing) -> Result<Self> {
        let one = |i: usize| vec![(i, BigInt::one())];
        // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22
        let products = vec![one(0), one(1), vec![], vec![], vec![], one(1), vec![], vec![], one(2)];
        Self::new(
            &format!("T2({base})"),
            base,
            vec!["e11".into(), "e12".into(), "e22".into()],
            products,
            vec![(0, BigInt::one()), (2, BigInt::one())],
            false,
            None,
        )
    }

    /// `R^{⊗n}` with basis indexed little-endian by component, and `g` the cyclic
    /// shift moving component `j` to `j+1 mod n`.
    pub fn tensor_power(r: &FiniteRankAlgebra, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("tensor power must be positive".into()));
        }
        let d = r.rank();
        let basis = TensorBasis::new(d, n);
        let size = basis.size();
        let names = (0..size)
            .map(|idx| basis.decode(idx).iter().map(|&i| r.basis_names[i].clone()).collect::<Vec<_>>().join("⊗"))
            .collect();
        let mut products = Vec::with_capacity(size * size);
        for a in 0..size {
            let da = basis.decode(a);
            for b in 0..size {
                let db = basis.decode(b);
                let factors: Vec<Vector> = (0..n).map(|j| r.product(da[j], db[j]).clone()).collect();
                products.push(tensor_product_of(&basis, &factors));
            }
        }
        let unit = tensor_product_of(&basis, &vec![r.unit.clone(); n]);
        let images = (0..size)
            .map(|idx| {
                let digits = basis.decode(idx);
                let shifted: Vec<usize> = (0..n).map(|j| digits[(j + n - 1) % n]).collect();
                vec![(basis.encode(&shifted), BigInt::one())]
            })
            .collect();
        let name = if n == 1 { r.name.clone() } else { format!("({})^⊗{n}", r.name) };
        Self::new(&name, r.base.clone(), names, products, unit, r.commutative, Some(Automorphism { images, order: n }))
    }
}

trait ReduceOpt {
    fn reduce_mod_opt(&self, base: &ScalarRing) -> SparseMatrix;
}

impl ReduceOpt for SparseMatrix {
    fn reduce_mod_opt(&self, base: &ScalarRing) -> SparseMatrix {
        match base.modulus() {
            Some(m) => self.reduce_mod(m),
            None => self.clone(),
        }
    }
}

impl fmt::Debug for FiniteRankAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRankAlgebra({}, rank {})", self.name, self.rank())
    }
}

impl fmt::Display for FiniteRankAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Little-endian indexing of the basis of `V^{⊗len}` for `V` of rank `d`:
/// position `j` carries weight `d^j`.
#[derive(Clone, Copy, Debug)]
pub struct TensorBasis {
    pub d: usize,
    pub len: usize,
}

impl TensorBasis {
    pub fn new(d: usize, len: usize) -> Self {
        TensorBasis { d, len }
    }

    pub fn size(&self) -> usize {
        self.d.pow(self.len as u32)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len);
        for _ in 0..self.len {
            out.push(idx % self.d);
            idx /= self.d;
        }
        out
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &x| acc * self.d + x)
    }
}

/// `v_0 ⊗ v_1 ⊗ ⋯` expanded in the tensor basis.
pub(crate) fn tensor_product_of(basis: &TensorBasis, factors: &[Vector]) -> Vector {
    let mut acc: Vec<(Vec<usize>, BigInt)> = vec![(Vec::new(), BigInt::one())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (digits, c) in &acc {
            for (i, x) in f {
                let mut d = digits.clone();
                d.push(*i);
                next.push((d, c * x));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(d, c)| (basis.encode(&d), c)).collect()
}

/// A bimodule over a [`FiniteRankAlgebra`]: `left[i][a] = e_i · m_a`, `right[i][a] = m_a · e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    rank: usize,
    left: Vec<Vec<Vector>>,
    right: Vec<Vec<Vector>>,
}

impl Bimodule {
    /// Checks both actions are associative, unital and commute with each other.
    pub fn new(r: &FiniteRankAlgebra, rank: usize, left: Vec<Vec<Vector>>, right: Vec<Vec<Vector>>) -> Result<Self> {
        let d = r.rank();
        if left.len() != d || right.len() != d || left.iter().chain(&right).any(|v| v.len() != rank) {
            return Err(Error::DimensionMismatch("action tables have the wrong shape".into()));
        }
        let base = r.base();
        let left = left.into_iter().map(|row| row.into_iter().map(|v| collect(base, v)).collect()).collect();
        let right = right.into_iter().map(|row| row.into_iter().map(|v| collect(base, v)).collect()).collect();
        let m = Bimodule { rank, left, right };
        let e = |i: usize| vec![(i, BigInt::one())];
        for a in 0..rank {
            if m.act_left(r, r.unit(), &e(a)) != e(a) || m.act_right(r, &e(a), r.unit()) != e(a) {
                return Err(Error::StructureViolation(format!("unit does not act trivially on m{a}")));
            }
            for i in 0..d {
                for j in 0..d {
                    let l1 = m.act_left(r, &e(i), &m.act_left(r, &e(j), &e(a)));
                    let l2 = m.act_left(r, r.product(i, j), &e(a));
                    let r1 = m.act_right(r, &m.act_right(r, &e(a), &e(i)), &e(j));
                    let r2 = m.act_right(r, &e(a), r.product(i, j));
                    let b1 = m.act_right(r, &m.act_left(r, &e(i), &e(a)), &e(j));
                    let b2 = m.act_left(r, &e(i), &m.act_right(r, &e(a), &e(j)));
                    if l1 != l2 || r1 != r2 || b1 != b2 {
                        return Err(Error::StructureViolation(format!("action axioms fail at e{i}, e{j}, m{a}")));
                    }
                }
            }
        }
        Ok(m)
    }

    /// `R` acting on itself on both sides.
    pub fn regular(r: &FiniteRankAlgebra) -> Result<Self> {
        let d = r.rank();
        let left = (0..d).map(|i| (0..d).map(|a| r.product(i, a).clone()).collect()).collect();
        let right = (0..d).map(|i| (0..d).map(|a| r.product(a, i).clone()).collect()).collect();
        Self::new(r, d, left, right)
    }

    /// `^gR`: right action regular, left action `r · m = g(r) m`.
    pub fn twisted(r: &FiniteRankAlgebra) -> Result<Self> {
        if r.automorphism().is_none() {
            return Err(Error::InvalidArgument("twisted bimodule needs an automorphism".into()));
        }
        let d = r.rank();
        let e = |i: usize| vec![(i, BigInt::one())];
        let left = (0..d).map(|i| (0..d).map(|a| r.mul(&r.apply_g(&e(i)), &e(a))).collect()).collect();
        let right = (0..d).map(|i| (0..d).map(|a| r.product(a, i).clone()).collect()).collect();
        Self::new(r, d, left, right)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn act_left(&self, r: &FiniteRankAlgebra, x: &Vector, m: &Vector) -> Vector {
        let mut terms = Vec::new();
        for (i, c) in x {
            for (a, y) in m {
                for (b, z) in &self.left[*i][*a] {
                    terms.push((*b, c * y * z));
                }
            }
        }
        collect(r.base(), terms)
    }

    pub fn act_right(&self, r: &FiniteRankAlgebra, m: &Vector, x: &Vector) -> Vector {
        let mut terms = Vec::new();
        for (a, y) in m {
            for (i, c) in x {
                for (b, z) in &self.right[*i][*a] {
                    terms.push((*b, c * y * z));
                }
            }
        }
        collect(r.base(), terms)
    }

    pub(crate) fn left_basis(&self, i: usize, a: usize) -> &Vector {
        &self.left[i][a]
    }

    pub(crate) fn right_basis(&self, i: usize, a: usize) -> &Vector {
        &self.right[i][a]
    }
}
