use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{cokernel_shape, is_prime, AbelianGroupShape, IntMatrix, Monomial, PolyElement, PolyRing, PresentedRing};

/// `R^{⊗p}` for `R = ℤ[x_1, …, x_k]`, realised as the polynomial ring in the
/// variables `x_{j,i}` (copy `j`, variable `i`, index `j·k + i`) with `C_p`
/// generated by `g : x_{j,i} ↦ x_{j+1,i}`. All computations are bounded by total
/// degree `bound`.
#[derive(Clone, Debug)]
pub struct EquivariantTensorPower {
    k: usize,
    p: usize,
    bound: u32,
    base: Arc<PolyRing>,
    ring: Arc<PolyRing>,
    rotation: Vec<usize>,
}

fn copy_name(name: &str, j: usize) -> String {
    match j {
        0 => name.to_string(),
        1 => format!("g{name}"),
        _ => format!("g{j}{name}"),
    }
}

fn int_coeff(c: &BigRational) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::InvalidRing(format!("coefficient {c} is not an integer")))
    }
}

impl EquivariantTensorPower {
    pub fn new(base_names: &[&str], p: usize, bound: u32) -> Result<Self> {
        if !is_prime(&BigInt::from(p)) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let k = base_names.len();
        let names = (0..p).flat_map(|j| base_names.iter().map(move |n| copy_name(n, j))).collect();
        let ring = PolyRing::from_names(crate::exact::ScalarRing::Integers, names);
        let rotation = (0..p * k).map(|v| ((v / k.max(1) + 1) % p) * k + v % k.max(1)).collect();
        Ok(EquivariantTensorPower { k, p, bound, base: PolyRing::integers(base_names), ring, rotation })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree_bound(&self) -> u32 {
        self.bound
    }

    /// `ℤ[x_1, …, x_k]`.
    pub fn base_ring(&self) -> &Arc<PolyRing> {
        &self.base
    }

    /// `ℤ[x_1, …, x_k]^{⊗p}`.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `x_{j,i}`.
    pub fn var(&self, j: usize, i: usize) -> PolyElement {
        PolyElement::var(&self.ring, j * self.k + i)
    }

    /// `f` placed in tensor factor `j`.
    pub fn embed(&self, f: &PolyElement, j: usize) -> Result<PolyElement> {
        let values: Vec<PolyElement> = (0..self.k).map(|i| self.var(j, i)).collect();
        f.substitute(&values, &self.ring)
    }

    pub fn g(&self, f: &PolyElement) -> PolyElement {
        f.permute_variables(&self.rotation)
    }

    pub fn g_pow(&self, f: &PolyElement, i: usize) -> PolyElement {
        (0..i % self.p).fold(f.clone(), |acc, _| self.g(&acc))
    }

    pub fn is_invariant(&self, f: &PolyElement) -> bool {
        self.g(f) == *f
    }

    fn check_degree(&self, f: &PolyElement, factor: u32) -> Result<()> {
        let d = f.total_degree().unwrap_or(0) * factor;
        if d > self.bound {
            return Err(Error::DegreeOverflow { degree: d, bound: self.bound });
        }
        Ok(())
    }

    /// `Σ_i gⁱ a`.
    pub fn transfer(&self, a: &PolyElement) -> Result<PolyElement> {
        if a.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{} is not in {}", a, self.ring)));
        }
        self.check_degree(a, 1)?;
        let mut acc = PolyElement::zero(&self.ring);
        let mut term = a.clone();
        for _ in 0..self.p {
            acc = &acc + &term;
            term = self.g(&term);
        }
        Ok(acc)
    }

    /// `a ⊗ ⋯ ⊗ a = a · g(a) ⋯ g^{p−1}(a)` for `a ∈ R`.
    pub fn norm_diagonal(&self, a: &PolyElement) -> Result<PolyElement> {
        if a.ring() != &self.base {
            return Err(Error::RingMismatch(format!("{} is not in {}", a, self.base)));
        }
        self.check_degree(a, self.p as u32)?;
        let mut acc = PolyElement::one(&self.ring);
        for j in 0..self.p {
            acc = &acc * &self.embed(a, j)?;
        }
        Ok(acc)
    }

    fn rotate(&self, m: &Monomial) -> Monomial {
        m.permute(&self.rotation)
    }

    pub fn orbit(&self, m: &Monomial) -> Vec<Monomial> {
        let mut out = BTreeSet::new();
        let mut cur = m.clone();
        for _ in 0..self.p {
            out.insert(cur.clone());
            cur = self.rotate(&cur);
        }
        out.into_iter().collect()
    }

    /// The smallest monomial of the orbit of `m`.
    pub fn orbit_representative(&self, m: &Monomial) -> Monomial {
        self.orbit(m).into_iter().next().expect("orbits are nonempty")
    }

    /// Representatives of the `C_p`-orbits of monomials of degree `d`, increasing.
    pub fn orbit_sum_basis(&self, d: u32) -> Vec<Monomial> {
        let reps: BTreeSet<Monomial> =
            Monomial::all_of_degree(self.ring.nvars(), d).iter().map(|m| self.orbit_representative(m)).collect();
        reps.into_iter().collect()
    }

    pub fn orbit_sum(&self, rep: &Monomial) -> PolyElement {
        PolyElement::from_terms(&self.ring, self.orbit(rep).into_iter().map(|m| (m, BigRational::one())))
    }

    /// Number of orbits of degree-`d` monomials from Burnside's lemma, counting
    /// the monomials fixed by each `gⁱ` directly.
    pub fn burnside_orbit_count(&self, d: u32) -> usize {
        let monomials = Monomial::all_of_degree(self.ring.nvars(), d);
        let mut fixed_total = 0;
        for i in 0..self.p {
            fixed_total += monomials
                .iter()
                .filter(|m| (0..i).fold((*m).clone(), |acc, _| self.rotate(&acc)) == **m)
                .count();
        }
        fixed_total / self.p
    }

    /// Orbit sums span the invariants of degree `d`, one per orbit.
    pub fn verify_invariant_basis(&self, d: u32) -> bool {
        let basis = self.orbit_sum_basis(d);
        basis.len() == self.burnside_orbit_count(d) && basis.iter().all(|r| self.is_invariant(&self.orbit_sum(r)))
    }

    /// Coordinates of the degree-`d` part of an invariant `f` in the orbit-sum basis.
    pub fn orbit_coordinates(&self, f: &PolyElement, d: u32) -> Result<Vec<BigInt>> {
        if !self.is_invariant(f) {
            return Err(Error::InvalidArgument(format!("{f} is not invariant")));
        }
        self.orbit_sum_basis(d).iter().map(|r| int_coeff(&f.coefficient(r))).collect()
    }

    /// Columns: `tr` of each orbit representative of degree `d`, in orbit coordinates.
    pub fn transfer_lattice(&self, d: u32) -> Result<IntMatrix> {
        let basis = self.orbit_sum_basis(d);
        let cols = basis
            .iter()
            .map(|r| self.orbit_coordinates(&self.transfer(&PolyElement::monomial(&self.ring, r.clone(), BigRational::one()))?, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix::from_columns(basis.len(), &cols))
    }

    fn homogeneous_degrees(f: &PolyElement) -> BTreeSet<u32> {
        f.terms().map(|(m, _)| m.degree()).collect()
    }

    fn all_ones(&self) -> Vec<u32> {
        vec![1; self.ring.nvars()]
    }

    /// Whether the invariant `f` lies in the image of `tr`.
    pub fn in_transfer_image(&self, f: &PolyElement) -> Result<bool> {
        for d in Self::homogeneous_degrees(f) {
            if d > self.bound {
                return Err(Error::DegreeOverflow { degree: d, bound: self.bound });
            }
            let part = f.homogeneous_part(&self.all_ones(), d);
            let lattice = self.transfer_lattice(d)?;
            let v = self.orbit_coordinates(&part, d)?;
            if !lattice.column_lattice_contains(&IntMatrix::from_columns(v.len(), &[v])) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The degree-`d` part of the ideal of invariants generated by homogeneous
    /// invariant `generators`, in orbit coordinates.
    pub fn ideal_lattice(&self, generators: &[PolyElement], d: u32) -> Result<IntMatrix> {
        let mut cols = Vec::new();
        for gen in generators {
            if gen.is_zero() {
                continue;
            }
            let degs = Self::homogeneous_degrees(gen);
            if degs.len() != 1 {
                return Err(Error::InvalidArgument(format!("{gen} is not homogeneous")));
            }
            let e = *degs.iter().next().expect("one degree");
            if e > d {
                continue;
            }
            for r in self.orbit_sum_basis(d - e) {
                cols.push(self.orbit_coordinates(&(gen * &self.orbit_sum(&r)), d)?);
            }
        }
        Ok(IntMatrix::from_columns(self.orbit_sum_basis(d).len(), &cols))
    }

    /// Whether the ideal generated by `generators` equals the image of `tr` in
    /// every degree up to the bound.
    pub fn transfer_ideal_matches(&self, generators: &[PolyElement]) -> Result<bool> {
        for d in 0..=self.bound {
            if !self.ideal_lattice(generators, d)?.same_column_lattice(&self.transfer_lattice(d)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Invariants modulo transfers.
    pub fn geometric_fixed_points(&self) -> Result<GeometricFixedPoints> {
        let names: Vec<String> = self.base.variables().iter().map(|n| format!("N{n}")).collect();
        let ring = PolyRing::from_names(crate::exact::ScalarRing::Integers, names);
        let presented = PresentedRing::over(
            &ring,
            vec![PolyElement::constant(&ring, self.p as i64)],
            crate::exact::DEFAULT_BASIS_BOUND,
        )?;
        let per_degree = (0..=self.bound).map(|d| Ok(cokernel_shape(&self.transfer_lattice(d)?))).collect::<Result<_>>()?;
        Ok(GeometricFixedPoints { power: self.clone(), quotient: presented, per_degree })
    }
}

/// `Φ = (invariants)/im(tr)`, presented as `ℤ[N x_1, …, N x_k]/(p)` with the quotient
/// map sending the orbit sum of a diagonal monomial `m^{⊗p}` to `N m` and all free
/// orbit sums to zero.
#[derive(Clone, Debug)]
pub struct GeometricFixedPoints {
    power: EquivariantTensorPower,
    pub quotient: PresentedRing,
    /// Cokernel of `tr` in each degree `0..=bound`, computed by Smith reduction.
    pub per_degree: Vec<AbelianGroupShape>,
}

impl GeometricFixedPoints {
    fn diagonal_exponents(&self, m: &Monomial) -> Option<Vec<u32>> {
        let k = self.power.k;
        let e = m.exponents();
        let first = &e[..k];
        (0..self.power.p).all(|j| &e[j * k..(j + 1) * k] == first).then(|| first.to_vec())
    }

    /// The quotient map on invariants.
    pub fn project(&self, f: &PolyElement) -> Result<PolyElement> {
        let ring = self.quotient.ring();
        let mut out = PolyElement::zero(ring);
        for d in EquivariantTensorPower::homogeneous_degrees(f) {
            let reps = self.power.orbit_sum_basis(d);
            let coords = self.power.orbit_coordinates(&f.homogeneous_part(&self.power.all_ones(), d), d)?;
            for (r, c) in reps.iter().zip(coords) {
                if let Some(e) = self.diagonal_exponents(r) {
                    out = &out + &PolyElement::monomial(ring, Monomial::new(e), BigRational::from_integer(c));
                }
            }
        }
        Ok(self.quotient.reduce(&out))
    }

    /// Degree-`d` part of the presented quotient, `N x_i` in degree `p`.
    pub fn presented_shape(&self, d: u32) -> AbelianGroupShape {
        let p = self.power.p as u32;
        if d % p != 0 {
            return AbelianGroupShape::zero();
        }
        let orders: Vec<BigInt> = Monomial::all_of_degree(self.power.k, d / p)
            .iter()
            .filter_map(|m| self.quotient.monomial_torsion(m))
            .collect();
        AbelianGroupShape::new(0, &orders)
    }

    /// The quotient map kills transfers, is onto, is multiplicative on orbit sums,
    /// and the cokernel of `tr` matches the presentation in every degree.
    pub fn verify(&self) -> Result<bool> {
        let t = &self.power;
        for d in 0..=t.bound {
            if self.per_degree[d as usize] != self.presented_shape(d) {
                return Ok(false);
            }
            for r in t.orbit_sum_basis(d) {
                let tr = t.transfer(&PolyElement::monomial(t.ring(), r.clone(), BigRational::one()))?;
                if !self.project(&tr)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        for a in 0..=t.bound {
            for b in 0..=t.bound - a {
                for r in t.orbit_sum_basis(a) {
                    for s in t.orbit_sum_basis(b) {
                        let (x, y) = (t.orbit_sum(&r), t.orbit_sum(&s));
                        let lhs = self.project(&(&x * &y))?;
                        let rhs = self.quotient.mul(&self.project(&x)?, &self.project(&y)?);
                        if !self.quotient.equal(&lhs, &rhs) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// `R → Φ`, `f ↦ Φ(N f)`.
    pub fn norm_then_project(&self, f: &PolyElement) -> Result<PolyElement> {
        self.project(&self.power.norm_diagonal(f)?)
    }
}

/// Outcome of the expansion of `(x + y)^{⊗p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialTransferReport {
    pub p: usize,
    pub holds: bool,
    /// Size of the Σ_p-orbit of `x^{⊗i} ⊗ y^{⊗(p−i)}` for `i = 1, …, p−1`.
    pub symmetric_orbit_sizes: Vec<usize>,
    /// Number of `C_p`-transfers needed for each of those orbit sums.
    pub transfer_counts: Vec<usize>,
}

/// Expands `(x+y)^{⊗p}` in `ℤ[x,y]^{⊗p}` and compares it with
/// `x^{⊗p} + y^{⊗p} + Σ_i (Σ_p-orbit sum of x^{⊗i} ⊗ y^{⊗(p−i)})`, each orbit sum
/// enumerated as words and also written as a sum of `C_p`-transfers.
pub fn verify_binomial_transfer(p: usize, bound: u32) -> Result<BinomialTransferReport> {
    if (p as u32) > bound {
        return Err(Error::DegreeOverflow { degree: p as u32, bound });
    }
    let t = EquivariantTensorPower::new(&["x", "y"], p, bound)?;
    let ring = t.ring().clone();
    let (x, y) = (PolyElement::var(t.base_ring(), 0), PolyElement::var(t.base_ring(), 1));
    let expansion = (0..p).try_fold(PolyElement::one(&ring), |acc, j| Ok::<_, Error>(&acc * &t.embed(&(&x + &y), j)?))?;
    let mut claimed = &t.norm_diagonal(&x)? + &t.norm_diagonal(&y)?;
    let mut holds = true;
    let mut symmetric_orbit_sizes = Vec::new();
    let mut transfer_counts = Vec::new();
    for i in 1..p {
        let words: Vec<Monomial> = (0u32..(1 << p))
            .filter(|mask| mask.count_ones() as usize == i)
            .map(|mask| {
                let mut e = vec![0; 2 * p];
                for j in 0..p {
                    e[j * 2 + usize::from(mask & (1 << j) == 0)] = 1;
                }
                Monomial::new(e)
            })
            .collect();
        let orbit_sum = PolyElement::from_terms(&ring, words.iter().map(|m| (m.clone(), BigRational::one())));
        let reps: BTreeSet<Monomial> = words.iter().map(|m| t.orbit_representative(m)).collect();
        let mut transfers = PolyElement::zero(&ring);
        for r in &reps {
            transfers = &transfers + &t.transfer(&PolyElement::monomial(&ring, r.clone(), BigRational::one()))?;
        }
        holds &= transfers == orbit_sum;
        symmetric_orbit_sizes.push(words.len());
        transfer_counts.push(reps.len());
        claimed = &claimed + &orbit_sum;
    }
    holds &= claimed == expansion;
    Ok(BinomialTransferReport { p, holds, symmetric_orbit_sizes, transfer_counts })
}

/// `f ↦ f·g(f)` is additive modulo transfers: `N(f+h) − N(f) − N(h) ∈ im(tr)`.
pub fn norm_linear_mod_transfer(t: &EquivariantTensorPower, f: &PolyElement, h: &PolyElement) -> Result<bool> {
    let defect = &(&t.norm_diagonal(&(f + h))? - &t.norm_diagonal(f)?) - &t.norm_diagonal(h)?;
    t.in_transfer_image(&defect)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_x_squared() -> EquivariantTensorPower {
        EquivariantTensorPower::new(&["x"], 2, 6).unwrap()
    }

    #[test]
    fn transfers_and_norms() {
        let t = z_x_squared();
        let ring = t.ring().clone();
        let x = t.var(0, 0);
        let gx = t.var(1, 0);
        assert_eq!(t.transfer(&x).unwrap(), &x + &gx);
        assert_eq!(t.transfer(&PolyElement::one(&ring)).unwrap(), PolyElement::constant(&ring, 2));
        assert_eq!(t.transfer(&(&x * &gx)).unwrap(), (&x * &gx).scale_int(2));
        let bx = PolyElement::var(t.base_ring(), 0);
        assert_eq!(t.norm_diagonal(&bx).unwrap(), &x * &gx);
        assert_eq!(t.norm_diagonal(&PolyElement::one(t.base_ring())).unwrap(), PolyElement::one(&ring));
        assert!(matches!(t.norm_diagonal(&bx.pow(4)), Err(Error::DegreeOverflow { degree: 8, bound: 6 })));
        assert!(EquivariantTensorPower::new(&["x"], 4, 6).is_err());
    }

    #[test]
    fn invariant_basis_counts() {
        for p in [2, 3] {
            let t = EquivariantTensorPower::new(&["x", "y"], p, 4).unwrap();
            for d in 0..=4 {
                assert!(t.verify_invariant_basis(d));
            }
        }
    }

    #[test]
    fn transfer_ideal_for_c2() {
        let t = z_x_squared();
        let ring = t.ring().clone();
        let two = PolyElement::constant(&ring, 2);
        let s = &t.var(0, 0) + &t.var(1, 0);
        assert!(t.transfer_ideal_matches(&[two.clone(), s.clone()]).unwrap());
        assert!(!t.transfer_ideal_matches(&[two]).unwrap());
        let t3 = EquivariantTensorPower::new(&["x"], 3, 4).unwrap();
        let three = PolyElement::constant(t3.ring(), 3);
        let s3 = t3.transfer(&t3.var(0, 0)).unwrap();
        assert!(!t3.transfer_ideal_matches(&[three, s3]).unwrap());
    }

    #[test]
    fn geometric_fixed_points_of_polynomial_ring() {
        let t = z_x_squared();
        let phi = t.geometric_fixed_points().unwrap();
        assert!(phi.verify().unwrap());
        assert_eq!(phi.per_degree[2], AbelianGroupShape::from_ints(0, &[2]));
        assert!(phi.per_degree[3].is_zero());
        let bx = PolyElement::var(t.base_ring(), 0);
        let u = PolyElement::var(phi.quotient.ring(), 0);
        assert_eq!(phi.norm_then_project(&bx).unwrap(), u);
        let t0 = EquivariantTensorPower::new(&[], 2, 2).unwrap();
        let phi0 = t0.geometric_fixed_points().unwrap();
        assert!(phi0.verify().unwrap());
        assert_eq!(phi0.per_degree[0], AbelianGroupShape::from_ints(0, &[2]));
    }

    #[test]
    fn binomial_identity() {
        let r2 = verify_binomial_transfer(2, 2).unwrap();
        assert!(r2.holds);
        assert_eq!(r2.symmetric_orbit_sizes, vec![2]);
        let r3 = verify_binomial_transfer(3, 3).unwrap();
        assert!(r3.holds);
        assert_eq!(r3.symmetric_orbit_sizes, vec![3, 3]);
        let r5 = verify_binomial_transfer(5, 5).unwrap();
        assert!(r5.holds);
        assert_eq!(r5.symmetric_orbit_sizes, vec![5, 10, 10, 5]);
        assert_eq!(r5.transfer_counts, vec![1, 2, 2, 1]);
    }

    #[test]
    fn linearity_modulo_transfers() {
        let t = EquivariantTensorPower::new(&["x", "y"], 2, 4).unwrap();
        let x = PolyElement::var(t.base_ring(), 0);
        let y = PolyElement::var(t.base_ring(), 1);
        assert!(norm_linear_mod_transfer(&t, &x, &y).unwrap());
        let defect = &t.var(0, 0) + &t.var(1, 0);
        assert!(t.in_transfer_image(&defect).unwrap());
        assert!(!t.in_transfer_image(&(&t.var(0, 0) * &t.var(1, 0))).unwrap());
    }
}
