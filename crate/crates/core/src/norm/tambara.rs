use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    cokernel_shape, kernel_basis, IntMatrix, Monomial, PolyElement, PolyRing, PresentedRing, DEFAULT_BASIS_BOUND,
};

use super::tensor_power::EquivariantTensorPower;

/// Weights of `t, y, u` in the top ring.
const TOP_WEIGHTS: [u32; 3] = [0, 1, 2];

/// The presented model of the `C₂`-norm of `ℤ[x]`: top level
/// `ℤ[t, y, u]/(t² − 2t, ty − 2y)`, bottom level `ℤ[x, gx]`, with restriction,
/// transfer and norm, all bounded by total degree `bound` (in `x, gx`).
#[derive(Clone, Debug)]
pub struct TambaraModel {
    bound: u32,
    top: PresentedRing,
    bottom: EquivariantTensorPower,
    t_values: Vec<PolyElement>,
}

/// Named checks with their outcomes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<(String, bool)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.checks.iter().find(|(_, ok)| !*ok).map(|(n, _)| n.as_str())
    }
}

fn binomial2(c: &BigInt) -> BigInt {
    (c * (c - BigInt::one())).div_floor(&BigInt::from(2))
}

impl TambaraModel {
    /// Builds the model without checking the axioms.
    pub fn unchecked(bound: u32) -> Result<Self> {
        let ring = PolyRing::integers(&["t", "y", "u"]);
        let (t, y) = (PolyElement::var(&ring, 0), PolyElement::var(&ring, 1));
        let two = PolyElement::constant(&ring, 2);
        let relations = vec![&(&t * &t) - &(&two * &t), &(&t * &y) - &(&two * &y)];
        let top = PresentedRing::over(&ring, relations, DEFAULT_BASIS_BOUND)?;
        let bottom = EquivariantTensorPower::new(&["x"], 2, bound)?;
        let u = PolyElement::var(&ring, 2);
        let mut t_values = vec![t.clone(), y.clone()];
        while t_values.len() <= bound as usize {
            let m = t_values.len();
            let next = &(&y * &t_values[m - 1]) - &(&u * &t_values[m - 2]);
            t_values.push(top.reduce(&next));
        }
        Ok(TambaraModel { bound, top, bottom, t_values })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `ℤ[t, y, u]/(t² − 2t, ty − 2y)`.
    pub fn top(&self) -> &PresentedRing {
        &self.top
    }

    /// `ℤ[x, gx]` with its involution.
    pub fn bottom(&self) -> &EquivariantTensorPower {
        &self.bottom
    }

    /// `ℤ[x]`.
    pub fn base(&self) -> &Arc<PolyRing> {
        self.bottom.base_ring()
    }

    pub fn top_generator(&self, name: &str) -> PolyElement {
        self.top.generator(name).expect("t, y and u are generators")
    }

    /// `T(m) = tr(x^m)`.
    pub fn transfer_power(&self, m: usize) -> Result<&PolyElement> {
        self.t_values.get(m).ok_or(Error::DegreeOverflow { degree: m as u32, bound: self.bound })
    }

    /// `t ↦ 2`, `y ↦ x + gx`, `u ↦ x·gx`.
    pub fn res(&self, z: &PolyElement) -> Result<PolyElement> {
        let ring = self.bottom.ring();
        let (x, gx) = (self.bottom.var(0, 0), self.bottom.var(1, 0));
        z.substitute(&[PolyElement::constant(ring, 2), &x + &gx, &x * &gx], ring)
    }

    /// `tr(x^a (gx)^b) = u^{min(a,b)} T(|a − b|)`, extended additively.
    pub fn tr(&self, a: &PolyElement) -> Result<PolyElement> {
        if a.ring() != self.bottom.ring() {
            return Err(Error::RingMismatch(format!("{a} is not in ℤ[x, gx]")));
        }
        let ring = self.top.ring();
        let u = PolyElement::var(ring, 2);
        let mut out = PolyElement::zero(ring);
        for (m, c) in a.terms() {
            let (i, j) = (m.exponents()[0], m.exponents()[1]);
            if i + j > self.bound {
                return Err(Error::DegreeOverflow { degree: i + j, bound: self.bound });
            }
            let term = &u.pow(i.min(j) as u64) * self.transfer_power(i.abs_diff(j) as usize)?;
            out = &out + &term.scale(c);
        }
        Ok(self.top.reduce(&out))
    }

    /// `N(c x^m) = (c + C(c,2) t) u^m`, `N(Σ f_i) = Σ N(f_i) + Σ_{i<j} tr(f_i · g f_j)`.
    pub fn norm(&self, f: &PolyElement) -> Result<PolyElement> {
        if f.ring() != self.base() {
            return Err(Error::RingMismatch(format!("{f} is not in ℤ[x]")));
        }
        let deg = 2 * f.total_degree().unwrap_or(0);
        if deg > self.bound {
            return Err(Error::DegreeOverflow { degree: deg, bound: self.bound });
        }
        let ring = self.top.ring();
        let (t, u) = (PolyElement::var(ring, 0), PolyElement::var(ring, 2));
        let terms: Vec<(u32, BigInt)> = f
            .integer_terms()?
            .into_iter()
            .map(|(m, c)| (m.exponents()[0], c))
            .collect();
        let mut out = PolyElement::zero(ring);
        for (m, c) in &terms {
            let nc = &PolyElement::constant(ring, c.clone()) + &t.scale_int(binomial2(c));
            out = &out + &(&nc * &u.pow(*m as u64));
        }
        for (i, (mi, ci)) in terms.iter().enumerate() {
            for (mj, cj) in &terms[i + 1..] {
                let cross = PolyElement::monomial(
                    self.bottom.ring(),
                    Monomial::new(vec![*mi, *mj]),
                    BigRational::from_integer(ci * cj),
                );
                out = &out + &self.tr(&cross)?;
            }
        }
        Ok(self.top.reduce(&out))
    }

    /// Standard monomials of the top ring of weight `d`.
    pub fn top_basis(&self, d: u32) -> Result<Vec<Monomial>> {
        top_standard_monomials(&self.top, d)
    }

    /// Coordinates of the weight-`d` part of `z` on [`Self::top_basis`].
    pub fn top_coordinates(&self, z: &PolyElement, d: u32) -> Result<Vec<BigInt>> {
        coordinates(&self.top, z, d)
    }

    fn bottom_monomials(&self, d: u32) -> Vec<PolyElement> {
        Monomial::all_of_degree(2, d)
            .into_iter()
            .map(|m| PolyElement::monomial(self.bottom.ring(), m, BigRational::one()))
            .collect()
    }

    /// Image of `tr` in weight `d`, as a lattice in top coordinates.
    pub fn transfer_image(&self, d: u32) -> Result<IntMatrix> {
        let cols =
            self.bottom_monomials(d).iter().map(|a| self.top_coordinates(&self.tr(a)?, d)).collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix::from_columns(self.top_basis(d)?.len(), &cols))
    }

    /// The ideal `(t, y)` in weight `d`.
    pub fn ideal_ty(&self, d: u32) -> Result<IntMatrix> {
        let ring = self.top.ring();
        let mut cols = Vec::new();
        for (gen, w) in [(0usize, 0u32), (1, 1)] {
            if w > d {
                continue;
            }
            for m in self.top_basis(d - w)? {
                let z = &PolyElement::var(ring, gen) * &PolyElement::monomial(ring, m, BigRational::one());
                cols.push(self.top_coordinates(&z, d)?);
            }
        }
        Ok(IntMatrix::from_columns(self.top_basis(d)?.len(), &cols))
    }

    /// Whether `z` lies in the image of `tr`.
    pub fn in_transfer_image(&self, z: &PolyElement) -> Result<bool> {
        let z = self.top.reduce(z);
        let degrees: std::collections::BTreeSet<u32> = z.terms().map(|(m, _)| m.weighted_degree(&TOP_WEIGHTS)).collect();
        for d in degrees {
            let v = self.top_coordinates(&z, d)?;
            if !self.transfer_image(d)?.column_lattice_contains(&IntMatrix::from_columns(v.len(), &[v])) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Polynomials in `ℤ[x]` of degree `≤ bound/2` with coefficients in `coeffs`.
    pub fn test_polynomials(&self, coeffs: &[i64]) -> Vec<PolyElement> {
        let top = (self.bound / 2) as usize;
        let mut out = vec![Vec::new()];
        for _ in 0..=top {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| coeffs.iter().map(move |&c| [v.clone(), vec![c]].concat()))
                .collect();
        }
        out.into_iter()
            .map(|cs| {
                PolyElement::from_terms(
                    self.base(),
                    cs.iter().enumerate().map(|(i, &c)| (Monomial::new(vec![i as u32]), BigRational::from_integer(c.into()))),
                )
            })
            .collect()
    }

    fn in_bottom(&self, f: &PolyElement) -> Result<PolyElement> {
        self.bottom.embed(f, 0)
    }

    /// Every structural identity of the model, checked exhaustively through `bound`.
    pub fn verify_axioms(&self) -> Result<AxiomReport> {
        let mut checks = Vec::new();
        let (t, y, u) = (self.top_generator("t"), self.top_generator("y"), self.top_generator("u"));
        let ring = self.bottom.ring().clone();
        let (x, gx) = (self.bottom.var(0, 0), self.bottom.var(1, 0));
        let values_ok = self.res(&t)? == PolyElement::constant(&ring, 2)
            && self.res(&y)? == &x + &gx
            && self.res(&u)? == &x * &gx;
        checks.push(("res(t) = 2, res(y) = x + gx, res(u) = x·gx".to_string(), values_ok));
        let rel_ok = self.top.relations().iter().map(|r| self.res(r)).collect::<Result<Vec<_>>>()?.iter().all(PolyElement::is_zero);
        checks.push(("res kills the relations".to_string(), rel_ok));

        let mut mult_ok = true;
        for a in 0..=self.bound {
            for b in 0..=self.bound - a {
                for m in self.top_basis(a)? {
                    for n in self.top_basis(b)? {
                        let (zm, zn) = (mono(self.top.ring(), &m), mono(self.top.ring(), &n));
                        mult_ok &= self.res(&self.top.mul(&zm, &zn))? == &self.res(&zm)? * &self.res(&zn)?;
                    }
                }
            }
        }
        checks.push(("res is multiplicative".to_string(), mult_ok));

        let mut trace_ok = true;
        let mut invariant_ok = true;
        for d in 0..=self.bound {
            for a in self.bottom_monomials(d) {
                trace_ok &= self.res(&self.tr(&a)?)? == &a + &self.bottom.g(&a);
                invariant_ok &= self.top.equal(&self.tr(&self.bottom.g(&a))?, &self.tr(&a)?);
            }
        }
        checks.push(("res ∘ tr = 1 + g".to_string(), trace_ok));
        checks.push(("tr ∘ g = tr".to_string(), invariant_ok));

        let mut frobenius_ok = true;
        for a in 0..=self.bound {
            for z in self.top_basis(a)? {
                let z = mono(self.top.ring(), &z);
                let rz = self.res(&z)?;
                for b in 0..=self.bound - a {
                    for alpha in self.bottom_monomials(b) {
                        frobenius_ok &= self.top.equal(&self.tr(&(&rz * &alpha))?, &(&z * &self.tr(&alpha)?));
                    }
                }
            }
        }
        checks.push(("tr(res(z)·a) = z·tr(a)".to_string(), frobenius_ok));

        let polys = self.test_polynomials(&[-1, 0, 1, 2]);
        let mut res_norm_ok = true;
        for f in &polys {
            let bf = self.in_bottom(f)?;
            res_norm_ok &= self.res(&self.norm(f)?)? == &bf * &self.bottom.g(&bf);
        }
        checks.push(("res ∘ N(f) = f·g(f)".to_string(), res_norm_ok));

        let small = self.test_polynomials(&[-1, 0, 1]);
        let mut norm_mult_ok = true;
        let mut norm_sum_ok = true;
        for f in &small {
            for h in &small {
                let sum_deg = f.total_degree().unwrap_or(0) + h.total_degree().unwrap_or(0);
                if 2 * sum_deg <= self.bound {
                    norm_mult_ok &= self.top.equal(&self.norm(&(f * h))?, &(&self.norm(f)? * &self.norm(h)?));
                }
                let defect = &(&self.norm(&(f + h))? - &self.norm(f)?) - &self.norm(h)?;
                let cross = self.tr(&(&self.in_bottom(f)? * &self.bottom.g(&self.in_bottom(h)?)))?;
                norm_sum_ok &= self.top.equal(&defect, &cross) && self.in_transfer_image(&defect)?;
            }
        }
        checks.push(("N(fh) = N(f)·N(h)".to_string(), norm_mult_ok));
        checks.push(("N(f+h) − N(f) − N(h) = tr(f·gh) ∈ im(tr)".to_string(), norm_sum_ok));
        Ok(AxiomReport { checks })
    }
}

fn mono(ring: &Arc<PolyRing>, m: &Monomial) -> PolyElement {
    PolyElement::monomial(ring, m.clone(), BigRational::one())
}

/// `t^a y^b u^c` of weight `b + 2c = d`, with `a ≤ 2`.
fn weight_monomials(d: u32) -> Vec<Monomial> {
    (0..=2u32).flat_map(|a| (0..=d / 2).map(move |c| Monomial::new(vec![a, d - 2 * c, c]))).collect()
}

fn top_standard_monomials(top: &PresentedRing, d: u32) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for m in weight_monomials(d) {
        match top.monomial_torsion(&m) {
            None => {}
            Some(g) if g.is_zero() => {
                if m.exponents()[0] == 2 {
                    return Err(Error::Internal("t² is a standard monomial".into()));
                }
                out.push(m);
            }
            Some(g) => return Err(Error::Internal(format!("torsion {g} on a standard monomial"))),
        }
    }
    out.sort();
    Ok(out)
}

fn coordinates(top: &PresentedRing, z: &PolyElement, d: u32) -> Result<Vec<BigInt>> {
    let basis = top_standard_monomials(top, d)?;
    let z = top.reduce(z).homogeneous_part(&TOP_WEIGHTS, d);
    for (m, _) in z.terms() {
        if !basis.contains(m) {
            return Err(Error::Internal(format!("reduced form has non-standard monomial {m:?}")));
        }
    }
    basis
        .iter()
        .map(|m| {
            let c = z.coefficient(m);
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::InvalidRing(format!("coefficient {c} is not an integer")))
            }
        })
        .collect()
}

/// Builds the model and aborts with the first failed axiom.
pub fn build_tambara_model(bound: u32) -> Result<TambaraModel> {
    let model = TambaraModel::unchecked(bound)?;
    let report = model.verify_axioms()?;
    if let Some(name) = report.first_failure() {
        return Err(Error::StructureViolation(format!("Tambara model: {name}")));
    }
    Ok(model)
}

/// Checks that `im(tr) = (t, y)` in every weight through the bound, and that
/// `ℤ[x] → top → top/im(tr)` is an isomorphism onto `ℤ[u]` sending `x ↦ u`.
pub fn verify_phi_norm_identity(model: &TambaraModel) -> Result<bool> {
    for d in 0..=model.bound {
        if !model.transfer_image(d)?.same_column_lattice(&model.ideal_ty(d)?) {
            return Ok(false);
        }
    }
    let (t, y, u) = (model.top_generator("t"), model.top_generator("y"), model.top_generator("u"));
    let quotient = model.top.quotient(vec![t, y])?;
    for d in 0..=model.bound {
        let standard: Vec<Monomial> = weight_monomials(d)
            .into_iter()
            .filter(|m| quotient.monomial_torsion(m).is_some_and(|g| g.is_zero()))
            .collect();
        let expected: Vec<Monomial> = if d % 2 == 0 { vec![Monomial::new(vec![0, 0, d / 2])] } else { vec![] };
        if standard != expected {
            return Ok(false);
        }
    }
    let x = PolyElement::var(model.base(), 0);
    for m in 0..=model.bound / 2 {
        if !quotient.equal(&model.norm(&x.pow(m as u64))?, &u.pow(m as u64)) {
            return Ok(false);
        }
    }
    let polys = model.test_polynomials(&[-1, 0, 1]);
    for f in &polys {
        for h in &polys {
            let phi = |p: &PolyElement| model.norm(p).map(|n| quotient.reduce(&n));
            if !quotient.equal(&phi(&(f + h))?, &(&phi(f)? + &phi(h)?)) {
                return Ok(false);
            }
            let d = f.total_degree().unwrap_or(0) + h.total_degree().unwrap_or(0);
            if 2 * d <= model.bound && !quotient.equal(&phi(&(f * h))?, &(&phi(f)? * &phi(h)?)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The weight-0 part of the top ring is free on `1, t` with `t² = 2t`.
pub fn unit_generates_burnside_ring(model: &TambaraModel) -> Result<bool> {
    let basis = model.top_basis(0)?;
    let t = model.top_generator("t");
    let expected = vec![Monomial::new(vec![0, 0, 0]), Monomial::new(vec![1, 0, 0])];
    let mut sorted = expected.clone();
    sorted.sort();
    Ok(basis == sorted && model.top.equal(&(&t * &t), &t.scale_int(2)))
}

/// `res` from the presented top ring to the invariants of `ℤ[x, gx]`, weight by weight.
#[derive(Clone, Debug)]
pub struct NaiveComparison {
    /// Surjective in every weight checked.
    pub surjective: bool,
    /// A basis of the kernel, as top-ring elements.
    pub kernel: Vec<PolyElement>,
}

pub fn naive_comparison(model: &TambaraModel, max_degree: u32) -> Result<NaiveComparison> {
    let inv = &model.bottom;
    let mut surjective = true;
    let mut kernel = Vec::new();
    for d in 0..=max_degree.min(model.bound) {
        let basis = model.top_basis(d)?;
        let cols = basis
            .iter()
            .map(|m| inv.orbit_coordinates(&model.res(&mono(model.top.ring(), m))?, d))
            .collect::<Result<Vec<_>>>()?;
        let matrix = IntMatrix::from_columns(inv.orbit_sum_basis(d).len(), &cols);
        surjective &= cokernel_shape(&matrix).is_zero();
        let k = kernel_basis(&matrix);
        for j in 0..k.cols() {
            let z = PolyElement::from_terms(
                model.top.ring(),
                basis.iter().enumerate().map(|(i, m)| (m.clone(), BigRational::from_integer(k.get(i, j).clone()))),
            );
            kernel.push(z);
        }
    }
    Ok(NaiveComparison { surjective, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transfer_values() {
        let m = TambaraModel::unchecked(6).unwrap();
        let (t, y, u) = (m.top_generator("t"), m.top_generator("y"), m.top_generator("u"));
        assert_eq!(m.tr(&PolyElement::one(m.bottom().ring())).unwrap(), t);
        assert_eq!(m.tr(&m.bottom().var(0, 0)).unwrap(), y);
        let x2 = m.bottom().var(0, 0).pow(2);
        assert!(m.top().equal(&m.tr(&x2).unwrap(), &(&(&y * &y) - &(&u * &t))));
        let minus_one = PolyElement::constant(m.base(), -1);
        let n = m.norm(&minus_one).unwrap();
        assert!(m.top().equal(&n, &(&t - &PolyElement::one(m.top().ring()))));
        assert_eq!(m.res(&n).unwrap(), PolyElement::one(m.bottom().ring()));
    }

    #[test]
    fn model_axioms_hold() {
        let m = build_tambara_model(6).unwrap();
        assert!(verify_phi_norm_identity(&m).unwrap());
        assert!(unit_generates_burnside_ring(&m).unwrap());
    }

    #[test]
    fn naive_model_is_not_injective() {
        let m = TambaraModel::unchecked(4).unwrap();
        let c = naive_comparison(&m, 2).unwrap();
        assert!(c.surjective);
        let t_minus_2 = &m.top_generator("t") - &PolyElement::constant(m.top().ring(), 2);
        assert!(m.res(&t_minus_2).unwrap().is_zero());
        assert!(!m.top().is_zero(&t_minus_2));
        assert!(!c.kernel.is_empty());
    }

    #[test]
    fn corrupted_transfer_detected() {
        let mut m = TambaraModel::unchecked(4).unwrap();
        m.t_values[2] = m.top().reduce(&(&m.t_values[1] * &m.t_values[1]));
        assert!(!m.verify_axioms().unwrap().passed());
    }
}
