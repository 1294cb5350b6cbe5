//! Sugawara operators of `ĝ_E8` and of its subalgebra `ĝ_D8` acting on `N_E8(k, 0)`.
//!
//! For a dual pair list `{(A^i, B^i)}` of the chosen algebra,
//!
//! ```text
//! L(n) = 1/(2(k + h∨)) Σ_i Σ_j :A^i(j) B^i(n − j):
//! ```
//!
//! with annihilation modes (`j ≥ 0`) to the right. On a vector of degree `d`
//! only `j ∈ [n − d, d]` contributes, so each `L(n)` is a finite sum.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::chevalley::{BasisElem, Chevalley, LieElement, RANK};
use crate::fock::{mul, packed_degree, Factor, FockError, GradedVector, Monomial, VacuumModule};
use crate::roots::{underlined_d8_roots, Label};
use crate::vec8::Vec8;
use crate::Q;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SugawaraError {
    #[error("level {0} is critical for {1} (k + h∨ = 0)")]
    CriticalLevel(Q, Label),
    #[error(transparent)]
    Fock(#[from] FockError),
}

/// `k·dim g / (k + h∨)`.
pub fn central_charge(label: Label, k: Q) -> Result<Q, SugawaraError> {
    let (dim, h) = dims(label);
    let denom = k + Q::from_integer(h);
    if denom.is_zero() {
        return Err(SugawaraError::CriticalLevel(k, label));
    }
    Ok(k * Q::from_integer(dim) / denom)
}

fn dims(label: Label) -> (i64, i64) {
    match label {
        Label::E8 => (248, 30),
        Label::D8 => (120, 14),
    }
}

/// Nonzero rational levels at which the `E8` and `D8` central charges agree.
///
/// `k·248/(k+30) = k·120/(k+14)` clears to `k·((248 − 120)k + 248·14 − 120·30) = 0`.
pub fn solve_central_charge_equality() -> Vec<Q> {
    let (de, he) = dims(Label::E8);
    let (dd, hd) = dims(Label::D8);
    let a = de - dd;
    let b = de * hd - dd * he;
    if a == 0 {
        return Vec::new();
    }
    let root = Q::new(-b, a);
    if root.is_zero() {
        Vec::new()
    } else {
        vec![root]
    }
}

/// Lowest conformal weight `(μ, μ + 2ρ̄)/(2(k + h∨))` of `L(k, μ)`.
pub fn conformal_weight(mu: &Vec8, k: Q, label: Label) -> Result<Q, SugawaraError> {
    let rs = crate::roots::RootSystem::build(label);
    conformal_weight_in(&rs, mu, k)
}

pub(crate) fn conformal_weight_in(rs: &crate::RootSystem, mu: &Vec8, k: Q) -> Result<Q, SugawaraError> {
    let denom = k + Q::from_integer(rs.dual_coxeter as i64);
    if denom.is_zero() {
        return Err(SugawaraError::CriticalLevel(k, rs.label));
    }
    let two_rho = rs.weyl_vector.scale(2);
    Ok(mu.inner(&(*mu + two_rho)) / (Q::from_integer(2) * denom))
}

/// Which Sugawara terms to include; used to split `L(0)` into its Cartan and root parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    All,
    Cartan,
    Roots,
}

/// The data defining one Sugawara vector.
#[derive(Clone, Debug)]
pub struct SugawaraSpec {
    pub label: Label,
    pub level: Q,
    /// `1/(2(k + h∨))`.
    pub prefactor: Q,
    /// Terms `s · A ⊗ B` of the Casimir tensor: `t_j ⊗ t_j` and `−e_β ⊗ e_{−β}` over all roots β.
    pub pairs: Vec<(usize, usize, Q)>,
}

impl SugawaraSpec {
    pub fn new(alg: &Chevalley, label: Label, level: Q) -> Result<SugawaraSpec, SugawaraError> {
        let h = alg.root_system(label).dual_coxeter as i64;
        let denom = level + Q::from_integer(h);
        if denom.is_zero() {
            return Err(SugawaraError::CriticalLevel(level, label));
        }
        let pairs = alg
            .subalgebra_basis(label)
            .into_iter()
            .map(|a| {
                let (b, s) = alg.dual(a);
                (a, b, s)
            })
            .collect();
        Ok(SugawaraSpec {
            label,
            level,
            prefactor: (Q::from_integer(2) * denom).recip(),
            pairs,
        })
    }

    /// Checks `(A^i, s_j B^j) = δ_ij` over the listed pairs.
    pub fn pairs_are_dual(&self, alg: &Chevalley) -> bool {
        self.pairs.iter().enumerate().all(|(i, &(a, _, _))| {
            self.pairs
                .iter()
                .enumerate()
                .all(|(j, &(_, b, s))| s * alg.form_basis(a, b) == if i == j { Q::one() } else { Q::zero() })
        })
    }

    fn includes(&self, alg: &Chevalley, a: usize, part: Part) -> bool {
        match part {
            Part::All => true,
            Part::Cartan => matches!(alg.basis_elem(a), BasisElem::Cartan(_)),
            Part::Roots => matches!(alg.basis_elem(a), BasisElem::Root(_)),
        }
    }
}

/// A Sugawara spec bound to the module it acts on.
#[derive(Clone)]
pub struct Sugawara<'a> {
    spec: SugawaraSpec,
    module: VacuumModule<'a>,
}

impl<'a> Sugawara<'a> {
    pub fn new(module: VacuumModule<'a>, label: Label) -> Result<Sugawara<'a>, SugawaraError> {
        let spec = SugawaraSpec::new(module.algebra(), label, module.level())?;
        Ok(Sugawara { spec, module })
    }

    pub fn spec(&self) -> &SugawaraSpec {
        &self.spec
    }

    pub fn module(&self) -> &VacuumModule<'a> {
        &self.module
    }

    pub fn label(&self) -> Label {
        self.spec.label
    }

    pub fn central_charge(&self) -> Q {
        central_charge(self.spec.label, self.spec.level).expect("level checked at construction")
    }

    /// `ω = 1/(2(k+h∨)) Σ A^i(−1) B^i(−1) 𝟙`.
    pub fn omega_vector(&self) -> GradedVector {
        let mut out = Vec::new();
        let mut tmp = Vec::new();
        let vac = Monomial::vacuum();
        for &(a, b, s) in &self.spec.pairs {
            tmp.clear();
            self.module.act_into(b, -1, vac.raw(), s * self.spec.prefactor, &mut tmp);
            for (m, q) in tmp.drain(..) {
                self.module.act_into(a, -1, m.raw(), q, &mut out);
            }
        }
        GradedVector::from_pairs(out)
    }

    fn l_into(&self, n: i32, f: &[Factor], coeff: Q, part: Part, out: &mut Vec<(Monomial, Q)>) {
        if n == 0 {
            return self.l0_into(f, coeff, part, out);
        }
        let d = packed_degree(f) as i32;
        let alg = self.module.algebra();
        let mut tmp = Vec::new();
        for &(a, b, s) in &self.spec.pairs {
            if !self.spec.includes(alg, a, part) {
                continue;
            }
            let c = mul(coeff * self.spec.prefactor, s);
            for j in (n - d)..0 {
                tmp.clear();
                self.module.act_into(b, n - j, f, c, &mut tmp);
                for (m, q) in tmp.drain(..) {
                    self.module.act_into(a, j, m.raw(), q, out);
                }
            }
            for j in 0..=d {
                tmp.clear();
                self.module.act_into(a, j, f, c, &mut tmp);
                for (m, q) in tmp.drain(..) {
                    self.module.act_into(b, n - j, m.raw(), q, out);
                }
            }
        }
    }

    /// `L(0)` regrouped with the symmetry of the Casimir tensor:
    /// `Σ s A(0)B(0) + 2 Σ_{j≥1} Σ s A(−j)B(j)`.
    fn l0_into(&self, f: &[Factor], coeff: Q, part: Part, out: &mut Vec<(Monomial, Q)>) {
        let d = packed_degree(f) as i32;
        let alg = self.module.algebra();
        let mut tmp = Vec::new();
        for &(a, b, s) in &self.spec.pairs {
            if !self.spec.includes(alg, a, part) {
                continue;
            }
            let c = mul(coeff * self.spec.prefactor, s);
            tmp.clear();
            self.module.act_into(b, 0, f, c, &mut tmp);
            for (m, q) in tmp.drain(..) {
                self.module.act_into(a, 0, m.raw(), q, out);
            }
            for j in 1..=d {
                tmp.clear();
                self.module.act_into(b, j, f, c + c, &mut tmp);
                for (m, q) in tmp.drain(..) {
                    self.module.act_into(a, -j, m.raw(), q, out);
                }
            }
        }
    }

    /// `L(n) v` without the degree-cap check.
    pub(crate) fn l_unchecked(&self, n: i32, v: &GradedVector, part: Part) -> GradedVector {
        let mut out = Vec::new();
        for (m, q) in v.terms() {
            self.l_into(n, m.raw(), *q, part, &mut out);
        }
        GradedVector::from_pairs(out)
    }

    /// `L(n) v`.
    pub fn l(&self, n: i32, v: &GradedVector) -> Result<GradedVector, SugawaraError> {
        self.module.check_cap(v, n)?;
        Ok(self.l_unchecked(n, v, Part::All))
    }

    /// The part of `L(n) v` coming from the Cartan pairs or from the root-vector pairs only.
    pub fn l_part(&self, n: i32, v: &GradedVector, part: Part) -> Result<GradedVector, SugawaraError> {
        self.module.check_cap(v, n)?;
        Ok(self.l_unchecked(n, v, part))
    }

    /// Checks `[L(m), a(n)] v = −n a(m+n) v` exactly.
    pub fn check_current_primary(
        &self,
        m: i32,
        n: i32,
        a: usize,
        v: &GradedVector,
    ) -> Result<CurrentPrimaryReport, SugawaraError> {
        let top = v.max_degree() as i32 - m.min(0) - n.min(0);
        if top > self.module.cap() as i32 {
            return Err(FockError::DegreeCap {
                degree: top as u32,
                cap: self.module.cap(),
            }
            .into());
        }
        let diff = self.current_primary_defect(m, n, a, v);
        Ok(CurrentPrimaryReport {
            label: self.spec.label,
            m,
            n,
            a,
            exact: diff.is_zero(),
            defect_terms: diff.len(),
        })
    }

    /// `[L(m), a(n)] v + n a(m+n) v`.
    pub fn current_primary_defect(&self, m: i32, n: i32, a: usize, v: &GradedVector) -> GradedVector {
        let lhs = self
            .l_unchecked(m, &self.module.act(a, n, v), Part::All)
            .minus(&self.module.act(a, n, &self.l_unchecked(m, v, Part::All)));
        let mut diff = lhs;
        diff.add_scaled(&self.module.act(a, m + n, v), Q::from_integer(n as i64));
        diff
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurrentPrimaryReport {
    pub label: Label,
    pub m: i32,
    pub n: i32,
    pub a: usize,
    pub exact: bool,
    pub defect_terms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VirasoroReport {
    pub a: Label,
    pub b: Label,
    pub m: i32,
    pub n: i32,
    /// Scalar `z` with `[L_A(m), L_B(n)] v − (m−n) L_B(m+n) v = z v`, when it exists.
    pub central_scalar: Option<String>,
    /// `(m³ − m)/12 · c_B` when `m + n = 0`, else zero.
    pub expected_scalar: String,
    pub pass: bool,
}

/// Checks `[L_A(m), L_B(n)] v = (m−n) L_B(m+n) v + δ_{m+n,0} (m³−m)/12 c_B v`.
///
/// The central term is measured from the computed residual rather than assumed.
pub fn check_virasoro(
    m: i32,
    n: i32,
    v: &GradedVector,
    a: &Sugawara,
    b: &Sugawara,
) -> Result<VirasoroReport, SugawaraError> {
    let cap = a.module.cap() as i32;
    let d = v.max_degree() as i32;
    let top = (d - n).max(d - m).max(d - m - n);
    if top > cap {
        return Err(FockError::DegreeCap {
            degree: top as u32,
            cap: cap as u32,
        }
        .into());
    }
    let lhs = a
        .l_unchecked(m, &b.l_unchecked(n, v, Part::All), Part::All)
        .minus(&b.l_unchecked(n, &a.l_unchecked(m, v, Part::All), Part::All));
    let residual = lhs.minus(&b.l_unchecked(m + n, v, Part::All).scaled(Q::from_integer((m - n) as i64)));
    let expected = if m + n == 0 {
        Q::new((m * m * m - m) as i64, 12) * b.central_charge()
    } else {
        Q::zero()
    };
    let scalar = scalar_multiple(&residual, v);
    let pass = residual == v.scaled(expected);
    Ok(VirasoroReport {
        a: a.label(),
        b: b.label(),
        m,
        n,
        central_scalar: scalar.map(|q| crate::fock::format_q(&q)),
        expected_scalar: crate::fock::format_q(&expected),
        pass,
    })
}

/// `Some(z)` when `w = z v`.
fn scalar_multiple(w: &GradedVector, v: &GradedVector) -> Option<Q> {
    if w.is_zero() {
        return Some(Q::zero());
    }
    let (m, q) = v.terms().next()?;
    let z = w.coeff(m) / q;
    (*w == v.scaled(z)).then_some(z)
}

#[derive(Clone, Debug, Serialize)]
pub struct OmegaRadicalReport {
    pub difference_terms: usize,
    pub difference_nonzero: bool,
    pub spanning_pairings: usize,
    pub spanning_nonzero: usize,
    pub pbw_pairings: usize,
    pub pbw_nonzero: usize,
    pub pass: bool,
}

/// The weight-zero degree-two vectors `e_α(−1)e_{−α}(−1)𝟙` (all 240 roots, as ordered
/// products), `t_i(−1)t_j(−1)𝟙` (`i ≤ j`) and `t_i(−2)𝟙`.
pub fn weight_zero_degree_two_spanning(module: &VacuumModule) -> Vec<GradedVector> {
    let alg = module.algebra();
    let mut out = Vec::new();
    for root in alg.e8().all_roots() {
        let a = alg.root_vector(&root).expect("root");
        let b = alg.root_vector(&-root).expect("root");
        out.push(module.act(a, -1, &module.act(b, -1, &GradedVector::vacuum())));
    }
    for i in 0..RANK {
        for j in i..RANK {
            out.push(module.act(i, -1, &module.act(j, -1, &GradedVector::vacuum())));
        }
    }
    for i in 0..RANK {
        out.push(module.act(i, -2, &GradedVector::vacuum()));
    }
    out
}

/// `ω_E8 − ω_D8` is nonzero in `N_E8(1,0)` yet pairs to zero with the whole degree-two
/// weight-zero slice, so it vanishes in the simple quotient.
pub fn omega_radical_check(e8: &Sugawara, d8: &Sugawara) -> OmegaRadicalReport {
    let module = e8.module();
    let diff = e8.omega_vector().minus(&d8.omega_vector());
    let spanning = weight_zero_degree_two_spanning(module);
    let spanning_nonzero = spanning
        .iter()
        .filter(|w| !module.shapovalov_pair(w, &diff).is_zero())
        .count();
    let pbw = crate::fock::pbw_basis_of_weight(module.algebra(), 2, &Vec8::ZERO);
    let pbw_nonzero = pbw
        .iter()
        .filter(|m| !module.shapovalov_pair(&GradedVector::from_monomial((*m).clone()), &diff).is_zero())
        .count();
    OmegaRadicalReport {
        difference_terms: diff.len(),
        difference_nonzero: !diff.is_zero(),
        spanning_pairings: spanning.len(),
        spanning_nonzero,
        pbw_pairings: pbw.len(),
        pbw_nonzero,
        pass: !diff.is_zero() && spanning_nonzero == 0 && pbw_nonzero == 0,
    }
}

/// `(1/2) Σ h_α(−1) h_α(−1) 𝟙` over the underlined D8 roots equals `Σ t_i(−1) t_i(−1) 𝟙`.
pub fn cartan_forms_agree(module: &VacuumModule) -> bool {
    let alg = module.algebra();
    let mut underlined = GradedVector::zero();
    for alpha in underlined_d8_roots() {
        let h = alg.h(&alpha);
        let w = module.word(&[(h.clone(), -1), (h, -1)]).expect("degree two");
        underlined.add_scaled(&w, Q::new(1, 2));
    }
    let mut orthonormal = GradedVector::zero();
    for i in 0..RANK {
        let t = LieElement::basis(i);
        orthonormal.add_scaled(&module.word(&[(t.clone(), -1), (t, -1)]).expect("degree two"), Q::one());
    }
    underlined == orthonormal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::single;
    use crate::roots::spinor_root;
    use std::sync::OnceLock;

    fn alg() -> &'static Chevalley {
        static A: OnceLock<Chevalley> = OnceLock::new();
        A.get_or_init(Chevalley::new)
    }

    fn module() -> VacuumModule<'static> {
        VacuumModule::new(alg(), Q::one())
    }

    #[test]
    fn central_charges() {
        assert_eq!(central_charge(Label::E8, Q::one()).unwrap(), Q::from_integer(8));
        assert_eq!(central_charge(Label::D8, Q::one()).unwrap(), Q::from_integer(8));
        assert_eq!(central_charge(Label::E8, Q::zero()).unwrap(), Q::zero());
        assert!(central_charge(Label::D8, Q::from_integer(-14)).is_err());
        assert_eq!(solve_central_charge_equality(), vec![Q::one()]);
    }

    #[test]
    fn conformal_weights() {
        let d8 = crate::RootSystem::build(Label::D8);
        let w = |i: usize| conformal_weight(&d8.fundamental_weights[i], Q::one(), Label::D8).unwrap();
        assert_eq!(w(0), Q::new(1, 2));
        assert_eq!(w(6), Q::one());
        assert_eq!(w(7), Q::one());
        assert_eq!(conformal_weight(&Vec8::ZERO, Q::from_integer(3), Label::E8).unwrap(), Q::zero());
    }

    #[test]
    fn spec_pairs_are_dual() {
        let s = SugawaraSpec::new(alg(), Label::D8, Q::one()).unwrap();
        assert_eq!(s.pairs.len(), 120);
        assert_eq!(s.prefactor, Q::new(1, 30));
        assert!(s.pairs_are_dual(alg()));
        assert!(SugawaraSpec::new(alg(), Label::E8, Q::from_integer(-30)).is_err());
    }

    #[test]
    fn omega_examples() {
        let e8 = Sugawara::new(module(), Label::E8).unwrap();
        let d8 = Sugawara::new(module(), Label::D8).unwrap();
        let diff = e8.omega_vector().minus(&d8.omega_vector());
        assert!(!diff.is_zero());
        let t = single(-1, 0);
        let tt = crate::fock::Monomial::from_factors(&[(-1, 0), (-1, 0)]).unwrap();
        assert_eq!(d8.omega_vector().coeff(&tt), Q::new(1, 30));
        assert!(!t.is_vacuum());
        assert!(cartan_forms_agree(&module()));
    }

    #[test]
    fn l_examples() {
        let e8 = Sugawara::new(module(), Label::E8).unwrap();
        let d8 = Sugawara::new(module(), Label::D8).unwrap();
        let vac = GradedVector::vacuum();
        assert!(e8.l(-1, &vac).unwrap().is_zero());
        assert!(d8.l(-1, &vac).unwrap().is_zero());
        let s = alg().root_vector(&spinor_root()).unwrap();
        let v = GradedVector::from_monomial(single(-1, s));
        assert_eq!(d8.l(0, &v).unwrap(), v);
        let h = alg().h(&spinor_root());
        let hv = module().apply_element(&h, -1, &vac).unwrap();
        assert_eq!(d8.l(0, &hv).unwrap(), hv);
        // L(-2)𝟙 = ω
        assert_eq!(e8.l(-2, &vac).unwrap(), e8.omega_vector());
    }

    #[test]
    fn l0_split() {
        let d8 = Sugawara::new(module(), Label::D8).unwrap();
        let s = alg().root_vector(&spinor_root()).unwrap();
        let v = GradedVector::from_monomial(single(-1, s));
        assert_eq!(d8.l_part(0, &v, Part::Cartan).unwrap(), v.scaled(Q::new(1, 15)));
        assert_eq!(d8.l_part(0, &v, Part::Roots).unwrap(), v.scaled(Q::new(14, 15)));
    }

    #[test]
    fn current_primary_examples() {
        let e8 = Sugawara::new(module(), Label::E8).unwrap();
        let vac = GradedVector::vacuum();
        let theta = alg().root_vector(&alg().e8().highest_root).unwrap();
        assert!(e8.check_current_primary(1, -1, theta, &vac).unwrap().exact);
        assert!(e8.check_current_primary(0, -2, 0, &vac).unwrap().exact);
        let l0 = e8.l(0, &module().act(0, -2, &vac)).unwrap();
        assert_eq!(l0, GradedVector::from_monomial(single(-2, 0)).scaled(Q::from_integer(2)));
    }

    #[test]
    fn virasoro_examples() {
        let e8 = Sugawara::new(module(), Label::E8).unwrap();
        let d8 = Sugawara::new(module(), Label::D8).unwrap();
        let vac = GradedVector::vacuum();
        let r = check_virasoro(2, -2, &vac, &e8, &e8).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.central_scalar.as_deref(), Some("4/1"));
        let s = alg().root_vector(&spinor_root()).unwrap();
        let v = GradedVector::from_monomial(single(-1, s));
        let r = check_virasoro(1, -1, &v, &e8, &d8).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(check_virasoro(0, 0, &v, &d8, &e8).unwrap().pass);
    }

    #[test]
    fn omega_difference_in_radical() {
        let e8 = Sugawara::new(module(), Label::E8).unwrap();
        let d8 = Sugawara::new(module(), Label::D8).unwrap();
        let r = omega_radical_check(&e8, &d8);
        assert_eq!(r.spanning_pairings, 284);
        assert_eq!(r.pbw_pairings, 164);
        assert!(r.pass, "{r:?}");
    }
}
