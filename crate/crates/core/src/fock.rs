//! The graded vacuum module `N(k, 0)` of the affine algebra `ĝ_E8`.
//!
//! Vectors are sparse combinations of PBW monomials
//! `b_1(m_1) b_2(m_2) … b_r(m_r)𝟙` with all modes negative. Factors are kept
//! sorted by mode ascending (more negative first), ties broken by basis index,
//! so every vector has a unique normal form.
//!
//! Currents act through `[a(m), b(n)] = [a, b](m + n) + m (a, b) k δ_{m+n,0}`
//! and `a(n)𝟙 = 0` for `n ≥ 0`.

use std::fmt;

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::chevalley::{Chevalley, LieElement};
use crate::linalg::Matrix;
use crate::roots::Label;
use crate::vec8::Vec8;
use crate::Q;

pub const DEFAULT_DEGREE_CAP: u32 = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("result of degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("vectors of degree {0} and {1} cannot be paired")]
    DegreeMismatch(u32, u32),
    #[error("vector is not homogeneous")]
    NotHomogeneous,
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// One factor `b(m)`, packed as `((m + 128) << 8) | b` so that integer order
/// is the canonical PBW order.
pub(crate) type Factor = u16;

fn pack(mode: i32, basis: usize) -> Factor {
    debug_assert!((-127..0).contains(&mode) && basis < 256);
    (((mode + 128) as u16) << 8) | basis as u16
}

fn unpack(f: Factor) -> (i32, usize) {
    ((f >> 8) as i32 - 128, (f & 0xff) as usize)
}

pub(crate) fn packed_degree(factors: &[Factor]) -> u32 {
    factors.iter().map(|&f| (128 - (f >> 8) as i32) as u32).sum()
}

/// `a·b`, skipping the reduction when `b` is `±1`.
#[inline]
pub(crate) fn mul(a: Q, b: Q) -> Q {
    if b.denom() == &1 {
        match *b.numer() {
            1 => return a,
            -1 => return -a,
            _ => {}
        }
    }
    a * b
}

/// A PBW monomial applied to the vacuum; the empty monomial is `𝟙`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[Factor; 8]>);

impl Monomial {
    pub fn vacuum() -> Monomial {
        Monomial::default()
    }

    /// Sorts the given `(mode, basis)` factors into normal order.
    pub fn from_factors(factors: &[(i32, usize)]) -> Result<Monomial, FockError> {
        let mut packed: SmallVec<[Factor; 8]> = SmallVec::new();
        for &(m, b) in factors {
            if m >= 0 || m < -127 || b >= 256 {
                return Err(FockError::InvalidMonomial(format!("factor ({m}, {b})")));
            }
            packed.push(pack(m, b));
        }
        packed.sort_unstable();
        Ok(Monomial(packed))
    }

    pub fn factors(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.0.iter().map(|&f| unpack(f))
    }

    pub fn degree(&self) -> u32 {
        packed_degree(&self.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cartan weight: sum of the root weights of the factors.
    pub fn weight(&self, alg: &Chevalley) -> Vec8 {
        self.factors().fold(Vec8::ZERO, |acc, (_, b)| acc + alg.weight(b))
    }

    pub(crate) fn raw(&self) -> &[Factor] {
        &self.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, b) in self.factors() {
            write!(f, "b{b}({m})")?;
        }
        write!(f, "𝟙")
    }
}

/// Sparse combination of PBW monomials.
#[derive(Clone, Default, PartialEq)]
pub struct GradedVector {
    terms: FxHashMap<Monomial, Q>,
}

impl GradedVector {
    pub fn zero() -> GradedVector {
        GradedVector::default()
    }

    pub fn vacuum() -> GradedVector {
        GradedVector::from_monomial(Monomial::vacuum())
    }

    pub fn from_monomial(m: Monomial) -> GradedVector {
        let mut v = GradedVector::zero();
        v.add_term(m, Q::one());
        v
    }

    pub fn add_term(&mut self, m: Monomial, q: Q) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(q);
            }
        }
    }

    pub(crate) fn from_pairs(pairs: Vec<(Monomial, Q)>) -> GradedVector {
        let mut v = GradedVector::zero();
        v.terms.reserve(pairs.len());
        for (m, q) in pairs {
            v.add_term(m, q);
        }
        v
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).copied().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    /// Terms in a deterministic order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Q)> {
        let mut t: Vec<(Monomial, Q)> = self.terms.iter().map(|(m, q)| (m.clone(), *q)).collect();
        t.sort_by(|a, b| a.0.cmp(&b.0));
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, q: Q) -> GradedVector {
        if q.is_zero() {
            return GradedVector::zero();
        }
        GradedVector {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &GradedVector, q: Q) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * q);
        }
    }

    pub fn plus(&self, other: &GradedVector) -> GradedVector {
        let mut out = self.clone();
        out.add_scaled(other, Q::one());
        out
    }

    pub fn minus(&self, other: &GradedVector) -> GradedVector {
        let mut out = self.clone();
        out.add_scaled(other, -Q::one());
        out
    }

    /// Common degree of all monomials; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, q)| TermJson {
                monomial: m.factors().map(|(a, b)| [a as i64, b as i64]).collect(),
                coeff: format_q(&q),
            })
            .collect()
    }

    pub fn from_json(terms: &[TermJson]) -> Result<GradedVector, FockError> {
        let mut v = GradedVector::zero();
        for t in terms {
            let factors: Vec<(i32, usize)> = t
                .monomial
                .iter()
                .map(|[m, b]| (*m as i32, *b as usize))
                .collect();
            let q = parse_q(&t.coeff).ok_or_else(|| FockError::InvalidMonomial(t.coeff.clone()))?;
            v.add_term(Monomial::from_factors(&factors)?, q);
        }
        Ok(v)
    }
}

impl fmt::Debug for GradedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) {m:?}", format_q(q))?;
        }
        Ok(())
    }
}

/// JSON form of one term: `{monomial: [[mode, basis], …], coeff: "p/q"}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermJson {
    pub monomial: Vec<[i64; 2]>,
    pub coeff: String,
}

pub fn format_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((p, q)) => {
            let d: i64 = q.trim().parse().ok()?;
            let n: i64 = p.trim().parse().ok()?;
            (d != 0).then(|| Q::new(n, d))
        }
        None => Some(Q::from_integer(s.trim().parse().ok()?)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurrentAlgebraReport {
    pub a: usize,
    pub m: i32,
    pub b: usize,
    pub n: i32,
    pub pass: bool,
    pub difference_terms: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalReport {
    pub pairings: usize,
    pub nonzero_pairings: usize,
    pub pass: bool,
}

/// `N(k, 0)` for `ĝ_E8` at a fixed exact level, with a degree cap on public operations.
#[derive(Clone, Copy)]
pub struct VacuumModule<'a> {
    alg: &'a Chevalley,
    level: Q,
    cap: u32,
}

impl<'a> VacuumModule<'a> {
    pub fn new(alg: &'a Chevalley, level: Q) -> VacuumModule<'a> {
        VacuumModule {
            alg,
            level,
            cap: DEFAULT_DEGREE_CAP,
        }
    }

    pub fn with_cap(self, cap: u32) -> VacuumModule<'a> {
        VacuumModule { cap, ..self }
    }

    pub fn algebra(&self) -> &'a Chevalley {
        self.alg
    }

    pub fn level(&self) -> Q {
        self.level
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// `coeff · a(n) · f𝟙`, appended unreduced to `out`.
    pub(crate) fn act_into(&self, a: usize, n: i32, f: &[Factor], coeff: Q, out: &mut Vec<(Monomial, Q)>) {
        if n > 0 && n as u32 > packed_degree(f) {
            return;
        }
        if f.is_empty() {
            if n < 0 {
                let mut m = SmallVec::new();
                m.push(pack(n, a));
                out.push((Monomial(m), coeff));
            }
            return;
        }
        if n < 0 {
            let p = pack(n, a);
            if p <= f[0] {
                let mut m: SmallVec<[Factor; 8]> = SmallVec::with_capacity(f.len() + 1);
                m.push(p);
                m.extend_from_slice(f);
                out.push((Monomial(m), coeff));
                return;
            }
        }
        let (m1, b1) = unpack(f[0]);
        let rest = &f[1..];
        // b1(m1) · a(n) rest
        let mut inner = Vec::with_capacity(4);
        self.act_into(a, n, rest, coeff, &mut inner);
        for (mono, q) in inner {
            self.act_into(b1, m1, &mono.0, q, out);
        }
        // [a, b1](n + m1) rest
        for &(k, s) in self.alg.bracket_basis(a, b1) {
            self.act_into(k, n + m1, rest, mul(coeff, s), out);
        }
        if n + m1 == 0 {
            let form = self.alg.form_basis(a, b1);
            if !form.is_zero() {
                out.push((Monomial(rest.into()), coeff * Q::from_integer(n as i64) * form * self.level));
            }
        }
    }

    /// `a(n) v` without the degree-cap check.
    pub(crate) fn act(&self, a: usize, n: i32, v: &GradedVector) -> GradedVector {
        let mut out = Vec::new();
        for (m, q) in v.terms() {
            self.act_into(a, n, m.raw(), *q, &mut out);
        }
        GradedVector::from_pairs(out)
    }

    pub(crate) fn check_cap(&self, v: &GradedVector, n: i32) -> Result<(), FockError> {
        let top = v.max_degree() as i64 - n as i64;
        if top > self.cap as i64 {
            return Err(FockError::DegreeCap {
                degree: top as u32,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// The current `a(n)` for basis index `a` acting on `v`.
    pub fn apply_mode(&self, a: usize, n: i32, v: &GradedVector) -> Result<GradedVector, FockError> {
        self.check_cap(v, n)?;
        Ok(self.act(a, n, v))
    }

    /// `x(n) v` for an arbitrary Lie algebra element `x`.
    pub fn apply_element(&self, x: &LieElement, n: i32, v: &GradedVector) -> Result<GradedVector, FockError> {
        self.check_cap(v, n)?;
        let mut out = Vec::new();
        for (a, c) in x.terms() {
            for (m, q) in v.terms() {
                self.act_into(a, n, m.raw(), c * q, &mut out);
            }
        }
        Ok(GradedVector::from_pairs(out))
    }

    /// `x_1(n_1) x_2(n_2) … x_r(n_r) 𝟙`, applied right to left.
    pub fn word(&self, word: &[(LieElement, i32)]) -> Result<GradedVector, FockError> {
        let mut v = GradedVector::vacuum();
        for (x, n) in word.iter().rev() {
            v = self.apply_element(x, *n, &v)?;
        }
        Ok(v)
    }

    /// Checks `a(m)b(n)v − b(n)a(m)v = [a,b](m+n)v + m(a,b)k δ_{m+n,0} v`.
    pub fn check_current_algebra(
        &self,
        a: usize,
        m: i32,
        b: usize,
        n: i32,
        v: &GradedVector,
    ) -> Result<CurrentAlgebraReport, FockError> {
        self.check_cap(v, m.min(0) + n.min(0))?;
        let lhs = self.act(a, m, &self.act(b, n, v)).minus(&self.act(b, n, &self.act(a, m, v)));
        let mut rhs = GradedVector::zero();
        for &(k, s) in self.alg.bracket_basis(a, b) {
            rhs.add_scaled(&self.act(k, m + n, v), s);
        }
        if m + n == 0 {
            rhs.add_scaled(v, Q::from_integer(m as i64) * self.alg.form_basis(a, b) * self.level);
        }
        let diff = lhs.minus(&rhs);
        Ok(CurrentAlgebraReport {
            a,
            m,
            b,
            n,
            pass: diff.is_zero(),
            difference_terms: diff.len(),
        })
    }

    /// The generators of the positive part of `ĝ_sub`: `e_{γ_i}(0)` for the
    /// simple roots of `sub` and `f_θ(1)` for its highest root.
    fn positive_generators(&self, sub: Label) -> Vec<(LieElement, i32)> {
        let rs = self.alg.root_system(sub);
        let mut gens: Vec<(LieElement, i32)> = rs.simple_roots.iter().map(|g| (self.alg.e(g), 0)).collect();
        gens.push((self.alg.f(&rs.highest_root), 1));
        gens
    }

    /// Annihilated by `e_{γ_i}(0)` for all simple roots of `sub` and by `f_{θ_sub}(1)`.
    pub fn is_singular(&self, v: &GradedVector, sub: Label) -> bool {
        self.positive_generators(sub).iter().all(|(x, n)| {
            let mut out = Vec::new();
            for (a, c) in x.terms() {
                for (m, q) in v.terms() {
                    self.act_into(a, *n, m.raw(), c * q, &mut out);
                }
            }
            GradedVector::from_pairs(out).is_zero()
        })
    }

    /// Basis of the singular vectors for `ĝ_sub` inside the degree-one space `g_E8(−1)𝟙`.
    pub fn find_singular_vectors(&self, degree: u32, sub: Label) -> Result<Vec<GradedVector>, FockError> {
        if degree != 1 {
            return Err(FockError::Unsupported(format!(
                "singular-vector search is implemented at degree 1, not {degree}"
            )));
        }
        let n = self.alg.dim();
        let columns: Vec<GradedVector> = (0..n)
            .map(|b| GradedVector::from_monomial(Monomial(SmallVec::from_slice(&[pack(-1, b)]))))
            .collect();
        let gens = self.positive_generators(sub);
        let mut row_of: FxHashMap<(usize, Monomial), usize> = FxHashMap::default();
        let mut entries: Vec<(usize, usize, Q)> = Vec::new();
        for (col, v) in columns.iter().enumerate() {
            for (g, (x, mode)) in gens.iter().enumerate() {
                let image = self.apply_element(x, *mode, v)?;
                for (m, q) in image.terms() {
                    let next = row_of.len();
                    let row = *row_of.entry((g, m.clone())).or_insert(next);
                    entries.push((row, col, *q));
                }
            }
        }
        let mut mat = Matrix::zeros(row_of.len().max(1), n);
        for (r, c, q) in entries {
            mat[(r, c)] += q;
        }
        Ok(mat
            .nullspace()
            .into_iter()
            .map(|x| {
                let mut v = GradedVector::zero();
                for (b, q) in x.into_iter().enumerate() {
                    v.add_scaled(&columns[b], q);
                }
                v
            })
            .collect())
    }

    /// Contragredient pairing: `⟨𝟙, 𝟙⟩ = 1`, `a(−n)† = a†(n)` with `e_α† = f_α`, `t† = t`.
    /// Pairs of different degree are orthogonal.
    pub fn shapovalov_pair(&self, u: &GradedVector, v: &GradedVector) -> Q {
        let vac = Monomial::vacuum();
        let mut total = Q::zero();
        for (mono, cu) in u.terms() {
            let mut w: Vec<(Monomial, Q)> = v
                .terms()
                .filter(|(m, _)| m.degree() == mono.degree())
                .map(|(m, q)| (m.clone(), *q))
                .collect();
            for (mode, b) in mono.factors() {
                if w.is_empty() {
                    break;
                }
                let (bd, s) = self.alg.dagger(b);
                let mut next = Vec::new();
                for (m, q) in &w {
                    self.act_into(bd, -mode, m.raw(), *q * s, &mut next);
                }
                w = GradedVector::from_pairs(next).terms.into_iter().collect();
            }
            let c: Q = w.iter().filter(|(m, _)| *m == vac).map(|(_, q)| *q).sum();
            total += *cu * c;
        }
        total
    }

    /// Like [`shapovalov_pair`](Self::shapovalov_pair) but rejects inhomogeneous
    /// inputs and degree mismatches.
    pub fn shapovalov_pair_strict(&self, u: &GradedVector, v: &GradedVector) -> Result<Q, FockError> {
        let du = u.degree().ok_or(FockError::NotHomogeneous)?;
        let dv = v.degree().ok_or(FockError::NotHomogeneous)?;
        if du != dv {
            return Err(FockError::DegreeMismatch(du, dv));
        }
        Ok(self.shapovalov_pair(u, v))
    }

    /// Pairs `v` against every vector of `against`; passes when all pairings vanish.
    pub fn radical_check(&self, v: &GradedVector, against: &[GradedVector]) -> RadicalReport {
        let nonzero = against
            .iter()
            .filter(|w| !self.shapovalov_pair(w, v).is_zero())
            .count();
        RadicalReport {
            pairings: against.len(),
            nonzero_pairings: nonzero,
            pass: nonzero == 0,
        }
    }

    /// Radical membership by descent: `v` of degree `d > 0` lies in the radical iff
    /// `b(1) v` does for every basis element `b`, and the radical at degree 0 is zero.
    /// Each level is reduced to a linearly independent set before descending.
    pub fn in_radical_by_descent(&self, v: &GradedVector) -> bool {
        let mut level = vec![v.clone()];
        let mut degree = v.max_degree();
        while degree > 0 {
            let mut next = SparseEchelon::default();
            for w in &level {
                for b in 0..self.alg.dim() {
                    let x = self.act(b, 1, w);
                    if !x.is_zero() {
                        next.insert(x);
                    }
                }
            }
            level = next.rows;
            if level.is_empty() {
                return true;
            }
            degree -= 1;
        }
        level.iter().all(GradedVector::is_zero)
    }

    /// True when `v` pairs to zero with the whole PBW basis of its degree and weights,
    /// i.e. `v` vanishes in the simple quotient `L(k, 0)`.
    pub fn in_radical(&self, v: &GradedVector) -> bool {
        let Some(d) = v.degree() else {
            return v.is_zero();
        };
        let mut weights: Vec<Vec8> = v.terms().map(|(m, _)| m.weight(self.alg)).collect();
        weights.sort();
        weights.dedup();
        weights.iter().all(|w| {
            pbw_basis_of_weight(self.alg, d, w)
                .into_iter()
                .all(|m| self.shapovalov_pair(&GradedVector::from_monomial(m), v).is_zero())
        })
    }
}

/// Incremental row reduction of sparse vectors; rows have zero coefficient at
/// the pivots of all earlier rows.
#[derive(Default)]
pub(crate) struct SparseEchelon {
    pivots: Vec<Monomial>,
    pub(crate) rows: Vec<GradedVector>,
}

impl SparseEchelon {
    /// Adds `w` if it is independent of the current rows; returns whether it was added.
    pub(crate) fn insert(&mut self, mut w: GradedVector) -> bool {
        for (p, r) in self.pivots.iter().zip(&self.rows) {
            let c = w.coeff(p);
            if !c.is_zero() {
                w.add_scaled(r, -c);
            }
        }
        let Some(p) = w.terms.keys().min().cloned() else {
            return false;
        };
        let c = w.coeff(&p);
        self.pivots.push(p);
        self.rows.push(w.scaled(c.recip()));
        true
    }
}

/// All PBW monomials of the given degree whose factors lie in `scope`.
pub fn pbw_basis(alg: &Chevalley, degree: u32, scope: Label) -> Vec<Monomial> {
    let allowed: Vec<usize> = alg.subalgebra_basis(scope);
    let mut out = Vec::new();
    let mut cur: SmallVec<[Factor; 8]> = SmallVec::new();
    fn rec(
        allowed: &[usize],
        remaining: u32,
        min: Factor,
        cur: &mut SmallVec<[Factor; 8]>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial(cur.clone()));
            return;
        }
        for m in (1..=remaining as i32).rev() {
            for &b in allowed {
                let p = pack(-m, b);
                if p < min {
                    continue;
                }
                cur.push(p);
                rec(allowed, remaining - m as u32, p, cur, out);
                cur.pop();
            }
        }
    }
    rec(&allowed, degree, 0, &mut cur, &mut out);
    out
}

pub fn pbw_basis_of_weight(alg: &Chevalley, degree: u32, weight: &Vec8) -> Vec<Monomial> {
    pbw_basis(alg, degree, Label::E8)
        .into_iter()
        .filter(|m| m.weight(alg) == *weight)
        .collect()
}

/// Dimension of the degree-`d` piece of `N(k, 0)` for an algebra of dimension
/// `dim`: the coefficient of `q^d` in `Π_{n≥1} (1 − q^n)^{−dim}`.
pub fn pbw_dimension(dim: u64, degree: u32) -> u128 {
    let d = degree as usize;
    let mut series = vec![0u128; d + 1];
    series[0] = 1;
    for n in 1..=d {
        // multiply by (1 − q^n)^{−dim} = Σ_j C(dim + j − 1, j) q^{nj}
        let mut next = vec![0u128; d + 1];
        for (i, &c) in series.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut binom: u128 = 1;
            let mut j = 0usize;
            while i + n * j <= d {
                next[i + n * j] += c * binom;
                binom = binom * (dim as u128 + j as u128) / (j as u128 + 1);
                j += 1;
            }
        }
        series = next;
    }
    series[d]
}

/// `b(mode)𝟙` style monomial from a single factor.
pub fn single(mode: i32, basis: usize) -> Monomial {
    Monomial(SmallVec::from_slice(&[pack(mode, basis)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::spinor_root;
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn alg() -> &'static Chevalley {
        static ALG: OnceLock<Chevalley> = OnceLock::new();
        ALG.get_or_init(Chevalley::new)
    }

    fn module() -> VacuumModule<'static> {
        VacuumModule::new(alg(), Q::one())
    }

    fn theta() -> Vec8 {
        alg().e8().highest_root
    }

    #[test]
    fn packing_order_is_canonical() {
        assert!(pack(-2, 200) < pack(-1, 0));
        assert!(pack(-1, 3) < pack(-1, 4));
        assert_eq!(unpack(pack(-5, 17)), (-5, 17));
    }

    #[test]
    fn vacuum_is_annihilated() {
        let n = module();
        let e = alg().e(&theta());
        assert!(n.apply_element(&e, 0, &GradedVector::vacuum()).unwrap().is_zero());
        assert!(n.apply_element(&e, 3, &GradedVector::vacuum()).unwrap().is_zero());
    }

    #[test]
    fn f_theta_one_on_e_theta() {
        let n = module();
        let v = n.word(&[(alg().e(&theta()), -1)]).unwrap();
        let w = n.apply_element(&alg().f(&theta()), 1, &v).unwrap();
        assert_eq!(w, GradedVector::vacuum());
    }

    #[test]
    fn creation_builds_monomial() {
        let n = module();
        let v = n.apply_mode(0, -2, &GradedVector::vacuum()).unwrap();
        assert_eq!(v, GradedVector::from_monomial(single(-2, 0)));
        assert_eq!(v.degree(), Some(2));
    }

    #[test]
    fn current_algebra_examples() {
        let n = module();
        let (e, f) = (alg().root_vector(&theta()).unwrap(), alg().root_vector(&-theta()).unwrap());
        let vac = GradedVector::vacuum();
        assert!(n.check_current_algebra(e, 1, f, -1, &vac).unwrap().pass);
        assert!(n.check_current_algebra(0, 2, 0, -2, &vac).unwrap().pass);
        assert!(n.check_current_algebra(0, 0, 5, 0, &vac).unwrap().pass);
        // t_1(2) t_1(−2) 𝟙 = 2k 𝟙
        let w = n.act(0, 2, &n.act(0, -2, &vac));
        assert_eq!(w, vac.scaled(Q::from_integer(2)));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let n = module().with_cap(2);
        let v = n.apply_mode(0, -2, &GradedVector::vacuum()).unwrap();
        assert_eq!(
            n.apply_mode(1, -1, &v),
            Err(FockError::DegreeCap { degree: 3, cap: 2 })
        );
    }

    #[test]
    fn singular_vector_examples() {
        let n = module();
        let e = alg().e(&theta());
        let v = n.word(&[(e.clone(), -1), (e.clone(), -1)]).unwrap();
        assert!(n.is_singular(&v, Label::E8));
        let s = n.word(&[(alg().e(&spinor_root()), -1)]).unwrap();
        assert!(n.is_singular(&s, Label::D8));
        let t = n.word(&[(alg().e(&alg().d8().highest_root), -1)]).unwrap();
        assert!(!n.is_singular(&t, Label::D8));
    }

    #[test]
    fn singular_search_degree_one() {
        let n = module();
        let sols = n.find_singular_vectors(1, Label::D8).unwrap();
        assert_eq!(sols.len(), 1);
        let only = &sols[0];
        assert_eq!(only.len(), 1);
        let (m, _) = only.terms().next().unwrap();
        assert_eq!(m, &single(-1, alg().root_vector(&spinor_root()).unwrap()));
        assert!(n.find_singular_vectors(1, Label::E8).unwrap().is_empty());
        assert!(n.find_singular_vectors(2, Label::D8).is_err());
    }

    #[test]
    fn shapovalov_examples() {
        let n = module();
        let vac = GradedVector::vacuum();
        assert_eq!(n.shapovalov_pair(&vac, &vac), Q::one());
        let v = n.word(&[(alg().e(&theta()), -1)]).unwrap();
        assert_eq!(n.shapovalov_pair(&v, &v), Q::one());
        let t1 = GradedVector::from_monomial(single(-1, 0));
        let t2 = GradedVector::from_monomial(single(-1, 1));
        assert_eq!(n.shapovalov_pair(&t1, &t2), Q::zero());
        assert_eq!(n.shapovalov_pair(&t1, &vac), Q::zero());
        assert_eq!(n.shapovalov_pair_strict(&t1, &vac), Err(FockError::DegreeMismatch(1, 0)));
    }

    #[test]
    fn singular_vector_spans_radical() {
        let n = module();
        let e = alg().e(&theta());
        let v = n.word(&[(e.clone(), -1), (e, -1)]).unwrap();
        assert!(n.in_radical(&v));
        let t = GradedVector::from_monomial(single(-1, 0));
        assert!(!n.in_radical(&t));
    }

    #[test]
    fn degree_two_dimension() {
        let b = pbw_basis(alg(), 2, Label::E8);
        assert_eq!(b.len(), 31_124);
        assert_eq!(pbw_dimension(248, 2), 31_124);
        assert_eq!(pbw_basis(alg(), 1, Label::D8).len(), 120);
        assert_eq!(pbw_dimension(248, 3) as usize, 248 + 248 * 248 + 248 * 249 * 250 / 6);
        assert_eq!(pbw_basis(alg(), 2, Label::D8).len() as u128, pbw_dimension(120, 2));
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn json_round_trip() {
        let n = module();
        let e = alg().e(&theta());
        let v = n.word(&[(e, -2), (LieElement::basis(3), -1)]).unwrap().scaled(Q::new(-3, 7));
        let json = serde_json::to_string(&v.to_json()).unwrap();
        let back: Vec<TermJson> = serde_json::from_str(&json).unwrap();
        assert_eq!(GradedVector::from_json(&back).unwrap(), v);
        assert!(json.contains("\"-3/7\""));
    }

    fn random_word() -> impl Strategy<Value = Vec<(usize, i32)>> {
        proptest::collection::vec((0usize..248, -3i32..=-1), 1..=3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn normal_form_is_confluent(word in random_word(), swap in 0usize..3) {
            // a(m) b(n) w = b(n) a(m) w + [a,b](m+n) w for creation modes
            let n = module();
            let w: Vec<(usize, i32)> = word.iter().copied().filter(|(_, m)| *m < 0).collect();
            prop_assume!(w.len() >= 2);
            let i = swap % (w.len() - 1);
            let build = |ops: &[(usize, i32)]| {
                let mut v = GradedVector::vacuum();
                for &(a, m) in ops.iter().rev() {
                    v = n.act(a, m, &v);
                }
                v
            };
            let direct = build(&w);
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            let mut corrected = build(&swapped);
            let (a, m) = w[i];
            let (b, mm) = w[i + 1];
            let mut tail = GradedVector::vacuum();
            for &(c, k) in w[i + 2..].iter().rev() {
                tail = n.act(c, k, &tail);
            }
            let mut comm = GradedVector::zero();
            for &(k, s) in alg().bracket_basis(a, b) {
                comm.add_scaled(&n.act(k, m + mm, &tail), s);
            }
            for &(c, k) in w[..i].iter().rev() {
                comm = n.act(c, k, &comm);
            }
            corrected.add_scaled(&comm, Q::one());
            prop_assert_eq!(direct, corrected);
        }

        #[test]
        fn grading_is_respected(word in random_word(), a in 0usize..248, mode in -2i32..=2) {
            let n = module();
            let mut v = GradedVector::vacuum();
            for &(b, m) in word.iter().rev() {
                v = n.act(b, m, &v);
            }
            let d = v.degree().unwrap() as i32;
            let w = n.act(a, mode, &v);
            if !w.is_zero() {
                prop_assert_eq!(w.degree(), Some((d - mode) as u32));
            }
        }

        #[test]
        fn shapovalov_symmetric_and_weight_orthogonal(w1 in random_word(), w2 in random_word()) {
            let n = module();
            let build = |ops: &[(usize, i32)]| {
                let mut v = GradedVector::vacuum();
                for &(a, m) in ops.iter().rev() {
                    v = n.act(a, m, &v);
                }
                v
            };
            let (u, v) = (build(&w1), build(&w2));
            let uv = n.shapovalov_pair(&u, &v);
            prop_assert_eq!(uv, n.shapovalov_pair(&v, &u));
            let wu: Vec8 = w1.iter().fold(Vec8::ZERO, |acc, (a, _)| acc + alg().weight(*a));
            let wv: Vec8 = w2.iter().fold(Vec8::ZERO, |acc, (a, _)| acc + alg().weight(*a));
            if wu != wv {
                prop_assert_eq!(uv, Q::zero());
            }
        }
    }

    #[test]
    fn descent_agrees_with_pairing() {
        let alg = alg();
        let m = VacuumModule::new(alg, Q::one());
        let theta = alg.root_vector(&alg.e8().highest_root).unwrap();
        let sing = GradedVector::from_monomial(Monomial::from_factors(&[(-1, theta), (-1, theta)]).unwrap());
        assert!(m.in_radical_by_descent(&sing));
        assert!(m.in_radical(&sing));
        let t = GradedVector::from_monomial(Monomial::from_factors(&[(-1, 0), (-1, 1)]).unwrap());
        assert!(!m.in_radical_by_descent(&t));
        assert!(!m.in_radical(&t));
        let deg3 = m.act(0, -1, &sing);
        assert!(m.in_radical_by_descent(&deg3));
    }
}
