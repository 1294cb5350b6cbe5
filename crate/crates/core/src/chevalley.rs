//! Chevalley basis of `g_E8` (with `g_D8` as the subalgebra spanned by the
//! Cartan and the D8 root vectors) from a bimultiplicative sign cocycle.
//!
//! Basis indices: `0..8` are the Cartan directions `t_i = ε_{i+1}`, then one
//! root vector `e_α` per E8 root, positive roots first in canonical order,
//! then their negatives in the same order. `f_α` is `−e_{−α}`, so that
//! `[e_α, f_α] = h_α` is the Cartan element `α`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::linalg::Matrix;
use crate::roots::{coset_positive_roots, spinor_root, Label, RootSystem};
use crate::vec8::Vec8;
use crate::Q;

pub const RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisElem {
    Cartan(usize),
    Root(Vec8),
}

/// Signs `ε(α_i, α_j)` on simple-root pairs, extended bimultiplicatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    simple: [[i8; RANK]; RANK],
}

impl Cocycle {
    /// `ε(α_i, α_i) = −1`, `ε(α_i, α_j) = 1` for `i < j`, `(−1)^{(α_i, α_j)}` for `i > j`.
    pub fn standard(e8: &RootSystem) -> Cocycle {
        Cocycle::seeded(e8, 0)
    }

    /// Seed 0 is the standard cocycle; any other seed flips the `i < j`
    /// values at random and adjusts `i > j` so that
    /// `ε(α,β)ε(β,α) = (−1)^{(α,β)}` still holds.
    pub fn seeded(e8: &RootSystem, seed: u64) -> Cocycle {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut simple = [[0i8; RANK]; RANK];
        for i in 0..RANK {
            simple[i][i] = -1;
            for j in i + 1..RANK {
                let upper: i8 = if seed == 0 || rng.gen_bool(0.5) { 1 } else { -1 };
                let ip = e8.simple_roots[i].inner(&e8.simple_roots[j]);
                let parity: i8 = if ip.numer() % 2 == 0 { 1 } else { -1 };
                simple[i][j] = upper;
                simple[j][i] = upper * parity;
            }
        }
        Cocycle { simple }
    }

    pub fn on_simple(&self, i: usize, j: usize) -> i8 {
        self.simple[i][j]
    }

    /// `ε(a, b)` for root-lattice vectors given by simple-root coefficients.
    pub fn eval(&self, a: &[i32; RANK], b: &[i32; RANK]) -> i8 {
        let mut odd = 0i64;
        for i in 0..RANK {
            if a[i] == 0 {
                continue;
            }
            for j in 0..RANK {
                if self.simple[i][j] < 0 {
                    odd += a[i] as i64 * b[j] as i64;
                }
            }
        }
        if odd.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// Sparse exact combination of basis vectors; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<usize, Q>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn basis(i: usize) -> Self {
        LieElement::from_terms([(i, Q::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Q)>) -> Self {
        let mut e = LieElement::zero();
        for (i, q) in terms {
            e.add_term(i, q);
        }
        e
    }

    pub fn add_term(&mut self, i: usize, q: Q) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(i).or_insert_with(Q::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.terms.get(&i).copied().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, Q)> + '_ {
        self.terms.iter().map(|(&i, &q)| (i, q))
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

    pub fn scaled(&self, q: Q) -> LieElement {
        LieElement::from_terms(self.terms().map(|(i, c)| (i, c * q)))
    }

    pub fn plus(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (i, q) in other.terms() {
            out.add_term(i, q);
        }
        out
    }

    pub fn minus(&self, other: &LieElement) -> LieElement {
        self.plus(&other.scaled(-Q::one()))
    }
}

/// `g_E8` with structure constants from a fixed cocycle.
#[derive(Clone, Debug)]
pub struct Chevalley {
    e8: RootSystem,
    d8: RootSystem,
    cocycle: Cocycle,
    basis: Vec<BasisElem>,
    root_index: FxHashMap<Vec8, usize>,
    coefficients: Vec<[i32; RANK]>,
    in_d8: Vec<bool>,
    table: Vec<Vec<(usize, Q)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Full,
    Sampled { n: u64, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiReport {
    pub scope: Label,
    pub mode: CheckMode,
    pub triples_checked: u64,
    pub pass: bool,
    /// First violating basis triple, if any.
    pub counterexample: Option<[usize; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub scope: Label,
    pub mode: CheckMode,
    pub triples_checked: u64,
    pub pass: bool,
    pub counterexample: Option<[usize; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2Report {
    pub roots_checked: usize,
    pub pass: bool,
    pub failures: Vec<Vec8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingAdjointReport {
    pub dim_e8: usize,
    pub dim_d8: usize,
    pub dim_coset: usize,
    pub d8_closed: bool,
    pub coset_stable: bool,
    /// Dimension of the common kernel of `ad e_{β_i}` on the coset span.
    pub highest_weight_space_dim: usize,
    pub highest_weight_vector: Option<Vec8>,
    pub highest_weight_is_omega8: bool,
    pub pass: bool,
}

/// One structure constant `[e_α, e_β] = ε(α,β) e_{α+β}`.
#[derive(Clone, Debug, Serialize)]
pub struct StructureConstant {
    pub alpha: Vec8,
    pub beta: Vec8,
    pub sign: i8,
}

impl Chevalley {
    pub fn new() -> Chevalley {
        let e8 = RootSystem::build(Label::E8);
        let cocycle = Cocycle::standard(&e8);
        Chevalley::with_cocycle(cocycle)
    }

    pub fn with_seed(seed: u64) -> Chevalley {
        let e8 = RootSystem::build(Label::E8);
        Chevalley::with_cocycle(Cocycle::seeded(&e8, seed))
    }

    pub fn with_cocycle(cocycle: Cocycle) -> Chevalley {
        let e8 = RootSystem::build(Label::E8);
        let d8 = RootSystem::build(Label::D8);
        let mut basis: Vec<BasisElem> = (0..RANK).map(BasisElem::Cartan).collect();
        basis.extend(e8.all_roots().into_iter().map(BasisElem::Root));
        let mut root_index = FxHashMap::default();
        let mut coefficients = vec![[0; RANK]; basis.len()];
        let mut in_d8 = vec![false; basis.len()];
        for (i, b) in basis.iter().enumerate() {
            match b {
                BasisElem::Cartan(_) => in_d8[i] = true,
                BasisElem::Root(r) => {
                    root_index.insert(*r, i);
                    coefficients[i] = e8.simple_coefficients(r).expect("root lattice");
                    in_d8[i] = d8.is_root(r);
                }
            }
        }
        let mut alg = Chevalley {
            e8,
            d8,
            cocycle,
            basis,
            root_index,
            coefficients,
            in_d8,
            table: Vec::new(),
        };
        let n = alg.dim();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(alg.compute_bracket(i, j));
            }
        }
        alg.table = table;
        alg
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn e8(&self) -> &RootSystem {
        &self.e8
    }

    pub fn d8(&self) -> &RootSystem {
        &self.d8
    }

    pub fn root_system(&self, label: Label) -> &RootSystem {
        match label {
            Label::E8 => &self.e8,
            Label::D8 => &self.d8,
        }
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn basis_elem(&self, i: usize) -> BasisElem {
        self.basis[i]
    }

    pub fn cartan(&self, i: usize) -> usize {
        assert!(i < RANK);
        i
    }

    /// Basis index of `e_α`.
    pub fn root_vector(&self, alpha: &Vec8) -> Option<usize> {
        self.root_index.get(alpha).copied()
    }

    fn expect_root(&self, alpha: &Vec8) -> usize {
        self.root_vector(alpha)
            .unwrap_or_else(|| panic!("{alpha} is not an E8 root"))
    }

    pub fn e(&self, alpha: &Vec8) -> LieElement {
        LieElement::basis(self.expect_root(alpha))
    }

    pub fn f(&self, alpha: &Vec8) -> LieElement {
        LieElement::from_terms([(self.expect_root(&-*alpha), -Q::one())])
    }

    /// The Cartan element with coordinates `v` (for a root this is `h_α`).
    pub fn h(&self, v: &Vec8) -> LieElement {
        LieElement::from_terms((0..RANK).map(|i| (i, v.coord(i))))
    }

    /// Cartan weight of a basis vector (zero for Cartan directions).
    pub fn weight(&self, i: usize) -> Vec8 {
        match self.basis[i] {
            BasisElem::Cartan(_) => Vec8::ZERO,
            BasisElem::Root(r) => r,
        }
    }

    pub fn in_d8(&self, i: usize) -> bool {
        self.in_d8[i]
    }

    pub fn in_subalgebra(&self, i: usize, label: Label) -> bool {
        match label {
            Label::E8 => true,
            Label::D8 => self.in_d8[i],
        }
    }

    /// Basis indices spanning the subalgebra.
    pub fn subalgebra_basis(&self, label: Label) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.in_subalgebra(i, label)).collect()
    }

    /// `(x, x*)` with `(x, x*) = 1` under the invariant form: `t_i* = t_i`, `e_β* = −e_{−β}`.
    pub fn dual(&self, i: usize) -> (usize, Q) {
        match self.basis[i] {
            BasisElem::Cartan(_) => (i, Q::one()),
            BasisElem::Root(r) => (self.root_index[&-r], -Q::one()),
        }
    }

    /// Chevalley anti-involution: `t† = t`, `e_α† = f_α = −e_{−α}` for every root.
    pub fn dagger(&self, i: usize) -> (usize, Q) {
        self.dual(i)
    }

    fn compute_bracket(&self, i: usize, j: usize) -> Vec<(usize, Q)> {
        match (self.basis[i], self.basis[j]) {
            (BasisElem::Cartan(_), BasisElem::Cartan(_)) => Vec::new(),
            (BasisElem::Cartan(a), BasisElem::Root(r)) => {
                let c = r.coord(a);
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(j, c)]
                }
            }
            (BasisElem::Root(r), BasisElem::Cartan(a)) => {
                let c = r.coord(a);
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(i, -c)]
                }
            }
            (BasisElem::Root(a), BasisElem::Root(b)) => {
                let sum = a + b;
                let sign = Q::from_integer(
                    self.cocycle.eval(&self.coefficients[i], &self.coefficients[j]) as i64,
                );
                if sum.is_zero() {
                    (0..RANK)
                        .filter(|&k| a.doubled()[k] != 0)
                        .map(|k| (k, sign * a.coord(k)))
                        .collect()
                } else if let Some(&k) = self.root_index.get(&sum) {
                    vec![(k, sign)]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// `[b_i, b_j]` for basis vectors, as sparse terms.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                for &(k, c) in self.bracket_basis(i, j) {
                    out.add_term(k, a * b * c);
                }
            }
        }
        out
    }

    /// Invariant form on basis vectors, normalized so that `(θ, θ) = 2`.
    pub fn form_basis(&self, i: usize, j: usize) -> Q {
        match (self.basis[i], self.basis[j]) {
            (BasisElem::Cartan(a), BasisElem::Cartan(b)) => {
                if a == b {
                    Q::one()
                } else {
                    Q::zero()
                }
            }
            (BasisElem::Root(a), BasisElem::Root(b)) if (a + b).is_zero() => -Q::one(),
            _ => Q::zero(),
        }
    }

    pub fn invariant_form(&self, x: &LieElement, y: &LieElement) -> Q {
        let mut acc = Q::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let f = self.form_basis(i, j);
                if !f.is_zero() {
                    acc += a * b * f;
                }
            }
        }
        acc
    }

    fn jacobi_holds(&self, x: usize, y: usize, z: usize) -> bool {
        let mut acc: Vec<(usize, Q)> = Vec::new();
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            for &(k, q) in self.bracket_basis(b, c) {
                for &(l, r) in self.bracket_basis(a, k) {
                    acc.push((l, q * r));
                }
            }
        }
        acc.sort_by_key(|t| t.0);
        let mut i = 0;
        while i < acc.len() {
            let mut s = Q::zero();
            let k = acc[i].0;
            while i < acc.len() && acc[i].0 == k {
                s += acc[i].1;
                i += 1;
            }
            if !s.is_zero() {
                return false;
            }
        }
        true
    }

    fn triples(&self, scope: Label, mode: CheckMode) -> Box<dyn Iterator<Item = [usize; 3]> + '_> {
        let idx = self.subalgebra_basis(scope);
        match mode {
            CheckMode::Full => {
                let n = idx.len();
                Box::new((0..n * n * n).map(move |t| [idx[t / (n * n)], idx[(t / n) % n], idx[t % n]]))
            }
            CheckMode::Sampled { n, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Box::new((0..n).map(move |_| {
                    [
                        idx[rng.gen_range(0..idx.len())],
                        idx[rng.gen_range(0..idx.len())],
                        idx[rng.gen_range(0..idx.len())],
                    ]
                }))
            }
        }
    }

    /// Jacobi identity on basis triples of `g_E8` or `g_D8`.
    pub fn check_jacobi(&self, scope: Label, mode: CheckMode) -> JacobiReport {
        let mut checked = 0u64;
        let mut counterexample = None;
        for [x, y, z] in self.triples(scope, mode) {
            checked += 1;
            if !self.jacobi_holds(x, y, z) {
                counterexample = Some([x, y, z]);
                break;
            }
        }
        JacobiReport {
            scope,
            mode,
            triples_checked: checked,
            pass: counterexample.is_none(),
            counterexample,
        }
    }

    /// `(x, [y, z]) = ([x, y], z)` on basis triples.
    pub fn check_invariance(&self, scope: Label, mode: CheckMode) -> InvarianceReport {
        let mut checked = 0u64;
        let mut counterexample = None;
        let pair = |i: usize, terms: &[(usize, Q)], left: bool| -> Q {
            terms.iter().fold(Q::zero(), |acc, &(k, q)| {
                acc + q * if left { self.form_basis(k, i) } else { self.form_basis(i, k) }
            })
        };
        for [x, y, z] in self.triples(scope, mode) {
            checked += 1;
            let lhs = pair(x, self.bracket_basis(y, z), false);
            let rhs = pair(z, self.bracket_basis(x, y), true);
            if lhs != rhs {
                counterexample = Some([x, y, z]);
                break;
            }
        }
        InvarianceReport {
            scope,
            mode,
            triples_checked: checked,
            pass: counterexample.is_none(),
            counterexample,
        }
    }

    /// `[h_α, e_α] = 2e_α`, `[h_α, f_α] = −2f_α`, `[e_α, f_α] = h_α` for all positive roots.
    pub fn check_sl2(&self) -> Sl2Report {
        let mut failures = Vec::new();
        let two = Q::from_integer(2);
        for a in &self.e8.positive_roots {
            let (e, f, h) = (self.e(a), self.f(a), self.h(a));
            let ok = self.bracket(&h, &e) == e.scaled(two)
                && self.bracket(&h, &f) == f.scaled(-two)
                && self.bracket(&e, &f) == h;
            if !ok {
                failures.push(*a);
            }
        }
        Sl2Report {
            roots_checked: self.e8.positive_roots.len(),
            pass: failures.is_empty(),
            failures,
        }
    }

    /// Coefficient of `e_{α'}` in `[f_α, [e_α, e_{α'}]]`.
    pub fn double_bracket_e(&self, alpha: &Vec8, alpha_prime: &Vec8) -> Q {
        let inner = self.bracket(&self.e(alpha), &self.e(alpha_prime));
        self.bracket(&self.f(alpha), &inner)
            .coeff(self.expect_root(alpha_prime))
    }

    /// Coefficient of `f_{α'}` in `[e_α, [f_α, f_{α'}]]`.
    pub fn double_bracket_f(&self, alpha: &Vec8, alpha_prime: &Vec8) -> Q {
        let inner = self.bracket(&self.f(alpha), &self.f(alpha_prime));
        let outer = self.bracket(&self.e(alpha), &inner);
        // f_{α'} = −e_{−α'}
        -outer.coeff(self.expect_root(&-*alpha_prime))
    }

    /// Adjoint decomposition `g_E8 = g_D8 ⊕ V(ω̄8)` on the level of basis vectors.
    pub fn check_branching_adjoint(&self) -> BranchingAdjointReport {
        let n = self.dim();
        let d8_idx: Vec<usize> = (0..n).filter(|&i| self.in_d8[i]).collect();
        let coset_idx: Vec<usize> = (0..n).filter(|&i| !self.in_d8[i]).collect();
        let d8_closed = d8_idx.iter().all(|&x| {
            d8_idx
                .iter()
                .all(|&y| self.bracket_basis(x, y).iter().all(|&(k, _)| self.in_d8[k]))
        });
        let coset_stable = d8_idx.iter().all(|&x| {
            coset_idx
                .iter()
                .all(|&y| self.bracket_basis(x, y).iter().all(|&(k, _)| !self.in_d8[k]))
        });
        // stack ad e_{β_i} restricted to the coset span: rows (i, output coset index)
        let pos: FxHashMap<usize, usize> = coset_idx.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let m = coset_idx.len();
        let mut mat = Matrix::zeros(RANK * m, m);
        for (s, beta) in self.d8.simple_roots.iter().enumerate() {
            let eb = self.expect_root(beta);
            for (col, &y) in coset_idx.iter().enumerate() {
                for &(k, q) in self.bracket_basis(eb, y) {
                    if let Some(&row) = pos.get(&k) {
                        mat[(s * m + row, col)] += q;
                    }
                }
            }
        }
        let kernel = mat.nullspace();
        let highest_weight_vector = if kernel.len() == 1 {
            let support: Vec<usize> = kernel[0]
                .iter()
                .enumerate()
                .filter(|(_, q)| !q.is_zero())
                .map(|(c, _)| coset_idx[c])
                .collect();
            match support.as_slice() {
                [single] => Some(self.weight(*single)),
                _ => None,
            }
        } else {
            None
        };
        let omega8 = self.d8.fundamental_weights[7];
        let highest_weight_is_omega8 = highest_weight_vector == Some(omega8) && omega8 == spinor_root();
        let coset_roots = coset_positive_roots(&self.e8, &self.d8).len();
        let pass = n == 248
            && d8_idx.len() == 120
            && coset_idx.len() == 128
            && coset_roots * 2 == coset_idx.len()
            && d8_closed
            && coset_stable
            && kernel.len() == 1
            && highest_weight_is_omega8;
        BranchingAdjointReport {
            dim_e8: n,
            dim_d8: d8_idx.len(),
            dim_coset: coset_idx.len(),
            d8_closed,
            coset_stable,
            highest_weight_space_dim: kernel.len(),
            highest_weight_vector,
            highest_weight_is_omega8,
            pass,
        }
    }

    /// All `(α, β, ε(α,β))` with `α + β` a root.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let roots = self.e8.all_roots();
        let mut out = Vec::new();
        for a in &roots {
            for b in &roots {
                if self.root_index.contains_key(&(*a + *b)) {
                    let (i, j) = (self.root_index[a], self.root_index[b]);
                    out.push(StructureConstant {
                        alpha: *a,
                        beta: *b,
                        sign: self.cocycle.eval(&self.coefficients[i], &self.coefficients[j]),
                    });
                }
            }
        }
        out
    }

    /// Dense matrix of `ad x` in the basis order; used as an independent oracle.
    pub fn ad_matrix(&self, x: &LieElement) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for col in 0..n {
            for (k, q) in self.bracket(x, &LieElement::basis(col)).terms() {
                m[(k, col)] = q;
            }
        }
        m
    }
}

impl Default for Chevalley {
    fn default() -> Self {
        Chevalley::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Chevalley {
        Chevalley::new()
    }

    #[test]
    fn cocycle_properties() {
        let c = alg();
        let roots = c.e8().all_roots();
        for a in roots.iter().step_by(7) {
            let ca = c.e8().simple_coefficients(a).unwrap();
            assert_eq!(c.cocycle().eval(&ca, &ca), -1);
            for b in roots.iter().step_by(11) {
                let cb = c.e8().simple_coefficients(b).unwrap();
                let ab = c.cocycle().eval(&ca, &cb) * c.cocycle().eval(&cb, &ca);
                let expected = if a.inner(b).numer() % 2 == 0 { 1 } else { -1 };
                assert_eq!(ab, expected);
            }
        }
        assert_eq!(c.cocycle().on_simple(0, 1), 1);
        assert_eq!(c.cocycle().on_simple(1, 0), -1);
        assert_eq!(c.cocycle().on_simple(0, 3), 1);
        assert_eq!(c.cocycle().on_simple(3, 0), 1);
    }

    #[test]
    fn seeded_cocycle_differs_but_is_consistent() {
        let e8 = RootSystem::build(Label::E8);
        let a = Cocycle::seeded(&e8, 7);
        assert_ne!(a, Cocycle::standard(&e8));
        for i in 0..RANK {
            assert_eq!(a.on_simple(i, i), -1);
            for j in 0..RANK {
                if i != j {
                    let ip = e8.simple_roots[i].inner(&e8.simple_roots[j]);
                    let parity = if ip.numer() % 2 == 0 { 1 } else { -1 };
                    assert_eq!(a.on_simple(i, j) * a.on_simple(j, i), parity);
                }
            }
        }
    }

    #[test]
    fn sl2_triples() {
        let c = alg();
        let theta = c.e8().highest_root;
        let two = Q::from_integer(2);
        for a in &c.e8().all_roots() {
            assert_eq!(c.bracket(&c.h(a), &c.e(a)), c.e(a).scaled(two));
        }
        assert_eq!(c.bracket(&c.e(&theta), &c.f(&theta)), c.h(&theta));
        assert!(c.check_sl2().pass);
    }

    #[test]
    fn alpha_string_of_length_two() {
        let c = alg();
        let a = Vec8::unit(6) + Vec8::unit(7);
        let ap = Vec8::from_doubled([1, 1, 1, 1, 1, 1, -1, -1]);
        let inner = c.bracket(&c.e(&a), &c.e(&ap));
        assert_eq!(c.bracket(&c.f(&a), &inner), c.e(&ap));
    }

    #[test]
    fn form_examples() {
        let c = alg();
        let theta = c.e8().highest_root;
        assert_eq!(c.invariant_form(&c.e(&theta), &c.f(&theta)), Q::one());
        assert_eq!(c.invariant_form(&LieElement::basis(0), &LieElement::basis(0)), Q::one());
        assert_eq!(c.invariant_form(&c.e(&theta), &c.e(&theta)), Q::zero());
        assert_eq!(c.invariant_form(&c.h(&theta), &c.h(&theta)), Q::from_integer(2));
    }

    #[test]
    fn all_cartan_triples_trivial() {
        let c = alg();
        assert!(c.jacobi_holds(0, 1, 2));
        assert!(c.bracket_basis(3, 5).is_empty());
    }

    #[test]
    fn jacobi_sampled_e8() {
        let c = alg();
        let r = c.check_jacobi(Label::E8, CheckMode::Sampled { n: 20_000, seed: 1 });
        assert!(r.pass, "{r:?}");
        assert_eq!(r.triples_checked, 20_000);
    }

    #[test]
    fn broken_structure_constant_is_caught() {
        let mut c = alg();
        let n = c.dim();
        // flip one sign without its antisymmetric partner
        let i = 8;
        let k = (8..n).find(|&j| !c.table[i * n + j].is_empty()).unwrap();
        for t in c.table[i * n + k].iter_mut() {
            t.1 = -t.1;
        }
        let r = c.check_jacobi(Label::E8, CheckMode::Full);
        assert!(!r.pass);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn branching_adjoint() {
        let c = alg();
        let r = c.check_branching_adjoint();
        assert!(r.pass, "{r:?}");
        let b1 = c.d8().simple_roots[0];
        assert!(c.bracket(&c.e(&b1), &c.e(&spinor_root())).is_zero());
    }

    #[test]
    fn structure_constants_export() {
        let c = alg();
        let sc = c.structure_constants();
        // each root has 56 partners with (α,β) = −1... ordered pairs: 240·56
        assert_eq!(sc.len(), 240 * 56);
        assert!(sc.iter().all(|s| s.sign == 1 || s.sign == -1));
    }
}
