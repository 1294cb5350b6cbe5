//! Root data of `g_E8` and `g_D8` in a shared ambient space `R^8`.
//!
//! Both systems use the orthonormal basis `ε1, …, ε8`:
//!
//! * D8 roots are `±ε_i ± ε_j`, positive when of the form `ε_i ± ε_j` with `i < j`.
//! * E8 adds the 128 vectors `±(1/2)(ε1 ± ε2 ± … ± ε8)` with an even number of minus
//!   signs; the positive ones are those with `+ε1`.
//!
//! Simple roots:
//!
//! * E8: `α_i = ε_{i+1} − ε_{i+2}` for `i = 1..6`, `α7 = (1/2)(ε1 + ε8 − ε2 − … − ε7)`,
//!   `α8 = ε7 + ε8`.
//! * D8: `β_i = ε_i − ε_{i+1}` for `i = 1..7`, `β8 = ε7 + ε8`.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::vec8::Vec8;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    E8,
    D8,
}

impl Label {
    pub fn parse(s: &str) -> Option<Label> {
        match s.to_ascii_uppercase().as_str() {
            "E8" => Some(Label::E8),
            "D8" => Some(Label::D8),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::E8 => write!(f, "E8"),
            Label::D8 => write!(f, "D8"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("coroot of a zero-norm vector is undefined")]
    ZeroNorm,
}

/// `⟨β, α∨⟩ = 2(β, α)/(α, α)`.
pub fn pairing(beta: &Vec8, alpha: &Vec8) -> Result<Q, RootError> {
    let n = alpha.norm();
    if n.is_zero() {
        return Err(RootError::ZeroNorm);
    }
    Ok(Q::from_integer(2) * beta.inner(alpha) / n)
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: Label,
    /// Ordered by height, then lexicographically on doubled coordinates.
    pub positive_roots: Vec<Vec8>,
    pub simple_roots: Vec<Vec8>,
    pub highest_root: Vec8,
    pub fundamental_weights: Vec<Vec8>,
    pub weyl_vector: Vec8,
    pub dual_coxeter: u32,
    pub dimension: usize,
    /// Expansion coefficients of each positive root over the simple roots.
    coefficients: Vec<[i32; 8]>,
}

fn d8_positive() -> Vec<Vec8> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            out.push(Vec8::unit(i) + Vec8::unit(j));
            out.push(Vec8::unit(i) - Vec8::unit(j));
        }
    }
    out
}

fn spinor_positive() -> Vec<Vec8> {
    // +ε1 fixed, even number of minus signs among ε2..ε8
    (0u32..128)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| {
            let mut minus = [false; 8];
            for (k, slot) in minus.iter_mut().enumerate().skip(1) {
                *slot = m & (1 << (k - 1)) != 0;
            }
            Vec8::half_signs(minus)
        })
        .collect()
}

fn e8_simple() -> Vec<Vec8> {
    let mut s: Vec<Vec8> = (1..7).map(|i| Vec8::unit(i) - Vec8::unit(i + 1)).collect();
    s.push(Vec8::from_doubled([1, -1, -1, -1, -1, -1, -1, 1]));
    s.push(Vec8::unit(6) + Vec8::unit(7));
    s
}

fn d8_simple() -> Vec<Vec8> {
    let mut s: Vec<Vec8> = (0..7).map(|i| Vec8::unit(i) - Vec8::unit(i + 1)).collect();
    s.push(Vec8::unit(6) + Vec8::unit(7));
    s
}

fn e8_fundamental_weights() -> Vec<Vec8> {
    vec![
        Vec8::from_integers([1, 1, 0, 0, 0, 0, 0, 0]),
        Vec8::from_integers([2, 1, 1, 0, 0, 0, 0, 0]),
        Vec8::from_integers([3, 1, 1, 1, 0, 0, 0, 0]),
        Vec8::from_integers([4, 1, 1, 1, 1, 0, 0, 0]),
        Vec8::from_integers([5, 1, 1, 1, 1, 1, 0, 0]),
        Vec8::from_doubled([7, 1, 1, 1, 1, 1, 1, -1]),
        Vec8::from_integers([2, 0, 0, 0, 0, 0, 0, 0]),
        Vec8::from_doubled([5, 1, 1, 1, 1, 1, 1, 1]),
    ]
}

fn d8_fundamental_weights() -> Vec<Vec8> {
    let mut w: Vec<Vec8> = (1..=6)
        .map(|k| {
            let mut c = [0; 8];
            c[..k].fill(1);
            Vec8::from_integers(c)
        })
        .collect();
    w.push(Vec8::from_doubled([1, 1, 1, 1, 1, 1, 1, -1]));
    w.push(Vec8::from_doubled([1; 8]));
    w
}

impl RootSystem {
    pub fn build(label: Label) -> RootSystem {
        let (positive, simple, weights, dual_coxeter) = match label {
            Label::E8 => {
                let mut p = d8_positive();
                p.extend(spinor_positive());
                (p, e8_simple(), e8_fundamental_weights(), 30)
            }
            Label::D8 => (d8_positive(), d8_simple(), d8_fundamental_weights(), 14),
        };
        let gram = Matrix::from_rows(
            &simple
                .iter()
                .map(|a| simple.iter().map(|b| a.inner(b)).collect())
                .collect::<Vec<_>>(),
        );
        let mut with_coeffs: Vec<(Vec8, [i32; 8])> = positive
            .into_iter()
            .map(|r| {
                let rhs: Vec<Q> = simple.iter().map(|a| a.inner(&r)).collect();
                let x = gram.solve(&rhs).expect("simple roots are a basis");
                let c = std::array::from_fn(|i| {
                    assert!(x[i].is_integer(), "root {r} is not in the root lattice");
                    *x[i].numer() as i32
                });
                (r, c)
            })
            .collect();
        with_coeffs.sort_by_key(|(r, c)| (c.iter().sum::<i32>(), r.doubled()));
        let highest_root = with_coeffs.last().expect("nonempty").0;
        let twice_rho = with_coeffs.iter().fold(Vec8::ZERO, |acc, (r, _)| acc + *r);
        let weyl_vector = Vec8::from_doubled(twice_rho.doubled().map(|c| {
            debug_assert!(c % 2 == 0);
            c / 2
        }));
        let dimension = 8 + 2 * with_coeffs.len();
        RootSystem {
            label,
            positive_roots: with_coeffs.iter().map(|(r, _)| *r).collect(),
            coefficients: with_coeffs.into_iter().map(|(_, c)| c).collect(),
            simple_roots: simple,
            highest_root,
            fundamental_weights: weights,
            weyl_vector,
            dual_coxeter,
            dimension,
        }
    }

    pub fn rank(&self) -> usize {
        8
    }

    /// Positive roots followed by their negatives.
    pub fn all_roots(&self) -> Vec<Vec8> {
        self.positive_roots
            .iter()
            .copied()
            .chain(self.positive_roots.iter().map(|r| -*r))
            .collect()
    }

    pub fn is_root(&self, v: &Vec8) -> bool {
        self.positive_roots.contains(v) || self.positive_roots.contains(&-*v)
    }

    /// Coefficients of a root-lattice vector over the simple roots.
    pub fn simple_coefficients(&self, v: &Vec8) -> Option<[i32; 8]> {
        if let Some(i) = self.positive_roots.iter().position(|r| r == v) {
            return Some(self.coefficients[i]);
        }
        let gram = Matrix::from_rows(
            &self
                .simple_roots
                .iter()
                .map(|a| self.simple_roots.iter().map(|b| a.inner(b)).collect())
                .collect::<Vec<_>>(),
        );
        let rhs: Vec<Q> = self.simple_roots.iter().map(|a| a.inner(v)).collect();
        let x = gram.solve(&rhs)?;
        let mut c = [0; 8];
        for (slot, q) in c.iter_mut().zip(&x) {
            if !q.is_integer() {
                return None;
            }
            *slot = *q.numer() as i32;
        }
        Some(c)
    }

    pub fn height(&self, root: &Vec8) -> Option<i32> {
        self.simple_coefficients(root).map(|c| c.iter().sum())
    }

    /// Vector form of `Σ c_i ω_i`.
    pub fn weight_from_coefficients(&self, coeffs: &[u32; 8]) -> Vec8 {
        self.fundamental_weights
            .iter()
            .zip(coeffs)
            .fold(Vec8::ZERO, |acc, (w, &c)| acc + w.scale(c as i32))
    }

    /// Weyl dimension formula `Π_{α>0} (λ+ρ, α)/(ρ, α)`.
    pub fn weyl_dimension(&self, highest_weight: &Vec8) -> Q {
        let shifted = *highest_weight + self.weyl_vector;
        self.positive_roots
            .iter()
            .map(|a| shifted.inner(a) / self.weyl_vector.inner(a))
            .fold(Q::one(), |acc, x| acc * x)
    }

    pub fn to_export(&self) -> RootSystemExport {
        RootSystemExport {
            label: self.label,
            simple_roots: self.simple_roots.clone(),
            positive_roots: self.positive_roots.clone(),
            highest_root: self.highest_root,
            fundamental_weights: self.fundamental_weights.clone(),
            h_dual: self.dual_coxeter,
            dim: self.dimension,
        }
    }
}

/// JSON shape of an exported root system; coordinates are `"p/2"` strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RootSystemExport {
    pub label: Label,
    pub simple_roots: Vec<Vec8>,
    pub positive_roots: Vec<Vec8>,
    pub highest_root: Vec8,
    pub fundamental_weights: Vec<Vec8>,
    pub h_dual: u32,
    pub dim: usize,
}

/// The 64 positive E8 roots outside D8, in E8 canonical order.
pub fn coset_positive_roots(e8: &RootSystem, d8: &RootSystem) -> Vec<Vec8> {
    let d8_set: HashSet<Vec8> = d8.positive_roots.iter().copied().collect();
    e8.positive_roots
        .iter()
        .filter(|r| !d8_set.contains(r))
        .copied()
        .collect()
}

/// `{ε1±ε2, ε3±ε4, ε5±ε6, ε7±ε8}`: eight mutually orthogonal D8 roots whose
/// coroots scaled by `1/√2` form an orthonormal basis of the Cartan.
pub fn underlined_d8_roots() -> [Vec8; 8] {
    std::array::from_fn(|k| {
        let i = 2 * (k / 2);
        if k % 2 == 0 {
            Vec8::unit(i) + Vec8::unit(i + 1)
        } else {
            Vec8::unit(i) - Vec8::unit(i + 1)
        }
    })
}

/// The all-plus spinor root `(1/2)(ε1 + … + ε8)`.
pub fn spinor_root() -> Vec8 {
    Vec8::from_doubled([1; 8])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_constants() {
        let e8 = RootSystem::build(Label::E8);
        let d8 = RootSystem::build(Label::D8);
        assert_eq!(e8.positive_roots.len(), 120);
        assert_eq!(d8.positive_roots.len(), 56);
        assert_eq!((e8.dimension, e8.dual_coxeter), (248, 30));
        assert_eq!((d8.dimension, d8.dual_coxeter), (120, 14));
    }

    #[test]
    fn highest_roots() {
        let e8 = RootSystem::build(Label::E8);
        let d8 = RootSystem::build(Label::D8);
        let theta = Vec8::from_integers([1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(e8.highest_root, theta);
        assert_eq!(d8.highest_root, theta);
        assert_eq!(e8.simple_coefficients(&theta), Some([2, 3, 4, 5, 6, 4, 2, 3]));
        assert_eq!(d8.simple_coefficients(&theta), Some([1, 2, 2, 2, 2, 2, 1, 1]));
    }

    #[test]
    fn highest_root_dominates() {
        for label in [Label::E8, Label::D8] {
            let rs = RootSystem::build(label);
            let top = rs.simple_coefficients(&rs.highest_root).unwrap();
            for r in &rs.positive_roots {
                let c = rs.simple_coefficients(r).unwrap();
                assert!(c.iter().all(|&x| x >= 0));
                assert!(c.iter().zip(top.iter()).all(|(a, b)| a <= b));
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual() {
        for label in [Label::E8, Label::D8] {
            let rs = RootSystem::build(label);
            for (i, w) in rs.fundamental_weights.iter().enumerate() {
                for (j, a) in rs.simple_roots.iter().enumerate() {
                    let expected = if i == j { Q::one() } else { Q::zero() };
                    assert_eq!(pairing(w, a).unwrap(), expected, "{label} ω{} α{}", i + 1, j + 1);
                }
            }
        }
    }

    #[test]
    fn inner_examples() {
        let d8 = RootSystem::build(Label::D8);
        let theta = d8.highest_root;
        assert_eq!(theta.inner(&theta), Q::from_integer(2));
        assert_eq!(Vec8::unit(0).inner(&Vec8::unit(1)), Q::zero());
        assert_eq!(d8.weyl_vector, Vec8::from_integers([7, 6, 5, 4, 3, 2, 1, 0]));
        let w8 = d8.fundamental_weights[7];
        let shifted = w8 + d8.weyl_vector + d8.weyl_vector;
        assert_eq!(w8.inner(&shifted), Q::from_integer(30));
    }

    #[test]
    fn pairing_examples() {
        let d8 = RootSystem::build(Label::D8);
        let theta = d8.highest_root;
        assert_eq!(pairing(&d8.fundamental_weights[0], &theta).unwrap(), Q::one());
        assert_eq!(pairing(&d8.fundamental_weights[1], &theta).unwrap(), Q::from_integer(2));
        for r in &d8.positive_roots {
            assert_eq!(pairing(r, r).unwrap(), Q::from_integer(2));
        }
        assert_eq!(pairing(&theta, &Vec8::ZERO), Err(RootError::ZeroNorm));
    }

    #[test]
    fn coset_and_underlined() {
        let e8 = RootSystem::build(Label::E8);
        let d8 = RootSystem::build(Label::D8);
        let coset = coset_positive_roots(&e8, &d8);
        assert_eq!(coset.len(), 64);
        assert!(coset.contains(&spinor_root()));
        assert!(coset.iter().all(|r| !d8.positive_roots.contains(r)));
        assert!(coset.iter().all(|r| r.is_half_odd() && r.doubled()[0] == 1));
        let u = underlined_d8_roots();
        for (i, a) in u.iter().enumerate() {
            assert!(d8.positive_roots.contains(a));
            for (j, b) in u.iter().enumerate() {
                let expected = if i == j { 2 } else { 0 };
                assert_eq!(a.inner(b), Q::from_integer(expected));
            }
        }
    }

    #[test]
    fn root_inner_products_and_rho() {
        for label in [Label::E8, Label::D8] {
            let rs = RootSystem::build(label);
            let all = rs.all_roots();
            for a in &all {
                assert_eq!(a.norm(), Q::from_integer(2));
            }
            for (i, a) in rs.positive_roots.iter().enumerate() {
                for b in &rs.positive_roots[i + 1..] {
                    let x = a.inner(b);
                    assert!(x.is_integer() && x.numer().abs() <= 1);
                }
            }
        }
        let d8 = RootSystem::build(Label::D8);
        let sum = d8.positive_roots.iter().fold(Vec8::ZERO, |acc, r| acc + *r);
        assert_eq!(sum, d8.weyl_vector.scale(2));
        let e8 = RootSystem::build(Label::E8);
        assert!(d8.all_roots().iter().all(|r| e8.is_root(r)));
        assert!(e8.all_roots().iter().all(|r| r.in_e8_lattice()));
        assert!(d8.all_roots().iter().all(|r| r.in_d8_lattice()));
    }

    #[test]
    fn canonical_order_is_by_height() {
        let e8 = RootSystem::build(Label::E8);
        let heights: Vec<i32> = e8.positive_roots.iter().map(|r| e8.height(r).unwrap()).collect();
        assert!(heights.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(heights[0], 1);
        assert_eq!(*heights.last().unwrap(), 29);
        assert_eq!(&e8.positive_roots[..8].len(), &8);
    }

    #[test]
    fn weyl_dimension_of_adjoint() {
        let e8 = RootSystem::build(Label::E8);
        assert_eq!(e8.weyl_dimension(&e8.highest_root), Q::from_integer(248));
        let d8 = RootSystem::build(Label::D8);
        assert_eq!(d8.weyl_dimension(&d8.fundamental_weights[7]), Q::from_integer(128));
    }

    #[test]
    fn json_export_round_trip() {
        let d8 = RootSystem::build(Label::D8);
        let json = serde_json::to_string(&d8.to_export()).unwrap();
        assert!(json.contains("\"h_dual\":14"));
        let back: RootSystemExport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d8.to_export());
    }
}
