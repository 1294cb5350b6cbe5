//! Dominant integral weights allowed at a positive integer level.

use serde::Serialize;

use crate::roots::{Label, RootSystem};
use crate::sugawara::conformal_weight_in;
use crate::vec8::Vec8;
use crate::Q;

/// `θ = Σ a_i α_i` for each algebra, in the simple-root order of [`RootSystem`].
pub fn marks(label: Label) -> [u32; 8] {
    match label {
        Label::E8 => [2, 3, 4, 5, 6, 4, 2, 3],
        Label::D8 => [1, 2, 2, 2, 2, 2, 1, 1],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominantWeight {
    pub coefficients: [u32; 8],
    pub vec: Vec8,
}

impl DominantWeight {
    pub fn new(rs: &RootSystem, coefficients: [u32; 8]) -> DominantWeight {
        DominantWeight {
            coefficients,
            vec: rs.weight_from_coefficients(&coefficients),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    /// `0` or `ω_i` style name for single fundamental weights, otherwise the coefficient list.
    pub fn name(&self) -> String {
        let nonzero: Vec<usize> = (0..8).filter(|&i| self.coefficients[i] != 0).collect();
        match nonzero.as_slice() {
            [] => "0".to_string(),
            [i] if self.coefficients[*i] == 1 => format!("w{}", i + 1),
            _ => format!("{:?}", self.coefficients),
        }
    }
}

/// Every point of the box `c_i ∈ [0, k]`, in lexicographic order.
fn search_box(k: u32) -> impl Iterator<Item = [u32; 8]> {
    let side = k as u64 + 1;
    (0..side.pow(8)).map(move |mut n| {
        let mut c = [0u32; 8];
        for slot in c.iter_mut().rev() {
            *slot = (n % side) as u32;
            n /= side;
        }
        c
    })
}

fn linear_form(label: Label, c: &[u32; 8]) -> u32 {
    marks(label).iter().zip(c).map(|(a, b)| a * b).sum()
}

/// All `μ ∈ P+` with `⟨μ, θ⟩ ≤ k`.
///
/// The box `c_i ≤ k` is complete because every mark is at least one.
pub fn enumerate_admissible(label: Label, k: u32) -> Vec<DominantWeight> {
    assert!(marks(label).iter().all(|&a| a >= 1));
    let rs = RootSystem::build(label);
    search_box(k)
        .filter(|c| linear_form(label, c) <= k)
        .map(|c| DominantWeight::new(&rs, c))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LowestWeight {
    pub weight: DominantWeight,
    pub name: String,
    #[serde(serialize_with = "crate::serialize_q")]
    pub conformal_weight: Q,
}

/// `(μ, μ + 2ρ) / 2(k + h∨)` for each admissible weight.
pub fn lowest_weights(label: Label, k: u32) -> Vec<LowestWeight> {
    let rs = RootSystem::build(label);
    enumerate_admissible(label, k)
        .into_iter()
        .map(|w| LowestWeight {
            name: w.name(),
            conformal_weight: conformal_weight_in(&rs, &w.vec, Q::from_integer(k as i64))
                .expect("positive level is not critical"),
            weight: w,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegralityReport {
    pub label: Label,
    pub level: u32,
    pub candidates: usize,
    pub admissible: usize,
    /// Box points where `⟨μ, θ⟩ ≤ k` and the linear form disagree.
    pub divergences: Vec<[u32; 8]>,
    pub pass: bool,
}

/// Evaluates `⟨μ, θ⟩ ≤ k` from the weight vector and the mark form on every box point.
pub fn integrality_filter_report(label: Label, k: u32) -> IntegralityReport {
    let rs = RootSystem::build(label);
    let kq = Q::from_integer(k as i64);
    let mut candidates = 0;
    let mut admissible = 0;
    let mut divergences = Vec::new();
    for c in search_box(k) {
        candidates += 1;
        let mu = rs.weight_from_coefficients(&c);
        let raw = mu.inner(&rs.highest_root) <= kq;
        let linear = linear_form(label, &c) <= k;
        admissible += raw as usize;
        if raw != linear {
            divergences.push(c);
        }
    }
    IntegralityReport {
        label,
        level: k,
        candidates,
        admissible,
        pass: divergences.is_empty(),
        divergences,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d8_level_one() {
        let names: Vec<String> = enumerate_admissible(Label::D8, 1).iter().map(|w| w.name()).collect();
        assert_eq!(names, ["0", "w8", "w7", "w1"]);
        let mut h: Vec<Q> = lowest_weights(Label::D8, 1).iter().map(|l| l.conformal_weight).collect();
        h.sort();
        assert_eq!(h, [Q::from_integer(0), Q::new(1, 2), Q::from_integer(1), Q::from_integer(1)]);
    }

    #[test]
    fn e8_level_one_is_vacuum_only() {
        let w = enumerate_admissible(Label::E8, 1);
        assert_eq!(w.len(), 1);
        assert!(w[0].is_zero());
    }

    #[test]
    fn d8_level_two_count() {
        assert_eq!(enumerate_admissible(Label::D8, 2).len(), 15);
    }

    #[test]
    fn raw_and_linear_forms_agree() {
        for label in [Label::D8, Label::E8] {
            for k in 1..=2 {
                assert!(integrality_filter_report(label, k).pass);
            }
        }
    }

    #[test]
    fn excluded_weights_pair_to_two() {
        let d8 = RootSystem::build(Label::D8);
        let e8 = RootSystem::build(Label::E8);
        assert_eq!(d8.fundamental_weights[1].inner(&d8.highest_root), Q::from_integer(2));
        assert_eq!(e8.fundamental_weights[6].inner(&e8.highest_root), Q::from_integer(2));
    }

    #[test]
    fn spinor_weight_intermediate() {
        let d8 = RootSystem::build(Label::D8);
        let w7 = d8.fundamental_weights[6];
        let two_rho = d8.weyl_vector.scale(2);
        assert_eq!(w7.inner(&(w7 + two_rho)), Q::from_integer(30));
    }
}
