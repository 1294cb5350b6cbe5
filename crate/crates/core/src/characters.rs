//! Graded characters of the level-one modules from lattice theta series.
//!
//! These never touch the Fock module, so they give an independent count of
//! the branching `L_E8(1,0) = L_D8(1,0) ⊕ L_D8(1,ω̄8)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::fock::pbw_dimension;
use crate::roots::{Label, RootSystem};

/// Integer power series truncated after `q^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeriesZ {
    coeffs: Vec<BigInt>,
}

impl PowerSeriesZ {
    pub fn zero(order: usize) -> PowerSeriesZ {
        PowerSeriesZ {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> PowerSeriesZ {
        let mut s = PowerSeriesZ::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> PowerSeriesZ {
        assert!(!coeffs.is_empty());
        PowerSeriesZ { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> PowerSeriesZ {
        PowerSeriesZ {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Small coefficients as `u64`, for display and tests.
    pub fn to_u64(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.to_u64().expect("fits u64")).collect()
    }

    /// First index where `self` and `other` differ.
    pub fn first_difference(&self, other: &PowerSeriesZ) -> Option<usize> {
        (0..=self.order().min(other.order())).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

impl fmt::Debug for PowerSeriesZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Serialize for PowerSeriesZ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl Add for &PowerSeriesZ {
    type Output = PowerSeriesZ;
    fn add(self, rhs: &PowerSeriesZ) -> PowerSeriesZ {
        let n = self.order().min(rhs.order());
        PowerSeriesZ::from_coeffs((0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect())
    }
}

impl Sub for &PowerSeriesZ {
    type Output = PowerSeriesZ;
    fn sub(self, rhs: &PowerSeriesZ) -> PowerSeriesZ {
        let n = self.order().min(rhs.order());
        PowerSeriesZ::from_coeffs((0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect())
    }
}

impl Mul for &PowerSeriesZ {
    type Output = PowerSeriesZ;
    fn mul(self, rhs: &PowerSeriesZ) -> PowerSeriesZ {
        let n = self.order().min(rhs.order());
        let mut out = PowerSeriesZ::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lattice {
    D8,
    E8,
    /// `D8 + (1/2, …, 1/2)`.
    D8Spinor,
}

/// Counts of vectors of norm `2m`, `m ≤ order`, by enumeration in doubled coordinates.
///
/// Each doubled coordinate obeys `y² ≤ Σ y² ≤ 8·order`; the search bound is asserted to cover that.
pub fn theta_series(lattice: Lattice, order: usize) -> PowerSeriesZ {
    match lattice {
        Lattice::E8 => theta_e8_direct(order),
        Lattice::D8 => enumerate(false, order),
        Lattice::D8Spinor => enumerate(true, order),
    }
}

fn enumerate(half: bool, order: usize) -> PowerSeriesZ {
    // doubled norm Σ y² = 4 (x, x) = 8 m
    let budget = 8 * order as i64;
    let bound = coordinate_bound(order);
    let values: Vec<i64> = (-bound..=bound).filter(|y| (y.rem_euclid(2) == 1) == half).collect();
    let mut counts = vec![0u64; order + 1];
    fn rec(values: &[i64], left: usize, budget: i64, norm: i64, sum: i64, counts: &mut [u64]) {
        if left == 0 {
            // x ∈ D8 (or its shift) iff Σ x is even iff Σ y ≡ 0 mod 4
            if sum.rem_euclid(4) == 0 && norm % 8 == 0 {
                counts[(norm / 8) as usize] += 1;
            }
            return;
        }
        for &y in values {
            let n = norm + y * y;
            if n <= budget {
                rec(values, left - 1, budget, n, sum + y, counts);
            }
        }
    }
    rec(&values, 8, budget, 0, 0, &mut counts);
    PowerSeriesZ::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

fn coordinate_bound(order: usize) -> i64 {
    let bound = 2 * ((2 * order) as f64).sqrt().floor() as i64 + 2;
    assert!(bound * bound > 8 * order as i64);
    bound
}

/// `Π_{n≥1} (1 − q^n)^{−8}`.
pub fn inv_euler_pow8(order: usize) -> PowerSeriesZ {
    // partitions: multiply by 1/(1 − q^n) as a running prefix sum with stride n
    let mut p = PowerSeriesZ::one(order);
    for n in 1..=order {
        for i in n..=order {
            let prev = p.coeffs[i - n].clone();
            p.coeffs[i] += prev;
        }
    }
    let mut out = PowerSeriesZ::one(order);
    for _ in 0..8 {
        out = &out * &p;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Module {
    E8Vacuum,
    D8Vacuum,
    D8Spinor,
}

impl Module {
    pub fn lattice(&self) -> Lattice {
        match self {
            Module::E8Vacuum => Lattice::E8,
            Module::D8Vacuum => Lattice::D8,
            Module::D8Spinor => Lattice::D8Spinor,
        }
    }
}

/// `Θ · Π (1 − q^n)^{−8}`; the coefficient of `q^m` is the dimension of conformal weight `m`.
pub fn graded_character(module: Module, order: usize) -> PowerSeriesZ {
    &theta_series(module.lattice(), order) * &inv_euler_pow8(order)
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingReport {
    pub order: usize,
    pub e8: PowerSeriesZ,
    pub d8_vacuum: PowerSeriesZ,
    pub d8_spinor: PowerSeriesZ,
    pub theta_e8: PowerSeriesZ,
    pub theta_d8: PowerSeriesZ,
    pub theta_spinor: PowerSeriesZ,
    /// First order where the characters differ, if any.
    pub character_mismatch: Option<usize>,
    /// First order where the theta series differ, if any.
    pub theta_mismatch: Option<usize>,
    /// `dim N_E8(1,0)_2 − dim V(2θ)`, the degree-two dimension of `L_E8(1,0)`.
    pub degree_two_from_module: Option<u64>,
    pub pass: bool,
}

/// Checks `χ_E8 = χ_D8,vac + χ_D8,spinor` and `Θ_E8 = Θ_D8 + Θ_coset` to `order`.
pub fn verify_branching(order: usize) -> BranchingReport {
    let theta_d8 = theta_series(Lattice::D8, order);
    let theta_spinor = theta_series(Lattice::D8Spinor, order);
    let theta_e8 = theta_series(Lattice::E8, order);
    let euler = inv_euler_pow8(order);
    let e8 = &theta_e8 * &euler;
    let d8_vacuum = &theta_d8 * &euler;
    let d8_spinor = &theta_spinor * &euler;
    let character_mismatch = e8.first_difference(&(&d8_vacuum + &d8_spinor));
    let theta_mismatch = theta_e8.first_difference(&(&theta_d8 + &theta_spinor));
    let degree_two_from_module = (order >= 2).then(|| {
        let rs = RootSystem::build(Label::E8);
        let v = rs.weyl_dimension(&rs.highest_root.scale(2));
        assert!(v.is_integer());
        pbw_dimension(248, 2) as u64 - v.to_integer() as u64
    });
    let pass = character_mismatch.is_none()
        && theta_mismatch.is_none()
        && degree_two_from_module.map_or(true, |d| BigInt::from(d) == *e8.coeff(2));
    BranchingReport {
        order,
        e8,
        d8_vacuum,
        d8_spinor,
        theta_e8,
        theta_d8,
        theta_spinor,
        character_mismatch,
        theta_mismatch,
        degree_two_from_module,
        pass,
    }
}

/// `Θ_E8` in one pass over vectors whose doubled coordinates share a parity, independent of the `D8` cosets.
fn theta_e8_direct(order: usize) -> PowerSeriesZ {
    let budget = 8 * order as i64;
    let bound = coordinate_bound(order);
    let mut counts = vec![0u64; order + 1];
    for parity in [0, 1] {
        let values: Vec<i64> = (-bound..=bound).filter(|y| y.rem_euclid(2) == parity).collect();
        let mut stack = vec![(0usize, 0i64, 0i64)];
        while let Some((depth, norm, sum)) = stack.pop() {
            if depth == 8 {
                if sum.rem_euclid(4) == 0 {
                    counts[(norm / 8) as usize] += (norm % 8 == 0) as u64;
                }
                continue;
            }
            for &y in &values {
                let n = norm + y * y;
                if n <= budget {
                    stack.push((depth + 1, n, sum + y));
                }
            }
        }
    }
    PowerSeriesZ::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_first_shells() {
        assert_eq!(theta_series(Lattice::E8, 2).to_u64(), [1, 240, 2160]);
        assert_eq!(theta_series(Lattice::D8, 1).to_u64(), [1, 112]);
        assert_eq!(theta_series(Lattice::D8Spinor, 1).to_u64(), [0, 128]);
    }

    #[test]
    fn oscillators() {
        let p = inv_euler_pow8(4);
        assert_eq!(&p.to_u64()[..3], [1, 8, 44]);
        assert!(p.coeffs().iter().all(|c| *c > BigInt::zero()));
    }

    #[test]
    fn branching_low_orders() {
        let r = verify_branching(3);
        assert!(r.pass, "{r:?}");
        assert_eq!(&r.e8.to_u64()[..3], [1, 248, 4124]);
        assert_eq!(&r.d8_vacuum.to_u64()[..3], [1, 120, 2076]);
        assert_eq!(&r.d8_spinor.to_u64()[..3], [0, 128, 2048]);
        assert_eq!(r.degree_two_from_module, Some(4124));
    }

    #[test]
    fn order_eight() {
        let r = verify_branching(8);
        assert!(r.pass);
        assert!(r.d8_spinor.coeffs().iter().all(|c| *c >= BigInt::zero()));
    }

    #[test]
    fn e8_theta_is_eisenstein() {
        // Θ_E8 = 1 + 240 Σ σ_3(n) q^n
        let t = theta_series(Lattice::E8, 5).to_u64();
        let sigma3 = |n: u64| (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum::<u64>();
        for n in 1..=5 {
            assert_eq!(t[n as usize], 240 * sigma3(n));
        }
    }
}
