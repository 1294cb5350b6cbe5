//! Exact points of `(1/2)·Z^8`.
//!
//! Coordinates are stored doubled, so `(1/2)(ε1 + … + ε8)` is `[1; 8]` and
//! `ε1 + ε2` is `[2, 2, 0, 0, 0, 0, 0, 0]`. Every inner product of two such
//! points is a multiple of `1/4`, which keeps all root and weight arithmetic
//! in the integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::Q;

/// A point of `(1/2)·Z^8`, stored as twice its coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Vec8([i32; 8]);

impl Vec8 {
    pub const ZERO: Vec8 = Vec8([0; 8]);

    /// Builds a vector from doubled coordinates.
    pub const fn from_doubled(doubled: [i32; 8]) -> Self {
        Vec8(doubled)
    }

    /// Builds a vector with the given integer coordinates.
    pub fn from_integers(coords: [i32; 8]) -> Self {
        Vec8(coords.map(|c| 2 * c))
    }

    /// The unit vector `ε_{i+1}` (zero-based `i`).
    pub fn unit(i: usize) -> Self {
        let mut d = [0; 8];
        d[i] = 2;
        Vec8(d)
    }

    /// `(1/2)(±ε1 ± … ± ε8)` with a minus sign wherever `minus[i]` is set.
    pub fn half_signs(minus: [bool; 8]) -> Self {
        Vec8(minus.map(|m| if m { -1 } else { 1 }))
    }

    pub fn doubled(&self) -> [i32; 8] {
        self.0
    }

    /// The `i`-th actual coordinate.
    pub fn coord(&self, i: usize) -> Q {
        Q::new(self.0[i] as i64, 2)
    }

    pub fn coords(&self) -> [Q; 8] {
        std::array::from_fn(|i| self.coord(i))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All stored coordinates even, i.e. the point lies in `Z^8`.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c % 2 == 0)
    }

    /// All stored coordinates odd, i.e. the point lies in `Z^8 + (1/2,…,1/2)`.
    pub fn is_half_odd(&self) -> bool {
        self.0.iter().all(|c| c % 2 != 0)
    }

    /// Membership in the D8 lattice: integral with even coordinate sum.
    pub fn in_d8_lattice(&self) -> bool {
        self.is_integral() && (self.0.iter().sum::<i32>() / 2) % 2 == 0
    }

    /// Membership in the E8 lattice `D8 ∪ (D8 + (1/2,…,1/2))`.
    pub fn in_e8_lattice(&self) -> bool {
        if self.is_integral() {
            return self.in_d8_lattice();
        }
        // shifting by (1/2,…,1/2) lands in D8 iff the doubled-coordinate sum is ≡ 0 mod 4
        self.is_half_odd() && self.0.iter().sum::<i32>().rem_euclid(4) == 0
    }

    /// Four times the inner product, always an integer.
    pub fn inner_x4(&self, other: &Vec8) -> i64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }

    /// Euclidean inner product of the actual coordinates.
    pub fn inner(&self, other: &Vec8) -> Q {
        Q::new(self.inner_x4(other), 4)
    }

    pub fn norm(&self) -> Q {
        self.inner(self)
    }

    /// Integer multiple `k·v`.
    pub fn scale(&self, k: i32) -> Vec8 {
        Vec8(self.0.map(|c| c * k))
    }

    /// Coordinates as exact strings `"p/2"`, the JSON export format.
    pub fn to_exact_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| format!("{c}/2")).collect()
    }

    /// Parses the `"p/2"` export format back.
    pub fn from_exact_strings(items: &[String]) -> Option<Vec8> {
        if items.len() != 8 {
            return None;
        }
        let mut d = [0; 8];
        for (slot, s) in d.iter_mut().zip(items) {
            let p = s.strip_suffix("/2")?;
            *slot = p.parse().ok()?;
        }
        Some(Vec8(d))
    }
}

/// Exact rational linear combination `Σ q_i v_i`, returned coordinatewise.
pub fn rational_combination<'a>(terms: impl IntoIterator<Item = (Q, &'a Vec8)>) -> [Q; 8] {
    let mut acc = [Q::zero(); 8];
    for (q, v) in terms {
        for (slot, c) in acc.iter_mut().zip(v.coords()) {
            *slot += q * c;
        }
    }
    acc
}

impl Add for Vec8 {
    type Output = Vec8;
    fn add(self, rhs: Vec8) -> Vec8 {
        Vec8(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Vec8 {
    type Output = Vec8;
    fn sub(self, rhs: Vec8) -> Vec8 {
        Vec8(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for Vec8 {
    type Output = Vec8;
    fn neg(self) -> Vec8 {
        Vec8(self.0.map(|c| -c))
    }
}

impl fmt::Display for Vec8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c.denom().is_one() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "{}/{}", c.numer(), c.denom())?;
            }
        }
        write!(f, ")")
    }
}

impl Serialize for Vec8 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_exact_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vec8 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Vec8::from_exact_strings(&items)
            .ok_or_else(|| serde::de::Error::custom("expected eight coordinates of the form \"p/2\""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormal_units() {
        assert_eq!(Vec8::unit(0).inner(&Vec8::unit(1)), Q::zero());
        assert_eq!(Vec8::unit(3).norm(), Q::one());
    }

    #[test]
    fn spinor_vector_norm_two() {
        let s = Vec8::half_signs([false; 8]);
        assert_eq!(s.norm(), Q::from_integer(2));
        assert!(s.in_e8_lattice());
        assert!(!s.in_d8_lattice());
        let odd = Vec8::half_signs([true, false, false, false, false, false, false, false]);
        assert!(!odd.in_e8_lattice());
    }

    #[test]
    fn exact_string_export() {
        let v = Vec8::from_doubled([1, -1, 2, 0, 0, 0, 0, 3]);
        let s = v.to_exact_strings();
        assert_eq!(s[0], "1/2");
        assert_eq!(s[1], "-1/2");
        assert_eq!(Vec8::from_exact_strings(&s), Some(v));
        assert_eq!(v.to_string(), "(1/2, -1/2, 1, 0, 0, 0, 0, 3/2)");
    }
}
