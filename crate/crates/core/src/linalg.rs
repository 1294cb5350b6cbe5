//! Exact rational linear algebra: row reduction, rank, nullspace, solve.
//!
//! Matrices here are small (at most a few thousand rows by a few hundred
//! columns), so a dense row-echelon form over [`Q`] is adequate.

use num_traits::{One, Zero};

use crate::Q;

/// Dense matrix over the rationals, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = *x;
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let q: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        Matrix::from_rows(&q)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let x = self[(r, j)];
                self[(r, j)] = x * inv;
            }
            let pivot_row: Vec<(usize, Q)> = (c..self.cols)
                .filter(|&j| !self[(r, j)].is_zero())
                .map(|j| (j, self[(r, j)]))
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)];
                if f.is_zero() {
                    continue;
                }
                for &(j, x) in &pivot_row {
                    let y = self[(i, j)];
                    self[(i, j)] = y - f * x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Q::zero(); self.cols];
            x[free] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[(r, free)];
            }
            basis.push(x);
        }
        basis
    }

    /// The unique solution of `A x = b` for square invertible `A`.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        if self.rows != self.cols || b.len() != self.rows {
            return None;
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let pivots = aug.rref();
        if pivots.len() != self.cols || pivots.last() == Some(&self.cols) {
            return None;
        }
        Some((0..self.rows).map(|i| aug[(i, self.cols)]).collect())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = Matrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_small_system() {
        let m = Matrix::from_i64_rows(&[vec![2, 1], vec![1, 3]]);
        let x = m.solve(&[q(3), q(5)]).unwrap();
        assert_eq!(x, vec![Q::new(4, 5), Q::new(7, 5)]);
        let singular = Matrix::from_i64_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(singular.solve(&[q(1), q(2)]).is_none());
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 1..6)) {
            let m = Matrix::from_i64_rows(&rows);
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.len(), 5);
            for v in &ns {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
        }
    }
}
