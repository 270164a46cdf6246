//! Dense integer matrices and exact determinants.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::IntPoly;

/// Square `i64` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = IntMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} has wrong length");
            m.data[i * dim..(i + 1) * dim].copy_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `det(x I - self)` at an integer point.
    pub fn char_matrix_det_at(&self, x: i64) -> BigInt {
        let n = self.dim;
        let mut a: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(-v)).collect();
        for i in 0..n {
            a[i * n + i] += x;
        }
        bareiss_det(a, n)
    }

    /// Exact characteristic polynomial `det(x I - self)` by evaluating at
    /// `x = 0..=dim` with fraction-free elimination and interpolating.
    pub fn char_poly(&self) -> IntPoly {
        let values: Vec<BigInt> = (0..=self.dim as i64)
            .map(|x| self.char_matrix_det_at(x))
            .collect();
        interpolate_consecutive(values)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Determinant by Bareiss fraction-free elimination. `a` is row-major `n x n`
/// and is consumed as scratch space.
pub fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign_flip = !sign_flip;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let v = &pivot * &a[i * n + j] - &aik * &a[k * n + j];
                // exact by Sylvester's identity
                a[i * n + j] = v / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// The unique polynomial of degree `< values.len()` taking `values[k]` at `x = k`.
///
/// Newton forward differences on integer nodes; every divided difference of an
/// integer-coefficient polynomial is an integer, so all divisions are exact.
pub fn interpolate_consecutive(values: Vec<BigInt>) -> IntPoly {
    let m = values.len();
    let mut diffs = values;
    let mut newton = Vec::with_capacity(m);
    let mut factorial = BigInt::one();
    for j in 0..m {
        if j > 0 {
            factorial *= j;
        }
        newton.push(&diffs[0] / &factorial);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    // p(x) = sum_j newton[j] * x (x - 1) ... (x - j + 1), expanded Horner style
    let mut p = IntPoly::zero();
    for j in (0..m).rev() {
        p = &p * &IntPoly::linear_root(&BigInt::from(j)) + IntPoly::constant(newton[j].clone());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn bareiss_small() {
        let a = [2, -1, 0, -1, 2, -1, 0, -1, 2].map(big).to_vec();
        assert_eq!(bareiss_det(a, 3), big(4));
        let singular = [1, 2, 2, 4].map(big).to_vec();
        assert_eq!(bareiss_det(singular, 2), big(0));
        let needs_pivot = [0, 1, 1, 0].map(big).to_vec();
        assert_eq!(bareiss_det(needs_pivot, 2), big(-1));
        assert_eq!(bareiss_det(Vec::new(), 0), big(1));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // 3x^3 - 2x + 7
        let f = |x: i64| 3 * x * x * x - 2 * x + 7;
        let p = interpolate_consecutive((0..4).map(|x| big(f(x))).collect());
        assert_eq!(p, IntPoly::from_i64(&[7, -2, 0, 3]));
    }

    #[test]
    fn char_poly_small_matrices() {
        assert_eq!(IntMatrix::zeros(0).char_poly(), IntPoly::one());
        assert_eq!(
            IntMatrix::from_rows(&[vec![5]]).char_poly(),
            IntPoly::from_i64(&[-5, 1])
        );
        // Laplacian of K3: x (x - 3)^2
        let k3 = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(k3.char_poly(), IntPoly::from_i64(&[0, 9, -6, 1]));
        assert!(k3.is_symmetric());
        assert_eq!(k3.trace(), 6);
    }
}
