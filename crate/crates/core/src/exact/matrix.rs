use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::elim::{self, Inertia, SymOutcome};
use super::poly::CharPoly;

/// Dense square integer matrix, row-major.
///
/// Entries are `i64`; every derived quantity (determinants, minors, polynomial
/// coefficients) is computed in arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| i64::from(i == j))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        IntMatrix { n, a }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix {
            n,
            a: rows.concat(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.a.chunks(self.n.max(1)).map(|r| r.to_vec()).take(self.n).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        IntMatrix::from_fn(n, |i, j| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum())
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// `k I - self`.
    pub fn shifted_from(&self, k: i64) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| i64::from(i == j) * k - self.get(i, j))
    }

    /// `self - k I`.
    pub fn minus_scalar(&self, k: i64) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(i, j) - i64::from(i == j) * k)
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    /// Largest absolute row sum; bounds every eigenvalue in absolute value.
    pub fn gershgorin_bound(&self) -> i64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn det(&self) -> BigInt {
        elim::reduce(&self.a, self.n, self.n).det
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        elim::reduce(&self.a, self.n, self.n).rank
    }

    /// `Some(nullity)` when the matrix is positive semidefinite, `None` otherwise.
    ///
    /// Assumes symmetry.
    pub fn psd_nullity(&self) -> Option<usize> {
        match elim::symmetric_inertia(&self.a, self.n, true) {
            SymOutcome::Done(i) => Some(i.zero),
            SymOutcome::NotPsd | SymOutcome::Stuck => None,
        }
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.psd_nullity().is_some()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.psd_nullity() == Some(0)
    }

    /// Signs of the eigenvalues of a symmetric matrix.
    pub fn inertia(&self) -> Inertia {
        match elim::symmetric_inertia(&self.a, self.n, false) {
            SymOutcome::Done(i) => i,
            _ => self.char_poly().inertia(),
        }
    }

    pub fn char_poly(&self) -> CharPoly {
        super::poly::char_poly(self)
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_fn(self.n, |i, j| BigRational::from_integer(BigInt::from(self.get(i, j))))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Dense square matrix over exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    a: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        RatMatrix { n, a }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.n).map(|i| self.a[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        RatMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(BigRational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        })
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).fold(BigRational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut inv = RatMatrix::from_fn(n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .a;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                    inv.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a[col * n + col].clone();
            for c in 0..n {
                a[col * n + c] = &a[col * n + c] / &p;
                inv[col * n + c] = &inv[col * n + c] / &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for c in 0..n {
                    let t = &f * &a[col * n + c];
                    a[r * n + c] -= t;
                    let t = &f * &inv[col * n + c];
                    inv[r * n + c] -= t;
                }
            }
        }
        Some(RatMatrix { n, a: inv })
    }

    pub fn char_poly(&self) -> super::poly::RatPoly {
        super::poly::char_poly_rat(self)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn ranks() {
        assert_eq!(IntMatrix::zeros(3).rank(), 0);
        assert_eq!(IntMatrix::identity(5).rank(), 5);
        let p = Graph::petersen().adjacency_matrix();
        assert_eq!(p.minus_scalar(-2).rank(), 6);
    }

    #[test]
    fn psd_decisions() {
        let k4 = Graph::complete(4).unwrap().adjacency_matrix();
        assert!(k4.minus_scalar(-2).is_positive_semidefinite());
        assert!(k4.minus_scalar(-1).is_positive_semidefinite());
        assert!(!k4.is_positive_semidefinite());
        let p = Graph::petersen().adjacency_matrix();
        assert!(p.shifted_from(3).is_positive_semidefinite());
        assert!(!p.shifted_from(2).is_positive_semidefinite());
        assert_eq!(p.shifted_from(3).psd_nullity(), Some(1));
    }

    #[test]
    fn inertia_matches_spectrum() {
        let p = Graph::petersen().adjacency_matrix();
        // spectrum 3, 1^5, (-2)^4
        let i = p.minus_scalar(1).inertia();
        assert_eq!((i.positive, i.zero, i.negative), (1, 5, 4));
        let c4 = Graph::cycle(4).unwrap().adjacency_matrix();
        let i = c4.inertia();
        assert_eq!((i.positive, i.zero, i.negative), (1, 2, 1));
    }

    #[test]
    fn rational_inverse() {
        let m = IntMatrix::from_rows(&[vec![-2, -1], vec![-1, -2]]).to_rat();
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(prod.get(i, j), &BigRational::from_integer(BigInt::from(i64::from(i == j))));
            }
        }
        let singular = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).to_rat();
        assert!(singular.inverse().is_none());
    }
}
