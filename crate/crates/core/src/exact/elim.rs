//! Fraction-free elimination over exact integers.
//!
//! Every routine first runs in `i128` with checked arithmetic and reruns over
//! `BigInt` if any intermediate overflows, so callers always get exact answers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub(crate) trait Ring: Clone {
    fn from_i64(v: i64) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn sign(&self) -> i8;
    fn to_big(&self) -> BigInt;
}

impl Ring for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self % o, 0);
        self.checked_div(*o)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn sign(&self) -> i8 {
        self.signum() as i8
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert!(Zero::is_zero(&(self % o)));
        Some(self / o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Rank and determinant of a general `rows x cols` matrix given row-major.
pub(crate) struct Reduced {
    pub rank: usize,
    /// Determinant when square, zero when singular.
    pub det: BigInt,
}

pub(crate) fn reduce(entries: &[i64], rows: usize, cols: usize) -> Reduced {
    let small: Vec<i128> = entries.iter().map(|&v| v as i128).collect();
    if let Some(r) = bareiss(small, rows, cols) {
        return r;
    }
    let big: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
    bareiss(big, rows, cols).expect("BigInt elimination cannot overflow")
}

pub(crate) fn reduce_big(entries: Vec<BigInt>, rows: usize, cols: usize) -> Reduced {
    bareiss(entries, rows, cols).expect("BigInt elimination cannot overflow")
}

fn bareiss<T: Ring>(mut a: Vec<T>, rows: usize, cols: usize) -> Option<Reduced> {
    let mut prev = T::from_i64(1);
    let mut sign = 1i8;
    let mut rank = 0;
    let mut col_order: Vec<usize> = (0..cols).collect();
    for k in 0..rows.min(cols) {
        // full pivot search over the remaining block
        let mut pivot = None;
        'search: for c in k..cols {
            for r in k..rows {
                if !a[r * cols + col_order[c]].is_zero() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        if pr != k {
            for c in 0..cols {
                a.swap(pr * cols + c, k * cols + c);
            }
            sign = -sign;
        }
        if pc != k {
            col_order.swap(pc, k);
            sign = -sign;
        }
        let kc = col_order[k];
        let p = a[k * cols + kc].clone();
        for r in (k + 1)..rows {
            let f = a[r * cols + kc].clone();
            for &c in &col_order[(k + 1)..] {
                let v = a[r * cols + c]
                    .mul(&p)?
                    .sub(&f.mul(&a[k * cols + c])?)?
                    .div_exact(&prev)?;
                a[r * cols + c] = v;
            }
            a[r * cols + kc] = T::from_i64(0);
        }
        prev = p;
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        let d = if rows == 0 { BigInt::from(1) } else { prev.to_big() };
        if sign < 0 {
            -d
        } else {
            d
        }
    } else {
        BigInt::zero()
    };
    Some(Reduced { rank, det })
}

/// Counts of positive, zero and negative eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

pub(crate) enum SymOutcome {
    Done(Inertia),
    /// A negative pivot was found while only PSD-ness was asked for.
    NotPsd,
    /// Remaining block has a zero diagonal with nonzero off-diagonal entries.
    Stuck,
}

/// Symmetric elimination with diagonal pivots.
///
/// Pivot `d_k` at step `k` is a principal minor of the original matrix, so the
/// sign of the `k`-th LDLᵀ pivot is `sign(d_k) * sign(d_{k-1})`. A zero row in
/// the Schur complement contributes a zero eigenvalue and is dropped.
pub(crate) fn symmetric_inertia(entries: &[i64], n: usize, psd_only: bool) -> SymOutcome {
    let small: Vec<i128> = entries.iter().map(|&v| v as i128).collect();
    if let Some(r) = sym_elim(small, n, psd_only) {
        return r;
    }
    let big: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
    sym_elim(big, n, psd_only).expect("BigInt elimination cannot overflow")
}

fn sym_elim<T: Ring>(mut a: Vec<T>, n: usize, psd_only: bool) -> Option<SymOutcome> {
    let mut alive: Vec<usize> = (0..n).collect();
    let mut prev = T::from_i64(1);
    let mut prev_sign = 1i8;
    let mut inertia = Inertia::default();
    while !alive.is_empty() {
        // drop indices whose Schur row vanished
        let mut i = 0;
        while i < alive.len() {
            let r = alive[i];
            if alive.iter().all(|&c| a[r * n + c].is_zero()) {
                inertia.zero += 1;
                alive.swap_remove(i);
            } else {
                i += 1;
            }
        }
        if alive.is_empty() {
            break;
        }
        let mut pick = None;
        for (idx, &r) in alive.iter().enumerate() {
            let s = a[r * n + r].sign();
            if s > 0 || (s < 0 && !psd_only && pick.is_none()) {
                pick = Some(idx);
                if s > 0 {
                    break;
                }
            }
            if s < 0 && psd_only {
                return Some(SymOutcome::NotPsd);
            }
        }
        let Some(idx) = pick else {
            // only zero diagonals remain, yet some row is nonzero
            return Some(if psd_only { SymOutcome::NotPsd } else { SymOutcome::Stuck });
        };
        let p = alive.swap_remove(idx);
        let d = a[p * n + p].clone();
        if d.sign() * prev_sign > 0 {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
        for &r in &alive {
            let f = a[r * n + p].clone();
            for &c in &alive {
                if c < r {
                    continue;
                }
                let v = a[r * n + c]
                    .mul(&d)?
                    .sub(&f.mul(&a[p * n + c])?)?
                    .div_exact(&prev)?;
                a[c * n + r] = v.clone();
                a[r * n + c] = v;
            }
        }
        prev_sign = d.sign();
        prev = d;
    }
    let _ = prev;
    Some(SymOutcome::Done(inertia))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_with_row_swaps() {
        let r = reduce(&[0, 1, 1, 0], 2, 2);
        assert_eq!(r.rank, 2);
        assert_eq!(r.det, BigInt::from(-1));
        let r = reduce(&[2, 0, 1, 1, 3, 2, 1, 1, 2], 3, 3);
        assert_eq!(r.det, BigInt::from(6));
    }

    #[test]
    fn rank_of_rectangular() {
        let r = reduce(&[1, 2, 3, 2, 4, 6], 2, 3);
        assert_eq!(r.rank, 1);
        let r = reduce(&[0, 0, 0, 0, 0, 1], 2, 3);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let n = 12;
        let big = 1i64 << 40;
        let entries: Vec<i64> = (0..n * n)
            .map(|k| if k / n == k % n { big } else { (k % 7) as i64 })
            .collect();
        let r = reduce(&entries, n, n);
        assert_eq!(r.rank, n);
        assert!(r.det.bits() > 400);
    }

    #[test]
    fn inertia_of_indefinite() {
        // [[0,1],[1,0]] has eigenvalues 1 and -1 and no usable diagonal pivot
        assert!(matches!(symmetric_inertia(&[0, 1, 1, 0], 2, false), SymOutcome::Stuck));
        let SymOutcome::Done(i) = symmetric_inertia(&[1, 2, 2, 1], 2, false) else {
            panic!()
        };
        assert_eq!((i.positive, i.zero, i.negative), (1, 0, 1));
        let SymOutcome::Done(i) = symmetric_inertia(&[-1, 0, 0, 0, 0, 0, 0, 0, 2], 3, false) else {
            panic!()
        };
        assert_eq!((i.positive, i.zero, i.negative), (1, 1, 1));
    }
}
