use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use super::elim::Inertia;
use super::matrix::{IntMatrix, RatMatrix};

/// Monic characteristic polynomial `det(xI - M)` with integer coefficients.
///
/// `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    pub coeffs: Vec<BigRational>,
}

/// Faddeev-LeVerrier: `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
fn faddeev_leverrier<T>(a: &[T], n: usize) -> Vec<T>
where
    T: Num + Clone + From<BigInt>,
{
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    // m holds M_{k-1}; M_0 = 0 so M_1 = I
    let mut m = vec![T::zero(); n * n];
    for k in 1..=n {
        let c_prev = coeffs[n - k + 1].clone();
        let mut next = vec![T::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = T::zero();
                for l in 0..n {
                    let x = &a[i * n + l];
                    if !x.is_zero() {
                        s = s + x.clone() * m[l * n + j].clone();
                    }
                }
                if i == j {
                    s = s + c_prev.clone();
                }
                next[i * n + j] = s;
            }
        }
        let mut tr = T::zero();
        for i in 0..n {
            for l in 0..n {
                tr = tr + a[i * n + l].clone() * next[l * n + i].clone();
            }
        }
        let kk = T::from(BigInt::from(k));
        coeffs[n - k] = T::zero() - tr / kk;
        m = next;
    }
    coeffs
}

pub fn char_poly(m: &IntMatrix) -> CharPoly {
    let a: Vec<BigInt> = m.entries().iter().map(|&v| BigInt::from(v)).collect();
    CharPoly {
        coeffs: faddeev_leverrier(&a, m.order()),
    }
}

pub fn char_poly_rat(m: &RatMatrix) -> RatPoly {
    let n = m.order();
    let a: Vec<BigRational> = (0..n * n).map(|k| m.get(k / n, k % n).clone()).collect();
    RatPoly {
        coeffs: faddeev_leverrier(&a, n),
    }
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for &r in roots {
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        CharPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Multiplicity of `0` as a root.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// The polynomial `p(x + c)`.
    pub fn shifted(&self, c: i64) -> CharPoly {
        // Horner-style Taylor shift
        let mut out = self.coeffs.clone();
        let c = BigInt::from(c);
        let n = out.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &out[j + 1] * &c;
                out[j] += t;
            }
        }
        CharPoly { coeffs: out }
    }

    /// Root counts `(positive, zero, negative)` assuming every root is real.
    ///
    /// Descartes' rule of signs is exact for real-rooted polynomials.
    pub fn inertia(&self) -> Inertia {
        let zero = self.zero_multiplicity();
        let rest = &self.coeffs[zero..];
        let positive = sign_changes(rest.iter().cloned());
        let negative = sign_changes(
            rest.iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }),
        );
        Inertia {
            positive,
            zero,
            negative,
        }
    }

    /// Number of roots strictly greater than `c`, for a real-rooted polynomial.
    pub fn roots_above(&self, c: i64) -> usize {
        self.shifted(c).inertia().positive
    }

    /// Number of roots strictly less than `c`, for a real-rooted polynomial.
    pub fn roots_below(&self, c: i64) -> usize {
        self.shifted(c).inertia().negative
    }

    /// Integer roots with multiplicity, found by trial division of the polynomial.
    pub fn integer_roots(&self) -> Vec<(i64, usize)> {
        let z = self.zero_multiplicity();
        self.integer_roots_within(cauchy_bound(&self.coeffs[z..]))
    }

    /// Integer roots of absolute value at most `bound`, largest first.
    pub fn integer_roots_within(&self, bound: i64) -> Vec<(i64, usize)> {
        let mut out = Vec::new();
        let z = self.zero_multiplicity();
        if z > 0 {
            out.push((0, z));
        }
        let mut p: Vec<BigInt> = self.coeffs[z..].to_vec();
        if p.len() <= 1 {
            return out;
        }
        let cands = divisor_candidates(&p[0], bound);
        for k in cands {
            let mut mult = 0;
            while p.len() > 1 {
                match divide_by_linear(&p, k) {
                    Some(q) => {
                        p = q;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                out.push((k, mult));
            }
        }
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }
}

/// Candidate integer roots: `±d` for divisors `d` of `c` up to `bound`.
pub(crate) fn divisor_candidates(c: &BigInt, bound: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let c = c.abs();
    for d in 1..=bound.max(0) {
        if (&c % d).is_zero() {
            out.push(d);
            out.push(-d);
        }
    }
    out
}

/// Cauchy bound on root magnitude for a monic polynomial, capped to fit `i64`.
fn cauchy_bound(p: &[BigInt]) -> i64 {
    let lead = p.last().expect("nonempty").abs();
    let max = p[..p.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
    let b: BigInt = BigInt::one() + max.div_ceil(&lead);
    i64::try_from(b).unwrap_or(i64::MAX).min(1 << 20)
}

/// `p / (x - k)` when exact.
fn divide_by_linear(p: &[BigInt], k: i64) -> Option<Vec<BigInt>> {
    let k = BigInt::from(k);
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..=n).rev() {
        let v = &p[i] + &carry * &k;
        if i == 0 {
            return v.is_zero().then_some(q);
        }
        q[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

fn sign_changes(cs: impl Iterator<Item = BigInt>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in cs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn small_char_polys() {
        let z = IntMatrix::zeros(1);
        assert_eq!(z.char_poly().to_string(), "x");
        let k3 = Graph::complete(3).unwrap().adjacency_matrix();
        assert_eq!(k3.char_poly().to_string(), "x^3 - 3x - 2");
    }

    #[test]
    fn petersen_char_poly_factors() {
        let p = Graph::petersen().adjacency_matrix().char_poly();
        let expect = CharPoly::from_roots(&[3, 1, 1, 1, 1, 1, -2, -2, -2, -2]);
        assert_eq!(p, expect);
        assert_eq!(p.integer_roots(), vec![(3, 1), (1, 5), (-2, 4)]);
    }

    #[test]
    fn shift_and_descartes() {
        let p = CharPoly::from_roots(&[3, 1, 1, 0, -2]);
        assert_eq!(p.shifted(1), CharPoly::from_roots(&[2, 0, 0, -1, -3]));
        assert_eq!(p.roots_above(1), 1);
        assert_eq!(p.roots_below(1), 2);
        let i = p.inertia();
        assert_eq!((i.positive, i.zero, i.negative), (3, 1, 1));
    }

    #[test]
    fn rational_char_poly() {
        let m = IntMatrix::from_rows(&[vec![3, 3], vec![2, 2]]).to_rat();
        let p = m.char_poly();
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        assert_eq!(p.coeffs, vec![int(0), int(-5), int(1)]);
    }
}
