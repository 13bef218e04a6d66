//! Linear systems coming from matching traces of matrix powers with spectra.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::elim::reduce_big;
use super::matrix::IntMatrix;
use super::spectrum::Spectrum;

/// `constant + slope * t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Affine {
    pub constant: i64,
    pub slope: i64,
}

impl Affine {
    pub fn at(&self, t: i64) -> i64 {
        self.constant + self.slope * t
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.constant) {
            (0, c) => write!(f, "{c}"),
            (s, 0) => write!(f, "{}t", coeff(s)),
            (s, c) if c > 0 => write!(f, "{}t+{c}", coeff(s)),
            (s, c) => write!(f, "{}t{c}", coeff(s)),
        }
    }
}

fn coeff(s: i64) -> String {
    match s {
        1 => String::new(),
        -1 => "-".into(),
        s => s.to_string(),
    }
}

/// Counts fixed before solving for `m_1`, `m_4` and `a_(2,0)`.
///
/// `a_ij` counts root vertices of degree `i` and weight `j`; `m_k` is the
/// multiplicity of `k` in the weighted signless Laplacian, whose largest
/// eigenvalue `5` is assumed simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct FixedCounts {
    pub m0: i64,
    pub m2: i64,
    pub m3: i64,
    pub a10: i64,
    pub a30: i64,
    pub a11: i64,
    pub a21: i64,
}

/// Every nonnegative solution, as `t = 0, 1, 2, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultiplicitySolution {
    pub m1: Affine,
    pub m4: Affine,
    pub a20: Affine,
}

impl MultiplicitySolution {
    /// Number of root vertices, `a_10 + a_20 + a_30 + a_11 + a_21`.
    pub fn vertex_count(&self, fixed: &FixedCounts) -> Affine {
        Affine {
            constant: self.a20.constant + fixed.a10 + fixed.a30 + fixed.a11 + fixed.a21,
            slope: self.a20.slope,
        }
    }
}

/// Solves the order, trace and squared-trace equations for `m_1, m_4, a_(2,0)`.
///
/// With `m_5 = 1` the three equations read
///
/// ```text
///   m1 +   m4 -   a20 = a10 +   a30 +   a11 +   a21 - m0 -  m2 -  m3 -  1
///   m1 +  4m4 -  2a20 = a10 +  3a30 +  3a11 +  4a21      - 2m2 - 3m3 -  5
///   m1 + 16m4 -  6a20 = 2a10 + 12a30 + 10a11 + 18a21     - 4m2 - 9m3 - 25
/// ```
///
/// The coefficient matrix has rank two (4·row0 − 5·row1 + row2 = 0), so a
/// solution exists only when the right-hand sides obey the same relation, and
/// then the solutions form the line `(m1, m4, a20) = base + t (2, 1, 3)`.
pub fn glg_multiplicity_solutions(x: &FixedCounts) -> Option<MultiplicitySolution> {
    let r1 = x.a10 + x.a30 + x.a11 + x.a21 - x.m0 - x.m2 - x.m3 - 1;
    let r2 = x.a10 + 3 * x.a30 + 3 * x.a11 + 4 * x.a21 - 2 * x.m2 - 3 * x.m3 - 5;
    let r3 = 2 * x.a10 + 12 * x.a30 + 10 * x.a11 + 18 * x.a21 - 4 * x.m2 - 9 * x.m3 - 25;
    if 4 * r1 - 5 * r2 + r3 != 0 {
        return None;
    }
    // m1 = 2 m4 + (2 r1 - r2), a20 = 3 m4 + (r1 - r2)
    let m4_min = 0.max(ceil_div(r2 - 2 * r1, 2)).max(ceil_div(r2 - r1, 3));
    Some(MultiplicitySolution {
        m1: Affine {
            constant: 2 * m4_min + 2 * r1 - r2,
            slope: 2,
        },
        m4: Affine {
            constant: m4_min,
            slope: 1,
        },
        a20: Affine {
            constant: 3 * m4_min + r1 - r2,
            slope: 3,
        },
    })
}

fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// One unweighted bipartite parameter case with its solution line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterCase {
    pub label: String,
    pub fixed: FixedCounts,
    pub solution: MultiplicitySolution,
    pub vertex_count: Affine,
}

/// All cases for an unweighted bipartite root with a simple eigenvalue `0`.
///
/// Then `a_10 + a_30 = 8 - 2(m2 + m3)`, with `a_30 >= 1` and `a_10 <= 2`.
/// Letters follow `m2 + m3`, then `m3`; the digit is `a_10`.
pub fn bipartite_parameter_cases() -> Vec<ParameterCase> {
    let mut out = Vec::new();
    for a10 in 0..=2 {
        let mut letter = b'A';
        for s in 0..=3i64 {
            for m3 in 0..=s {
                let m2 = s - m3;
                let a30 = 8 - 2 * s - a10;
                let label = format!("{}{}", letter as char, a10);
                letter += 1;
                if a30 < 1 {
                    continue;
                }
                let fixed = FixedCounts {
                    m0: 1,
                    m2,
                    m3,
                    a10,
                    a30,
                    a11: 0,
                    a21: 0,
                };
                let solution = glg_multiplicity_solutions(&fixed).expect("consistent by construction");
                out.push(ParameterCase {
                    label,
                    vertex_count: solution.vertex_count(&fixed),
                    fixed,
                    solution,
                });
            }
        }
    }
    out
}

/// The four adjacency trace identities for a graph with spectrum in `-2..=3`.
pub fn adjacency_multiplicity_constraints(n: usize, edges: usize, triangles: usize, spec: &Spectrum) -> bool {
    spec.within(-2, 3)
        && spec.power_sum(0) == n as i128
        && spec.power_sum(1) == 0
        && spec.power_sum(2) == 2 * edges as i128
        && spec.power_sum(3) == 6 * triangles as i128
}

/// Number of distinct eigenvalues of a symmetric matrix.
///
/// This is the degree of the minimal polynomial, found as the rank of the
/// Krylov sequence `I, M, M², ...` flattened to vectors.
pub fn distinct_eigenvalue_count(m: &IntMatrix) -> usize {
    let n = m.order();
    if n == 0 {
        return 0;
    }
    let a: Vec<BigInt> = m.entries().iter().map(|&v| BigInt::from(v)).collect();
    let mut power: Vec<BigInt> = IntMatrix::identity(n).entries().iter().map(|&v| BigInt::from(v)).collect();
    let mut rows: Vec<BigInt> = Vec::new();
    for k in 0..=n {
        rows.extend(power.iter().cloned());
        if reduce_big(rows.clone(), k + 1, n * n).rank <= k {
            return k;
        }
        let mut next = vec![BigInt::from(0); n * n];
        for i in 0..n {
            for l in 0..n {
                if a[i * n + l] == BigInt::from(0) {
                    continue;
                }
                for j in 0..n {
                    next[i * n + j] += &a[i * n + l] * &power[l * n + j];
                }
            }
        }
        power = next;
    }
    n
}

/// A connected weighted root of diameter `D` has at least `D + 1` distinct eigenvalues.
pub fn distinct_eigenvalue_diameter_bound(m: &IntMatrix, diameter: usize) -> bool {
    distinct_eigenvalue_count(m) > diameter
}
