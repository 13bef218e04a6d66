use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::matrix::{IntMatrix, RatMatrix};
use super::spectrum::{interlaces, InterlaceReport, Spectrum};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("cell {0} is empty")]
    EmptyCell(usize),
    #[error("index {0} appears in more than one cell")]
    Overlap(usize),
    #[error("index {0} is not covered by any cell")]
    Uncovered(usize),
    #[error("index {index} is out of range for order {n}")]
    OutOfRange { index: usize, n: usize },
}

/// Partition of `0..n` into nonempty cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for (ci, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(PartitionError::EmptyCell(ci));
            }
            for &x in cell {
                if x >= n {
                    return Err(PartitionError::OutOfRange { index: x, n });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(PartitionError::Overlap(x));
                }
            }
        }
        if let Some(x) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::Uncovered(x));
        }
        Ok(Partition { cells })
    }

    /// One cell per distinct key, ordered by key.
    pub fn by_key<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&x| key(x));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for x in idx {
            match cells.last_mut() {
                Some(c) if key(c[0]) == key(x) => c.push(x),
                _ => cells.push(vec![x]),
            }
        }
        Partition { cells }
    }

    pub fn trivial(n: usize) -> Self {
        Partition {
            cells: vec![(0..n).collect()],
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// `S = PᵀMP`: sums of `M` over pairs of cells.
fn cell_sums(m: &IntMatrix, pi: &Partition) -> Vec<Vec<i64>> {
    let c = pi.cells();
    c.iter()
        .map(|ci| {
            c.iter()
                .map(|cj| ci.iter().flat_map(|&x| cj.iter().map(move |&y| (x, y))).map(|(x, y)| m.get(x, y)).sum())
                .collect()
        })
        .collect()
}

/// `(PᵀP)⁻¹ PᵀMP`: average row sum of each cell into each other cell.
pub fn quotient_matrix(m: &IntMatrix, pi: &Partition) -> RatMatrix {
    let s = cell_sums(m, pi);
    RatMatrix::from_fn(pi.len(), |i, j| {
        BigRational::new(BigInt::from(s[i][j]), BigInt::from(pi.cells()[i].len()))
    })
}

/// True when every row of `M` has a constant sum into each cell, per cell.
pub fn is_equitable(m: &IntMatrix, pi: &Partition) -> bool {
    let cells = pi.cells();
    cells.iter().all(|ci| {
        cells.iter().all(|cj| {
            let sum = |x: usize| cj.iter().map(|&y| m.get(x, y)).sum::<i64>();
            let first = sum(ci[0]);
            ci.iter().all(|&x| sum(x) == first)
        })
    })
}

/// Interlacing of the quotient's eigenvalues inside an integral parent spectrum.
///
/// The quotient is similar to a symmetric matrix congruent to `PᵀMP - cPᵀP`
/// after shifting by `c`, so eigenvalue counts on either side of an integer `c`
/// are inertia counts of that integer matrix. Tightness forces every quotient
/// eigenvalue to be an eigenvalue of `M`, so only integer candidates are tried.
pub fn quotient_interlacing(m: &IntMatrix, pi: &Partition, parent: &Spectrum) -> InterlaceReport {
    let s = cell_sums(m, pi);
    let k = pi.len();
    let sizes: Vec<i64> = pi.cells().iter().map(|c| c.len() as i64).collect();
    let shifted = |c: i64| IntMatrix::from_fn(k, |i, j| s[i][j] - if i == j { c * sizes[i] } else { 0 });
    let mut holds = true;
    let mut above_sup = 0usize;
    for (lambda, mult) in parent.iter_desc() {
        let inertia = shifted(lambda).inertia();
        let below_sup = parent.total() - above_sup - mult;
        if inertia.positive > above_sup || inertia.negative > below_sup {
            holds = false;
            break;
        }
        above_sup += mult;
    }
    if !holds {
        return InterlaceReport {
            holds,
            tight: false,
        };
    }
    let mut quotient_values = Vec::with_capacity(k);
    for (lambda, _) in parent.iter_desc() {
        let z = shifted(lambda).inertia().zero;
        quotient_values.extend(std::iter::repeat(lambda).take(z));
    }
    if quotient_values.len() < k {
        return InterlaceReport { holds, tight: false };
    }
    interlaces(&quotient_values, &parent.eigenvalues_desc())
}
