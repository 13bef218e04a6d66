use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::spectrum::Spectrum;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeCountError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("spectrum is not contained in 0..=5")]
    SpectrumOutOfRange,
    #[error("spectrum has total multiplicity {spectrum}, graph has {n} vertices")]
    SizeMismatch { spectrum: usize, n: usize },
}

/// Number of spanning trees, as the determinant of a reduced Laplacian.
pub fn spanning_tree_count(g: &Graph) -> Result<BigInt, TreeCountError> {
    if !g.is_connected() {
        return Err(TreeCountError::Disconnected);
    }
    let n = g.order();
    if n <= 1 {
        return Ok(BigInt::one());
    }
    let idx: Vec<usize> = (1..n).collect();
    Ok(g.laplacian().principal_submatrix(&idx).det())
}

/// Whether `n` can divide `2^(m2 + 2 m4) 3^m3 5^m5`.
///
/// For a connected bipartite graph the signless Laplacian and Laplacian share
/// a spectrum, and `n` times the spanning-tree count is the product of the
/// nonzero eigenvalues, so this must hold whenever the spectrum lies in `0..=5`.
pub fn tree_count_admissible(g: &Graph, q_spectrum: &Spectrum) -> Result<bool, TreeCountError> {
    if !g.is_connected() {
        return Err(TreeCountError::Disconnected);
    }
    if !g.is_bipartite() {
        return Err(TreeCountError::NotBipartite);
    }
    if !q_spectrum.within(0, 5) {
        return Err(TreeCountError::SpectrumOutOfRange);
    }
    if q_spectrum.total() != g.order() {
        return Err(TreeCountError::SizeMismatch {
            spectrum: q_spectrum.total(),
            n: g.order(),
        });
    }
    let m = |k| q_spectrum.multiplicity(k);
    let limits = [(2u64, m(2) + 2 * m(4)), (3, m(3)), (5, m(5))];
    let mut rest = g.order() as u64;
    for (p, max_exp) in limits {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > max_exp {
            return Ok(false);
        }
    }
    Ok(rest == 1)
}
