//! Exceptional graphs with smallest eigenvalue `-2` built from star
//! complements.
//!
//! A graph `Γ` whose eigenvalue `μ` has multiplicity `k` contains a set `X` of
//! `k` vertices with `μ` not an eigenvalue of `Γ − X`. Conversely, given the
//! complement `Γ'`, the possible vertices of `X` are the 0/1 vectors `b` over
//! `V(Γ')` with `bᵀ(μI − C)⁻¹b = μ`, and two of them may coexist only if their
//! mutual value is `−1` (adjacent) or `0` (non-adjacent). Extensions are the
//! cliques of the resulting compatibility graph.

mod cliques;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{accepts_last_vertex, candidate_neighbourhoods, next_level};
use crate::exact::{integral_spectrum, multiplicity, IntMatrix, RatMatrix, Spectrum};
use crate::glg::has_d_representation;
use crate::graph::{bits, write_graph6, CanonicalKey, Graph, GraphError};

pub use cliques::{maximal_cliques, ordered_cliques};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StarError {
    #[error("{mu} is an eigenvalue of the base graph")]
    EigenvalueOfBase { mu: i64 },
    #[error("{mu} is not an eigenvalue of the graph")]
    NotAnEigenvalue { mu: i64 },
    #[error("vertices {0} and {1} of the compatibility graph are not joined")]
    NotAClique(usize, usize),
    #[error("index {0} is not a vertex of the compatibility graph")]
    UnknownVertex(usize),
    #[error("base graph has {0} vertices; at most 16 are supported")]
    BaseTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A base graph `Γ'` together with the resolvent `(μI − A(Γ'))⁻¹`.
#[derive(Debug, Clone)]
pub struct StarInstance {
    base: Graph,
    mu: i64,
    resolvent: RatMatrix,
    /// `det(μI − C) · (μI − C)⁻¹`, an integer matrix.
    scaled: Vec<i64>,
    det: i64,
}

impl StarInstance {
    pub fn new(base: &Graph, mu: i64) -> Result<Self, StarError> {
        let n = base.order();
        if n > 16 {
            return Err(StarError::BaseTooLarge(n));
        }
        let shifted = base.adjacency_matrix().shifted_from(mu);
        let resolvent = shifted.to_rat().inverse().ok_or(StarError::EigenvalueOfBase { mu })?;
        let det = shifted.det();
        let det_rat = BigRational::from_integer(det.clone());
        let scaled = (0..n * n)
            .map(|k| {
                let v = resolvent.get(k / n, k % n) * &det_rat;
                debug_assert!(v.is_integer());
                v.to_integer().to_i64().expect("adjugate entries of a small graph fit in i64")
            })
            .collect();
        Ok(StarInstance {
            base: base.clone(),
            mu,
            resolvent,
            scaled,
            det: det.to_i64().expect("determinant of a small graph fits in i64"),
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn resolvent(&self) -> &RatMatrix {
        &self.resolvent
    }

    /// `det · ⟨x, y⟩` for 0/1 vectors given as vertex masks.
    fn scaled_form(&self, x: u64, y: u64) -> i64 {
        let n = self.base.order();
        bits(x).map(|i| bits(y).map(|j| self.scaled[i * n + j]).sum::<i64>()).sum()
    }

    /// Whether `⟨x, y⟩ = value`.
    fn form_equals(&self, x: u64, y: u64, value: i64) -> bool {
        self.scaled_form(x, y) == value * self.det
    }
}

/// `xᵀ(μI − C)⁻¹y` for 0/1 vectors.
pub fn star_bilinear(inst: &StarInstance, b1: &[bool], b2: &[bool]) -> BigRational {
    let mask = |b: &[bool]| b.iter().enumerate().filter(|(_, &x)| x).fold(0u64, |m, (i, _)| m | 1 << i);
    BigRational::new(BigInt::from(inst.scaled_form(mask(b1), mask(b2))), BigInt::from(inst.det))
}

/// Vectors `b` with `⟨b, b⟩ = μ`, joined when `⟨b₁, b₂⟩ ∈ {−1, 0}`.
#[derive(Debug, Clone)]
pub struct CompatGraph {
    inst: StarInstance,
    /// Each vertex as a mask over the base vertices, in increasing order.
    vectors: Vec<u64>,
    /// `joins[i][j]`: `None` when incompatible, `Some(true)` when the two new
    /// vertices are adjacent (value `−1`), `Some(false)` when not (value `0`).
    joins: Vec<Vec<Option<bool>>>,
    /// Compatible vertices as bitsets.
    neighbours: Vec<Vec<u64>>,
}

impl CompatGraph {
    pub fn new(base: &Graph, mu: i64) -> Result<Self, StarError> {
        Ok(CompatGraph::from_instance(StarInstance::new(base, mu)?))
    }

    pub fn from_instance(inst: StarInstance) -> Self {
        let n = inst.base.order();
        let vectors: Vec<u64> = (1u64..1 << n).filter(|&b| inst.form_equals(b, b, inst.mu)).collect();
        let m = vectors.len();
        let words = m.div_ceil(64).max(1);
        let mut joins = vec![vec![None; m]; m];
        let mut neighbours = vec![vec![0u64; words]; m];
        for i in 0..m {
            for j in i + 1..m {
                let v = inst.scaled_form(vectors[i], vectors[j]);
                let join = if v == -inst.det {
                    Some(true)
                } else if v == 0 {
                    Some(false)
                } else {
                    None
                };
                joins[i][j] = join;
                joins[j][i] = join;
                if join.is_some() {
                    neighbours[i][j / 64] |= 1 << (j % 64);
                    neighbours[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        CompatGraph {
            inst,
            vectors,
            joins,
            neighbours,
        }
    }

    pub fn instance(&self) -> &StarInstance {
        &self.inst
    }

    pub fn base(&self) -> &Graph {
        &self.inst.base
    }

    pub fn order(&self) -> usize {
        self.vectors.len()
    }

    /// Vertex `i` as a 0/1 vector over the base vertices.
    pub fn vector(&self, i: usize) -> Vec<bool> {
        (0..self.base().order()).map(|v| self.vectors[i] >> v & 1 == 1).collect()
    }

    pub fn vector_mask(&self, i: usize) -> u64 {
        self.vectors[i]
    }

    pub fn join(&self, i: usize, j: usize) -> Option<bool> {
        self.joins[i][j]
    }

    pub(crate) fn neighbour_words(&self, i: usize) -> &[u64] {
        &self.neighbours[i]
    }

    /// The base graph with one new vertex per clique member.
    pub fn extend(&self, clique: &[usize]) -> Result<Graph, StarError> {
        for &i in clique {
            if i >= self.order() {
                return Err(StarError::UnknownVertex(i));
            }
        }
        for (a, &i) in clique.iter().enumerate() {
            for &j in &clique[a + 1..] {
                if self.joins[i][j].is_none() {
                    return Err(StarError::NotAClique(i, j));
                }
            }
        }
        let mut g = self.base().clone();
        let t = g.order();
        for (a, &i) in clique.iter().enumerate() {
            let mut mask = self.vectors[i];
            for (b, &j) in clique[..a].iter().enumerate() {
                if self.joins[i][j] == Some(true) {
                    mask |= 1 << (t + b);
                }
            }
            g = g.with_new_vertex(mask)?;
        }
        Ok(g)
    }
}

/// Compatibility graph of `base` for the eigenvalue `mu`.
pub fn compat_graph(base: &Graph, mu: i64) -> Result<CompatGraph, StarError> {
    CompatGraph::new(base, mu)
}

/// See [`CompatGraph::extend`].
pub fn extend(compat: &CompatGraph, clique: &[usize]) -> Result<Graph, StarError> {
    compat.extend(clique)
}

/// Connected graphs on 6 to 8 vertices with smallest eigenvalue above `-2`
/// that are not generalized line graphs, sorted by order then canonical key.
pub fn enumerate_foundation() -> Vec<Graph> {
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for n in 2..=8 {
        level = next_level(&level, |p, out: &mut Vec<(CanonicalKey, Graph)>| {
            for k in 1..=p.order() {
                candidate_neighbourhoods(p, p.full_mask(), k, &mut |mask| {
                    let child = p.with_new_vertex(mask).expect("below 64 vertices");
                    if accepts_last_vertex(&child) && child.adjacency_matrix().minus_scalar(-2).is_positive_definite() {
                        out.push((child.canonical_key(), child));
                    }
                });
            }
        })
        .into_iter()
        .map(|(_, g)| g)
        .collect();
        if n >= 6 {
            let exceptional: Vec<Graph> = level.par_iter().filter(|g| !has_d_representation(g)).cloned().collect();
            out.extend(exceptional);
        }
    }
    out
}

/// Whether every eigenvalue lies in `lo..=hi` (not necessarily integral).
fn spectrum_within(a: &IntMatrix, lo: i64, hi: i64) -> bool {
    a.shifted_from(hi).is_positive_semidefinite() && a.minus_scalar(lo).is_positive_semidefinite()
}

/// A connected exceptional integral graph with spectral radius 3, with the
/// star complement it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalCandidate {
    #[serde(serialize_with = "as_graph6")]
    pub graph: Graph,
    pub spectrum: Spectrum,
    #[serde(serialize_with = "as_graph6")]
    pub base: Graph,
    pub clique_size: usize,
}

fn as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&write_graph6(g))
}

fn is_target(g: &Graph) -> Option<Spectrum> {
    if !g.is_connected() || g.is_bipartite() {
        return None;
    }
    let spec = integral_spectrum(&g.adjacency_matrix())?;
    (spec.within(-2, 3) && spec.multiplicity(3) > 0 && !has_d_representation(g)).then_some(spec)
}

/// Candidates from one base: every clique of size at most `max_clique` whose
/// extension keeps all eigenvalues in `[-2, 3]` (a hereditary condition).
fn candidates_from_base(base: &Graph, max_clique: usize) -> Vec<(CanonicalKey, ExceptionalCandidate)> {
    let Ok(compat) = CompatGraph::new(base, -2) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    ordered_cliques(
        &compat,
        max_clique,
        &mut |clique| {
            let g = compat.extend(clique).expect("enumerated cliques are cliques");
            spectrum_within(&g.adjacency_matrix(), -2, 3)
        },
        &mut |clique| {
            let g = compat.extend(clique).expect("enumerated cliques are cliques");
            if let Some(spectrum) = is_target(&g) {
                debug_assert_eq!(spectrum.multiplicity(-2), clique.len());
                out.push((
                    g.canonical_key(),
                    ExceptionalCandidate {
                        graph: g,
                        spectrum,
                        base: base.clone(),
                        clique_size: clique.len(),
                    },
                ));
            }
        },
    );
    out
}

/// Every connected non-bipartite exceptional integral graph with spectral
/// radius 3 obtained from a foundation graph and at most `max_clique` star
/// vertices for `-2`, deduplicated and sorted by order then canonical key.
///
/// The first base in foundation order that produces a graph is kept as its witness.
pub fn exceptional_candidates(max_clique: usize) -> Vec<ExceptionalCandidate> {
    exceptional_candidates_from(&enumerate_foundation(), max_clique)
}

/// As [`exceptional_candidates`] with an explicit list of bases.
pub fn exceptional_candidates_from(bases: &[Graph], max_clique: usize) -> Vec<ExceptionalCandidate> {
    let per_base: Vec<Vec<(CanonicalKey, ExceptionalCandidate)>> =
        bases.par_iter().map(|b| candidates_from_base(b, max_clique)).collect();
    let mut seen = std::collections::BTreeMap::new();
    for batch in per_base {
        for (key, c) in batch {
            seen.entry((c.graph.order(), key)).or_insert(c);
        }
    }
    seen.into_values().collect()
}

/// The first vertex subset `X`, by size then lexicographically, of size equal
/// to the multiplicity of `mu` such that `mu` is not an eigenvalue of `g − X`.
pub fn find_star_set(g: &Graph, mu: i64) -> Result<(Vec<usize>, Graph), StarError> {
    let a = g.adjacency_matrix();
    let k = multiplicity(&a, mu);
    if k == 0 {
        return Err(StarError::NotAnEigenvalue { mu });
    }
    let n = g.order();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let keep: Vec<usize> = (0..n).filter(|v| !subset.contains(v)).collect();
        let rest = a.principal_submatrix(&keep);
        if multiplicity(&rest, mu) == 0 {
            let complement = if keep.is_empty() {
                Graph::empty(0)?
            } else {
                g.induced_subgraph(&keep)?
            };
            return Ok((subset, complement));
        }
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                unreachable!("a star set always exists");
            }
            i -= 1;
            if subset[i] < n - k + i {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// The triangle-free members.
pub fn triangle_free_filter(candidates: &[ExceptionalCandidate]) -> Vec<ExceptionalCandidate> {
    candidates.iter().filter(|c| c.graph.triangle_count() == 0).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn bilinear_examples() {
        let k1 = StarInstance::new(&Graph::empty(1).unwrap(), -2).unwrap();
        assert_eq!(star_bilinear(&k1, &[true], &[true]), rat(-1, 2));
        let k2 = StarInstance::new(&Graph::complete(2).unwrap(), -2).unwrap();
        assert_eq!(star_bilinear(&k2, &[true, true], &[true, true]), rat(-2, 3));
        let c5 = StarInstance::new(&Graph::cycle(5).unwrap(), -2).unwrap();
        assert_eq!(star_bilinear(&c5, &[true; 5], &[true; 5]), rat(-5, 4));
        assert!(star_bilinear(&c5, &[false; 5], &[true; 5]).is_zero());
    }

    #[test]
    fn eigenvalue_of_base_is_rejected() {
        // C_4 has eigenvalue -2
        assert_eq!(
            StarInstance::new(&Graph::cycle(4).unwrap(), -2).unwrap_err(),
            StarError::EigenvalueOfBase { mu: -2 }
        );
    }

    #[test]
    fn single_vertex_extensions_have_simple_minus_two() {
        let base = Graph::cycle(5).unwrap();
        let compat = compat_graph(&base, -2).unwrap();
        assert!(compat.order() > 0);
        for i in 0..compat.order() {
            let g = compat.extend(&[i]).unwrap();
            assert_eq!(multiplicity(&g.adjacency_matrix(), -2), 1);
        }
        assert_eq!(compat.extend(&[]).unwrap(), base);
    }

    #[test]
    fn star_sets() {
        let (x, rest) = find_star_set(&Graph::complete(4).unwrap(), -1).unwrap();
        assert_eq!((x.len(), rest.order()), (3, 1));
        let (x, rest) = find_star_set(&Graph::petersen(), -2).unwrap();
        assert_eq!((x.len(), rest.order()), (4, 6));
        assert_eq!(multiplicity(&rest.adjacency_matrix(), -2), 0);
        let (x, _) = find_star_set(&Graph::cycle(4).unwrap(), -2).unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(
            find_star_set(&Graph::complete(4).unwrap(), 0).unwrap_err(),
            StarError::NotAnEigenvalue { mu: 0 }
        );
    }

    #[test]
    fn petersen_from_its_star_complement() {
        let (_, base) = find_star_set(&Graph::petersen(), -2).unwrap();
        let found = exceptional_candidates_from(&[base], 4);
        assert!(found.iter().any(|c| c.graph.canonical_key() == Graph::petersen().canonical_key()));
    }
}
