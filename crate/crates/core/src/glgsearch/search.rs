//! Isomorph-free generation of connected vertex-weighted graphs whose weighted
//! signless Laplacian has largest eigenvalue at most 5.

use rayon::prelude::*;

use crate::enumerate::{accepts_last_vertex, candidate_neighbourhoods, next_level};
use crate::exact::exceeds_with_witness;
use crate::glg::q_matrix;
use crate::graph::{bits, CanonicalKey, Graph, VertexWeightedGraph};

use super::checks::admissible_profile;

/// Limits and pruning for [`enumerate_candidates`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    pub max_vertices: usize,
    pub max_weight: u32,
    /// Also discard graphs with two eigenvalues above 4. Sound for the root
    /// search because 5 is then simple and every other eigenvalue is at most 4.
    pub second_eigenvalue_prune: bool,
}

impl SearchCaps {
    pub fn new(max_vertices: usize) -> Self {
        SearchCaps {
            max_vertices,
            max_weight: 2,
            second_eigenvalue_prune: true,
        }
    }
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps::new(32)
    }
}

/// Whether `hw` stays inside the searched family.
///
/// Both conditions survive deleting a vertex: the weighted signless Laplacian
/// of the smaller graph is a principal submatrix minus a nonnegative diagonal.
pub fn within_search_bounds(hw: &VertexWeightedGraph, second_eigenvalue_prune: bool) -> bool {
    let q = q_matrix(hw);
    if !q.shifted_from(5).is_positive_semidefinite() {
        return false;
    }
    !second_eigenvalue_prune || q.shifted_from(4).inertia().negative <= 1
}

/// Cheap exact rejection: a rounded eigenvector certifies the violation.
/// Graphs not rejected here still go through [`within_search_bounds`].
fn provably_outside(hw: &VertexWeightedGraph, second_eigenvalue_prune: bool) -> bool {
    let q = q_matrix(hw);
    exceeds_with_witness(&q, 5, 1) || (second_eigenvalue_prune && exceeds_with_witness(&q, 4, 2))
}

fn children(parent: &VertexWeightedGraph, caps: &SearchCaps, out: &mut Vec<(CanonicalKey, VertexWeightedGraph)>) {
    let h = parent.graph();
    let f = parent.weights();
    // a vertex whose diagonal would reach 5 cannot gain a neighbour
    let allowed = bits(h.full_mask())
        .filter(|&x| h.degree(x) + 2 * f[x] as usize <= 3)
        .fold(0u64, |m, x| m | 1 << x);
    for k in 1..=4.min(h.order()) {
        candidate_neighbourhoods(h, allowed, k, &mut |mask| {
            let Ok(child) = h.with_new_vertex(mask) else {
                return;
            };
            if !accepts_last_vertex(&child) {
                return;
            }
            for w in 0..=caps.max_weight {
                if k + 2 * w as usize > 4 {
                    break;
                }
                let mut weights = f.to_vec();
                weights.push(w);
                let hw = VertexWeightedGraph::new(child.clone(), weights).expect("lengths match");
                if !provably_outside(&hw, caps.second_eigenvalue_prune) {
                    out.push(hw.canonical_form());
                }
            }
        });
    }
}

/// Every connected vertex-weighted graph up to the caps, once per isomorphism
/// class, grouped by order and sorted by canonical key within each order.
pub struct Candidates {
    caps: SearchCaps,
    level: Vec<VertexWeightedGraph>,
    next: usize,
}

/// Level-by-level stream of candidates; see [`Candidates`].
pub fn enumerate_candidates(caps: SearchCaps) -> Candidates {
    let mut seeds: Vec<(CanonicalKey, VertexWeightedGraph)> = (0..=caps.max_weight.min(2))
        .map(|w| VertexWeightedGraph::new(Graph::empty(1).expect("one vertex"), vec![w]).expect("one weight"))
        .map(|hw| hw.canonical_form())
        .collect();
    seeds.sort_by(|a, b| a.0.cmp(&b.0));
    let level = if caps.max_vertices == 0 {
        Vec::new()
    } else {
        seeds.into_iter().map(|(_, hw)| hw).collect()
    };
    Candidates { caps, level, next: 0 }
}

impl Candidates {
    /// Returns the rest of the current level and advances to the next one.
    pub fn next_level(&mut self) -> Option<Vec<VertexWeightedGraph>> {
        if self.level.is_empty() {
            return None;
        }
        let current = std::mem::take(&mut self.level);
        let order = current[0].order();
        if order < self.caps.max_vertices {
            let caps = self.caps;
            self.level = next_level(&current, |p, out| children(p, &caps, out))
                .into_par_iter()
                .map(|(_, hw)| hw)
                .filter(|hw| within_search_bounds(hw, caps.second_eigenvalue_prune))
                .collect();
        }
        let skip = std::mem::replace(&mut self.next, 0);
        Some(current.into_iter().skip(skip).filter(admissible_profile).collect())
    }
}

impl Iterator for Candidates {
    type Item = VertexWeightedGraph;

    fn next(&mut self) -> Option<VertexWeightedGraph> {
        loop {
            while self.next < self.level.len() {
                let hw = &self.level[self.next];
                self.next += 1;
                if admissible_profile(hw) {
                    return Some(hw.clone());
                }
            }
            self.next_level()?;
        }
    }
}

/// Whether the weighted signless Laplacian has only integer eigenvalues, all
/// in `0..=5`, with `5` among them.
pub fn is_root(hw: &VertexWeightedGraph) -> bool {
    let q = q_matrix(hw);
    if q.shifted_from(5).psd_nullity().map_or(true, |z| z == 0) {
        return false;
    }
    crate::exact::integral_spectrum(&q).is_some_and(|s| s.within(0, 5) && s.multiplicity(5) > 0)
}

/// All roots up to the caps, sorted by order then canonical key.
pub fn glg_roots_with(caps: SearchCaps) -> Vec<VertexWeightedGraph> {
    let mut stream = enumerate_candidates(caps);
    let mut out = Vec::new();
    while let Some(level) = stream.next_level() {
        out.extend(level.into_par_iter().filter(is_root).collect::<Vec<_>>());
    }
    out
}

/// The vertex-weighted graphs whose generalized line graphs have spectral
/// radius 3 with all eigenvalues integral.
pub fn glg_roots() -> Vec<VertexWeightedGraph> {
    glg_roots_with(SearchCaps::default())
}
