//! Search for the vertex-weighted roots `(H, f)` whose weighted signless
//! Laplacian has integral spectrum in `0..=5` containing `5`.
//!
//! Their generalized line graphs are exactly the integral generalized line
//! graphs with spectral radius 3. Generation prunes only with spectral bounds
//! that survive vertex deletion; the structural predicates in [`checks`] are
//! evaluated on the survivors afterwards and recorded in a certificate.

pub mod checks;
mod search;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{
    bipartite_parameter_cases, distinct_eigenvalue_diameter_bound, glg_multiplicity_solutions, tree_count_admissible,
    FixedCounts, Spectrum,
};
use crate::glg::{q_matrix, q_spectrum, spectra_shift_check, verify_incidence_identities};
use crate::graph::{RootJson, VertexWeightedGraph};

pub use checks::{
    admissible_profile, degree_three_vertices_close, leaf_pruned_core, quotient_inequality_check, structural_checks,
    weighted_leaves_spread_out, QuotientInequality, StructuralChecks, TypedVertexProfile,
};
pub use search::{
    enumerate_candidates, glg_roots, glg_roots_with, is_root, within_search_bounds, Candidates, SearchCaps,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("edge {0}-{1} lies in no triangle")]
    NoTriangle(usize, usize),
    #[error("vertex {vertex} has degree {degree} and weight {weight}; expected degree 2 and weight 0")]
    WrongType { vertex: usize, degree: usize, weight: u32 },
}

/// Deletes the edge `x1 x2` of a triangle whose ends have degree 2 and weight
/// 0, and gives both ends weight 1.
///
/// The weighted signless Laplacian is integral before exactly when it is
/// integral after.
pub fn triangle_transform(
    hw: &VertexWeightedGraph,
    x1: usize,
    x2: usize,
) -> Result<VertexWeightedGraph, TransformError> {
    let h = hw.graph();
    for x in [x1, x2] {
        if x >= h.order() {
            return Err(TransformError::OutOfRange(x));
        }
    }
    if !h.has_edge(x1, x2) {
        return Err(TransformError::NotAnEdge(x1, x2));
    }
    if h.neighbour_mask(x1) & h.neighbour_mask(x2) == 0 {
        return Err(TransformError::NoTriangle(x1, x2));
    }
    for x in [x1, x2] {
        let (degree, weight) = (h.degree(x), hw.weights()[x]);
        if degree != 2 || weight != 0 {
            return Err(TransformError::WrongType { vertex: x, degree, weight });
        }
    }
    let mut g = h.clone();
    g.remove_edge(x1, x2).expect("edge checked above");
    let mut f = hw.weights().to_vec();
    f[x1] = 1;
    f[x2] = 1;
    Ok(VertexWeightedGraph::new(g, f).expect("lengths match"))
}

/// Everything verified about one root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateChecks {
    pub admissible_profile: bool,
    pub structural: StructuralChecks,
    /// On the root with leaves stripped repeatedly; `None` if nothing remains.
    pub quotient_inequality: Option<QuotientInequality>,
    /// Equality in the quotient inequality only when stripping removed nothing.
    pub quotient_equality_only_without_leaves: bool,
    pub degree_three_vertices_close: bool,
    /// Vertex count against the spanning-tree factorisation; unweighted bipartite roots only.
    pub tree_count_admissible: Option<bool>,
    /// Multiplicities and type counts solve the trace system.
    pub trace_system: bool,
    /// Matching parameter case with its value of `t`, unweighted roots with degree at most 3.
    pub parameter_case: Option<(String, i64)>,
    pub diameter_bound: bool,
    pub incidence_identities: bool,
    pub spectral_radius_shift: bool,
}

impl CertificateChecks {
    pub fn all_pass(&self) -> bool {
        self.admissible_profile
            && (self.structural.all_hold() || !self.structural.max_degree_at_most_three)
            && !matches!(self.quotient_inequality, Some(QuotientInequality::Violated))
            && self.quotient_equality_only_without_leaves
            && self.degree_three_vertices_close
            && self.tree_count_admissible != Some(false)
            && self.trace_system
            && self.diameter_bound
            && self.incidence_identities
            && self.spectral_radius_shift
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchCertificate {
    pub root: RootJson,
    pub q_spectrum: Spectrum,
    pub checks: CertificateChecks,
}

/// Type counts and multiplicities of `spec` as the trace system expects them.
pub fn fixed_counts(hw: &VertexWeightedGraph, spec: &Spectrum) -> FixedCounts {
    let p = TypedVertexProfile::of(hw);
    let m = |k| spec.multiplicity(k) as i64;
    FixedCounts {
        m0: m(0),
        m2: m(2),
        m3: m(3),
        a10: p.a10 as i64,
        a30: p.a30 as i64,
        a11: p.a11 as i64,
        a21: p.a21 as i64,
    }
}

/// Runs every check on a root. `None` if `hw` is not a root.
pub fn certify(hw: &VertexWeightedGraph) -> Option<SearchCertificate> {
    let spec = q_spectrum(hw)?;
    if !spec.within(0, 5) || spec.multiplicity(5) == 0 {
        return None;
    }
    let h = hw.graph();
    let q = q_matrix(hw);
    let structural = structural_checks(hw);
    let core = leaf_pruned_core(h);
    let quotient_inequality = core.as_ref().map(quotient_inequality_check);
    let quotient_equality_only_without_leaves = match (&core, quotient_inequality) {
        (Some(c), Some(QuotientInequality::Holds { equality: true })) => c.order() == h.order(),
        _ => true,
    };
    let degree_three_close = core.as_ref().map_or(true, degree_three_vertices_close);
    let tree_count = (hw.is_unweighted() && h.is_bipartite()).then(|| tree_count_admissible(h, &spec).unwrap_or(false));

    let profile = TypedVertexProfile::of(hw);
    let degree_three = h.max_degree() <= 3 && h.order() > 1;
    let fixed = fixed_counts(hw, &spec);
    let m = |k| spec.multiplicity(k) as i64;
    let on_line = |s: &crate::exact::MultiplicitySolution| {
        let t = m(4) - s.m4.constant;
        (t >= 0 && s.m1.at(t) == m(1) && s.a20.at(t) == profile.a20 as i64).then_some(t)
    };
    let trace_system = !degree_three
        || (m(5) == 1 && glg_multiplicity_solutions(&fixed).as_ref().and_then(on_line).is_some());
    let parameter_case = if degree_three && hw.is_unweighted() {
        bipartite_parameter_cases()
            .into_iter()
            .filter(|c| c.fixed == fixed)
            .find_map(|c| on_line(&c.solution).map(|t| (c.label, t)))
    } else {
        None
    };
    let diameter_bound = h.diameter().is_some_and(|d| distinct_eigenvalue_diameter_bound(&q, d));

    Some(SearchCertificate {
        root: hw.to_json(),
        q_spectrum: spec,
        checks: CertificateChecks {
            admissible_profile: admissible_profile(hw),
            structural,
            quotient_inequality,
            quotient_equality_only_without_leaves,
            degree_three_vertices_close: degree_three_close,
            tree_count_admissible: tree_count,
            trace_system,
            parameter_case,
            diameter_bound,
            incidence_identities: verify_incidence_identities(hw),
            spectral_radius_shift: spectra_shift_check(hw),
        },
    })
}
