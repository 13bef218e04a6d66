//! Final classification: generalized line graphs from the root search plus
//! exceptional graphs from star complements, compared with the expected
//! multiplicity table, and an independent brute-force enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{accepts_last_vertex, candidate_neighbourhoods, next_level};
use crate::exact::{exceeds_with_witness, integral_spectrum, Spectrum};
use crate::glg::generalized_line_graph;
use crate::glgsearch::{glg_roots_with, SearchCaps};
use crate::graph::{write_graph6, CanonicalKey, Graph, RootJson, VertexWeightedGraph};
use crate::starsearch::{exceptional_candidates, ExceptionalCandidate};

/// Eigenvalues indexing the multiplicity vectors, largest first.
pub const EIGENVALUES: [i64; 6] = [3, 2, 1, 0, -1, -2];

/// Expected multiplicity vectors over [`EIGENVALUES`]; rows starting with `LG`
/// or `GLG` are generalized line graphs, `EG` rows are exceptional.
pub const EXPECTED_ROWS: [(&str, [usize; 6]); 22] = [
    ("LG4", [1, 0, 0, 0, 3, 0]),
    ("LG6", [1, 0, 1, 2, 0, 2]),
    ("LG7a", [1, 1, 0, 1, 3, 1]),
    ("LG7b", [1, 0, 2, 1, 1, 2]),
    ("LG12", [1, 3, 0, 2, 3, 3]),
    ("GLG5", [1, 0, 0, 2, 1, 1]),
    ("GLG8", [1, 0, 1, 4, 0, 2]),
    ("GLG10", [1, 1, 1, 3, 2, 2]),
    ("GLG13", [1, 1, 2, 5, 1, 3]),
    ("EG7", [1, 0, 2, 0, 3, 1]),
    ("EG8a", [1, 1, 1, 0, 4, 1]),
    ("EG8b", [1, 0, 3, 0, 2, 2]),
    ("EG8c", [1, 0, 2, 2, 1, 2]),
    ("EG9", [1, 1, 1, 2, 2, 2]),
    ("EG10a", [1, 1, 3, 0, 2, 3]),
    ("EG10b", [1, 1, 2, 2, 1, 3]),
    ("EG10c", [1, 1, 1, 4, 0, 3]),
    ("EG10d", [1, 0, 5, 0, 0, 4]),
    ("EG11a", [1, 1, 3, 1, 2, 3]),
    ("EG11b", [1, 1, 3, 1, 2, 3]),
    ("EG11c", [1, 1, 2, 3, 1, 3]),
    ("EG12", [1, 2, 1, 4, 0, 4]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Glg,
    Exceptional,
}

impl GraphClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphClass::Glg => "glg",
            GraphClass::Exceptional => "exceptional",
        }
    }

    fn of_row(label: &str) -> GraphClass {
        if label.starts_with("EG") {
            GraphClass::Exceptional
        } else {
            GraphClass::Glg
        }
    }
}

/// How an entry was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Root(RootJson),
    StarComplement { base: String, clique_size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub graph6: String,
    pub n: usize,
    pub spectrum: Spectrum,
    pub class: GraphClass,
    pub witness: Witness,
    /// Table row with the same multiplicities and class. The two cospectral
    /// 11-vertex rows cannot be told apart and are both reported as `EG11a/b`.
    pub matched_row: Option<String>,
    #[serde(skip)]
    pub graph: Graph,
}

impl ReportEntry {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.spectrum.multiplicity_vector(&EIGENVALUES)
    }

    pub fn name(&self) -> &str {
        self.matched_row.as_deref().unwrap_or("unmatched")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub glg: usize,
    pub exceptional: usize,
    pub max_order: usize,
}

/// Differences between the classification and the expected table.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RowComparison {
    /// Table rows with no matching entry.
    pub missing_rows: Vec<String>,
    /// Entries matching no remaining row.
    pub unexpected: Vec<String>,
}

impl RowComparison {
    pub fn matches(&self) -> bool {
        self.missing_rows.is_empty() && self.unexpected.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
    pub expected_rows: RowComparison,
    pub version: String,
}

impl ClassificationReport {
    /// Violations of the report invariants; empty when all hold.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut keys = BTreeMap::new();
        for e in &self.entries {
            let g = &e.graph;
            if let Some(other) = keys.insert(g.canonical_key(), e.graph6.clone()) {
                out.push(format!("{} is isomorphic to {other}", e.graph6));
            }
            if !g.is_connected() || g.is_bipartite() {
                out.push(format!("{} is disconnected or bipartite", e.graph6));
            }
            if e.spectrum.total() != e.n || e.spectrum.max() != Some(3) || e.spectrum.min().is_none_or(|m| m < -2) {
                out.push(format!("{} has spectrum {}", e.graph6, e.spectrum));
            }
            if integral_spectrum(&g.adjacency_matrix()).as_ref() != Some(&e.spectrum) {
                out.push(format!("{} spectrum does not recompute", e.graph6));
            }
        }
        out
    }
}

fn label_for(row: &str) -> String {
    match row {
        "EG11a" | "EG11b" => "EG11a/b".to_string(),
        r => r.to_string(),
    }
}

/// Assigns table rows to entries and sorts entries by row order.
fn match_table(entries: &mut [ReportEntry]) -> RowComparison {
    let mut free: Vec<Option<(&str, [usize; 6])>> = EXPECTED_ROWS.iter().copied().map(Some).collect();
    let mut cmp = RowComparison::default();
    for e in entries.iter_mut() {
        let m = e.multiplicities();
        let hit = free
            .iter_mut()
            .find(|slot| slot.is_some_and(|(label, v)| v[..] == m[..] && GraphClass::of_row(label) == e.class));
        match hit {
            Some(slot) => {
                let (label, _) = slot.take().expect("found a free row");
                e.matched_row = Some(label_for(label));
            }
            None => cmp.unexpected.push(e.graph6.clone()),
        }
    }
    cmp.missing_rows = free.into_iter().flatten().map(|(l, _)| l.to_string()).collect();
    let row_index = |e: &ReportEntry| {
        e.matched_row
            .as_deref()
            .and_then(|l| EXPECTED_ROWS.iter().position(|(r, _)| label_for(r) == l))
            .unwrap_or(usize::MAX)
    };
    entries.sort_by(|a, b| row_index(a).cmp(&row_index(b)).then_with(|| a.graph6.cmp(&b.graph6)));
    cmp
}

/// Runs both searches and assembles the report.
pub fn classify_all() -> ClassificationReport {
    classify_with(SearchCaps::default(), 4)
}

/// As [`classify_all`] with explicit search limits.
pub fn classify_with(caps: SearchCaps, max_clique: usize) -> ClassificationReport {
    classify_from(&glg_roots_with(caps), exceptional_candidates(max_clique))
}

/// Assembles the report from already computed roots and exceptional graphs.
pub fn classify_from(roots: &[VertexWeightedGraph], exceptional: Vec<ExceptionalCandidate>) -> ClassificationReport {
    let mut seen: BTreeMap<CanonicalKey, ReportEntry> = BTreeMap::new();
    for root in roots {
        let g = generalized_line_graph(root).expect("roots are small");
        if g.order() == 0 || !g.is_connected() || g.is_bipartite() {
            continue;
        }
        let Some(spectrum) = integral_spectrum(&g.adjacency_matrix()) else {
            continue;
        };
        seen.entry(g.canonical_key()).or_insert(ReportEntry {
            graph6: write_graph6(&g),
            n: g.order(),
            spectrum,
            class: GraphClass::Glg,
            witness: Witness::Root(root.to_json()),
            matched_row: None,
            graph: g,
        });
    }
    for c in exceptional {
        seen.entry(c.graph.canonical_key()).or_insert(ReportEntry {
            graph6: write_graph6(&c.graph),
            n: c.graph.order(),
            spectrum: c.spectrum,
            class: GraphClass::Exceptional,
            witness: Witness::StarComplement {
                base: write_graph6(&c.base),
                clique_size: c.clique_size,
            },
            matched_row: None,
            graph: c.graph,
        });
    }
    let mut entries: Vec<ReportEntry> = seen.into_values().collect();
    let expected_rows = match_table(&mut entries);
    let summary = Summary {
        total: entries.len(),
        glg: entries.iter().filter(|e| e.class == GraphClass::Glg).count(),
        exceptional: entries.iter().filter(|e| e.class == GraphClass::Exceptional).count(),
        max_order: entries.iter().map(|e| e.n).max().unwrap_or(0),
    };
    ClassificationReport {
        entries,
        summary,
        expected_rows,
        version: concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION")).to_string(),
    }
}

fn spectrum_in_band(g: &Graph) -> bool {
    let a = g.adjacency_matrix();
    a.shifted_from(3).is_positive_semidefinite() && a.minus_scalar(-2).is_positive_semidefinite()
}

/// Connected non-bipartite integral graphs with spectral radius 3 and at most
/// `max_n` vertices, found by generating every connected graph whose
/// eigenvalues lie in `[-2, 3]`; sorted by order then canonical key.
pub fn brute_force_crosscheck(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for _ in 2..=max_n {
        let merged = next_level(&level, |p, out: &mut Vec<(CanonicalKey, Graph)>| {
            for k in 1..=p.order() {
                candidate_neighbourhoods(p, p.full_mask(), k, &mut |mask| {
                    let child = p.with_new_vertex(mask).expect("below 64 vertices");
                    if !accepts_last_vertex(&child) {
                        return;
                    }
                    let a = child.adjacency_matrix();
                    let negated = a.shifted_from(0);
                    // exact witnesses of an eigenvalue above 3 or below -2
                    if exceeds_with_witness(&a, 3, 1) || exceeds_with_witness(&negated, 2, 1) {
                        return;
                    }
                    out.push((child.canonical_key(), child));
                });
            }
        });
        level = merged.into_par_iter().map(|(_, g)| g).filter(spectrum_in_band).collect();
        let hits: Vec<Graph> = level
            .par_iter()
            .filter(|g| {
                !g.is_bipartite()
                    && integral_spectrum(&g.adjacency_matrix()).is_some_and(|s| s.multiplicity(3) > 0)
            })
            .cloned()
            .collect();
        out.extend(hits);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows_are_consistent() {
        for (label, m) in EXPECTED_ROWS {
            let n: usize = m.iter().sum();
            let digits: String = label.chars().filter(|c| c.is_ascii_digit()).collect();
            assert_eq!(n.to_string(), digits, "{label}");
            // eigenvalues sum to zero
            let trace: i64 = m.iter().zip(EIGENVALUES).map(|(&k, e)| k as i64 * e).sum();
            assert_eq!(trace, 0, "{label}");
        }
    }

    #[test]
    fn brute_force_small() {
        let found = brute_force_crosscheck(4);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].canonical_key(), Graph::complete(4).unwrap().canonical_key());
    }
}
