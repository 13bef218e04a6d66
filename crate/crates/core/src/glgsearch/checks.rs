//! Literal structural predicates on vertex-weighted root graphs.

use num_rational::Ratio;
use serde::Serialize;

use crate::exact::integral_spectrum;
use crate::glg::q_matrix;
use crate::graph::{bits, Graph, VertexWeightedGraph};

/// Number of root vertices of each (degree, weight) type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TypedVertexProfile {
    pub a10: usize,
    pub a11: usize,
    pub a20: usize,
    pub a21: usize,
    pub a30: usize,
    pub a40: usize,
    /// Vertices whose type is none of the above.
    pub other: usize,
}

impl TypedVertexProfile {
    pub fn of(hw: &VertexWeightedGraph) -> Self {
        let mut p = TypedVertexProfile::default();
        let h = hw.graph();
        for (x, &w) in hw.weights().iter().enumerate() {
            let slot = match (h.degree(x), w) {
                (1, 0) => &mut p.a10,
                (1, 1) => &mut p.a11,
                (2, 0) => &mut p.a20,
                (2, 1) => &mut p.a21,
                (3, 0) => &mut p.a30,
                (4, 0) => &mut p.a40,
                _ => &mut p.other,
            };
            *slot += 1;
        }
        p
    }

    pub fn total(&self) -> usize {
        self.a10 + self.a11 + self.a20 + self.a21 + self.a30 + self.a40 + self.other
    }
}

/// Whether every vertex has one of the types allowed when the weighted
/// signless Laplacian has largest eigenvalue at most five, a degree-4 vertex
/// only occurring in the unweighted star `K_{1,4}`.
///
/// A single vertex has degree 0 and is accepted with weight at most 2.
pub fn admissible_profile(hw: &VertexWeightedGraph) -> bool {
    if hw.order() == 1 {
        return hw.weights()[0] <= 2;
    }
    let p = TypedVertexProfile::of(hw);
    if p.other != 0 {
        return false;
    }
    p.a40 == 0 || (p.a40 == 1 && p.a10 == 4 && p.total() == 5)
}

/// Results of the structural predicates, each evaluated literally.
///
/// Implications are reported as satisfied when their hypothesis fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructuralChecks {
    pub max_degree_at_most_three: bool,
    /// An unweighted leaf forces a zero eigenvalue, a bipartite root and no weights.
    pub leaf_forces_bipartite_unweighted: bool,
    pub leaves_within_distance_two: bool,
    pub at_most_two_leaves: bool,
    /// Two adjacent unweighted degree-2 vertices without a common neighbour exist.
    pub bare_degree_two_edge: bool,
    /// Such an edge forces a zero eigenvalue.
    pub bare_degree_two_edge_forces_zero: bool,
    pub no_two_separated_induced_cycles: bool,
    /// No unweighted leaf when every eigenvalue is at least one.
    pub no_leaf_when_spectrum_at_least_one: bool,
    pub weighted_degree_two_independent: bool,
    /// No triangle made of one vertex each of types (2,0), (2,1) and (3,0).
    pub no_mixed_triangle: bool,
    /// Diameter at most 3 when the spectrum lies in `1..=5` with `5` present,
    /// no weighted leaf exists and some unweighted vertex has degree 3.
    pub small_diameter_without_weighted_leaf: bool,
}

impl StructuralChecks {
    /// Whether every predicate except the descriptive `bare_degree_two_edge` holds.
    pub fn all_hold(&self) -> bool {
        self.max_degree_at_most_three
            && self.leaf_forces_bipartite_unweighted
            && self.leaves_within_distance_two
            && self.at_most_two_leaves
            && self.bare_degree_two_edge_forces_zero
            && self.no_two_separated_induced_cycles
            && self.no_leaf_when_spectrum_at_least_one
            && self.weighted_degree_two_independent
            && self.no_mixed_triangle
            && self.small_diameter_without_weighted_leaf
    }
}

fn vertices_of_type(hw: &VertexWeightedGraph, degree: usize, weight: u32) -> u64 {
    let h = hw.graph();
    hw.weights()
        .iter()
        .enumerate()
        .filter(|&(x, &w)| h.degree(x) == degree && w == weight)
        .fold(0, |m, (x, _)| m | 1 << x)
}

/// Evaluates every predicate of [`StructuralChecks`] on `hw`.
pub fn structural_checks(hw: &VertexWeightedGraph) -> StructuralChecks {
    let h = hw.graph();
    let q = q_matrix(hw);
    let has_zero = q.rank() < q.order();
    let leaves = vertices_of_type(hw, 1, 0);
    let a20 = vertices_of_type(hw, 2, 0);
    let a21 = vertices_of_type(hw, 2, 1);
    let a30 = vertices_of_type(hw, 3, 0);
    let a11 = vertices_of_type(hw, 1, 1);

    let leaf_forces = leaves == 0 || (has_zero && h.is_bipartite() && hw.is_unweighted());
    let leaves_close = bits(leaves).all(|x| {
        let d = h.distances_from(x);
        bits(leaves).all(|y| d[y].is_some_and(|d| d <= 2))
    });

    let bare_edge = bits(a20).any(|x| {
        bits(h.neighbour_mask(x) & a20).any(|y| h.neighbour_mask(x) & h.neighbour_mask(y) == 0)
    });

    let at_least_one = q.minus_scalar(1).is_positive_semidefinite();

    let independent = bits(a21).all(|x| h.neighbour_mask(x) & a21 == 0);

    let mixed_triangle = bits(a20).any(|x| {
        bits(h.neighbour_mask(x) & a21).any(|y| h.neighbour_mask(x) & h.neighbour_mask(y) & a30 != 0)
    });

    let spectrum_in_one_to_five = integral_spectrum(&q)
        .is_some_and(|s| s.within(1, 5) && s.multiplicity(5) > 0);
    let small_diameter = !(spectrum_in_one_to_five && a11 == 0 && a30 != 0)
        || h.diameter().is_some_and(|d| d <= 3);

    StructuralChecks {
        max_degree_at_most_three: h.max_degree() <= 3,
        leaf_forces_bipartite_unweighted: leaf_forces,
        leaves_within_distance_two: leaves_close,
        at_most_two_leaves: leaves.count_ones() <= 2,
        bare_degree_two_edge: bare_edge,
        bare_degree_two_edge_forces_zero: !bare_edge || has_zero,
        no_two_separated_induced_cycles: !has_two_separated_induced_cycles(h),
        no_leaf_when_spectrum_at_least_one: !at_least_one || leaves == 0,
        weighted_degree_two_independent: independent,
        no_mixed_triangle: !mixed_triangle,
        small_diameter_without_weighted_leaf: small_diameter,
    }
}

/// Vertex masks of all chordless cycles.
pub(crate) fn induced_cycles(h: &Graph) -> Vec<u64> {
    fn walk(h: &Graph, start: usize, path: &mut Vec<usize>, used: u64, out: &mut Vec<u64>) {
        let last = *path.last().unwrap();
        // interior = path without its first and last vertex
        let interior = used & !(1 << start) & !(1 << last);
        for v in bits(h.neighbour_mask(last) & !used) {
            if v < start || h.neighbour_mask(v) & interior != 0 {
                continue;
            }
            if path.len() >= 2 && h.has_edge(v, start) {
                // each cycle is found in both directions; keep one
                if path[1] < v {
                    out.push(used | 1 << v);
                }
                continue;
            }
            path.push(v);
            walk(h, start, path, used | 1 << v, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..h.order() {
        let mut path = vec![s];
        walk(h, s, &mut path, 1 << s, &mut out);
    }
    out
}

/// Two vertex-disjoint chordless cycles with no edge between them.
fn has_two_separated_induced_cycles(h: &Graph) -> bool {
    let cycles = induced_cycles(h);
    let closed = |m: u64| bits(m).fold(m, |acc, v| acc | h.neighbour_mask(v));
    cycles
        .iter()
        .enumerate()
        .any(|(i, &a)| cycles[i + 1..].iter().any(|&b| closed(a) & b == 0))
}

/// Repeatedly deletes vertices of degree at most one; `None` if nothing is left.
pub fn leaf_pruned_core(h: &Graph) -> Option<Graph> {
    let mut g = h.clone();
    loop {
        let low = bits(g.full_mask()).filter(|&v| g.degree(v) <= 1).fold(0u64, |m, v| m | 1 << v);
        if low == 0 {
            return Some(g);
        }
        if low == g.full_mask() {
            return None;
        }
        g = g.delete_vertices(low).ok()?;
    }
}

/// Outcome of the degree-class quotient inequality on a graph with degrees 2 and 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientInequality {
    /// Some degree class is empty or a degree other than 2 or 3 occurs.
    NotApplicable,
    Holds { equality: bool },
    Violated,
}

/// Compares `1 + m/a2` with `m/a3`, where `a2`, `a3` count vertices of degree
/// 2 and 3 and `m` counts edges joining the two classes.
///
/// The left side can exceed the right only if the signless Laplacian of any
/// graph containing `h` as an induced subgraph with maximum degree 3 has an
/// eigenvalue above 5.
pub fn quotient_inequality_check(h: &Graph) -> QuotientInequality {
    let deg = h.degrees();
    if deg.iter().any(|&d| d != 2 && d != 3) {
        return QuotientInequality::NotApplicable;
    }
    let a2 = deg.iter().filter(|&&d| d == 2).count() as i64;
    let a3 = deg.iter().filter(|&&d| d == 3).count() as i64;
    if a2 == 0 || a3 == 0 {
        return QuotientInequality::NotApplicable;
    }
    let m = h.edges().iter().filter(|&&(u, v)| deg[u] != deg[v]).count() as i64;
    let lhs = Ratio::new(a2 + m, a2);
    let rhs = Ratio::new(m, a3);
    if lhs < rhs {
        QuotientInequality::Holds { equality: false }
    } else if lhs == rhs {
        QuotientInequality::Holds { equality: true }
    } else {
        QuotientInequality::Violated
    }
}

/// Whether every two degree-3 vertices of `h` are at distance at most 3.
pub fn degree_three_vertices_close(h: &Graph) -> bool {
    let d3: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) == 3).collect();
    d3.iter().all(|&x| {
        let d = h.distances_from(x);
        d3.iter().all(|&y| d[y].is_some_and(|d| d <= 3))
    })
}

/// Whether `hw` has a weighted leaf and all weighted leaves are pairwise at
/// distance at least 3. No root with the target spectrum has this shape.
pub fn weighted_leaves_spread_out(hw: &VertexWeightedGraph) -> bool {
    let h = hw.graph();
    let a11 = vertices_of_type(hw, 1, 1);
    a11 != 0
        && bits(a11).all(|x| {
            let d = h.distances_from(x);
            bits(a11).all(|y| y == x || d[y].map_or(true, |d| d >= 3))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(h: Graph, f: Vec<u32>) -> VertexWeightedGraph {
        VertexWeightedGraph::new(h, f).unwrap()
    }

    #[test]
    fn admissible_examples() {
        let star = Graph::complete_bipartite(1, 4).unwrap();
        assert!(admissible_profile(&VertexWeightedGraph::unweighted(star)));
        let big_star = Graph::complete_bipartite(1, 5).unwrap();
        assert!(!admissible_profile(&VertexWeightedGraph::unweighted(big_star)));
        assert!(!admissible_profile(&hw(Graph::complete(2).unwrap(), vec![2, 0])));
        // degree 4 outside the star
        let mut g = Graph::complete_bipartite(1, 4).unwrap();
        g.add_edge(1, 2).unwrap();
        assert!(!admissible_profile(&VertexWeightedGraph::unweighted(g)));
        assert!(admissible_profile(&hw(Graph::empty(1).unwrap(), vec![2])));
        assert!(!admissible_profile(&hw(Graph::empty(1).unwrap(), vec![3])));
    }

    #[test]
    fn profile_counts() {
        let g = hw(Graph::complete(3).unwrap(), vec![0, 0, 1]);
        let p = TypedVertexProfile::of(&g);
        assert_eq!((p.a20, p.a21, p.total()), (2, 1, 3));
    }

    #[test]
    fn bare_edge_on_path() {
        let c = structural_checks(&VertexWeightedGraph::unweighted(Graph::path(4).unwrap()));
        assert!(c.bare_degree_two_edge);
        // P_4 is bipartite and unweighted, so 0 is an eigenvalue
        assert!(c.bare_degree_two_edge_forces_zero);
        let k23 = structural_checks(&VertexWeightedGraph::unweighted(Graph::complete_bipartite(2, 3).unwrap()));
        assert!(k23.all_hold());
        assert!(!k23.bare_degree_two_edge);
    }

    #[test]
    fn separated_cycles() {
        let two = Graph::cycle(4).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap();
        let joined = two.with_new_vertex(1 << 0 | 1 << 4).unwrap();
        assert!(has_two_separated_induced_cycles(&two));
        assert!(has_two_separated_induced_cycles(&joined));
        // cycles joined by a direct edge form one component
        let mut close = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap();
        close.add_edge(0, 3).unwrap();
        assert!(!has_two_separated_induced_cycles(&close));
        let c = structural_checks(&VertexWeightedGraph::unweighted(joined));
        assert!(!c.no_two_separated_induced_cycles);
    }

    #[test]
    fn chordless_cycle_counts() {
        assert_eq!(induced_cycles(&Graph::complete(4).unwrap()).len(), 4);
        assert_eq!(induced_cycles(&Graph::cycle(6).unwrap()).len(), 1);
        assert_eq!(induced_cycles(&Graph::complete_bipartite(2, 3).unwrap()).len(), 3);
        // Petersen: 12 pentagons and 10 hexagons
        assert_eq!(induced_cycles(&Graph::petersen()).len(), 22);
    }

    #[test]
    fn quotient_inequality_examples() {
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!(quotient_inequality_check(&k23), QuotientInequality::Holds { equality: true });
        assert_eq!(quotient_inequality_check(&Graph::cycle(5).unwrap()), QuotientInequality::NotApplicable);
        assert_eq!(quotient_inequality_check(&Graph::complete(4).unwrap()), QuotientInequality::NotApplicable);
        // theta graph with long paths: a3 = 2, a2 = 6, m = 6 gives 2 > 3 false
        let mut theta = Graph::empty(8).unwrap();
        for (u, v) in [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)] {
            theta.add_edge(u, v).unwrap();
        }
        assert_eq!(quotient_inequality_check(&theta), QuotientInequality::Holds { equality: false });
        // K_4 minus an edge: a2 = 2, a3 = 2, m = 4 gives 3 > 2
        let mut d = Graph::complete(4).unwrap();
        d.remove_edge(0, 1).unwrap();
        assert_eq!(quotient_inequality_check(&d), QuotientInequality::Violated);
    }

    #[test]
    fn pruning_leaves() {
        assert!(leaf_pruned_core(&Graph::path(5).unwrap()).is_none());
        let mut g = Graph::cycle(4).unwrap().with_new_vertex(1).unwrap();
        g = g.with_new_vertex(1 << 4).unwrap();
        let core = leaf_pruned_core(&g).unwrap();
        assert_eq!(core.order(), 4);
    }
}
