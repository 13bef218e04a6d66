//! Generalized line graphs of vertex-weighted graphs, their incidence
//! matrices and weighted signless Laplacians, and recognition of graphs that
//! arise this way.
//!
//! Vertex order of `L(H, f)`: the edges of `H` in lexicographic order, then
//! one petal vertex per `(x, i)` with `i < f(x)`, then their partners in the
//! same order. Petal `(x, i)` and its partner are the only non-adjacent pair
//! inside the cocktail party at `x`.

mod incidence;
mod recognize;

use crate::exact::{IntMatrix, Spectrum};
use crate::graph::{Graph, GraphError, VertexWeightedGraph};

pub use incidence::{incidence_matrix, verify_incidence_identities, IncidenceMatrix};
pub use recognize::{
    find_d_representation, has_d_representation, is_generalized_line_graph, reconstruct_root, DRepresentation,
};

/// Owner vertex of each petal, `(x, i)` pairs in order.
pub(crate) fn petals(hw: &VertexWeightedGraph) -> Vec<usize> {
    hw.weights()
        .iter()
        .enumerate()
        .flat_map(|(x, &w)| std::iter::repeat(x).take(w as usize))
        .collect()
}

pub fn generalized_line_graph(hw: &VertexWeightedGraph) -> Result<Graph, GraphError> {
    let h = hw.graph();
    let edges = h.edges();
    let owners = petals(hw);
    let e = edges.len();
    let p = owners.len();
    let mut g = Graph::empty(e + 2 * p)?;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                g.add_edge(i, j)?;
            }
        }
    }
    for (k, &x) in owners.iter().enumerate() {
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == x || b == x {
                g.add_edge(i, e + k)?;
                g.add_edge(i, e + p + k)?;
            }
        }
        for (l, &y) in owners.iter().enumerate().skip(k + 1) {
            if x == y {
                for (u, v) in [(k, l), (k, p + l), (p + k, l), (p + k, p + l)] {
                    g.add_edge(e + u, e + v)?;
                }
            }
        }
    }
    Ok(g)
}

pub fn line_graph(h: &Graph) -> Result<Graph, GraphError> {
    generalized_line_graph(&VertexWeightedGraph::unweighted(h.clone()))
}

/// `Q(H) + 2 diag(f)`: degree plus twice the weight on the diagonal, adjacency off it.
pub fn q_matrix(hw: &VertexWeightedGraph) -> IntMatrix {
    let h = hw.graph();
    let f = hw.weights();
    IntMatrix::from_fn(h.order(), |i, j| {
        if i == j {
            h.degree(i) as i64 + 2 * f[i] as i64
        } else {
            i64::from(h.has_edge(i, j))
        }
    })
}

/// Compares `A(L) + 2I` with `diag(Q(H, f), 2I)` spectrally.
///
/// These are `NᵀN` and `NNᵀ` for the incidence matrix `N`, so their nonzero
/// eigenvalues agree; with that established the spectral radius of `L` plus two
/// equals that of `Q(H, f)` exactly when the latter is at least two. An
/// unweighted single vertex has an empty generalized line graph and fails.
pub fn spectra_shift_check(hw: &VertexWeightedGraph) -> bool {
    let Ok(l) = generalized_line_graph(hw) else {
        return false;
    };
    if l.order() == 0 {
        return false;
    }
    let q = q_matrix(hw);
    let gram = l.adjacency_matrix().minus_scalar(-2);
    let n = q.order();
    let p = hw.total_weight();
    let block = IntMatrix::from_fn(n + p, |i, j| match (i < n, j < n) {
        (true, true) => q.get(i, j),
        (false, false) => 2 * i64::from(i == j),
        _ => 0,
    });
    let strip = |cp: crate::exact::CharPoly| cp.coeffs()[cp.zero_multiplicity()..].to_vec();
    strip(gram.char_poly()) == strip(block.char_poly()) && !q.shifted_from(2).is_positive_definite()
}

/// Spectrum of the weighted signless Laplacian, when integral.
pub fn q_spectrum(hw: &VertexWeightedGraph) -> Option<Spectrum> {
    crate::exact::integral_spectrum(&q_matrix(hw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::integral_spectrum;
    use crate::graph::canonical_key;

    fn weighted(h: Graph, f: Vec<u32>) -> VertexWeightedGraph {
        VertexWeightedGraph::new(h, f).unwrap()
    }

    fn same(a: &Graph, b: &Graph) -> bool {
        a.order() == b.order() && canonical_key(a, &vec![0; a.order()]) == canonical_key(b, &vec![0; b.order()])
    }

    #[test]
    fn star_gives_complete_graph() {
        let l = line_graph(&Graph::complete_bipartite(1, 4).unwrap()).unwrap();
        assert!(same(&l, &Graph::complete(4).unwrap()));
    }

    #[test]
    fn k23_gives_prism() {
        let l = line_graph(&Graph::complete_bipartite(2, 3).unwrap()).unwrap();
        let s = integral_spectrum(&l.adjacency_matrix()).unwrap();
        assert_eq!(s, Spectrum::from_pairs(&[(3, 1), (1, 1), (0, 2), (-2, 2)]));
        assert!(l.degrees().iter().all(|&d| d == 3));
        assert_eq!(l.triangle_count(), 2);
    }

    #[test]
    fn weighted_triangle() {
        let hw = weighted(Graph::complete(3).unwrap(), vec![0, 0, 1]);
        let l = generalized_line_graph(&hw).unwrap();
        assert_eq!(l.order(), 5);
        let s = integral_spectrum(&l.adjacency_matrix()).unwrap();
        assert_eq!(s, Spectrum::from_pairs(&[(3, 1), (0, 2), (-1, 1), (-2, 1)]));
        let q = q_matrix(&hw);
        assert_eq!(q.rows(), vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 4]]);
        assert_eq!(integral_spectrum(&q).unwrap(), Spectrum::from_pairs(&[(5, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn small_line_graphs() {
        assert!(same(&line_graph(&Graph::complete_bipartite(1, 3).unwrap()).unwrap(), &Graph::complete(3).unwrap()));
        assert!(same(&line_graph(&Graph::cycle(6).unwrap()).unwrap(), &Graph::cycle(6).unwrap()));
        assert!(same(&line_graph(&Graph::path(4).unwrap()).unwrap(), &Graph::path(3).unwrap()));
    }

    #[test]
    fn q_matrix_basics() {
        let k2 = VertexWeightedGraph::unweighted(Graph::complete(2).unwrap());
        assert_eq!(q_matrix(&k2).rows(), vec![vec![1, 1], vec![1, 1]]);
        let star = VertexWeightedGraph::unweighted(Graph::complete_bipartite(1, 4).unwrap());
        let q = q_matrix(&star);
        assert_eq!(q.shifted_from(5).psd_nullity(), Some(1));
    }

    #[test]
    fn petal_structure() {
        let hw = weighted(Graph::empty(1).unwrap(), vec![3]);
        let l = generalized_line_graph(&hw).unwrap();
        assert!(same(&l, &crate::graph::cocktail_party(3).unwrap()));
    }

    #[test]
    fn shift_check_cases() {
        for hw in [
            VertexWeightedGraph::unweighted(Graph::complete_bipartite(2, 3).unwrap()),
            VertexWeightedGraph::unweighted(Graph::complete_bipartite(1, 4).unwrap()),
            weighted(Graph::complete(3).unwrap(), vec![0, 0, 1]),
        ] {
            assert!(spectra_shift_check(&hw));
        }
        assert!(!spectra_shift_check(&VertexWeightedGraph::unweighted(Graph::empty(1).unwrap())));
    }
}
