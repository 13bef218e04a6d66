//! Recognition through representations in the `D_n` root system: one integer
//! vector with exactly two `±1` entries per vertex, with Gram matrix `A + 2I`.
//! A graph has such a representation exactly when it is a generalized line graph.

use std::collections::BTreeMap;

use crate::exact::IntMatrix;
use crate::graph::{bits, CanonicalKey, Graph, VertexWeightedGraph};

use super::generalized_line_graph;

/// Two `(coordinate, sign)` entries, coordinates increasing.
pub type RootVector = [(usize, i8); 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DRepresentation {
    vectors: Vec<RootVector>,
    dimension: usize,
}

impl DRepresentation {
    pub fn vectors(&self) -> &[RootVector] {
        &self.vectors
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn gram(&self) -> IntMatrix {
        let n = self.vectors.len();
        IntMatrix::from_fn(n, |i, j| dot(&self.vectors[i], &self.vectors[j]))
    }
}

fn dot(a: &RootVector, b: &RootVector) -> i64 {
    let mut s = 0;
    for &(c, x) in a {
        for &(d, y) in b {
            if c == d {
                s += (x * y) as i64;
            }
        }
    }
    s
}

fn vector(c: usize, sc: i8, d: usize, sd: i8) -> RootVector {
    if c < d {
        [(c, sc), (d, sd)]
    } else {
        [(d, sd), (c, sc)]
    }
}

/// Backtracking over the vertices in BFS order, one component after another.
///
/// Gauge is fixed by giving the first vertex `e0 + e1` and introducing each new
/// coordinate with sign `+`; every representation is equivalent to one of
/// these under coordinate permutations and sign changes. A vertex with an
/// earlier neighbour shares exactly one signed coordinate with it.
struct RepresentationSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    vecs: Vec<RootVector>,
}

impl<'a> RepresentationSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        let mut order = Vec::with_capacity(g.order());
        let mut parent = Vec::with_capacity(g.order());
        let mut seen = 0u64;
        for start in 0..g.order() {
            if seen >> start & 1 == 1 {
                continue;
            }
            seen |= 1 << start;
            let mut head = order.len();
            order.push(start);
            parent.push(None);
            while head < order.len() {
                let v = order[head];
                for w in bits(g.neighbour_mask(v) & !seen) {
                    seen |= 1 << w;
                    order.push(w);
                    parent.push(Some(head));
                }
                head += 1;
            }
        }
        RepresentationSearch {
            g,
            order,
            parent,
            vecs: Vec::new(),
        }
    }

    /// Calls `visit` with the vectors (in search order) and dimension of each
    /// representation until it returns `false`.
    fn run(&mut self, visit: &mut dyn FnMut(&[RootVector], usize) -> bool) {
        self.vecs.clear();
        if self.order.is_empty() {
            visit(&[], 0);
            return;
        }
        self.vecs.push([(0, 1), (1, 1)]);
        self.extend(1, 2, visit);
    }

    fn candidates(&self, i: usize, next: usize) -> Vec<(RootVector, usize)> {
        let mut out = Vec::new();
        match self.parent[i] {
            Some(pi) => {
                let p = self.vecs[pi];
                for shared in 0..2 {
                    let (c, sc) = p[shared];
                    let other = p[1 - shared].0;
                    for d in 0..next {
                        if d != c && d != other {
                            out.push((vector(c, sc, d, 1), next));
                            out.push((vector(c, sc, d, -1), next));
                        }
                    }
                    out.push((vector(c, sc, next, 1), next + 1));
                }
            }
            None => {
                for c in 0..next {
                    for d in (c + 1)..next {
                        for (sc, sd) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                            out.push((vector(c, sc, d, sd), next));
                        }
                    }
                    out.push((vector(c, 1, next, 1), next + 1));
                    out.push((vector(c, -1, next, 1), next + 1));
                }
                out.push(([(next, 1), (next + 1, 1)], next + 2));
            }
        }
        out
    }

    fn extend(&mut self, i: usize, next: usize, visit: &mut dyn FnMut(&[RootVector], usize) -> bool) -> bool {
        if i == self.order.len() {
            return visit(&self.vecs, next);
        }
        let vi = self.order[i];
        for (v, after) in self.candidates(i, next) {
            let fits = (0..i).all(|j| dot(&v, &self.vecs[j]) == i64::from(self.g.has_edge(vi, self.order[j])));
            if !fits {
                continue;
            }
            self.vecs.push(v);
            let go_on = self.extend(i + 1, after, visit);
            self.vecs.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

pub fn find_d_representation(g: &Graph) -> Option<DRepresentation> {
    let mut search = RepresentationSearch::new(g);
    let mut found: Option<(Vec<RootVector>, usize)> = None;
    search.run(&mut |vs, dim| {
        found = Some((vs.to_vec(), dim));
        false
    });
    let (vs, dimension) = found?;
    let mut vectors = vec![[(0, 0), (0, 0)]; g.order()];
    for (k, v) in vs.into_iter().enumerate() {
        vectors[search.order[k]] = v;
    }
    Some(DRepresentation { vectors, dimension })
}

pub fn has_d_representation(g: &Graph) -> bool {
    g.adjacency_matrix().minus_scalar(-2).is_positive_semidefinite() && find_d_representation(g).is_some()
}

/// Reads a weighted root off a representation, if it has the incidence shape.
///
/// A slot coordinate is used by exactly two vectors with the same support, the
/// same sign at the other coordinate and opposite signs at the slot: a petal
/// and its partner. Every other coordinate is a root vertex and must carry a
/// single sign, which is then normalised to `+`.
pub fn reconstruct_root(vectors: &[RootVector], dimension: usize) -> Option<VertexWeightedGraph> {
    let mut uses: Vec<Vec<(usize, i8)>> = vec![Vec::new(); dimension];
    for (k, v) in vectors.iter().enumerate() {
        for &(c, s) in v {
            uses[c].push((k, s));
        }
    }
    let other = |k: usize, c: usize| {
        let v = vectors[k];
        if v[0].0 == c {
            v[1]
        } else {
            v[0]
        }
    };
    let is_slot = |c: usize| -> bool {
        let u = &uses[c];
        u.len() == 2 && u[0].1 == -u[1].1 && other(u[0].0, c) == other(u[1].0, c)
    };
    let mut index = vec![usize::MAX; dimension];
    let mut count = 0;
    for c in 0..dimension {
        if uses[c].is_empty() || is_slot(c) {
            continue;
        }
        if uses[c].iter().any(|&(_, s)| s != uses[c][0].1) {
            return None;
        }
        index[c] = count;
        count += 1;
    }
    let mut h = Graph::empty(count).ok()?;
    let mut f = vec![0u32; count];
    for v in vectors {
        let (a, b) = (v[0].0, v[1].0);
        match (index[a], index[b]) {
            (usize::MAX, usize::MAX) => return None,
            (x, usize::MAX) | (usize::MAX, x) => {
                // each slot is counted once, from its `+` vector
                let slot = if index[a] == usize::MAX { v[0] } else { v[1] };
                if slot.1 > 0 {
                    f[x] += 1;
                }
            }
            (x, y) => {
                if h.has_edge(x, y) {
                    return None;
                }
                h.add_edge(x, y).ok()?;
            }
        }
    }
    VertexWeightedGraph::new(h, f).ok()
}

/// A weighted root `(H, f)` with `L(H, f)` isomorphic to `g`, if one exists.
///
/// Every representation is read off; among the valid roots the one with
/// fewest vertices wins, ties broken by canonical key. The result is
/// canonically relabelled.
pub fn is_generalized_line_graph(g: &Graph) -> Option<VertexWeightedGraph> {
    if !g.adjacency_matrix().minus_scalar(-2).is_positive_semidefinite() {
        return None;
    }
    let target = g.canonical_key();
    let mut roots: BTreeMap<(usize, CanonicalKey), VertexWeightedGraph> = BTreeMap::new();
    RepresentationSearch::new(g).run(&mut |vs, dim| {
        if let Some(root) = reconstruct_root(vs, dim) {
            let (key, canon) = root.canonical_form();
            roots.entry((canon.order(), key)).or_insert(canon);
        }
        true
    });
    roots.into_values().find(|root| {
        generalized_line_graph(root).is_ok_and(|l| l.order() == g.order() && l.canonical_key() == target)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root_of(g: &Graph) -> Option<(Graph, Vec<u32>)> {
        is_generalized_line_graph(g).map(|r| (r.graph().clone(), r.weights().to_vec()))
    }

    #[test]
    fn prism_root_is_k23() {
        let prism = super::super::line_graph(&Graph::complete_bipartite(2, 3).unwrap()).unwrap();
        let (h, f) = root_of(&prism).unwrap();
        assert_eq!(f, vec![0; 5]);
        assert_eq!(h.canonical_key(), Graph::complete_bipartite(2, 3).unwrap().canonical_key());
    }

    #[test]
    fn k4_root_is_star() {
        let (h, f) = root_of(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(f, vec![0; 5]);
        assert_eq!(h.canonical_key(), Graph::complete_bipartite(1, 4).unwrap().canonical_key());
    }

    #[test]
    fn petersen_is_exceptional() {
        assert!(root_of(&Graph::petersen()).is_none());
        assert!(!has_d_representation(&Graph::petersen()));
    }

    #[test]
    fn representation_gram_matches_adjacency() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let rep = find_d_representation(&g).unwrap();
        assert_eq!(rep.gram(), g.adjacency_matrix().minus_scalar(-2));
    }

    #[test]
    fn disconnected_inputs() {
        // two isolated vertices are CP(1), one vertex with a single petal
        let (h, f) = root_of(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!((h.order(), f), (1, vec![1]));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let root = is_generalized_line_graph(&two_edges).unwrap();
        let l = generalized_line_graph(&root).unwrap();
        assert_eq!(l.canonical_key(), two_edges.canonical_key());
    }

    #[test]
    fn smallest_eigenvalue_below_minus_two_is_rejected() {
        // K_{1,5} has smallest eigenvalue -sqrt(5)
        let star = Graph::complete_bipartite(1, 5).unwrap();
        assert!(root_of(&star).is_none());
    }
}
