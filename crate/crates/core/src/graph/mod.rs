//! Simple undirected graphs on at most 64 vertices, vertex-weighted graphs,
//! structural queries and the interchange formats built on them.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so graphs are `Copy`-cheap
//! to clone and every neighbourhood query is a couple of word operations.

mod canon;
mod dot;
mod graph6;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::IntMatrix;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use dot::to_dot;
pub use graph6::{parse_graph6, write_graph6, Graph6Error};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph would have {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("weight vector has length {weights}, graph has {n} vertices")]
    WeightLength { weights: usize, n: usize },
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric 0/1 matrix; only the upper triangle is read.
    pub fn from_adjacency(adj: &[Vec<bool>]) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        for (i, row) in adj.iter().enumerate() {
            for j in (i + 1)..n {
                if row.get(j).copied().unwrap_or(false) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.rows[u] = g.full_mask() & !(1u64 << u);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.add_edge(i - 1, i)?;
        }
        Ok(g)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        Ok(())
    }

    /// Appends a vertex adjacent to every vertex in `neighbours` (a bit mask).
    pub fn with_new_vertex(&self, neighbours: u64) -> Result<Self, GraphError> {
        if self.n >= MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        let neighbours = neighbours & self.full_mask();
        let mut g = self.clone();
        let v = self.n;
        g.n += 1;
        g.rows[v] = neighbours;
        let mut rest = neighbours;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.rows[u] |= 1 << v;
        }
        Ok(g)
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbour_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| i64::from(self.has_edge(i, j)))
    }

    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                self.degree(i) as i64
            } else {
                -i64::from(self.has_edge(i, j))
            }
        })
    }

    pub fn signless_laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                self.degree(i) as i64
            } else {
                i64::from(self.has_edge(i, j))
            }
        })
    }

    /// Vertices reachable from `start`, as a mask.
    pub fn component_mask(&self, start: usize) -> u64 {
        self.component_mask_within(start, self.full_mask())
    }

    fn component_mask_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask(0) == self.full_mask()
    }

    /// Connected components as vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = self.full_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.component_mask(start);
            out.push(bits(comp).collect());
            left &= !comp;
        }
        out
    }

    /// Vertices whose removal disconnects their component.
    pub fn cut_vertex_mask(&self) -> u64 {
        let mut cut = 0u64;
        for v in 0..self.n {
            let comp = self.component_mask(v);
            let rest = comp & !(1u64 << v);
            if rest == 0 {
                continue;
            }
            let start = rest.trailing_zeros() as usize;
            if self.component_mask_within(start, rest) != rest {
                cut |= 1 << v;
            }
        }
        cut
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            next &= !seen;
            for v in bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|v| self.distances_from(v)).collect()
    }

    /// Largest distance between two vertices; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        (0..self.n)
            .flat_map(|v| self.distances_from(v))
            .map(|d| d.unwrap_or(0))
            .max()
            .or(Some(0))
    }

    /// A proper 2-colouring if one exists.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        stack.push(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            let common = self.rows[u] & self.rows[v];
            // each triangle is seen once per edge
            count += common.count_ones() as usize;
        }
        count / 3
    }

    /// Key of the uncoloured graph.
    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_key(self, &vec![0; self.n])
    }

    pub fn structure_report(&self) -> StructureReport {
        StructureReport {
            degrees: self.degrees(),
            connected: self.is_connected(),
            bipartite: self.is_bipartite(),
            diameter: self.diameter(),
            triangle_count: self.triangle_count(),
            distances: self.distance_matrix(),
        }
    }

    /// Subgraph induced on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Self, GraphError> {
        if vs.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        for &v in vs {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(vs.len())?;
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Removes the vertices in `mask`, keeping the others in order.
    pub fn delete_vertices(&self, mask: u64) -> Result<Self, GraphError> {
        let keep: Vec<usize> = bits(self.full_mask() & !mask).collect();
        if keep.is_empty() {
            return Graph::empty(0);
        }
        self.induced_subgraph(&keep)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            rows: [0; MAX_VERTICES],
        };
        for u in 0..self.n {
            let mut row = 0u64;
            for v in self.neighbours(u) {
                row |= 1 << perm[v];
            }
            g.rows[perm[u]] = row;
        }
        g
    }

    /// Disjoint union, `other`'s vertices shifted after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let mut g = Graph::empty(self.n + other.n)?;
        g.rows[..self.n].copy_from_slice(&self.rows[..self.n]);
        for v in 0..other.n {
            g.rows[self.n + v] = other.rows[v] << self.n;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        for v in 0..self.n {
            g.rows[v] = !self.rows[v] & self.full_mask() & !(1u64 << v);
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", write_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub degrees: Vec<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub diameter: Option<usize>,
    pub triangle_count: usize,
    pub distances: Vec<Vec<Option<usize>>>,
}

/// `CP(k)`: `2k` vertices, vertex `2i` and `2i + 1` are the only non-adjacent pairs.
pub fn cocktail_party(k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::complete(2 * k)?;
    for i in 0..k {
        g.remove_edge(2 * i, 2 * i + 1)?;
    }
    Ok(g)
}

/// A graph `H` with a nonnegative integer weight on every vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexWeightedGraph {
    h: Graph,
    f: Vec<u32>,
}

impl VertexWeightedGraph {
    pub fn new(h: Graph, f: Vec<u32>) -> Result<Self, GraphError> {
        if f.len() != h.order() {
            return Err(GraphError::WeightLength {
                weights: f.len(),
                n: h.order(),
            });
        }
        Ok(VertexWeightedGraph { h, f })
    }

    pub fn unweighted(h: Graph) -> Self {
        let f = vec![0; h.order()];
        VertexWeightedGraph { h, f }
    }

    pub fn graph(&self) -> &Graph {
        &self.h
    }

    pub fn weights(&self) -> &[u32] {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    /// Sum of all weights.
    pub fn total_weight(&self) -> usize {
        self.f.iter().map(|&w| w as usize).sum()
    }

    pub fn is_unweighted(&self) -> bool {
        self.f.iter().all(|&w| w == 0)
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_key(&self.h, &self.f)
    }

    /// Canonically relabelled copy; isomorphic inputs give identical outputs.
    pub fn canonical_form(&self) -> (CanonicalKey, VertexWeightedGraph) {
        let (key, order) = canonical_form(&self.h, &self.f);
        let mut perm = vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let h = self.h.relabel(&perm);
        let f = order.iter().map(|&v| self.f[v]).collect();
        (key, VertexWeightedGraph { h, f })
    }

    pub fn to_json(&self) -> RootJson {
        RootJson {
            h: write_graph6(&self.h),
            f: self.f.clone(),
        }
    }
}

impl fmt::Debug for VertexWeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", write_graph6(&self.h), self.f)
    }
}

/// Wire form of a root pair: `{"h": graph6, "f": [weights]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub h: String,
    pub f: Vec<u32>,
}

impl TryFrom<RootJson> for VertexWeightedGraph {
    type Error = String;

    fn try_from(value: RootJson) -> Result<Self, Self::Error> {
        let h = parse_graph6(&value.h).map_err(|e| e.to_string())?;
        VertexWeightedGraph::new(h, value.f).map_err(|e| e.to_string())
    }
}

impl Serialize for VertexWeightedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_structure() {
        let r = Graph::petersen().structure_report();
        assert!(r.connected);
        assert!(!r.bipartite);
        assert_eq!(r.diameter, Some(2));
        assert_eq!(r.triangle_count, 0);
        assert!(r.degrees.iter().all(|&d| d == 3));
    }

    #[test]
    fn k4_and_c6_structure() {
        let k4 = Graph::complete(4).unwrap().structure_report();
        assert_eq!(k4.triangle_count, 4);
        assert_eq!(k4.diameter, Some(1));
        let c6 = Graph::cycle(6).unwrap().structure_report();
        assert!(c6.bipartite);
        assert_eq!(c6.diameter, Some(3));
    }

    #[test]
    fn disconnected_has_no_diameter() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = g.structure_report();
        assert!(!r.connected);
        assert_eq!(r.diameter, None);
        assert_eq!(r.distances[0][2], None);
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.induced_subgraph(&[0, 2, 3]).unwrap(), Graph::complete(3).unwrap());
        let p = Graph::petersen();
        assert_eq!(p.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), Graph::cycle(5).unwrap());
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(p.induced_subgraph(&all).unwrap(), p);
        assert_eq!(p.induced_subgraph(&[]), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn cocktail_parties() {
        assert_eq!(cocktail_party(0).unwrap().order(), 0);
        let cp1 = cocktail_party(1).unwrap();
        assert_eq!((cp1.order(), cp1.edge_count()), (2, 0));
        let cp2 = cocktail_party(2).unwrap();
        assert_eq!(canonical_key(&cp2, &[0; 4]), canonical_key(&Graph::cycle(4).unwrap(), &[0; 4]));
        let cp3 = cocktail_party(3).unwrap();
        assert_eq!((cp3.order(), cp3.edge_count()), (6, 12));
        for v in 0..6 {
            assert_eq!(cp3.degree(v), 4);
            assert!(!cp3.has_edge(v, v ^ 1));
        }
    }

    #[test]
    fn cut_vertices() {
        let p = Graph::path(4).unwrap();
        assert_eq!(p.cut_vertex_mask(), 0b0110);
        assert_eq!(Graph::cycle(5).unwrap().cut_vertex_mask(), 0);
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(star.cut_vertex_mask(), 0b0001);
    }

    #[test]
    fn triangle_count_matches_trace_of_cube() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (1, 3)])
            .unwrap();
        let a = g.adjacency_matrix();
        let a3 = a.mul(&a).mul(&a);
        assert_eq!(g.triangle_count() as i64 * 6, a3.trace());
    }

    #[test]
    fn new_vertex_and_relabel() {
        let g = Graph::path(3).unwrap().with_new_vertex(0b101).unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        let r = g.relabel(&[1, 0, 2, 3]);
        assert!(r.has_edge(1, 3) && r.has_edge(0, 2));
    }

    #[test]
    fn weighted_graph_checks_length() {
        let h = Graph::complete(3).unwrap();
        assert!(VertexWeightedGraph::new(h.clone(), vec![0, 1]).is_err());
        let hw = VertexWeightedGraph::new(h, vec![0, 0, 1]).unwrap();
        assert_eq!(hw.total_weight(), 1);
    }
}
