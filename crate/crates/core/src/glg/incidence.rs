use crate::exact::IntMatrix;
use crate::graph::VertexWeightedGraph;

use super::{generalized_line_graph, petals, q_matrix};

/// Incidence matrix of a weighted root with rows `V(H)` then petal slots,
/// columns edges then petals then partner petals.
///
/// An edge column has `+1` at both ends. Petal `(x, i)` has `+1` at `x` and at
/// its slot; its partner has `+1` at `x` and `-1` at the slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i8) {
        self.entries[r * self.cols + c] = v;
    }

    /// `NᵀN`, the Gram matrix of the columns.
    pub fn column_gram(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, |i, j| {
            (0..self.rows).map(|r| (self.get(r, i) * self.get(r, j)) as i64).sum()
        })
    }

    /// `NNᵀ`, the Gram matrix of the rows.
    pub fn row_gram(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, |i, j| {
            (0..self.cols).map(|c| (self.get(i, c) * self.get(j, c)) as i64).sum()
        })
    }

    /// Both Gram identities against the root they claim to represent.
    pub fn satisfies_identities(&self, hw: &VertexWeightedGraph) -> bool {
        let Ok(l) = generalized_line_graph(hw) else {
            return false;
        };
        let n = hw.order();
        let p = hw.total_weight();
        if self.rows != n + p || self.cols != l.order() {
            return false;
        }
        let q = q_matrix(hw);
        let expect_rows = IntMatrix::from_fn(n + p, |i, j| match (i < n, j < n) {
            (true, true) => q.get(i, j),
            (false, false) => 2 * i64::from(i == j),
            _ => 0,
        });
        self.column_gram() == l.adjacency_matrix().minus_scalar(-2) && self.row_gram() == expect_rows
    }
}

pub fn incidence_matrix(hw: &VertexWeightedGraph) -> IncidenceMatrix {
    let h = hw.graph();
    let n = h.order();
    let edges = h.edges();
    let owners = petals(hw);
    let (e, p) = (edges.len(), owners.len());
    let mut m = IncidenceMatrix {
        rows: n + p,
        cols: e + 2 * p,
        entries: vec![0; (n + p) * (e + 2 * p)],
    };
    for (c, &(a, b)) in edges.iter().enumerate() {
        m.set(a, c, 1);
        m.set(b, c, 1);
    }
    for (k, &x) in owners.iter().enumerate() {
        m.set(x, e + k, 1);
        m.set(n + k, e + k, 1);
        m.set(x, e + p + k, 1);
        m.set(n + k, e + p + k, -1);
    }
    m
}

pub fn verify_incidence_identities(hw: &VertexWeightedGraph) -> bool {
    incidence_matrix(hw).satisfies_identities(hw)
}
