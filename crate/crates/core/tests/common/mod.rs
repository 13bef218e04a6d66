//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use integral_graphs::exact::{integral_spectrum, IntMatrix};
use integral_graphs::glg::{generalized_line_graph, incidence_matrix, q_matrix};
use integral_graphs::glgsearch::triangle_transform;
use integral_graphs::graph::{Graph, VertexWeightedGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected graph: a random tree plus each other pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

pub fn random_weighted<R: Rng>(rng: &mut R, max_n: usize, max_weight: u32) -> VertexWeightedGraph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.0..0.6);
    let g = random_connected(rng, n, p);
    let f = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
    VertexWeightedGraph::new(g, f).unwrap()
}

/// Upper-triangle adjacency bits in the order (0,1), (0,2), (1,2), (0,3), ...
pub fn adjacency_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for v in 1..g.order() {
        for u in 0..v {
            if g.has_edge(u, v) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: u32, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 0 {
                prefix.push(v);
                go(prefix, used | 1 << v, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

/// Smallest adjacency code over all relabellings; equal exactly for isomorphic graphs.
pub fn min_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| adjacency_code(&g.relabel(p))).min().unwrap()
}

/// One connected graph per isomorphism class on `n` vertices, found without
/// the crate's canonical labelling.
pub fn connected_representatives(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let perms = permutations(n);
    let bits = n * (n - 1) / 2;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for code in 0u64..1 << bits {
        let g = graph_from_code(n, code);
        if !g.is_connected() {
            continue;
        }
        if seen.insert(min_code(&g, &perms)) {
            out.push(g);
        }
    }
    out
}

/// Spanning trees counted by trying every set of `n - 1` edges.
pub fn spanning_trees_by_enumeration(g: &Graph) -> u64 {
    let n = g.order();
    if n <= 1 {
        return 1;
    }
    let edges = g.edges();
    let mut count = 0;
    let mut chosen = Vec::new();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    fn go(edges: &[(usize, usize)], start: usize, need: usize, n: usize, chosen: &mut Vec<usize>, count: &mut u64) {
        if chosen.len() == need {
            let mut parent: Vec<usize> = (0..n).collect();
            for &i in chosen.iter() {
                let (u, v) = edges[i];
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return;
                }
                parent[a] = b;
            }
            *count += 1;
            return;
        }
        for i in start..edges.len() {
            chosen.push(i);
            go(edges, i + 1, need, n, chosen, count);
            chosen.pop();
        }
    }
    go(&edges, 0, n - 1, n, &mut chosen, &mut count);
    count
}

/// Incidence identities checked entry by entry: the column Gram matrix is
/// `A(L) + 2I` and the row Gram matrix is the weighted signless Laplacian
/// followed by `2I` on the rows added for petals.
pub fn incidence_identities_hold(hw: &VertexWeightedGraph) -> bool {
    let n = incidence_matrix(hw);
    let l = generalized_line_graph(hw).unwrap();
    let q = q_matrix(hw);
    let order = hw.order();
    let rows = IntMatrix::from_fn(order + hw.total_weight(), |i, j| {
        if i < order && j < order {
            q.get(i, j)
        } else {
            2 * i64::from(i == j)
        }
    });
    let entries_ok = (0..n.rows()).all(|r| (0..n.cols()).all(|c| (-1..=1).contains(&n.get(r, c))));
    entries_ok && n.column_gram() == l.adjacency_matrix().minus_scalar(-2) && n.row_gram() == rows
}

/// Counts of eigenvalues above and below `num / den`.
fn counts_around(m: &IntMatrix, num: i64, den: i64) -> (usize, usize) {
    let s = IntMatrix::from_fn(m.order(), |i, j| den * m.get(i, j) - i64::from(i == j) * num);
    let inertia = s.inertia();
    (inertia.positive, inertia.negative)
}

/// Counts for the generalized problem `K x = θ D x` with `D` positive diagonal.
fn counts_around_pencil(k: &IntMatrix, d: &[i64], num: i64, den: i64) -> (usize, usize) {
    let s = IntMatrix::from_fn(k.order(), |i, j| den * k.get(i, j) - i64::from(i == j) * num * d[i]);
    let inertia = s.inertia();
    (inertia.positive, inertia.negative)
}

/// Eigenvalues of `sub` interlace those of `sup` when, at every test point,
/// `sub` has no more eigenvalues above it and no more below it than `sup`.
/// Test points are all quarter-integers across the Gershgorin range.
fn interlaces_on_grid(
    sup: &IntMatrix,
    sub_counts: impl Fn(i64, i64) -> (usize, usize),
) -> bool {
    let g = sup.gershgorin_bound() + 1;
    (-4 * g..=4 * g).all(|k| {
        let (a_above, a_below) = counts_around(sup, k, 4);
        let (b_above, b_below) = sub_counts(k, 4);
        b_above <= a_above && b_below <= a_below
    })
}

pub fn principal_submatrix_interlaces(m: &IntMatrix, idx: &[usize]) -> bool {
    let sub = m.principal_submatrix(idx);
    interlaces_on_grid(m, |num, den| counts_around(&sub, num, den))
}

/// Interlacing for the quotient of `m` by `cells`, via `PᵀMP x = θ PᵀP x`.
pub fn quotient_interlaces(m: &IntMatrix, cells: &[Vec<usize>]) -> bool {
    let k = IntMatrix::from_fn(cells.len(), |a, b| {
        cells[a].iter().map(|&i| cells[b].iter().map(|&j| m.get(i, j)).sum::<i64>()).sum()
    });
    let d: Vec<i64> = cells.iter().map(|c| c.len() as i64).collect();
    interlaces_on_grid(m, |num, den| counts_around_pencil(&k, &d, num, den))
}

pub fn random_cells<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<usize>> {
    let k = rng.gen_range(1..=n);
    let mut cells = vec![Vec::new(); k];
    for v in 0..n {
        cells[rng.gen_range(0..k)].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// A random connected weighted graph with a triangle `x1 x2 x3` where `x1`
/// and `x2` have degree 2 and weight 0.
pub fn triangle_instance<R: Rng>(rng: &mut R) -> (VertexWeightedGraph, usize, usize) {
    let base = random_weighted(rng, 5, 1);
    let n = base.order();
    let x3 = rng.gen_range(0..n);
    let g = base.graph().with_new_vertex(1 << x3).unwrap();
    let g = g.with_new_vertex(1 << x3 | 1 << n).unwrap();
    let mut f = base.weights().to_vec();
    f.extend([0, 0]);
    (VertexWeightedGraph::new(g, f).unwrap(), n, n + 1)
}

/// Whether the transform preserves integrality of the weighted signless
/// Laplacian spectrum; also returns whether the instance was integral.
pub fn transform_preserves_integrality(hw: &VertexWeightedGraph, x1: usize, x2: usize) -> (bool, bool) {
    let after = triangle_transform(hw, x1, x2).unwrap();
    let before = integral_spectrum(&q_matrix(hw)).is_some();
    let after = integral_spectrum(&q_matrix(&after)).is_some();
    (before == after, before)
}

/// Every weight function `0..=max` on `n` vertices.
pub fn all_weightings(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..=max).map(move |w| {
                    let mut g = f.clone();
                    g.push(w);
                    g
                })
            })
            .collect();
    }
    out
}

/// Zero-eigenvalue criterion for a connected weighted graph: the signless
/// Laplacian is PSD and its nullity is 1 for bipartite unweighted graphs, else 0.
pub fn zero_eigenvalue_criterion_holds(hw: &VertexWeightedGraph) -> bool {
    let expected = usize::from(hw.graph().is_bipartite() && hw.is_unweighted());
    q_matrix(hw).psd_nullity() == Some(expected)
}
