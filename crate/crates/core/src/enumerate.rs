//! Level-by-level generation of connected graphs closed under deleting
//! non-cut vertices.
//!
//! A child is kept only if its new vertex is a non-cut vertex of minimum
//! degree among the child's non-cut vertices. Every connected graph in a class
//! closed under such deletions still arises: delete any non-cut vertex of
//! minimum degree, find the parent's stored isomorph one level down, and add
//! the vertex back. Remaining duplicates are merged by canonical key.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graph::{bits, Graph};

/// Whether the last vertex of `child` is a non-cut vertex of minimum degree
/// among the non-cut vertices.
pub fn accepts_last_vertex(child: &Graph) -> bool {
    let n = child.order();
    if n <= 1 {
        return true;
    }
    let v = n - 1;
    let cut = child.cut_vertex_mask();
    if cut >> v & 1 == 1 {
        return false;
    }
    let k = child.degree(v);
    bits(child.full_mask() & !cut).all(|u| child.degree(u) >= k)
}

/// Calls `visit` with every neighbourhood mask of size `k` inside `allowed`
/// that can still pass [`accepts_last_vertex`].
///
/// A parent vertex that is non-cut stays non-cut in the child, so it must end
/// with degree at least `k`: those of degree `k - 1` are forced into the
/// neighbourhood and those of smaller degree rule `k` out.
pub fn candidate_neighbourhoods(parent: &Graph, allowed: u64, k: usize, visit: &mut dyn FnMut(u64)) {
    let n = parent.order();
    if k == 0 || k > n {
        return;
    }
    let noncut = parent.full_mask() & !parent.cut_vertex_mask();
    let mut forced = 0u64;
    if k >= 2 {
        for u in bits(noncut) {
            let d = parent.degree(u);
            if d + 1 < k {
                return;
            }
            if d + 1 == k {
                forced |= 1 << u;
            }
        }
    }
    if forced & !allowed != 0 || forced.count_ones() as usize > k {
        return;
    }
    let rest = k - forced.count_ones() as usize;
    choose(allowed & !forced, rest, forced, visit);
}

fn choose(pool: u64, r: usize, acc: u64, visit: &mut dyn FnMut(u64)) {
    if r == 0 {
        visit(acc);
        return;
    }
    if (pool.count_ones() as usize) < r {
        return;
    }
    let low = pool.trailing_zeros();
    let bit = 1u64 << low;
    choose(pool & !bit, r - 1, acc | bit, visit);
    choose(pool & !bit, r, acc, visit);
}

/// Expands every parent and merges the children by key.
///
/// Parents are expanded in parallel; the result is sorted by key, so it does
/// not depend on scheduling.
pub fn next_level<T, K>(parents: &[T], expand: impl Fn(&T, &mut Vec<(K, T)>) + Sync) -> Vec<(K, T)>
where
    T: Send + Sync,
    K: Ord + Send,
{
    let batches: Vec<Vec<(K, T)>> = parents
        .par_iter()
        .map(|p| {
            let mut out = Vec::new();
            expand(p, &mut out);
            out
        })
        .collect();
    let mut merged: BTreeMap<K, T> = BTreeMap::new();
    for batch in batches {
        for (k, t) in batch {
            merged.entry(k).or_insert(t);
        }
    }
    merged.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CanonicalKey;

    /// All connected graphs up to `max_n` vertices, by level.
    fn connected_graphs(max_n: usize) -> Vec<Vec<Graph>> {
        let mut levels = vec![vec![Graph::empty(1).unwrap()]];
        for _ in 1..max_n {
            let parents = levels.last().unwrap();
            let next: Vec<(CanonicalKey, Graph)> = next_level(parents, |p, out| {
                for k in 1..=p.order() {
                    candidate_neighbourhoods(p, p.full_mask(), k, &mut |mask| {
                        let child = p.with_new_vertex(mask).unwrap();
                        if accepts_last_vertex(&child) {
                            out.push((child.canonical_key(), child));
                        }
                    });
                }
            });
            levels.push(next.into_iter().map(|(_, g)| g).collect());
        }
        levels
    }

    #[test]
    fn counts_of_connected_graphs() {
        // number of connected unlabelled graphs on 1..=7 vertices
        let counts: Vec<usize> = connected_graphs(7).iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn forced_neighbourhoods() {
        // P_4: ends are the non-cut vertices, both of degree 1
        let p4 = Graph::path(4).unwrap();
        let mut seen = Vec::new();
        candidate_neighbourhoods(&p4, p4.full_mask(), 2, &mut |m| seen.push(m));
        assert_eq!(seen, vec![0b1001]);
        seen.clear();
        candidate_neighbourhoods(&p4, p4.full_mask(), 3, &mut |m| seen.push(m));
        assert!(seen.is_empty());
    }
}
