//! Clique enumeration on compatibility graphs.

use super::CompatGraph;

type Set = Vec<u64>;

fn members(s: &[u64]) -> impl Iterator<Item = usize> + '_ {
    s.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + b)
        })
    })
}

fn and(a: &[u64], b: &[u64]) -> Set {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn is_empty(s: &[u64]) -> bool {
    s.iter().all(|&w| w == 0)
}

fn count(s: &[u64]) -> u32 {
    s.iter().map(|w| w.count_ones()).sum()
}

/// Removes every member `<= v`.
fn clear_through(s: &mut [u64], v: usize) {
    for (w, word) in s.iter_mut().enumerate() {
        let start = w * 64;
        if v >= start + 63 {
            *word = 0;
        } else if v >= start {
            *word &= u64::MAX << (v - start + 1);
        }
    }
}

fn full(n: usize) -> Set {
    let mut s = vec![0u64; n.div_ceil(64).max(1)];
    for i in 0..n {
        s[i / 64] |= 1 << (i % 64);
    }
    s
}

/// Every clique of size at most `max_size`, each listed once with members in
/// increasing order, starting from the empty clique.
///
/// `keep` decides whether a clique is reported and extended; it must be
/// hereditary (false for a clique implies false for every superset).
pub fn ordered_cliques(
    g: &CompatGraph,
    max_size: usize,
    keep: &mut dyn FnMut(&[usize]) -> bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    fn grow(
        g: &CompatGraph,
        clique: &mut Vec<usize>,
        candidates: Set,
        max_size: usize,
        keep: &mut dyn FnMut(&[usize]) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if !keep(clique) {
            return;
        }
        visit(clique);
        if clique.len() == max_size {
            return;
        }
        let list: Vec<usize> = members(&candidates).collect();
        for v in list {
            // only later vertices, so each clique appears once
            let mut next = and(&candidates, g.neighbour_words(v));
            clear_through(&mut next, v);
            clique.push(v);
            grow(g, clique, next, max_size, keep, visit);
            clique.pop();
        }
    }
    let mut clique = Vec::new();
    grow(g, &mut clique, full(g.order()), max_size, keep, visit);
}

/// All maximal cliques, by Bron–Kerbosch with pivoting. Order of output is
/// deterministic; members of each clique are sorted.
pub fn maximal_cliques(g: &CompatGraph) -> Vec<Vec<usize>> {
    fn bk(g: &CompatGraph, r: &mut Vec<usize>, p: Set, mut x: Set, out: &mut Vec<Vec<usize>>) {
        if is_empty(&p) && is_empty(&x) {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = members(&p)
            .chain(members(&x))
            .max_by_key(|&u| count(&and(&p, g.neighbour_words(u))))
            .expect("p or x is nonempty");
        let mut p = p;
        let skip = g.neighbour_words(pivot);
        let todo: Vec<usize> = members(&p).filter(|&v| skip[v / 64] >> (v % 64) & 1 == 0).collect();
        for v in todo {
            let nv = g.neighbour_words(v);
            r.push(v);
            bk(g, r, and(&p, nv), and(&x, nv), out);
            r.pop();
            p[v / 64] &= !(1 << (v % 64));
            x[v / 64] |= 1 << (v % 64);
        }
    }
    let mut out = Vec::new();
    let n = g.order();
    let words = n.div_ceil(64).max(1);
    bk(g, &mut Vec::new(), full(n), vec![0; words], &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use std::collections::BTreeSet;

    #[test]
    fn ordered_cliques_are_subsets_of_maximal_ones() {
        let compat = CompatGraph::new(&Graph::cycle(5).unwrap(), -2).unwrap();
        let maximal = maximal_cliques(&compat);
        let mut expanded = BTreeSet::new();
        for m in &maximal {
            for mask in 0u32..1 << m.len() {
                let sub: Vec<usize> = (0..m.len()).filter(|&i| mask >> i & 1 == 1).map(|i| m[i]).collect();
                if sub.len() <= 3 {
                    expanded.insert(sub);
                }
            }
        }
        let mut listed = BTreeSet::new();
        ordered_cliques(&compat, 3, &mut |_| true, &mut |c| {
            assert!(listed.insert(c.to_vec()), "duplicate clique {c:?}");
        });
        assert_eq!(listed, expanded);
    }
}
