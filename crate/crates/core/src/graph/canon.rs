//! Canonical labelling of vertex-coloured graphs.
//!
//! Colour refinement followed by an individualisation-refinement search tree.
//! The canonical labelling is the leaf whose relabelled adjacency is largest;
//! subtrees are pruned with automorphisms discovered along the way.

use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// Isomorphism certificate: equal keys iff the coloured graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

pub fn canonical_key(g: &Graph, colours: &[u32]) -> CanonicalKey {
    canonical_form(g, colours).0
}

/// Returns the key and the canonical order: `order[p]` is the vertex placed at position `p`.
pub fn canonical_form(g: &Graph, colours: &[u32]) -> (CanonicalKey, Vec<usize>) {
    let n = g.order();
    assert_eq!(colours.len(), n, "one colour per vertex");
    let mut distinct: Vec<u32> = colours.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut cell = [0u8; 64];
    for v in 0..n {
        cell[v] = distinct.binary_search(&colours[v]).expect("present") as u8;
    }
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let k = refine(g, &mut cell, distinct.len());
    search.descend(cell, k, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    let mut order = vec![0usize; n];
    for v in 0..n {
        order[best.cell[v] as usize] = v;
    }
    let mut bytes = Vec::with_capacity(2 + 4 * n + n * n / 16);
    bytes.push(n as u8);
    for &v in &order {
        bytes.extend_from_slice(&colours[v].to_le_bytes());
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | (best.cert[i] >> j & 1) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    (CanonicalKey(bytes), order)
}

struct Leaf {
    cert: Vec<u64>,
    cell: [u8; 64],
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<[u8; 64]>,
}

impl Search<'_> {
    /// Explores the node reached by individualising `path`.
    ///
    /// Returns `Some(d)` to unwind to depth `d` after finding that this subtree
    /// is an automorphic image of the first path's subtree.
    fn descend(&mut self, cell: [u8; 64], k: usize, path: &mut Vec<usize>) -> Option<usize> {
        if k == self.n {
            return self.visit_leaf(cell, path);
        }
        let target = target_cell(&cell[..self.n], k);
        let members: Vec<usize> = (0..self.n).filter(|&v| cell[v] as usize == target).collect();
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = cell;
            for w in 0..self.n {
                if child[w] as usize > target || (child[w] as usize == target && w != v) {
                    child[w] += 1;
                }
            }
            let ck = refine(self.g, &mut child, k + 1);
            path.push(v);
            let jump = self.descend(child, ck, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, cell: [u8; 64], path: &[usize]) -> Option<usize> {
        let n = self.n;
        let mut cert = vec![0u64; n];
        for v in 0..n {
            let mut row = 0u64;
            for w in self.g.neighbours(v) {
                row |= 1 << cell[w];
            }
            cert[cell[v] as usize] = row;
        }
        let leaf = Leaf {
            cert,
            cell,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                cell,
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.cert == leaf.cert {
            let auto = automorphism(&first.cell, &leaf.cell, n);
            let diverge = first.path.iter().zip(&leaf.path).take_while(|(a, b)| a == b).count();
            self.autos.push(auto);
            return Some(diverge);
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Greater => self.best = Some(leaf),
            std::cmp::Ordering::Equal => {
                let auto = automorphism(&best.cell, &leaf.cell, n);
                self.autos.push(auto);
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix `path` pointwise.
    fn same_orbit(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.n;
        let mut parent: Vec<u8> = (0..n as u8).collect();
        fn root(p: &mut [u8], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if path.iter().any(|&p| a[p] as usize != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (rx, ry) = (root(&mut parent, x), root(&mut parent, a[x] as usize));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = root(&mut parent, v);
        explored.iter().any(|&u| root(&mut parent, u) == rv)
    }
}

/// Permutation sending each vertex of leaf `a` to the vertex at the same position in leaf `b`.
fn automorphism(a: &[u8; 64], b: &[u8; 64], n: usize) -> [u8; 64] {
    let mut at_b = [0u8; 64];
    for v in 0..n {
        at_b[b[v] as usize] = v as u8;
    }
    let mut perm = [0u8; 64];
    for v in 0..n {
        perm[v] = at_b[a[v] as usize];
    }
    perm
}

/// First smallest non-singleton cell.
fn target_cell(cell: &[u8], k: usize) -> usize {
    let mut size = [0u8; 64];
    for &c in cell {
        size[c as usize] += 1;
    }
    let mut best = usize::MAX;
    let mut best_size = u8::MAX;
    for (c, &s) in size.iter().enumerate().take(k) {
        if s > 1 && s < best_size {
            best = c;
            best_size = s;
        }
    }
    best
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Refines the ordered colouring `cell` (values `0..k`) until stable; returns the new cell count.
///
/// Vertices in one cell are split by a hash of their neighbour counts into every
/// cell. The hash depends only on colours and counts, so the result is
/// invariant under relabelling even if two distinct count vectors collide.
fn refine(g: &Graph, cell: &mut [u8; 64], mut k: usize) -> usize {
    let n = g.order();
    let mut sig = [0u64; 64];
    let mut order = [0u8; 64];
    loop {
        let mut masks = [0u64; 64];
        for v in 0..n {
            masks[cell[v] as usize] |= 1 << v;
        }
        for v in 0..n {
            let row = g.neighbour_mask(v);
            let mut h = 0u64;
            for (c, &m) in masks.iter().enumerate().take(k) {
                let cnt = (row & m).count_ones() as u64;
                if cnt != 0 {
                    h = mix(h, (c as u64) << 8 | cnt);
                }
            }
            sig[v] = h;
        }
        for (i, o) in order.iter_mut().enumerate().take(n) {
            *o = i as u8;
        }
        order[..n].sort_unstable_by_key(|&v| (cell[v as usize], sig[v as usize]));
        let mut next = [0u8; 64];
        let mut c = 0u8;
        for i in 0..n {
            let v = order[i] as usize;
            if i > 0 {
                let u = order[i - 1] as usize;
                if (cell[u], sig[u]) != (cell[v], sig[v]) {
                    c += 1;
                }
            }
            next[v] = c;
        }
        let nk = if n == 0 { 0 } else { c as usize + 1 };
        *cell = next;
        if nk == k {
            return k;
        }
        k = nk;
    }
}
