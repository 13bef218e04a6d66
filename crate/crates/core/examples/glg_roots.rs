//! Searches vertex-weighted roots up to a vertex cap and prints each one with
//! its weighted signless Laplacian spectrum.
//!
//! cargo run --release --example glg_roots -- [max_vertices]

use std::time::Instant;

use rayon::prelude::*;

use integral_graphs::glg::generalized_line_graph;
use integral_graphs::glgsearch::{certify, enumerate_candidates, is_root, SearchCaps};
use integral_graphs::graph::write_graph6;

fn main() {
    let cap: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(32);
    let start = Instant::now();
    let mut stream = enumerate_candidates(SearchCaps::new(cap));
    let mut roots = Vec::new();
    let mut n = 1;
    while let Some(level) = stream.next_level() {
        eprintln!("order {n:>2}: {:>6} candidates ({:.1?})", level.len(), start.elapsed());
        roots.extend(level.into_par_iter().filter(is_root).collect::<Vec<_>>());
        n += 1;
    }
    for hw in &roots {
        let cert = certify(hw).expect("roots certify");
        let l = generalized_line_graph(hw).expect("small enough");
        println!(
            "H={} f={:?} Q-spectrum {} -> {} ({} vertices), checks {}",
            write_graph6(hw.graph()),
            hw.weights(),
            cert.q_spectrum,
            write_graph6(&l),
            l.order(),
            if cert.checks.all_pass() { "pass" } else { "FAIL" }
        );
    }
    println!("{} roots", roots.len());
}
