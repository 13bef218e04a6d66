//! Generates every connected graph with eigenvalues in [-2, 3] up to a vertex
//! bound and lists the integral non-bipartite ones with spectral radius 3.
//!
//! cargo run --release --example crosscheck -- [max_n]

use std::time::Instant;

use integral_graphs::classify::brute_force_crosscheck;
use integral_graphs::exact::integral_spectrum;
use integral_graphs::graph::write_graph6;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let start = Instant::now();
    let found = brute_force_crosscheck(max_n);
    for g in &found {
        let s = integral_spectrum(&g.adjacency_matrix()).expect("integral by construction");
        println!("{:2} {:16} {s}", g.order(), write_graph6(g));
    }
    println!("{} graphs up to {max_n} vertices in {:.1?}", found.len(), start.elapsed());
}
