//! Enumerates the connected exceptional graphs with smallest eigenvalue above
//! -2 on 6 to 8 vertices and extends them by star sets for -2.
//!
//! cargo run --release --example foundation -- [max_clique]

use std::time::Instant;

use integral_graphs::graph::write_graph6;
use integral_graphs::starsearch::{enumerate_foundation, exceptional_candidates_from, triangle_free_filter};

fn main() {
    let max_clique: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let start = Instant::now();
    let bases = enumerate_foundation();
    for n in 6..=8 {
        let count = bases.iter().filter(|g| g.order() == n).count();
        println!("{n} vertices: {count} foundation graphs");
    }
    println!("total {} ({:.1?})", bases.len(), start.elapsed());

    let found = exceptional_candidates_from(&bases, max_clique);
    for c in &found {
        println!(
            "{:<14} n={:<2} spectrum {}  from base {} + {} star vertices",
            write_graph6(&c.graph),
            c.graph.order(),
            c.spectrum,
            write_graph6(&c.base),
            c.clique_size
        );
    }
    println!("{} exceptional graphs ({:.1?})", found.len(), start.elapsed());
    for c in triangle_free_filter(&found) {
        println!("triangle-free: {} spectrum {}", write_graph6(&c.graph), c.spectrum);
    }
}
