//! Builds the compatibility graph of a star complement for -2 and lists the
//! integral exceptional graphs obtained by adding star sets to it.
//!
//! cargo run --release --example star_extend -- [base_graph6]

use integral_graphs::graph::{parse_graph6, write_graph6};
use integral_graphs::starsearch::{enumerate_foundation, exceptional_candidates_from, maximal_cliques, CompatGraph};

fn main() {
    let base = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text).expect("graph6 base"),
        // the first foundation graph that yields something
        None => enumerate_foundation()
            .into_iter()
            .find(|b| !exceptional_candidates_from(std::slice::from_ref(b), 4).is_empty())
            .expect("some base extends"),
    };
    let compat = match CompatGraph::new(&base, -2) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let maximal = maximal_cliques(&compat);
    println!(
        "base {}: {} admissible vectors, {} maximal cliques, largest {}",
        write_graph6(&base),
        compat.order(),
        maximal.len(),
        maximal.iter().map(Vec::len).max().unwrap_or(0)
    );
    for c in exceptional_candidates_from(std::slice::from_ref(&base), 4) {
        println!("  +{} -> {} {}", c.clique_size, write_graph6(&c.graph), c.spectrum);
    }
}
