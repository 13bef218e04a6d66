//! Exact adjacency spectrum and characteristic polynomial of a graph6 string.
//!
//! cargo run --release --example spectrum -- 'IheA@GUAo'

use integral_graphs::exact::{char_poly, integral_spectrum};
use integral_graphs::graph::parse_graph6;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "C~".to_string());
    let g = match parse_graph6(&text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{text}: {e}");
            std::process::exit(2);
        }
    };
    let a = g.adjacency_matrix();
    let coeffs: Vec<String> = char_poly(&a).coeffs().iter().map(|c| c.to_string()).collect();
    println!("{} vertices, {} edges", g.order(), g.edge_count());
    println!("characteristic polynomial coefficients (constant first): {}", coeffs.join(" "));
    match integral_spectrum(&a) {
        Some(s) => println!("integral spectrum {s}"),
        None => println!("not integral"),
    }
}
