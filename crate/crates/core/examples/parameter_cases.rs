//! Solution lines of the multiplicity system for unweighted bipartite roots,
//! one per admissible choice of the fixed counts.
//!
//! cargo run --example parameter_cases

use integral_graphs::exact::bipartite_parameter_cases;

fn main() {
    println!("case  m2 m3 a10 a30  m1     m4    a20    |V|");
    for c in bipartite_parameter_cases() {
        let f = c.fixed;
        println!(
            "{:4}  {:2} {:2} {:3} {:3}  {:6} {:5} {:6} {}",
            c.label,
            f.m2,
            f.m3,
            f.a10,
            f.a30,
            c.solution.m1.to_string(),
            c.solution.m4.to_string(),
            c.solution.a20.to_string(),
            c.vertex_count
        );
    }
}
