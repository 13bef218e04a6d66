//! Full classification: prints every graph with its multiplicities over
//! 3, 2, 1, 0, -1, -2 and the table row it matches.
//!
//! cargo run --release --example classify

use std::time::Instant;

use integral_graphs::classify::classify_all;

fn main() {
    let start = Instant::now();
    let report = classify_all();
    for e in &report.entries {
        println!(
            "{:8} {:16} n={:2} {:?} {}",
            e.name(),
            e.graph6,
            e.n,
            e.multiplicities(),
            e.class.as_str()
        );
    }
    println!(
        "{} graphs ({} generalized line graphs, {} exceptional) in {:.1?}",
        report.summary.total,
        report.summary.glg,
        report.summary.exceptional,
        start.elapsed()
    );
    if report.expected_rows.matches() {
        println!("all table rows matched");
    } else {
        println!("missing rows {:?}, unexpected {:?}", report.expected_rows.missing_rows, report.expected_rows.unexpected);
    }
    for p in report.problems() {
        println!("problem: {p}");
    }
}
