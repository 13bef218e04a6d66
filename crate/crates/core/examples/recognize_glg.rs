//! Decides whether a graph is a generalized line graph and prints a weighted
//! root, or reports it as exceptional.
//!
//! cargo run --release --example recognize_glg -- 'E{Sw' 'IheA@GUAo'

use integral_graphs::glg::{generalized_line_graph, is_generalized_line_graph};
use integral_graphs::graph::{parse_graph6, write_graph6};

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["C~".into(), "E{Sw".into(), "IheA@GUAo".into()];
    }
    for text in args {
        let Ok(g) = parse_graph6(&text) else {
            eprintln!("{text}: not graph6");
            continue;
        };
        match is_generalized_line_graph(&g) {
            Some(root) => {
                let back = generalized_line_graph(&root).expect("small root");
                assert_eq!(back.canonical_key(), g.canonical_key());
                println!("{text}: root {} with weights {:?}", write_graph6(root.graph()), root.weights());
            }
            None => println!("{text}: exceptional"),
        }
    }
}
