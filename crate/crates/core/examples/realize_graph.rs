//! Build a simple graph for a graphic sequence and validate it.
//!
//!     cargo run --example realize_graph -- "3^4,2^2"

use degseq::seqcore::{havel_hakimi_realize, DegreeSequence, RealizeError};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3^4,2^2".to_string());
    let seq: DegreeSequence = text.parse().expect("valid sequence");
    match havel_hakimi_realize(&seq) {
        Ok(graph) => {
            graph.validate(&seq).expect("realization matches the sequence");
            println!("{seq}: {} vertices, {} edges", graph.n, graph.edges.len());
            for (u, v) in &graph.edges {
                println!("{u} {v}");
            }
        }
        Err(RealizeError::NotGraphic) => println!("{seq} is not graphic"),
        Err(e) => eprintln!("{e}"),
    }
}
