//! Parse a sequence, test it with Erdős–Gallai and print every bound verdict.
//!
//!     cargo run --example check_sequence -- "4^3,1^4"

use degseq::bounds::bounds_summary;
use degseq::seqcore::DegreeSequence;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "5,1^11".to_string());
    let seq: DegreeSequence = match text.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot parse {text:?}: {e}");
            std::process::exit(2);
        }
    };
    let summary = bounds_summary(&seq);
    let eg = &summary.erdos_gallai;
    println!("{seq}: n={} sum={} d1={} dn={}", seq.n(), seq.sum(), seq.d1(), seq.dn());
    println!("graphic: {}", eg.graphic);
    if let Some(v) = eg.first_violation {
        println!("first violation at k={} ({} > {})", v.k, v.lhs, v.rhs);
    }
    for v in &summary.verdicts {
        println!(
            "{:<15} applicable={:<5} holds={:<5} lhs={} rhs={} min_n={}",
            v.predicate.name(),
            v.applicable,
            v.holds,
            v.lhs,
            v.rhs,
            v.min_n
        );
    }
}
