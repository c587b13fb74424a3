//! Cross-check every bound, both Erdős–Gallai evaluators and the realizer on
//! all short sequences.
//!
//!     cargo run --release --example exhaustive_sweep -- 10 7 4

use degseq::oracle::cross_check_with;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let nmax = args.next().unwrap_or(9) as usize;
    let dmax = args.next().unwrap_or(6);
    let jobs = args.next().unwrap_or(1) as usize;
    let report = cross_check_with(nmax, dmax, jobs).expect("thread pool starts");
    println!(
        "n<={nmax} d<={dmax}: {} sequences, {} graphic, {} realizations",
        report.sequences_checked, report.graphic_count, report.realizations_checked
    );
    if report.is_clean() {
        println!("no disagreements");
    } else {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        std::process::exit(1);
    }
}
