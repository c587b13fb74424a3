//! Confirm by enumeration that the floor bound cannot be lowered for small d1.
//!
//!     cargo run --release --example sharpness_scan -- 7 2

use degseq::oracle::{sharpness_scan_with, ScanOptions};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let d1_max = args.next().unwrap_or(6);
    let extra = args.next().unwrap_or(2);
    let options = ScanOptions {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..ScanOptions::default()
    };
    for d1 in 2..=d1_max {
        let r = sharpness_scan_with(d1, extra, &options).expect("d1 within the guard");
        println!(
            "d1={d1} threshold={} witness={} confirmed={}",
            r.threshold, r.witness_at_threshold_minus_1, r.confirmed
        );
        for l in &r.lengths {
            println!("    length {}: {}/{} graphic", l.length, l.graphic, l.sequences);
        }
    }
}
