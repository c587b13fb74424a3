//! Minimum lengths for d1 = 2x+1 and dn = 1, where three bounds differ by one.

use degseq::bounds::remark_thresholds;

fn main() {
    println!("{:>4} {:>14} {:>10} {:>15}", "x", "zz_simplified", "bhjw", "improved_floor");
    for x in (1..=10).chain([100, 1_000_000]) {
        let t = remark_thresholds(x).expect("x is in range");
        println!(
            "{x:>4} {:>14} {:>10} {:>15}",
            t.zz_simplified, t.bhjw, t.improved_floor
        );
    }
}
