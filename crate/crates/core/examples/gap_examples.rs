//! Graphic sequences covered by the floor bound but missed by the corollary.

use degseq::bounds::{improved_bound, zz_corollary};
use degseq::extremal::gap_example;
use degseq::seqcore::erdos_gallai_check;

fn main() {
    for x in (1..=8).chain([1_000_000]) {
        let s = gap_example(x).expect("x is in range");
        let floor = improved_bound(&s);
        let corollary = zz_corollary(&s);
        println!(
            "x={x:<8} {s:<16} graphic={} floor {}>={} corollary {}<{}",
            erdos_gallai_check(&s).graphic,
            floor.lhs,
            floor.rhs,
            corollary.lhs,
            corollary.rhs
        );
    }
}
