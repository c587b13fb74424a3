//! Non-graphic even-sum sequences one entry short of the floor bound.

use degseq::extremal::witness_nongraphic;
use degseq::seqcore::erdos_gallai_check;

fn main() {
    for d in (2..=12).chain([1_000, 1_000_000_000]) {
        let w = witness_nongraphic(d).expect("d is in range");
        let eg = erdos_gallai_check(&w);
        let v = eg.first_violation.expect("witness is not graphic");
        println!(
            "d={d:<10} n={:<20} {w:<28} fails at k={} ({} > {})",
            w.n(),
            v.k,
            v.lhs,
            v.rhs
        );
    }
}
