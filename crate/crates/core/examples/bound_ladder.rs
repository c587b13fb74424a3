//! Compare the minimum lengths each bound needs, across a range of d1 and dn.

use degseq::bounds::{min_length, Predicate};

fn main() {
    let ladder = [
        Predicate::ZzSimplified,
        Predicate::ZzCorollary,
        Predicate::Bhjw,
        Predicate::ImprovedFloor,
    ];
    print!("{:>4} {:>4}", "d1", "dn");
    for p in ladder {
        print!(" {:>15}", p.name());
    }
    println!();
    for d1 in [2u64, 3, 5, 8, 13, 21, 100, 1_000_000] {
        for dn in [1u64, 2] {
            if dn > d1 {
                continue;
            }
            print!("{d1:>4} {dn:>4}");
            for p in ladder {
                print!(" {:>15}", min_length(p, d1, dn));
            }
            println!();
        }
    }
}
