//! The extremal forms in the floor bound argument all have odd sums.

use degseq::extremal::proof_extremal_form;

fn main() {
    for x in 1..=6u64 {
        let mut forms = vec![
            proof_extremal_form(2 * x, x * x + 2 * x, x + 1),
            proof_extremal_form(2 * x - 1, x * x + x - 1, x),
        ];
        if x >= 2 {
            forms.push(proof_extremal_form(2 * x - 1, x * x + x - 1, x + 1));
        }
        for form in forms {
            let s = form.expect("parameters are consistent");
            let parity = if s.has_even_sum() { "even" } else { "odd" };
            println!("x={x} {s:<12} sum={:<4} {parity}", s.sum());
        }
    }
}
