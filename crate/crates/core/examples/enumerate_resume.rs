//! Stream sequences in decreasing order, stop, and resume from the cursor.

use degseq::oracle::{enumerate_sequences, SequenceEnumerator};

fn main() {
    let mut stream = enumerate_sequences(5, 3, true);
    for seq in stream.by_ref().take(4) {
        println!("{seq}");
    }
    let cursor = stream.cursor().expect("more sequences remain").to_vec();
    println!("-- paused at {cursor:?}");
    for seq in SequenceEnumerator::resume(cursor, true) {
        println!("{seq}");
    }
}
