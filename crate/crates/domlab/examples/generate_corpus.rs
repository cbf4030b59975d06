//! Regenerates the checked-in corpus of connected cubic graphs
//! (tests/data/cubic_le12.g6): one graph6 line per isomorphism class,
//! orders 4 through 12. The class counts per order are 1, 2, 5, 19, 85.
//!
//! Run with: cargo run --release --example generate_corpus [OUT_FILE]
//! Without an argument the corpus is printed to stdout.

use domlab::corpus::corpus_graph6;

fn main() {
    let corpus = corpus_graph6(12);
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &corpus).expect("writing corpus file");
            eprintln!("wrote {} graphs to {path}", corpus.lines().count());
        }
        None => print!("{corpus}"),
    }
}
