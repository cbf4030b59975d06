//! Exhaustively scans all connected cubic graphs on up to 10 vertices
//! against both forms of the domination bound: gamma <= ceil(v/3) and the
//! sharpened floor(v/3) when v = 1 (mod 3). Neither bound has a small
//! counterexample -- the known violations need hundreds of vertices.
//!
//! Run with: cargo run --release --example scan_corpus

use domlab::corpus::corpus_graph6;
use domlab::domination::Budget;
use domlab::scan::{scan_corpus, Conjecture, ScanFilters, Verdict};

fn main() {
    let corpus = corpus_graph6(10);
    let budget = Budget::seconds(60);
    let filters = ScanFilters { cubic_only: true, kappa_min: None };

    for conjecture in [Conjecture::Reed, Conjecture::Kelmans] {
        let out = scan_corpus(&corpus, conjecture, filters, &budget);
        println!(
            "{conjecture:?}: {} graphs scanned, {} pass, {} violations, {} inconclusive",
            out.summary.scanned, out.summary.pass, out.summary.violations, out.summary.inconclusive,
        );
        for rec in out.records.iter().filter(|r| r.verdict == Verdict::Violation) {
            println!("  violation: {} (v = {}, gamma = {:?} > {})", rec.graph6, rec.n, rec.gamma, rec.bound);
        }
        // gamma histogram per order
        let mut per_order: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for rec in &out.records {
            if let Some(g) = rec.gamma {
                *per_order.entry((rec.n, g)).or_default() += 1;
            }
        }
        for ((n, g), count) in &per_order {
            println!("  n = {n:>2}: {count:>2} graphs with gamma = {g}");
        }
        println!();
    }
}
