//! Runs a selection of the claim registry and prints the machine-checkable
//! report. Each claim freezes an expected value (a gadget deletion table, a
//! family's order/gamma/ratio, a structural property) and recomputes it
//! from scratch; pass means exact equality.
//!
//! Run with: cargo run --release --example verify_claims [ID,ID,...]
//! Without an argument a fast representative subset runs. The full registry
//! is available through the CLI: domlab verify --claims all

use domlab::claims::run_claims;
use domlab::domination::Budget;
use domlab::report::{emit_json, exit_code};

fn main() {
    let selection: Vec<String> = match std::env::args().nth(1) {
        Some(ids) => ids.split(',').map(str::to_string).collect(),
        None => ["2.A", "2.B", "2.P", "R.k3", "L.r1", "GP.k23", "Pi.2", "GP72"]
            .map(str::to_string)
            .to_vec(),
    };
    let budget = Budget::seconds(120);
    let reports = run_claims(Some(&selection), &budget).expect("known claim ids");
    for r in &reports {
        println!("{:<14} {:<12} {:>7.2}s  {}", r.claim_id, r.status.to_string(), r.runtime_s, r.citation);
    }
    println!("\n{}", emit_json(&reports).unwrap());
    std::process::exit(exit_code(&reports));
}
