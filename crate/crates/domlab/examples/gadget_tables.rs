//! Prints the building-block gadget catalog: order, domination number,
//! terminals, and the full deletion table gamma(H - V) over every subset V
//! of the terminal set. A gadget is stable when all table entries agree.
//!
//! Run with: cargo run --release --example gadget_tables

use domlab::domination::{check_stability, Budget};
use domlab::gadget::gadget_catalog;

fn main() {
    let budget = Budget::seconds(60);
    for name in ["A", "B", "S", "T", "P", "Q", "P'", "W"] {
        let h = gadget_catalog(name).expect("catalog name");
        let report = check_stability(&h, &budget);
        println!(
            "gadget {:<2}  v = {:>2}  gamma = {:?}  terminals = {:?}  stable = {:?}",
            name,
            h.vertex_count(),
            report.gamma,
            h.terminals,
            report.stable,
        );
        for (removed, gamma) in &report.table {
            let label: Vec<String> = removed
                .iter()
                .map(|v| {
                    h.names
                        .iter()
                        .find(|&(_, &id)| id == *v)
                        .map(|(n, _)| n.clone())
                        .unwrap_or_else(|| v.to_string())
                })
                .collect();
            println!("    gamma(H - {{{}}}) = {:?}", label.join(","), gamma);
        }
        println!();
    }
}
