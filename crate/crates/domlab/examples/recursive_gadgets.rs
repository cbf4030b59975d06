//! The recursive gadget towers P^i and Q^i: v(P^i) = 3*2^(i+2) - 4 and
//! gamma(P^i) = 2^(i+2) - 1, so the domination ratio tends to 1/3 from
//! above while the graphs stay 2-connected.
//!
//! For i <= 2 the solver verifies gamma directly. For i >= 3 direct search
//! is out of reach, so the gamma value is certified compositionally: the
//! top-level doubling glues two copies of P^(i-1), and splitting the graph
//! into the second copy plus the extended head yields two disjoint stable
//! occurrences whose gammas sum to the exact value.
//!
//! Run with: cargo run --release --example recursive_gadgets

use domlab::claims::recursive_occurrences;
use domlab::domination::{certified_gamma, check_stability, gamma_exact, Budget};
use domlab::gadget::{gadget_p_i, gadget_q_i};

fn main() {
    let budget = Budget::seconds(120);

    for i in 1..=2 {
        let p = gadget_p_i(i).unwrap();
        let res = gamma_exact(&p.graph, &budget);
        let stab = check_stability(&p, &budget);
        println!(
            "P^{i}: v = {:>2} (formula {:>2})  gamma = {:?} (formula {:>2})  stable over terminals = {:?}",
            p.vertex_count(),
            3 * (1usize << (i + 2)) - 4,
            res.gamma,
            (1usize << (i + 2)) - 1,
            stab.stable,
        );
        let q = gadget_q_i(i).unwrap();
        let res = gamma_exact(&q.graph, &budget);
        println!("Q^{i}: v = {:>2}  gamma = {:?}  (one more vertex, same gamma)", q.vertex_count(), res.gamma);
    }

    for (label, f3) in [("P^3", false), ("Q^3", true)] {
        let (g, occs) = recursive_occurrences(3, f3).unwrap();
        let res = certified_gamma(&g, &occs, None, &budget).expect("certification");
        println!(
            "{label}: v = {:>2}  gamma = {:?} via {:?} certificate ({} occurrences, lower bound {})",
            g.vertex_count(),
            res.gamma,
            res.certificate,
            occs.len(),
            res.lower_bound,
        );
    }

    // Q^2 sits exactly on the 1/3 boundary (v = 3 gamma) while staying
    // stable over its terminals, which is what makes it usable inside
    // larger hosts.
    let q2 = gadget_q_i(2).unwrap();
    let res = gamma_exact(&q2.graph, &budget);
    println!(
        "Q^2 boundary check: v = {} = 3 * gamma = 3 * {}",
        q2.vertex_count(),
        res.gamma.unwrap(),
    );
}
