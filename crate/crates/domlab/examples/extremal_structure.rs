//! Structural analysis of the families that are extremal for the bound
//! rather than counterexamples to it: GP(7,2) and the M^r_k / N^r_k(i)
//! towers. These are 3-connected cubic Hamiltonian graphs sitting exactly
//! on gamma = ceil(v/3) (or one below, at the floor), showing the bound
//! cannot be sharpened for 3-connected graphs in general.
//!
//! Run with: cargo run --release --example extremal_structure

use domlab::analysis::{hamiltonian_cycle, is_cubic, is_cyclically_4_edge_connected, vertex_connectivity, HamiltonResult};
use domlab::domination::{gamma_exact, Budget};
use domlab::families;
use domlab::graph::Graph;

fn describe(label: &str, g: &Graph, budget: &Budget) {
    let res = gamma_exact(g, budget);
    let kappa = vertex_connectivity(g);
    let cyc4 = if g.vertex_count() >= 8 {
        match is_cyclically_4_edge_connected(g) {
            Ok((flag, _)) => flag.to_string(),
            Err(_) => "?".to_string(),
        }
    } else {
        "n/a".to_string()
    };
    let ham = matches!(hamiltonian_cycle(g, 100_000_000), HamiltonResult::Found(_));
    println!(
        "{label:<10} v = {:>2}  gamma = {:?}  ceil(v/3) = {:>2}  cubic = {}  kappa = {}  cyc4 = {:<5}  hamiltonian = {}",
        g.vertex_count(),
        res.gamma,
        g.vertex_count().div_ceil(3),
        is_cubic(g),
        kappa,
        cyc4,
        ham,
    );
}

fn main() {
    let budget = Budget::seconds(60);

    describe("GP(7,2)", &families::generalized_petersen(7, 2).unwrap(), &budget);
    println!();

    // M^r_k: v = 6k, 6k-2, 6k+2 and gamma = 2k, 2k-1, 2k+1 for r = 0, 1, 2.
    // M^1_1 degenerates to a multigraph and is skipped.
    for k in 1..=3 {
        for r in 0..=2 {
            if (r, k) == (1, 1) {
                continue;
            }
            describe(&format!("M^{r}_{k}"), &families::build_m(r, k).unwrap(), &budget);
        }
    }
    println!();

    // N^r_k(i) swaps one crossing of M^r_k, destroying cyclic
    // 4-edge-connectivity while keeping kappa = 3 and Hamiltonicity.
    for k in 3..=4 {
        for r in 0..=2 {
            describe(&format!("N^{r}_{k}(2)"), &families::build_n(r, k, 2).unwrap(), &budget);
        }
    }
}
