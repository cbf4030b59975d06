//! Slot-swap experiment on R_3: the three cycle slots normally carry copies
//! of P (20 vertices, gamma 7). Upgrading one slot to the recursive gadget
//! P^2 (44 vertices, gamma 15) keeps the construction cubic and the
//! certificate compositional, and the resulting 84-vertex graph still beats
//! gamma <= ceil(v/3): 29 > 28.
//!
//! Run with: cargo run --release --example swap_experiment

use domlab::domination::{certified_gamma, Budget};
use domlab::families::build_r;
use domlab::gadget::{gadget_p, gadget_p_i};

fn main() {
    let budget = Budget::seconds(120);

    let (plain, plain_occs) = build_r(3, None).unwrap();
    let plain_res = certified_gamma(&plain, &plain_occs, None, &budget).unwrap();
    println!(
        "R_3 (P, P, P):    v = {:>2}  gamma = {:?}  ceil(v/3) = {}",
        plain.vertex_count(),
        plain_res.gamma,
        plain.vertex_count().div_ceil(3),
    );

    let slots = vec![gadget_p_i(2).unwrap(), gadget_p(), gadget_p()];
    let (swapped, occs) = build_r(3, Some(&slots)).unwrap();
    let res = certified_gamma(&swapped, &occs, None, &budget).unwrap();
    let bound = swapped.vertex_count().div_ceil(3);
    println!(
        "R_3 (P^2, P, P):  v = {:>2}  gamma = {:?}  ceil(v/3) = {}  ({} occurrences certify the lower bound)",
        swapped.vertex_count(),
        res.gamma,
        bound,
        occs.len(),
    );
    for (i, occ) in occs.iter().enumerate() {
        println!(
            "  slot {i}: gadget on {} vertices embedded at host vertices {}..={}",
            occ.gadget.vertex_count(),
            occ.embedding.iter().min().unwrap(),
            occ.embedding.iter().max().unwrap(),
        );
    }
    assert!(res.gamma.unwrap() > bound, "the swapped graph still beats the bound");
}
