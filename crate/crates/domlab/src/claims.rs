//! The claim registry: every numeric statement behind the counterexample
//! constructions, reproduced at desk scale with exact certificates.
//!
//! Claim ids are frozen strings; each claim records its expected values, the
//! computed values, and a pass/fail/inconclusive status where `pass` means
//! exact structural equality (integers and "p/q" rationals only).

use crate::analysis::{
    bridges, hamiltonian_cycle, is_cubic, is_cyclically_4_edge_connected, vertex_connectivity,
    HamiltonResult,
};
use crate::domination::{
    certified_gamma, gamma_exact, stability_over, Budget, Certificate, DominationResult,
    GadgetOccurrence, SolveStatus,
};
use crate::families;
use crate::gadget::{self, RootedGadget};
use crate::graph::{Graph, VertexSet};
use crate::report::{ClaimReport, ClaimStatus};
use serde_json::{json, Value};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error("unknown claim id: {0}")]
    UnknownId(String),
}

struct Outcome {
    expected: Value,
    computed: Value,
    inconclusive: bool,
    notes: String,
}

impl Outcome {
    fn new(expected: Value, computed: Value) -> Self {
        Outcome { expected, computed, inconclusive: false, notes: String::new() }
    }

    fn with_notes(mut self, notes: &str) -> Self {
        self.notes = notes.to_string();
        self
    }
}

pub struct Claim {
    pub id: &'static str,
    pub citation: String,
    pub quote: String,
    /// Stretch claims are excluded from the default (`all`) selection.
    pub stretch: bool,
    runner: Box<dyn Fn(&Budget) -> Outcome + Send + Sync>,
}

fn num(v: Option<usize>) -> Value {
    match v {
        Some(x) => json!(x),
        None => Value::Null,
    }
}

fn mark_timeout(out: &mut Outcome, results: &[&DominationResult]) {
    if results.iter().any(|r| r.status != SolveStatus::Optimal) {
        out.inconclusive = true;
    }
}

fn certificate_value(c: &Certificate) -> Value {
    serde_json::to_value(c).unwrap()
}

/// Deletion-table claim: γ(H − V) over every subset V of the attachment,
/// compared entry by entry.
fn table_outcome(
    h: &RootedGadget,
    attachment: &[(&str, usize)],
    expect: impl Fn(&[usize]) -> usize,
    budget: &Budget,
) -> Outcome {
    let ids: Vec<usize> = attachment.iter().map(|&(_, v)| v).collect();
    let report = stability_over(&h.graph, &ids, budget);
    let name_of = |v: usize| -> String {
        attachment.iter().find(|&&(_, w)| w == v).map(|&(n, _)| n.to_string()).unwrap_or_else(|| v.to_string())
    };
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    let mut inconclusive = false;
    for (removed, gamma) in &report.table {
        let names: Vec<String> = removed.iter().map(|&v| name_of(v)).collect();
        expected.push(json!({"removed": names, "gamma": expect(removed)}));
        computed.push(json!({"removed": names, "gamma": num(*gamma)}));
        if gamma.is_none() {
            inconclusive = true;
        }
    }
    Outcome {
        expected: Value::Array(expected),
        computed: Value::Array(computed),
        inconclusive,
        notes: String::new(),
    }
}

fn named(h: &RootedGadget, name: &str) -> usize {
    h.names[name]
}

/// Occurrence decomposition certifying γ(P^i) (or γ(Q^i) when `f3` is set)
/// for i ≥ 2: the top-level doubling glues two copies of P^{i-1}; the second
/// copy is a stable occurrence on its own, and the first copy extended by
/// the connector vertices is a stable occurrence worth one more than
/// γ(P^{i-1}), which closes the +1 gap the plain two-copy bound leaves open.
pub fn recursive_occurrences(i: usize, f3: bool) -> Result<(Graph, Vec<GadgetOccurrence>), crate::gadget::GadgetError> {
    assert!(i >= 2);
    let inner = gadget::gadget_p_i(i - 1)?;
    let outer = if f3 { gadget::gadget_q_i(i)? } else { gadget::gadget_p_i(i)? };
    let m = inner.vertex_count();
    let second_copy: VertexSet = (m..2 * m).collect();
    let (head, map) = outer.graph.delete_vertices(&second_copy).unwrap();
    let terminals = outer.terminals.iter().take(2).map(|&t| map[t].unwrap()).collect();
    let extended = RootedGadget::new(head, terminals);
    let occ_head = GadgetOccurrence {
        gadget: extended,
        embedding: (0..outer.vertex_count()).filter(|v| !(m..2 * m).contains(v)).collect(),
    };
    let occ_tail = GadgetOccurrence { gadget: inner, embedding: (m..2 * m).collect() };
    Ok((outer.graph, vec![occ_head, occ_tail]))
}

fn structure_values(g: &Graph, want_cyc4: bool) -> (Value, bool) {
    let kappa = vertex_connectivity(g);
    let ham = matches!(hamiltonian_cycle(g, 100_000_000), HamiltonResult::Found(_));
    let cyc4 = if want_cyc4 && g.vertex_count() >= 8 {
        match is_cyclically_4_edge_connected(g) {
            Ok((flag, _)) => json!(flag),
            Err(_) => Value::Null,
        }
    } else {
        Value::Null
    };
    (json!({"kappa": kappa, "hamiltonian": ham, "cyc4": cyc4}), ham)
}

fn merge(a: Value, b: Value) -> Value {
    let mut obj = a.as_object().cloned().unwrap_or_default();
    if let Some(other) = b.as_object() {
        for (k, v) in other {
            obj.insert(k.clone(), v.clone());
        }
    }
    Value::Object(obj)
}

pub fn registry() -> Vec<Claim> {
    let mut claims: Vec<Claim> = Vec::new();
    let mut add = |id: &'static str, citation: String, quote: String, stretch: bool, runner: Box<dyn Fn(&Budget) -> Outcome + Send + Sync>| {
        claims.push(Claim { id, citation, quote, stretch, runner });
    };

    // ---- gadget deletion tables -------------------------------------------
    add("2.A", "gadget A (K33 with two subdivided edges)".into(),
        "gamma(A)=3, gamma(A-a1)=gamma(A-a2)=3, gamma(A-{a1,a2})=2".into(), false,
        Box::new(|b| {
            let h = gadget::gadget_a();
            let (a1, a2) = (named(&h, "a1"), named(&h, "a2"));
            table_outcome(&h, &[("a1", a1), ("a2", a2)], |rm| if rm.len() == 2 { 2 } else { 3 }, b)
        }));
    add("2.B", "gadget B (K33 with all three edges at one vertex subdivided)".into(),
        "gamma(B-V)=3 for every subset V of {b1,b2,b3}".into(), false,
        Box::new(|b| {
            let h = gadget::gadget_b();
            let names: Vec<(&str, usize)> = vec![("b1", named(&h, "b1")), ("b2", named(&h, "b2")), ("b3", named(&h, "b3"))];
            table_outcome(&h, &names, |_| 3, b)
        }));
    add("2.S", "gadget S = T1(A)".into(), "gamma(S)=gamma(S-s)=6".into(), false,
        Box::new(|b| {
            let h = gadget::gadget_s();
            table_outcome(&h, &[("s", named(&h, "s"))], |_| 6, b)
        }));
    add("2.T", "gadget T = T2(A)".into(), "gamma(T-V)=6 for every subset V of {t1,t2}".into(), false,
        Box::new(|b| {
            let h = gadget::gadget_t();
            table_outcome(&h, &[("t1", named(&h, "t1")), ("t2", named(&h, "t2"))], |_| 6, b)
        }));
    add("2.P", "gadget P = F2(A)".into(), "gamma(P-V)=7 for every subset V of {p1,p2}".into(), false,
        Box::new(|b| {
            let h = gadget::gadget_p();
            table_outcome(&h, &[("p1", named(&h, "p1")), ("p2", named(&h, "p2"))], |_| 7, b)
        }));
    add("2.Q", "gadget Q = F3(A)".into(), "gamma(Q-V)=7 for every subset V of {q1,q2,q3}".into(), false,
        Box::new(|b| {
            let h = gadget::gadget_q();
            let names: Vec<(&str, usize)> = vec![("q1", named(&h, "q1")), ("q2", named(&h, "q2")), ("q3", named(&h, "q3"))];
            table_outcome(&h, &names, |_| 7, b)
        }));
    add("NT.W", "gadget W (square plus attached path)".into(),
        "gamma(W-V)=1 iff V={ti,p1,p2}, else 2, over all 16 subsets of {t1,t2,p1,p2}".into(), false,
        Box::new(|b| {
            let h = gadget::gadget_w();
            let (t1, t2) = (named(&h, "t1"), named(&h, "t2"));
            let (p1, p2) = (named(&h, "p1"), named(&h, "p2"));
            let names: Vec<(&str, usize)> = vec![("t1", t1), ("t2", t2), ("p1", p1), ("p2", p2)];
            table_outcome(&h, &names, move |rm| {
                let mut v = rm.to_vec();
                v.sort_unstable();
                let mut a = vec![t1, p1, p2];
                a.sort_unstable();
                let mut c = vec![t2, p1, p2];
                c.sort_unstable();
                if v == a || v == c { 1 } else { 2 }
            }, b)
        }));

    // ---- counterexample families ------------------------------------------
    for k in [3usize, 4, 5] {
        let id: &'static str = match k { 3 => "R.k3", 4 => "R.k4", _ => "R.k5" };
        add(id, format!("family R_{k}"),
            format!("v=20k={}, gamma=7k={}, rho=7/20, kappa=2, bridgeless", 20 * k, 7 * k), false,
            Box::new(move |b| {
                let (g, occs) = families::build_r(k, None).unwrap();
                let res = certified_gamma(&g, &occs, None, b).unwrap();
                let expected = json!({
                    "v": 20 * k, "gamma": 7 * k, "rho": "7/20", "kappa": 2,
                    "bridges": 0, "certificate": "compositional",
                });
                let computed = json!({
                    "v": g.vertex_count(), "gamma": num(res.gamma),
                    "rho": res.ratio().map(|r| r.to_string()),
                    "kappa": vertex_connectivity(&g),
                    "bridges": bridges(&g).len(),
                    "certificate": certificate_value(&res.certificate),
                });
                let mut out = Outcome::new(expected, computed);
                mark_timeout(&mut out, &[&res]);
                out
            }));
    }
    for r in [1usize, 2, 3] {
        let id: &'static str = match r { 1 => "L.r1", 2 => "L.r2", _ => "L.r3" };
        add(id, format!("family L_{r}"),
            format!("v=20r+34={}, gamma=7r+12={}, bridges=r+1={}, kappa=1", 20 * r + 34, 7 * r + 12, r + 1), false,
            Box::new(move |b| {
                let (g, occs) = families::build_l(r).unwrap();
                let res = certified_gamma(&g, &occs, None, b).unwrap();
                let expected = json!({
                    "v": 20 * r + 34, "gamma": 7 * r + 12, "bridges": r + 1, "kappa": 1,
                });
                let computed = json!({
                    "v": g.vertex_count(), "gamma": num(res.gamma),
                    "bridges": bridges(&g).len(), "kappa": vertex_connectivity(&g),
                });
                let mut out = Outcome::new(expected, computed);
                mark_timeout(&mut out, &[&res]);
                out
            }));
    }
    // edge-replacement product G(P) = every edge of G replaced by P'
    for (id, base_name, k) in [("GP.k23", "K2^3", 1usize), ("GP.k4", "K4", 2), ("GP.prism", "3-prism", 3)] {
        add(id, format!("product G(P) over base {base_name}"),
            format!("v=62k={}, gamma=21k={}", 62 * k, 21 * k), false,
            Box::new(move |b| {
                let base = match k { 1 => families::k2_3(), 2 => families::k4(), _ => families::prism() };
                let (g, occs) = families::build_gp(&base).unwrap();
                let res = certified_gamma(&g, &occs, None, b).unwrap();
                let expected = json!({"v": 62 * k, "gamma": 21 * k});
                let computed = json!({"v": g.vertex_count(), "gamma": num(res.gamma)});
                let mut out = Outcome::new(expected, computed);
                mark_timeout(&mut out, &[&res]);
                out
            }));
    }
    for (id, base_name, k) in [("GPB.k23", "K2^3", 1usize), ("GPB.k4", "K4", 2), ("GPB.prism", "3-prism", 3)] {
        add(id, format!("product G(P,B) over base {base_name}"),
            format!("v=78k={}, gamma=27k={}", 78 * k, 27 * k), false,
            Box::new(move |b| {
                let base = match k { 1 => families::k2_3(), 2 => families::k4(), _ => families::prism() };
                let (g, occs) = families::build_gpb(&base).unwrap();
                let res = certified_gamma(&g, &occs, None, b).unwrap();
                let expected = json!({"v": 78 * k, "gamma": 27 * k});
                let computed = json!({"v": g.vertex_count(), "gamma": num(res.gamma)});
                let mut out = Outcome::new(expected, computed);
                mark_timeout(&mut out, &[&res]);
                out
            }));
    }
    // vertex-replacement product G[B]
    for (id, base_name, k) in [("GB.k23", "K2^3", 1usize), ("GB.k4", "K4", 2)] {
        add(id, format!("product G[B] over base {base_name}"),
            "v=9v(G), gamma=3v(G), kappa preserved, not cyclically 4-edge-connected".into(), false,
            Box::new(move |b| {
                let base = match k { 1 => families::k2_3(), _ => families::k4() };
                let (g, occs) = families::build_gb(&base).unwrap();
                let res = certified_gamma(&g, &occs, None, b).unwrap();
                // K2^3 counts as 3-connected by convention (three internally
                // disjoint paths between its two vertices)
                let base_kappa = if k == 1 { 3 } else { vertex_connectivity(&base) };
                let cyc4 = is_cyclically_4_edge_connected(&g).map(|(f, _)| f).ok();
                let v0 = base.vertex_count();
                let expected = json!({"v": 9 * v0, "gamma": 3 * v0, "kappa": base_kappa, "cyc4": false});
                let computed = json!({
                    "v": g.vertex_count(), "gamma": num(res.gamma),
                    "kappa": vertex_connectivity(&g), "cyc4": cyc4,
                });
                let mut out = Outcome::new(expected, computed);
                mark_timeout(&mut out, &[&res]);
                if k == 1 {
                    out = out.with_notes("kappa of the K2^3 base taken as 3 (parallel edges give three internally disjoint paths)");
                }
                out
            }));
    }

    // ---- recursive families P^i / Q^i -------------------------------------
    for (id, i, f3) in [
        ("Pi.1", 1usize, false), ("Pi.2", 2, false), ("Pi.3", 3, false),
        ("Qi.1", 1, true), ("Qi.2", 2, true), ("Qi.3", 3, true),
    ] {
        let v_expect = 3 * (1usize << (i + 2)) - 4 + usize::from(f3);
        let gamma_expect = (1usize << (i + 2)) - 1;
        add(id, format!("recursive gadget {}^{i}", if f3 { "Q" } else { "P" }),
            format!("v={v_expect}, gamma={gamma_expect}{}", if i <= 2 { ", stable over attachment" } else { ", compositional certificate" }), false,
            Box::new(move |b| {
                let h = if f3 { gadget::gadget_q_i(i).unwrap() } else { gadget::gadget_p_i(i).unwrap() };
                if i <= 2 {
                    let rep = stability_over(&h.graph, &h.terminals, b);
                    let expected = json!({"v": v_expect, "gamma": gamma_expect, "stable": true});
                    let computed = json!({
                        "v": h.vertex_count(), "gamma": num(rep.gamma),
                        "stable": rep.stable,
                    });
                    let mut out = Outcome::new(expected, computed);
                    out.inconclusive = rep.stable.is_none();
                    out
                } else {
                    let (g, occs) = recursive_occurrences(i, f3).unwrap();
                    let res = certified_gamma(&g, &occs, None, b).unwrap();
                    let expected = json!({"v": v_expect, "gamma": gamma_expect, "certificate": "compositional"});
                    let computed = json!({
                        "v": g.vertex_count(), "gamma": num(res.gamma),
                        "certificate": certificate_value(&res.certificate),
                    });
                    let mut out = Outcome::new(expected, computed);
                    mark_timeout(&mut out, &[&res]);
                    out
                }
            }));
    }
    add("eRplPi.r3", "R_3 with one slot upgraded to P^2".into(),
        "v=84, gamma=29 > ceil(84/3)=28".into(), false,
        Box::new(|b| {
            let p = gadget::gadget_p();
            let slots = vec![gadget::gadget_p_i(2).unwrap(), p.clone(), p];
            let (g, occs) = families::build_r(3, Some(&slots)).unwrap();
            let res = certified_gamma(&g, &occs, None, b).unwrap();
            let expected = json!({"v": 84, "gamma": 29, "bound": 28, "exceeds_bound": true});
            let computed = json!({
                "v": g.vertex_count(), "gamma": num(res.gamma),
                "bound": g.vertex_count().div_ceil(3),
                "exceeds_bound": res.gamma.map(|ga| ga > g.vertex_count().div_ceil(3)),
            });
            let mut out = Outcome::new(expected, computed);
            mark_timeout(&mut out, &[&res]);
            out
        }));

    // ---- extremal 3-connected families ------------------------------------
    add("GP72", "generalized Petersen graph GP(7,2)".into(),
        "v=14, gamma=5, kappa=3, cyclically 4-edge-connected, Hamiltonian".into(), false,
        Box::new(|b| {
            let g = families::generalized_petersen(7, 2).unwrap();
            let res = gamma_exact(&g, b);
            let (structure, _) = structure_values(&g, true);
            let expected = json!({"v": 14, "gamma": 5, "kappa": 3, "cyc4": true, "hamiltonian": true});
            let computed = merge(json!({"v": g.vertex_count(), "gamma": num(res.gamma)}), structure);
            let mut out = Outcome::new(expected, computed);
            mark_timeout(&mut out, &[&res]);
            out
        }));
    const MK_IDS: [[&str; 3]; 4] = [
        ["Mk.r0.k1", "Mk.r1.k1", "Mk.r2.k1"],
        ["Mk.r0.k2", "Mk.r1.k2", "Mk.r2.k2"],
        ["Mk.r0.k3", "Mk.r1.k3", "Mk.r2.k3"],
        ["Mk.r0.k4", "Mk.r1.k4", "Mk.r2.k4"],
    ];
    for k in 1usize..=4 {
        for r in 0usize..=2 {
            if (r, k) == (1, 1) {
                continue; // degenerates to a multigraph; not in the family
            }
            let (v_expect, gamma_expect) = match r {
                0 => (6 * k, 2 * k),
                1 => (6 * k - 2, 2 * k - 1),
                _ => (6 * k + 2, 2 * k + 1),
            };
            add(MK_IDS[k - 1][r], format!("family M^{r}_{k}"),
                format!("cubic, v={v_expect}, gamma={gamma_expect}, kappa=3, cyclically 4-edge-connected, Hamiltonian"), false,
                Box::new(move |b| {
                    let g = families::build_m(r, k).unwrap();
                    let res = gamma_exact(&g, b);
                    let small = g.vertex_count() < 8;
                    let (structure, _) = structure_values(&g, true);
                    let expected = json!({
                        "cubic": true, "v": v_expect, "gamma": gamma_expect, "kappa": 3,
                        "cyc4": if small { Value::Null } else { json!(true) },
                        "hamiltonian": true,
                    });
                    let computed = merge(json!({"cubic": is_cubic(&g), "v": g.vertex_count(), "gamma": num(res.gamma)}), structure);
                    let mut out = Outcome::new(expected, computed);
                    mark_timeout(&mut out, &[&res]);
                    out = out.with_notes("crossing pairs at i = 2 (mod 3), the unique congruence giving a cubic graph");
                    if small {
                        out.notes.push_str("; cyclic connectivity not defined below 8 vertices (the 3-prism case fails it)");
                    }
                    out
                }));
        }
    }
    const NK_IDS: [[&str; 3]; 2] = [
        ["Nk.r0.k3.i2", "Nk.r1.k3.i2", "Nk.r2.k3.i2"],
        ["Nk.r0.k4.i2", "Nk.r1.k4.i2", "Nk.r2.k4.i2"],
    ];
    for (kidx, k) in [3usize, 4].into_iter().enumerate() {
        for r in 0usize..=2 {
            let (v_expect, gamma_expect) = match r {
                0 => (6 * k, 2 * k),
                1 => (6 * k - 2, 2 * k - 1),
                _ => (6 * k + 2, 2 * k), // see notes: 2k, not 2k+1
            };
            add(NK_IDS[kidx][r], format!("family N^{r}_{k}(2)"),
                format!("cubic, v={v_expect}, gamma={gamma_expect}, kappa=3, not cyclically 4-edge-connected, Hamiltonian"), false,
                Box::new(move |b| {
                    let g = families::build_n(r, k, 2).unwrap();
                    let res = gamma_exact(&g, b);
                    let (structure, _) = structure_values(&g, true);
                    let expected = json!({
                        "cubic": true, "v": v_expect, "gamma": gamma_expect, "kappa": 3,
                        "cyc4": false, "hamiltonian": true,
                    });
                    let computed = merge(json!({"cubic": is_cubic(&g), "v": g.vertex_count(), "gamma": num(res.gamma)}), structure);
                    let mut out = Outcome::new(expected, computed);
                    mark_timeout(&mut out, &[&res]);
                    if r == 2 {
                        out = out.with_notes("the r=2 crossing swap lowers gamma to 2k; the 2k+1 value carried over from M^2 does not survive the swap (confirmed by exhaustive search at k=3,4)");
                    }
                    out
                }));
        }
    }

    // ---- stretch: whole-graph exact solves already settled compositionally --
    add("R.k3.exact.stretch", "family R_3, direct branch-and-bound".into(),
        "gamma=21 by exhaustive branch and bound, no compositional shortcut".into(), true,
        Box::new(|b| {
            let (g, _) = families::build_r(3, None).unwrap();
            let res = gamma_exact(&g, b);
            let mut out = Outcome::new(json!({"gamma": 21}), json!({"gamma": num(res.gamma)}));
            mark_timeout(&mut out, &[&res]);
            out
        }));
    add("L.r1.exact.stretch", "family L_1, direct branch-and-bound".into(),
        "gamma=19 by exhaustive branch and bound, no compositional shortcut".into(), true,
        Box::new(|b| {
            let (g, _) = families::build_l(1).unwrap();
            let res = gamma_exact(&g, b);
            let mut out = Outcome::new(json!({"gamma": 19}), json!({"gamma": num(res.gamma)}));
            mark_timeout(&mut out, &[&res]);
            out
        }));

    claims
}

/// Ids of all registered claims, default selection first.
pub fn claim_ids(include_stretch: bool) -> Vec<&'static str> {
    registry().iter().filter(|c| include_stretch || !c.stretch).map(|c| c.id).collect()
}

/// Run the selected claims (`None` = all non-stretch) and assemble reports
/// in claim-id order.
pub fn run_claims(selection: Option<&[String]>, budget: &Budget) -> Result<Vec<ClaimReport>, ClaimError> {
    let all = registry();
    let chosen: Vec<&Claim> = match selection {
        None => all.iter().filter(|c| !c.stretch).collect(),
        Some(ids) => {
            let mut picked = Vec::new();
            for id in ids {
                let claim = all.iter().find(|c| c.id == id).ok_or_else(|| ClaimError::UnknownId(id.clone()))?;
                picked.push(claim);
            }
            picked
        }
    };
    let mut reports: Vec<ClaimReport> = chosen
        .into_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.runner)(budget);
            let status = if outcome.inconclusive {
                ClaimStatus::Inconclusive
            } else if outcome.expected == outcome.computed {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            };
            ClaimReport {
                claim_id: c.id.to_string(),
                citation: c.citation.clone(),
                quote: c.quote.clone(),
                expected: outcome.expected,
                computed: outcome.computed,
                status,
                runtime_s: start.elapsed().as_secs_f64(),
                notes: outcome.notes,
            }
        })
        .collect();
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_stretch_is_excluded_by_default() {
        let ids = claim_ids(true);
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        let default_ids = claim_ids(false);
        assert!(default_ids.len() == ids.len() - 2);
        assert!(!default_ids.contains(&"R.k3.exact.stretch"));
    }

    #[test]
    fn unknown_id_is_an_error() {
        let err = run_claims(Some(&["nope".to_string()]), &Budget::seconds(1));
        assert!(matches!(err, Err(ClaimError::UnknownId(_))));
    }

    #[test]
    fn single_claim_runs_and_passes() {
        let reports = run_claims(Some(&["2.A".to_string()]), &Budget::seconds(60)).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, ClaimStatus::Pass);
        assert_eq!(reports[0].claim_id, "2.A");
    }

    #[test]
    fn gp72_claim_passes() {
        let reports = run_claims(Some(&["GP72".to_string()]), &Budget::seconds(60)).unwrap();
        assert_eq!(reports[0].status, ClaimStatus::Pass, "{:#?}", reports[0]);
    }

    #[test]
    fn recursive_occurrence_decomposition_is_disjoint() {
        let (g, occs) = recursive_occurrences(2, false).unwrap();
        let mut seen = vec![false; g.vertex_count()];
        for occ in &occs {
            for &v in &occ.embedding {
                assert!(!seen[v]);
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }
}
