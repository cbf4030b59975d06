//! Builders for the named graph families: the counterexample sequences
//! R_k and L_r, the edge/vertex replacement products G(P), G(P,B), G[B],
//! the extremal 3-connected families M^r_k and N^r_k(i), and the
//! generalized Petersen graphs.
//!
//! Builders that compose gadgets also return the occurrence maps of each
//! fresh gadget copy, ready for compositional certification.

use crate::analysis::is_cubic;
use crate::domination::GadgetOccurrence;
use crate::gadget::{self, replace_edge, GadgetError, RootedGadget};
use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("input graph must be cubic")]
    NotCubic,
    #[error("construction produced a non-cubic or non-simple graph; parameters are outside the family's domain")]
    ConstructionInvalid,
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The multigraph with two vertices joined by three parallel edges.
pub fn k2_3() -> Graph {
    Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub fn k4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// The 3-prism: two triangles joined by a perfect matching.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()
}

fn occurrence(gadget: &RootedGadget, embedding: Vec<usize>) -> GadgetOccurrence {
    GadgetOccurrence { gadget: gadget.clone(), embedding }
}

/// For an occurrence recorded on a P' copy, the induced stable unit is the
/// P inside it: drop the two pendant vertices (the last two ids of P').
fn p_inside_p_prime(p: &RootedGadget, map: &[usize]) -> GadgetOccurrence {
    occurrence(p, map[..p.vertex_count()].to_vec())
}

/// R_k: a 2k-cycle with each edge v_{2i}v_{2i+1} replaced by a two-terminal
/// gadget, by default P. `slots`, when given, supplies one gadget per
/// replaced edge (members of the P^i family).
pub fn build_r(k: usize, slots: Option<&[RootedGadget]>) -> Result<(Graph, Vec<GadgetOccurrence>), FamilyError> {
    if k < 3 {
        return Err(FamilyError::ParameterOutOfRange(format!("k = {k}, need k >= 3")));
    }
    let p = gadget::gadget_p();
    let default_slots: Vec<RootedGadget>;
    let slots: &[RootedGadget] = match slots {
        Some(s) => {
            if s.len() != k {
                return Err(FamilyError::ParameterOutOfRange(format!(
                    "expected {k} slot gadgets, got {}",
                    s.len()
                )));
            }
            s
        }
        None => {
            default_slots = vec![p.clone(); k];
            &default_slots
        }
    };
    let n = 2 * k;
    let mut g = Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())?;
    let mut occs = Vec::with_capacity(k);
    // replaced edges are the occurrences 2i (the cycle edges were pushed in
    // order); replace from the highest index down so indices stay valid
    for i in (0..k).rev() {
        let (g2, map) = replace_edge(&g, 2 * i, &slots[i])?;
        g = g2;
        occs.push(occurrence(&slots[i], map));
    }
    occs.reverse();
    if !is_cubic(&g) || !g.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok((g, occs))
}

/// L_r: a 2r-vertex path with each edge v_{2i-1}v_{2i} replaced by P, and
/// two copies of S attached by bridges to the path's endpoints.
pub fn build_l(r: usize) -> Result<(Graph, Vec<GadgetOccurrence>), FamilyError> {
    if r < 1 {
        return Err(FamilyError::ParameterOutOfRange(format!("r = {r}, need r >= 1")));
    }
    let p = gadget::gadget_p();
    let s = gadget::gadget_s();
    let n = 2 * r;
    let mut g = Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())?;
    let mut occs = Vec::with_capacity(r + 2);
    // path edges v1v2, v3v4, ... are occurrences 0, 2, 4, ...
    for i in (0..r).rev() {
        let (g2, map) = replace_edge(&g, 2 * i, &p)?;
        g = g2;
        occs.push(occurrence(&p, map));
    }
    occs.reverse();
    // attach the two S copies by bridges
    for endpoint in [0, n - 1] {
        let base = g.vertex_count();
        let mut g2 = Graph::new(base + s.vertex_count());
        for &(a, b) in g.edges() {
            g2.push_edge(a, b)?;
        }
        for &(a, b) in s.graph.edges() {
            g2.push_edge(base + a, base + b)?;
        }
        g2.push_edge(base + s.terminals[0], endpoint)?;
        g = g2;
        occs.push(occurrence(&s, (base..base + s.vertex_count()).collect()));
    }
    if !is_cubic(&g) || !g.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok((g, occs))
}

/// G(P): every edge of `g` replaced by a copy of P'. Occurrence maps cover
/// the P inside each copy (the stable certification unit).
pub fn build_gp(g: &Graph) -> Result<(Graph, Vec<GadgetOccurrence>), FamilyError> {
    if !is_cubic(g) {
        return Err(FamilyError::NotCubic);
    }
    let p = gadget::gadget_p();
    let pp = gadget::gadget_p_prime();
    let mut out = g.clone();
    let mut occs = Vec::with_capacity(g.edge_count());
    for e in (0..g.edge_count()).rev() {
        let (g2, map) = replace_edge(&out, e, &pp)?;
        out = g2;
        occs.push(p_inside_p_prime(&p, &map));
    }
    occs.reverse();
    if !is_cubic(&out) || !out.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok((out, occs))
}

/// G[B]: every vertex of `g` replaced by a copy of B; the j-th edge at a
/// vertex consumes its j-th terminal. Also returns the connector edge
/// occurrence indices (used by the G(P,B) builder).
fn build_gb_raw(g: &Graph) -> Result<(Graph, Vec<GadgetOccurrence>, Vec<usize>), FamilyError> {
    if !is_cubic(g) {
        return Err(FamilyError::NotCubic);
    }
    let b = gadget::gadget_b();
    let m = b.vertex_count();
    let n = g.vertex_count();
    let mut out = Graph::new(n * m);
    let mut occs = Vec::with_capacity(n);
    for v in 0..n {
        for &(x, y) in b.graph.edges() {
            out.push_edge(v * m + x, v * m + y)?;
        }
        occs.push(occurrence(&b, (v * m..(v + 1) * m).collect()));
    }
    let mut used = vec![0usize; n];
    let mut connectors = Vec::with_capacity(g.edge_count());
    for &(u, w) in g.edges() {
        let tu = b.terminals[used[u]];
        let tw = b.terminals[used[w]];
        used[u] += 1;
        used[w] += 1;
        connectors.push(out.edge_count());
        out.push_edge(u * m + tu, w * m + tw)?;
    }
    if !is_cubic(&out) || !out.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok((out, occs, connectors))
}

pub fn build_gb(g: &Graph) -> Result<(Graph, Vec<GadgetOccurrence>), FamilyError> {
    let (out, occs, _) = build_gb_raw(g)?;
    Ok((out, occs))
}

/// G(P,B): every vertex replaced by B and every original edge replaced by
/// P' (joining terminals of adjacent B copies).
pub fn build_gpb(g: &Graph) -> Result<(Graph, Vec<GadgetOccurrence>), FamilyError> {
    let (mut out, mut occs, connectors) = build_gb_raw(g)?;
    let p = gadget::gadget_p();
    let pp = gadget::gadget_p_prime();
    for &e in connectors.iter().rev() {
        let (g2, map) = replace_edge(&out, e, &pp)?;
        out = g2;
        occs.push(p_inside_p_prime(&p, &map));
    }
    if !is_cubic(&out) || !out.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok((out, occs))
}

/// M^r_k: two 3k+1-cycles X, Y with spokes x_iy_i at i = 0 and i = 1 mod 3
/// and crossing pairs x_iy_{i+1}, x_{i+1}y_i at i = 2 mod 3 (the unique
/// congruence in range that makes the graph cubic), with the first `r`-
/// dependent vertices removed and the cycles re-closed. v = 6k + (r mod 3
/// mapped to {0, -2, +2}).
pub fn build_m(r: usize, k: usize) -> Result<Graph, FamilyError> {
    if r > 2 || k < 1 {
        return Err(FamilyError::ParameterOutOfRange(format!("r = {r}, k = {k}")));
    }
    // lo = first surviving index on each cycle
    let lo = match r {
        2 => 0,
        0 => 1,
        1 => 2,
        _ => unreachable!(),
    };
    let len = 3 * k + 1 - lo; // vertices per cycle
    let x = |i: usize| i - lo;
    let y = |i: usize| len + i - lo;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // the two cycles (paths re-closed by an end edge)
    for i in lo..3 * k {
        edges.push((x(i), x(i + 1)));
        edges.push((y(i), y(i + 1)));
    }
    edges.push((x(lo), x(3 * k)));
    edges.push((y(lo), y(3 * k)));
    // spokes
    if lo == 0 {
        edges.push((x(0), y(0)));
    }
    let mut i = 1;
    while i <= 3 * k - 2 {
        if i >= lo {
            edges.push((x(i), y(i)));
        }
        i += 3;
    }
    // crossing pairs
    let mut i = 2;
    while i <= 3 * k - 1 {
        edges.push((x(i), y(i + 1)));
        edges.push((x(i + 1), y(i)));
        i += 3;
    }
    let g = Graph::from_edges(2 * len, &edges)?;
    if !is_cubic(&g) || !g.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok(g)
}

/// N^r_k(i): M^r_k with the edges x_{3i+1}x_{3i+2} and y_{3i}y_{3i+1}
/// replaced by the crossings x_{3i+1}y_{3i} and x_{3i+2}y_{3i+1}.
pub fn build_n(r: usize, k: usize, i: usize) -> Result<Graph, FamilyError> {
    if !(1 < i && i < k) {
        return Err(FamilyError::ParameterOutOfRange(format!("need 1 < i < k, got i = {i}, k = {k}")));
    }
    let m = build_m(r, k)?;
    let lo = match r {
        2 => 0,
        0 => 1,
        1 => 2,
        _ => unreachable!(),
    };
    let len = 3 * k + 1 - lo;
    let x = |j: usize| j - lo;
    let y = |j: usize| len + j - lo;
    let e1 = m
        .find_edge(x(3 * i + 1), x(3 * i + 2))
        .ok_or(FamilyError::ConstructionInvalid)?;
    let e2 = m
        .find_edge(y(3 * i), y(3 * i + 1))
        .ok_or(FamilyError::ConstructionInvalid)?;
    let mut edges: Vec<(usize, usize)> = m
        .edges()
        .iter()
        .enumerate()
        .filter(|(idx, _)| *idx != e1 && *idx != e2)
        .map(|(_, &e)| e)
        .collect();
    edges.push((x(3 * i + 1), y(3 * i)));
    edges.push((x(3 * i + 2), y(3 * i + 1)));
    let g = Graph::from_edges(m.vertex_count(), &edges)?;
    if !is_cubic(&g) || !g.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok(g)
}

/// The generalized Petersen graph GP(n, j): outer n-cycle, inner j-step
/// cycle, spokes. v = 2n.
pub fn generalized_petersen(n: usize, j: usize) -> Result<Graph, FamilyError> {
    if n < 3 || j < 1 || 2 * j == n || j >= n {
        return Err(FamilyError::ParameterOutOfRange(format!("GP({n}, {j})")));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + j) % n));
        edges.push((i, n + i));
    }
    let g = Graph::from_edges(2 * n, &edges)?;
    let g = Graph::from_edges(g.vertex_count(), &dedup_edges(&g))?;
    if !is_cubic(&g) || !g.is_simple() {
        return Err(FamilyError::ConstructionInvalid);
    }
    Ok(g)
}

fn dedup_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    edges.dedup();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{bridges, is_cubic};

    #[test]
    fn r_k_vertex_formula_and_cubicity() {
        for k in 3..=8 {
            let (g, occs) = build_r(k, None).unwrap();
            assert_eq!(g.vertex_count(), 20 * k, "k = {k}");
            assert!(is_cubic(&g));
            assert_eq!(occs.len(), k);
            assert!(bridges(&g).is_empty());
        }
        assert!(build_r(2, None).is_err());
    }

    #[test]
    fn r_with_slot_swap() {
        let p2 = gadget::gadget_p_i(2).unwrap();
        let p1 = gadget::gadget_p();
        let (g, _) = build_r(3, Some(&[p2, p1.clone(), p1])).unwrap();
        assert_eq!(g.vertex_count(), 84);
        assert!(is_cubic(&g));
    }

    #[test]
    fn l_r_vertex_and_bridge_formulas() {
        for r in 1..=5 {
            let (g, occs) = build_l(r).unwrap();
            assert_eq!(g.vertex_count(), 20 * r + 34, "r = {r}");
            assert!(is_cubic(&g));
            assert_eq!(bridges(&g).len(), r + 1, "r = {r}");
            assert_eq!(occs.len(), r + 2);
        }
        assert!(build_l(0).is_err());
    }

    #[test]
    fn gp_vertex_formula() {
        let (g, occs) = build_gp(&k2_3()).unwrap();
        assert_eq!(g.vertex_count(), 62);
        assert!(is_cubic(&g));
        assert_eq!(occs.len(), 3);
        let (g, _) = build_gp(&k4()).unwrap();
        assert_eq!(g.vertex_count(), 124);
        assert!(is_cubic(&g));
        assert!(build_gp(&Graph::new(3)).is_err());
    }

    #[test]
    fn gb_and_gpb_vertex_formulas() {
        let (gb, occs) = build_gb(&k2_3()).unwrap();
        assert_eq!(gb.vertex_count(), 18);
        assert!(is_cubic(&gb));
        assert_eq!(occs.len(), 2);
        let (gb4, _) = build_gb(&k4()).unwrap();
        assert_eq!(gb4.vertex_count(), 36);
        assert!(is_cubic(&gb4));
        let (gpb, occs) = build_gpb(&k2_3()).unwrap();
        assert_eq!(gpb.vertex_count(), 78);
        assert!(is_cubic(&gpb));
        assert_eq!(occs.len(), 2 + 3);
    }

    #[test]
    fn m_family_vertex_counts() {
        for k in 1..=5 {
            for r in 0..=2 {
                let expect = match r {
                    0 => 6 * k,
                    1 => 6 * k - 2,
                    2 => 6 * k + 2,
                    _ => unreachable!(),
                };
                match build_m(r, k) {
                    Ok(g) => {
                        assert_eq!(g.vertex_count(), expect, "r = {r}, k = {k}");
                        assert!(is_cubic(&g));
                        assert!(g.is_simple());
                    }
                    Err(FamilyError::ConstructionInvalid) => {
                        // M^1_1 degenerates to a multigraph; everything else must build
                        assert_eq!((r, k), (1, 1));
                    }
                    Err(e) => panic!("unexpected error {e:?}"),
                }
            }
        }
    }

    #[test]
    fn n_family_builds() {
        for r in 0..=2 {
            let g = build_n(r, 4, 2).unwrap();
            let expect = match r {
                0 => 24,
                1 => 22,
                2 => 26,
                _ => unreachable!(),
            };
            assert_eq!(g.vertex_count(), expect);
            assert!(is_cubic(&g));
        }
        assert!(build_n(0, 3, 1).is_err());
        assert!(build_n(0, 2, 2).is_err());
    }

    #[test]
    fn petersen_7_2() {
        let g = generalized_petersen(7, 2).unwrap();
        assert_eq!(g.vertex_count(), 14);
        assert!(is_cubic(&g));
        assert!(generalized_petersen(4, 2).is_err());
    }

    #[test]
    fn occurrence_images_are_disjoint_and_exact() {
        let (g, occs) = build_r(3, None).unwrap();
        let mut seen = vec![false; g.vertex_count()];
        for occ in &occs {
            for (w, &img) in occ.embedding.iter().enumerate() {
                // terminals are shared with the host cycle but occurrences
                // must not overlap each other
                if w != occ.gadget.terminals[0] && w != occ.gadget.terminals[1] {
                    assert!(!seen[img]);
                    seen[img] = true;
                }
            }
            // edge-set equality under the map
            for &(a, b) in occ.gadget.graph.edges() {
                assert!(g.has_edge(occ.embedding[a], occ.embedding[b]));
            }
        }
    }
}
