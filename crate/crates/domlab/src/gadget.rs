//! Rooted gadgets and the composition operators that build them.
//!
//! A rooted gadget is a graph with an ordered list of terminal vertices:
//! two terminals for edge replacement, three for vertex replacement, one
//! for the output of the doubling operator `op_t1`. The catalog holds the
//! named gadgets A, B, S, T, P, Q, P', W and the recursive families
//! `P^i`, `Q^i`.

use crate::graph::{Graph, GraphError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("gadget has {got} terminals, operation requires {want}")]
    WrongTerminalCount { want: usize, got: usize },
    #[error("vertex {0} must have degree 3 for vertex replacement, has degree {1}")]
    NotDegreeThree(usize, usize),
    #[error("unknown gadget name {0:?}")]
    UnknownName(String),
    #[error("gadget index must be at least 1")]
    IndexOutOfRange,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGadget {
    pub graph: Graph,
    /// Ordered, distinct vertex ids.
    pub terminals: Vec<usize>,
    /// Named vertices (terminal symbols and the like), kept out of the graph itself.
    pub names: BTreeMap<String, usize>,
}

impl RootedGadget {
    pub fn new(graph: Graph, terminals: Vec<usize>) -> Self {
        RootedGadget { graph, terminals, names: BTreeMap::new() }
    }

    fn named(graph: Graph, terminals: Vec<usize>, names: &[(&str, usize)]) -> Self {
        let names = names.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        RootedGadget { graph, terminals, names }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    fn expect_terminals(&self, want: usize) -> Result<(), GadgetError> {
        if self.terminals.len() != want {
            return Err(GadgetError::WrongTerminalCount { want, got: self.terminals.len() });
        }
        Ok(())
    }
}

/// Replaces edge occurrence `e` of `g` by a fresh copy of the two-terminal
/// gadget `h`: the edge is removed and `h`'s terminals are identified with
/// its endpoints, the first terminal with the lower-indexed endpoint.
/// Returns the new graph and the map from `h`'s vertices into it.
pub fn replace_edge(
    g: &Graph,
    e: usize,
    h: &RootedGadget,
) -> Result<(Graph, Vec<usize>), GadgetError> {
    h.expect_terminals(2)?;
    let &(v1, v2) = g.edges().get(e).ok_or(GraphError::NoSuchEdge(e))?;
    let m = h.vertex_count();
    let mut map = vec![usize::MAX; m];
    map[h.terminals[0]] = v1;
    map[h.terminals[1]] = v2;
    let mut next = g.vertex_count();
    for w in 0..m {
        if map[w] == usize::MAX {
            map[w] = next;
            next += 1;
        }
    }
    let mut out = Graph::new(g.vertex_count() + m - 2);
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if i != e {
            out.push_edge(a, b)?;
        }
    }
    for &(a, b) in h.graph.edges() {
        out.push_edge(map[a], map[b])?;
    }
    Ok((out, map))
}

/// Replaces a degree-3 vertex `v` of `g` by a fresh copy of the
/// three-terminal gadget `u`: `v` is removed and terminal `u_i` is joined
/// to the i-th neighbor of `v` in increasing vertex order (parallel
/// neighbors listed with multiplicity). Returns the new graph, the
/// relabeling of the surviving host vertices, and the map of `u`'s
/// vertices into the result.
pub fn replace_vertex(
    g: &Graph,
    v: usize,
    u: &RootedGadget,
) -> Result<(Graph, Vec<Option<usize>>, Vec<usize>), GadgetError> {
    u.expect_terminals(3)?;
    if v >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange { v, n: g.vertex_count() }.into());
    }
    let mut nbrs: Vec<usize> = Vec::new();
    for &(a, b) in g.edges() {
        if a == v {
            nbrs.push(b);
        } else if b == v {
            nbrs.push(a);
        }
    }
    if nbrs.len() != 3 {
        return Err(GadgetError::NotDegreeThree(v, nbrs.len()));
    }
    nbrs.sort_unstable();

    let mut host_map = vec![None; g.vertex_count()];
    let mut next = 0usize;
    for w in 0..g.vertex_count() {
        if w != v {
            host_map[w] = Some(next);
            next += 1;
        }
    }
    let gadget_map: Vec<usize> = (0..u.vertex_count()).map(|w| next + w).collect();
    let mut out = Graph::new(next + u.vertex_count());
    for &(a, b) in g.edges() {
        if let (Some(a2), Some(b2)) = (host_map[a], host_map[b]) {
            out.push_edge(a2, b2)?;
        }
    }
    for &(a, b) in u.graph.edges() {
        out.push_edge(gadget_map[a], gadget_map[b])?;
    }
    for (i, &w) in nbrs.iter().enumerate() {
        out.push_edge(gadget_map[u.terminals[i]], host_map[w].unwrap())?;
    }
    Ok((out, host_map, gadget_map))
}

/// Lays out two disjoint copies of `h` (the second at offset `v(h)`) and
/// returns `(graph, x1, x2, y1, y2)` where `x*`/`y*` are the copies'
/// terminal images.
fn doubled(h: &RootedGadget, extra: usize) -> Result<(Graph, usize, usize, usize, usize), GadgetError> {
    h.expect_terminals(2)?;
    let m = h.vertex_count();
    let mut g = Graph::new(2 * m + extra);
    for &(a, b) in h.graph.edges() {
        g.push_edge(a, b)?;
    }
    for &(a, b) in h.graph.edges() {
        g.push_edge(m + a, m + b)?;
    }
    let (t0, t1) = (h.terminals[0], h.terminals[1]);
    Ok((g, t0, t1, m + t0, m + t1))
}

/// Doubling with one subdivided cross edge: two copies of `h` joined by
/// `x1y1` (subdivided by the single new terminal `z1`) and `x2y2`.
pub fn op_t1(h: &RootedGadget) -> Result<RootedGadget, GadgetError> {
    let (mut g, x1, x2, y1, y2) = doubled(h, 1)?;
    let z1 = 2 * h.vertex_count();
    g.push_edge(x1, z1)?;
    g.push_edge(z1, y1)?;
    g.push_edge(x2, y2)?;
    Ok(RootedGadget::named(g, vec![z1], &[("z1", z1)]))
}

/// Doubling with both cross edges subdivided; terminals are the two
/// subdivision vertices.
pub fn op_t2(h: &RootedGadget) -> Result<RootedGadget, GadgetError> {
    let (mut g, x1, x2, y1, y2) = doubled(h, 2)?;
    let z1 = 2 * h.vertex_count();
    let z2 = z1 + 1;
    g.push_edge(x1, z1)?;
    g.push_edge(z1, y1)?;
    g.push_edge(x2, z2)?;
    g.push_edge(z2, y2)?;
    Ok(RootedGadget::named(g, vec![z1, z2], &[("z1", z1), ("z2", z2)]))
}

/// The two-terminal composition: `op_t2` output plus the edge `z1z2`, with
/// `x1z1` and `y1z1` subdivided by the new terminals `x` and `y`.
pub fn op_f2(h: &RootedGadget) -> Result<RootedGadget, GadgetError> {
    let (mut g, x1, x2, y1, y2) = doubled(h, 4)?;
    let z1 = 2 * h.vertex_count();
    let (z2, x, y) = (z1 + 1, z1 + 2, z1 + 3);
    g.push_edge(x1, x)?;
    g.push_edge(x, z1)?;
    g.push_edge(y1, y)?;
    g.push_edge(y, z1)?;
    g.push_edge(x2, z2)?;
    g.push_edge(z2, y2)?;
    g.push_edge(z1, z2)?;
    Ok(RootedGadget::named(g, vec![x, y], &[("z1", z1), ("z2", z2), ("x", x), ("y", y)]))
}

/// The three-terminal composition: `op_f2` with `z1z2` subdivided by `z`.
pub fn op_f3(h: &RootedGadget) -> Result<RootedGadget, GadgetError> {
    let (mut g, x1, x2, y1, y2) = doubled(h, 5)?;
    let z1 = 2 * h.vertex_count();
    let (z2, x, y, z) = (z1 + 1, z1 + 2, z1 + 3, z1 + 4);
    g.push_edge(x1, x)?;
    g.push_edge(x, z1)?;
    g.push_edge(y1, y)?;
    g.push_edge(y, z1)?;
    g.push_edge(x2, z2)?;
    g.push_edge(z2, y2)?;
    g.push_edge(z1, z)?;
    g.push_edge(z, z2)?;
    Ok(RootedGadget::named(
        g,
        vec![x, y, z],
        &[("z1", z1), ("z2", z2), ("x", x), ("y", y), ("z", z)],
    ))
}

/// K_{3,3} with parts {0,1,2} and {3,4,5}.
pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 3..6 {
            edges.push((i, j));
        }
    }
    Graph::from_edges(6, &edges).unwrap()
}

/// A: K_{3,3} with the edges 0-3 and 0-4 subdivided by a1, a2.
pub fn gadget_a() -> RootedGadget {
    let g = k33();
    let (g, a1) = g.subdivide_edge(g.find_edge(0, 3).unwrap()).unwrap();
    let (g, a2) = g.subdivide_edge(g.find_edge(0, 4).unwrap()).unwrap();
    RootedGadget::named(g, vec![a1, a2], &[("a1", a1), ("a2", a2)])
}

/// B: K_{3,3} with all three edges at vertex 0 subdivided by b1, b2, b3.
pub fn gadget_b() -> RootedGadget {
    let g = k33();
    let (g, b1) = g.subdivide_edge(g.find_edge(0, 3).unwrap()).unwrap();
    let (g, b2) = g.subdivide_edge(g.find_edge(0, 4).unwrap()).unwrap();
    let (g, b3) = g.subdivide_edge(g.find_edge(0, 5).unwrap()).unwrap();
    RootedGadget::named(g, vec![b1, b2, b3], &[("b1", b1), ("b2", b2), ("b3", b3)])
}

pub fn gadget_s() -> RootedGadget {
    let mut s = op_t1(&gadget_a()).unwrap();
    s.names.insert("s".into(), s.terminals[0]);
    s
}

pub fn gadget_t() -> RootedGadget {
    let mut t = op_t2(&gadget_a()).unwrap();
    let (z1, z2) = (t.terminals[0], t.terminals[1]);
    t.names.insert("t1".into(), z1);
    t.names.insert("t2".into(), z2);
    t
}

pub fn gadget_p() -> RootedGadget {
    let mut p = op_f2(&gadget_a()).unwrap();
    let (x, y) = (p.terminals[0], p.terminals[1]);
    p.names.insert("p1".into(), x);
    p.names.insert("p2".into(), y);
    p
}

pub fn gadget_q() -> RootedGadget {
    let mut q = op_f3(&gadget_a()).unwrap();
    for (i, name) in ["q1", "q2", "q3"].iter().enumerate() {
        q.names.insert(name.to_string(), q.terminals[i]);
    }
    q
}

/// P': P with pendant vertices attached to both terminals; the pendants
/// are the new terminals.
pub fn gadget_p_prime() -> RootedGadget {
    let p = gadget_p();
    let m = p.vertex_count();
    let (p1, p2) = (p.terminals[0], p.terminals[1]);
    let mut g = Graph::new(m + 2);
    for &(a, b) in p.graph.edges() {
        g.push_edge(a, b).unwrap();
    }
    g.push_edge(p1, m).unwrap();
    g.push_edge(p2, m + 1).unwrap();
    RootedGadget::named(g, vec![m, m + 1], &[("p'1", m), ("p'2", m + 1)])
}

/// W: the square (t1 s1 t2 s2) with the path (s1 p1 p2 s2) attached; the
/// terminals are its four degree-two vertices t1, t2, p1, p2.
pub fn gadget_w() -> RootedGadget {
    // 0 = t1, 1 = s1, 2 = t2, 3 = s2, 4 = p1, 5 = p2
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 3)]).unwrap();
    RootedGadget::named(
        g,
        vec![0, 2, 4, 5],
        &[("t1", 0), ("s1", 1), ("t2", 2), ("s2", 3), ("p1", 4), ("p2", 5)],
    )
}

/// P^i: P^1 = P, P^{i+1} = op_f2(P^i). v(P^i) = 3*2^{i+2} - 4.
pub fn gadget_p_i(i: usize) -> Result<RootedGadget, GadgetError> {
    if i < 1 {
        return Err(GadgetError::IndexOutOfRange);
    }
    let mut p = gadget_p();
    for _ in 1..i {
        p = op_f2(&p)?;
    }
    Ok(p)
}

/// Q^i: the three-terminal sibling of P^i, built by applying `op_f3` where
/// P^i applies `op_f2` (so Q^1 = Q and v(Q^i) = v(P^i) + 1).
pub fn gadget_q_i(i: usize) -> Result<RootedGadget, GadgetError> {
    if i < 1 {
        return Err(GadgetError::IndexOutOfRange);
    }
    if i == 1 {
        Ok(gadget_q())
    } else {
        Ok(op_f3(&gadget_p_i(i - 1)?)?)
    }
}

/// Named catalog lookup: A, B, S, T, P, Q, P', W.
pub fn gadget_catalog(name: &str) -> Result<RootedGadget, GadgetError> {
    match name {
        "A" => Ok(gadget_a()),
        "B" => Ok(gadget_b()),
        "S" => Ok(gadget_s()),
        "T" => Ok(gadget_t()),
        "P" => Ok(gadget_p()),
        "Q" => Ok(gadget_q()),
        "P'" | "Pprime" => Ok(gadget_p_prime()),
        "W" => Ok(gadget_w()),
        other => Err(GadgetError::UnknownName(other.to_string())),
    }
}
