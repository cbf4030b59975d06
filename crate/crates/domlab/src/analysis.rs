//! Structural predicates: cubicity, bridges, vertex connectivity, cyclic
//! 4-edge-connectivity, Hamiltonicity.

use crate::graph::Graph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("operation requires a cubic graph")]
    NotCubic,
    #[error("operation requires a connected graph")]
    NotConnected,
    #[error("cyclic connectivity check requires at least 8 vertices, graph has {0}")]
    TooSmall(usize),
}

pub fn is_cubic(g: &Graph) -> bool {
    g.vertex_count() > 0 && g.degrees().iter().all(|&d| d == 3)
}

/// Cut edges, via lowpoint depth-first search over edge occurrences.
/// A parallel pair is never a bridge.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    // adjacency with occurrence ids so the parent edge (one specific copy)
    // can be skipped while its parallel twin still provides a back edge
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut time = 0usize;
    // iterative DFS: (vertex, parent edge occurrence, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, pedge, ref mut idx)) = stack.last_mut() {
            if *idx < adj[u].len() {
                let (w, eid) = adj[u][*idx];
                *idx += 1;
                if eid == pedge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, eid, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        out.push((p.min(u), p.max(u)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Standard vertex connectivity of the underlying simple graph: 0 when
/// disconnected or trivial, n-1 for complete graphs, otherwise the minimum
/// over non-adjacent pairs of a unit-capacity vertex-split maximum flow.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let g = g.simplified();
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let adj = g.adjacency();
    let complete = (0..n).all(|v| adj[v].len() == n - 1);
    if complete {
        return n - 1;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(vertex_disjoint_paths(&adj, n, s, t, best));
        }
    }
    best
}

/// Max number of internally vertex-disjoint s-t paths, capped at `cap`
/// (augmentation stops once `cap` is reached).
fn vertex_disjoint_paths(adj: &[Vec<usize>], n: usize, s: usize, t: usize, cap: usize) -> usize {
    // split: node v -> in = 2v, out = 2v+1; arc in->out capacity 1
    // (unbounded for s and t); edge {u,v} -> u_out->v_in, v_out->u_in
    let nodes = 2 * n;
    let mut cap_mat = vec![0u8; nodes * nodes];
    for v in 0..n {
        cap_mat[(2 * v) * nodes + 2 * v + 1] = if v == s || v == t { 4 } else { 1 };
    }
    for u in 0..n {
        for &v in &adj[u] {
            cap_mat[(2 * u + 1) * nodes + 2 * v] = 1;
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0usize;
    while flow < cap {
        // BFS for an augmenting path
        let mut prev = vec![usize::MAX; nodes];
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if u == dst {
                break;
            }
            for v in 0..nodes {
                if prev[v] == usize::MAX && cap_mat[u * nodes + v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[dst] == usize::MAX {
            break;
        }
        let mut v = dst;
        while v != src {
            let u = prev[v];
            cap_mat[u * nodes + v] -= 1;
            cap_mat[v * nodes + u] += 1;
            v = u;
        }
        flow += 1;
    }
    flow
}

/// Witness for a failed cyclic 4-edge-connectivity check: an edge cut of
/// size at most three whose removal leaves at least two components that
/// each contain a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicCutWitness {
    pub cut: Vec<(usize, usize)>,
}

/// True iff no edge cut of size <= 3 separates two subgraphs that each
/// contain a cycle. Exhaustive enumeration of edge subsets of size <= 3.
pub fn is_cyclically_4_edge_connected(
    g: &Graph,
) -> Result<(bool, Option<CyclicCutWitness>), AnalysisError> {
    if !is_cubic(g) {
        return Err(AnalysisError::NotCubic);
    }
    if !g.is_connected() {
        return Err(AnalysisError::NotConnected);
    }
    if g.vertex_count() < 8 {
        return Err(AnalysisError::TooSmall(g.vertex_count()));
    }
    let m = g.edge_count();
    let mut subset: Vec<usize> = Vec::with_capacity(3);
    fn try_cut(g: &Graph, subset: &[usize]) -> bool {
        let n = g.vertex_count();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            if !subset.contains(&i) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        // components; count those with a cycle (|edges| >= |vertices|)
        let mut seen = vec![false; n];
        let mut cyclic = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let (mut vs, mut deg_sum) = (0usize, 0usize);
            while let Some(u) = stack.pop() {
                vs += 1;
                deg_sum += adj[u].len();
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if deg_sum / 2 >= vs {
                cyclic += 1;
            }
        }
        cyclic >= 2
    }
    // enumerate subsets of size 1..=3
    for a in 0..m {
        subset.clear();
        subset.push(a);
        if try_cut(g, &subset) {
            return Ok((false, Some(witness(g, &subset))));
        }
        for b in a + 1..m {
            subset.truncate(1);
            subset.push(b);
            if try_cut(g, &subset) {
                return Ok((false, Some(witness(g, &subset))));
            }
            for c in b + 1..m {
                subset.truncate(2);
                subset.push(c);
                if try_cut(g, &subset) {
                    return Ok((false, Some(witness(g, &subset))));
                }
            }
        }
    }
    Ok((true, None))
}

fn witness(g: &Graph, subset: &[usize]) -> CyclicCutWitness {
    CyclicCutWitness { cut: subset.iter().map(|&i| g.edges()[i]).collect() }
}

/// Revalidates a cyclic-cut witness against the graph it came from.
pub fn validate_cyclic_cut(g: &Graph, w: &CyclicCutWitness) -> bool {
    if w.cut.len() > 3 {
        return false;
    }
    let mut ids = Vec::new();
    let mut used = vec![false; g.edge_count()];
    for &(a, b) in &w.cut {
        let found = g
            .edges()
            .iter()
            .enumerate()
            .position(|(i, &e)| !used[i] && e == (a.min(b), a.max(b)));
        match found {
            Some(i) => {
                used[i] = true;
                ids.push(i);
            }
            None => return false,
        }
    }
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if !ids.contains(&i) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut cyclic_components = 0;
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        let (mut vs, mut deg_sum) = (0usize, 0usize);
        while let Some(u) = stack.pop() {
            vs += 1;
            deg_sum += adj[u].len();
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if deg_sum / 2 >= vs {
            cyclic_components += 1;
        }
    }
    components >= 2 && cyclic_components >= 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonResult {
    Found(Vec<usize>),
    NotFound,
    BudgetExhausted,
}

/// Independent validity check: n distinct vertices, consecutive pairs are
/// edges, wraparound edge exists.
pub fn validate_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Backtracking Hamiltonian cycle search with degree pruning. `NotFound`
/// is exact; `BudgetExhausted` counts node expansions against the budget.
pub fn hamiltonian_cycle(g: &Graph, budget_nodes: u64) -> HamiltonResult {
    let n = g.vertex_count();
    if n < 3 {
        return HamiltonResult::NotFound;
    }
    let adj = g.simplified().adjacency();
    if adj.iter().any(|a| a.len() < 2) {
        return HamiltonResult::NotFound;
    }
    let mut path = vec![0usize];
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut nodes = 0u64;

    fn dfs(
        adj: &[Vec<usize>],
        n: usize,
        path: &mut Vec<usize>,
        visited: &mut [bool],
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        // Some(true) = found, Some(false) = exhausted subtree, None = budget
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let u = *path.last().unwrap();
        if path.len() == n {
            return Some(adj[u].contains(&0));
        }
        // prune: every unvisited vertex still needs two usable neighbors,
        // counting the path endpoints as usable
        for v in 0..n {
            if !visited[v] {
                let usable = adj[v]
                    .iter()
                    .filter(|&&w| !visited[w] || w == u || w == 0)
                    .count();
                if usable < 2 {
                    return Some(false);
                }
            }
        }
        for &w in &adj[u] {
            if !visited[w] {
                visited[w] = true;
                path.push(w);
                match dfs(adj, n, path, visited, nodes, budget) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
                path.pop();
                visited[w] = false;
            }
        }
        Some(false)
    }

    match dfs(&adj, n, &mut path, &mut visited, &mut nodes, budget_nodes) {
        Some(true) => {
            debug_assert!(validate_hamiltonian_cycle(g, &path));
            if validate_hamiltonian_cycle(g, &path) {
                HamiltonResult::Found(path)
            } else {
                HamiltonResult::NotFound
            }
        }
        Some(false) => HamiltonResult::NotFound,
        None => HamiltonResult::BudgetExhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn cubic_examples() {
        assert!(is_cubic(&k4()));
        assert!(!is_cubic(&cycle(5)));
        assert!(is_cubic(&Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()));
    }

    #[test]
    fn bridges_on_path() {
        assert_eq!(bridges(&path(4)), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(bridges(&cycle(5)).is_empty());
    }

    #[test]
    fn parallel_pair_is_not_a_bridge() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(bridges(&g), vec![(1, 2)]);
    }

    /// Naive oracle: an edge is a bridge iff removing it increases the
    /// number of connected components.
    pub fn bridges_naive(g: &Graph) -> Vec<(usize, usize)> {
        let base = g.connected_components().len();
        let mut out = Vec::new();
        for i in 0..g.edge_count() {
            let mut edges = g.edges().to_vec();
            let e = edges.remove(i);
            let h = Graph::from_edges(g.vertex_count(), &edges).unwrap();
            if h.connected_components().len() > base {
                out.push(e);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    #[test]
    fn bridges_match_naive_oracle() {
        let samples = [
            path(6),
            cycle(6),
            k4(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)])
                .unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)]).unwrap(),
        ];
        for g in &samples {
            assert_eq!(bridges(g), bridges_naive(g));
        }
    }

    /// Naive oracle for vertex connectivity: minimum size of a vertex set
    /// whose removal disconnects the simple graph (n-1 if none exists).
    pub fn kappa_naive(g: &Graph) -> usize {
        use crate::graph::VertexSet;
        let g = g.simplified();
        let n = g.vertex_count();
        if n <= 1 || !g.is_connected() {
            return 0;
        }
        fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
            fn rec(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == size {
                    out.push(cur.clone());
                    return;
                }
                for v in start..n {
                    cur.push(v);
                    rec(n, size, v + 1, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            rec(n, size, 0, &mut Vec::new(), &mut out);
            out
        }
        for size in 1..n - 1 {
            for sel in subsets(n, size) {
                let s = VertexSet::new(sel).unwrap();
                let (h, _) = g.delete_vertices(&s).unwrap();
                if h.vertex_count() > 1 && !h.is_connected() {
                    return size;
                }
            }
        }
        n - 1
    }

    #[test]
    fn kappa_matches_naive_oracle() {
        let samples = [path(5), cycle(7), k4(), Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap()];
        for g in &samples {
            assert_eq!(vertex_connectivity(g), kappa_naive(g), "graph {:?}", g);
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(vertex_connectivity(&k4()), 3);
        assert_eq!(vertex_connectivity(&cycle(6)), 2);
        assert_eq!(vertex_connectivity(&path(4)), 1);
        assert_eq!(vertex_connectivity(&Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()), 1);
    }

    #[test]
    fn hamilton_c6() {
        match hamiltonian_cycle(&cycle(6), 1_000_000) {
            HamiltonResult::Found(c) => assert!(validate_hamiltonian_cycle(&cycle(6), &c)),
            other => panic!("unexpected: {:?}", other),
        }
    }

    #[test]
    fn hamilton_negative() {
        // K4 minus a perfect matching plus a pendant has no Hamilton cycle
        let g = path(5);
        assert_eq!(hamiltonian_cycle(&g, 1_000_000), HamiltonResult::NotFound);
    }

    #[test]
    fn cyc4_rejects_non_cubic() {
        assert_eq!(
            is_cyclically_4_edge_connected(&cycle(8)).unwrap_err(),
            AnalysisError::NotCubic
        );
    }
}
