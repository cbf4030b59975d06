//! Undirected multigraph on dense integer vertex ids.
//!
//! Vertices are `0..n`. Edges are an ordered list of unordered pairs;
//! parallel edges are allowed, self-loops are not. Edge *occurrences* are
//! addressed by their index into the edge list so that parallel copies can
//! be manipulated individually. All editing operations return new values.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("no such edge: occurrence index {0} out of range")]
    NoSuchEdge(usize),
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop {0}-{0} not allowed")]
    SelfLoop(usize),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),
}

/// Undirected multigraph. Immutable from the caller's perspective:
/// editing operations produce new graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    /// Internal mutating append; public constructors and ops funnel through here.
    pub(crate) fn push_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge occurrences in list order, endpoints normalized `u <= v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Adjacency lists with multiplicity, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.contains(&key)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = self.edges.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Collapses parallel edges; vertex set unchanged.
    pub fn simplified(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        Graph { n: self.n, edges }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    /// Replaces edge occurrence `e` by a path of length two through a fresh
    /// vertex, whose id is the old vertex count. Returns the new graph and
    /// the id of the subdivision vertex.
    pub fn subdivide_edge(&self, e: usize) -> Result<(Graph, usize), GraphError> {
        let &(u, v) = self.edges.get(e).ok_or(GraphError::NoSuchEdge(e))?;
        let z = self.n;
        let mut g = Graph { n: self.n + 1, edges: self.edges.clone() };
        g.edges.remove(e);
        g.edges.push((u, z));
        g.edges.push((v, z));
        Ok((g, z))
    }

    /// Induced subgraph on the complement of `s`. Surviving vertices are
    /// relabeled `0..n-|s|` in increasing original order; the returned map
    /// sends each original id to its new id (`None` for deleted vertices).
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        s.check_bounds(self.n)?;
        let mut map = vec![None; self.n];
        let mut next = 0usize;
        for v in 0..self.n {
            if !s.contains(v) {
                map[v] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for &(a, b) in &self.edges {
            if let (Some(a2), Some(b2)) = (map[a], map[b]) {
                g.edges.push((a2.min(b2), a2.max(b2)));
            }
        }
        Ok((g, map))
    }

    /// Occurrence index of some copy of edge `{u,v}`, if present.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }
}

/// An explicit subset of the vertices of some graph: sorted, duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet { members: Vec::new() }
    }

    pub fn new(mut members: Vec<usize>) -> Result<Self, GraphError> {
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        Ok(VertexSet { members })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn check_bounds(&self, n: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    /// Panics on duplicates; intended for literal sets in construction code.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect()).expect("duplicate vertex in literal set")
    }
}
