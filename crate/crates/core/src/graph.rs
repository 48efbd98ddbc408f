//! Simple undirected graphs with dense vertex indexing.
//!
//! Vertices are `0..n`. Adjacency is stored as sorted neighbor lists, which
//! keeps iteration deterministic and makes edge membership a binary search.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Index of a vertex in a graph with dense labeling `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge ({0}, {0}) not allowed")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("parameter {value} out of range for family {family}: {reason}")]
    ParameterOutOfRange {
        family: &'static str,
        value: usize,
        reason: &'static str,
    },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}

/// Finite simple undirected graph.
///
/// Invariants: no loops, no parallel edges, neighbor lists strictly
/// increasing, adjacency symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, w) in edges {
            if u >= n {
                return Err(GraphError::IndexOutOfRange { index: u, n });
            }
            if w >= n {
                return Err(GraphError::IndexOutOfRange { index: w, n });
            }
            if u == w {
                return Err(GraphError::LoopEdge(u));
            }
            adjacency[u].push(w);
            adjacency[w].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        for (u, list) in adjacency.iter().enumerate() {
            if let Some(pair) = list.windows(2).find(|p| p[0] == p[1]) {
                let w = pair[0];
                return Err(GraphError::DuplicateEdge(u.min(w), u.max(w)));
            }
        }
        Ok(Graph {
            n,
            adjacency,
            edge_count: edges.len(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in strictly increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&w).is_ok()
    }

    /// All edges as pairs `(u, w)` with `u < w`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &w in &self.adjacency[u] {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// True iff every vertex is reachable from vertex 0. Graphs with at most
    /// one vertex are connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Vertex pairs `(i, j)` with `i < j` in colexicographic order:
/// `(0,1), (0,2), (1,2), (0,3), ...`. This is the bit order used by both the
/// graph6 codec and the exhaustive enumerator.
pub(crate) fn upper_triangle_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Parameterized graph families with fixed vertex labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    /// Path on `n >= 1` vertices, edges `(i, i+1)`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Star `K_{1,m}` with `m >= 1` leaves; the center is vertex 0.
    Star(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Tree on `n + 1` vertices (`n >= 4`): a central path on `n - 3`
    /// vertices with two pendant leaves attached to each end of the path.
    /// `TildeD(4)` coincides with `Star(4)`.
    TildeD(usize),
}

/// Constructs a member of a named family.
pub fn make_family(family: NamedFamily) -> Result<Graph, GraphError> {
    match family {
        NamedFamily::Path(n) => {
            if n < 1 {
                return Err(GraphError::ParameterOutOfRange {
                    family: "Path",
                    value: n,
                    reason: "need at least 1 vertex",
                });
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedFamily::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::ParameterOutOfRange {
                    family: "Cycle",
                    value: n,
                    reason: "need at least 3 vertices",
                });
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedFamily::Star(m) => {
            if m < 1 {
                return Err(GraphError::ParameterOutOfRange {
                    family: "Star",
                    value: m,
                    reason: "need at least 1 leaf",
                });
            }
            let edges: Vec<_> = (1..=m).map(|leaf| (0, leaf)).collect();
            Graph::from_edges(m + 1, &edges)
        }
        NamedFamily::Complete(n) => {
            if n < 1 {
                return Err(GraphError::ParameterOutOfRange {
                    family: "Complete",
                    value: n,
                    reason: "need at least 1 vertex",
                });
            }
            Graph::from_edges(n, &upper_triangle_pairs(n))
        }
        NamedFamily::TildeD(n) => {
            if n < 4 {
                return Err(GraphError::ParameterOutOfRange {
                    family: "TildeD",
                    value: n,
                    reason: "need parameter at least 4",
                });
            }
            // Central path 0..p, leaves p..p+2 on vertex 0 and p+2..p+4 on
            // vertex p-1. For p = 1 all four leaves land on vertex 0.
            let p = n - 3;
            let mut edges: Vec<_> = (0..p - 1).map(|i| (i, i + 1)).collect();
            edges.push((0, p));
            edges.push((0, p + 1));
            edges.push((p - 1, p + 2));
            edges.push((p - 1, p + 3));
            Graph::from_edges(n + 1, &edges)
        }
    }
}
