//! Graph rewrites that interact with the spectral radius: internal-path
//! edge subdivision, vertex splitting (adjacent and non-adjacent), and
//! expansion of a vertex into a clique.
//!
//! Index mapping is deterministic throughout: the rewritten vertex keeps
//! its index and new vertices are appended, so outputs are diffable.

use crate::graph::{Graph, VertexId};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("vertex {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("edge ({0}, {1}) does not lie on an internal path")]
    NotInternalPathEdge(usize, usize),
    #[error("vertex {v} has degree {degree}, need at least {required}")]
    DegreeTooSmall {
        v: usize,
        degree: usize,
        required: usize,
    },
    #[error("bad neighbor partition: {0}")]
    BadPartition(String),
    #[error("partition {index} has {size} vertices, need at least {required}")]
    PartitionTooSmall {
        index: usize,
        size: usize,
        required: usize,
    },
    #[error("graph is not connected")]
    NotConnected,
}

/// A maximal path whose interior vertices all have degree exactly 2 and
/// whose two end vertices have degree greater than 2. The two ends may be
/// the same vertex (a cycle hanging off one branch vertex); the stored
/// sequence then starts and ends with it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct InternalPath {
    pub vertices: Vec<usize>,
}

impl InternalPath {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().expect("nonempty"))
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Edges along the path as normalized `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }
}

/// All internal paths of `g`, each reported once in canonical orientation:
/// smaller endpoint first, and for coinciding endpoints the direction whose
/// first interior vertex is smaller. Sorted lexicographically.
pub fn find_internal_paths(g: &Graph) -> Vec<InternalPath> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for u in 0..g.vertex_count() {
        if g.degree(u) <= 2 {
            continue;
        }
        for &first in g.neighbors(u) {
            let mut seq = vec![u, first];
            // Degree-2 vertices have exactly one way forward, so the walk
            // cannot revisit an interior vertex; it ends at the first
            // vertex of degree other than 2.
            loop {
                let last = seq[seq.len() - 1];
                if g.degree(last) != 2 {
                    break;
                }
                let prev = seq[seq.len() - 2];
                let nbrs = g.neighbors(last);
                seq.push(if nbrs[0] == prev { nbrs[1] } else { nbrs[0] });
            }
            if g.degree(seq[seq.len() - 1]) <= 2 {
                continue; // ran into a leaf: a pendant path, not internal
            }
            found.insert(orient(seq));
        }
    }
    found
        .into_iter()
        .map(|vertices| InternalPath { vertices })
        .collect()
}

fn orient(seq: Vec<usize>) -> Vec<usize> {
    let last = seq.len() - 1;
    let flip = if seq[0] != seq[last] {
        seq[0] > seq[last]
    } else {
        seq[1] > seq[last - 1]
    };
    if flip {
        let mut rev = seq;
        rev.reverse();
        rev
    } else {
        seq
    }
}

/// Replaces edge `(u, w)` with a path `u - x - w` through the new vertex
/// `x` of index n. The edge must lie on an internal path.
pub fn subdivide_edge(g: &Graph, u: VertexId, w: VertexId) -> Result<Graph, TransformError> {
    let n = g.vertex_count();
    let (u, w) = (u.0, w.0);
    for idx in [u, w] {
        if idx >= n {
            return Err(TransformError::VertexOutOfRange { index: idx, n });
        }
    }
    let key = (u.min(w), u.max(w));
    if !g.has_edge(u, w) {
        return Err(TransformError::NoSuchEdge(key.0, key.1));
    }
    if !find_internal_paths(g)
        .iter()
        .any(|p| p.edges().contains(&key))
    {
        return Err(TransformError::NotInternalPathEdge(key.0, key.1));
    }

    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != key).collect();
    edges.push((u, n));
    edges.push((w, n));
    Ok(Graph::from_edges(n + 1, &edges).expect("subdivision preserves validity"))
}

/// A vertex together with a two-part split of its neighborhood.
#[derive(Debug, Clone)]
pub struct SplitSpec {
    pub v: VertexId,
    pub x_side: Vec<usize>,
    pub y_side: Vec<usize>,
}

/// Splits `v` into adjacent vertices `v1` (keeping index v, adjacent to the
/// x side) and `v2` (new index n, adjacent to the y side), joined by an
/// edge. Requires degree at least 4 and both sides of size at least 2.
pub fn split_vertex_adjacent(g: &Graph, spec: &SplitSpec) -> Result<Graph, TransformError> {
    validate_split(g, spec, 4, 2)?;
    Ok(build_split(g, spec, true))
}

/// Splits `v` into non-adjacent vertices; any nontrivial bipartition of a
/// degree-2-or-more vertex is allowed. The result may be disconnected.
pub fn split_vertex_nonadjacent(g: &Graph, spec: &SplitSpec) -> Result<Graph, TransformError> {
    validate_split(g, spec, 2, 1)?;
    Ok(build_split(g, spec, false))
}

pub(crate) fn validate_split(
    g: &Graph,
    spec: &SplitSpec,
    required_degree: usize,
    min_side: usize,
) -> Result<(), TransformError> {
    let n = g.vertex_count();
    let v = spec.v.0;
    if v >= n {
        return Err(TransformError::VertexOutOfRange { index: v, n });
    }
    let degree = g.degree(v);
    if degree < required_degree {
        return Err(TransformError::DegreeTooSmall {
            v,
            degree,
            required: required_degree,
        });
    }
    check_partition(g, v, &[&spec.x_side, &spec.y_side])?;
    for (side, name) in [(&spec.x_side, "x"), (&spec.y_side, "y")] {
        if side.len() < min_side {
            return Err(TransformError::BadPartition(format!(
                "{name} side has {} vertices, need at least {min_side}",
                side.len()
            )));
        }
    }
    Ok(())
}

/// Parts must be disjoint and cover the neighborhood of `v` exactly.
fn check_partition(g: &Graph, v: usize, parts: &[&Vec<usize>]) -> Result<(), TransformError> {
    let mut seen = vec![false; g.vertex_count()];
    let mut covered = 0usize;
    for part in parts {
        for &u in *part {
            if u >= g.vertex_count() || !g.has_edge(v, u) {
                return Err(TransformError::BadPartition(format!(
                    "vertex {u} is not a neighbor of {v}"
                )));
            }
            if seen[u] {
                return Err(TransformError::BadPartition(format!(
                    "neighbor {u} listed twice"
                )));
            }
            seen[u] = true;
            covered += 1;
        }
    }
    if covered != g.degree(v) {
        return Err(TransformError::BadPartition(format!(
            "parts cover {covered} of {} neighbors of {v}",
            g.degree(v)
        )));
    }
    Ok(())
}

fn build_split(g: &Graph, spec: &SplitSpec, adjacent: bool) -> Graph {
    let n = g.vertex_count();
    let v = spec.v.0;
    let mut to_y = vec![false; n];
    for &u in &spec.y_side {
        to_y[u] = true;
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count() + 1);
    for (a, b) in g.edges() {
        if a != v && b != v {
            edges.push((a, b));
        } else {
            let other = if a == v { b } else { a };
            edges.push(if to_y[other] { (other, n) } else { (v, other) });
        }
    }
    if adjacent {
        edges.push((v, n));
    }
    Graph::from_edges(n + 1, &edges).expect("split preserves validity")
}

/// A vertex together with a partition of its neighborhood into k parts,
/// for expansion into a k-clique.
#[derive(Debug, Clone)]
pub struct ExpandSpec {
    pub v: VertexId,
    pub partitions: Vec<Vec<usize>>,
}

/// Replaces `v` by a k-clique `v_1..v_k` (v_1 keeps index v, the rest are
/// appended), attaching part `W_i` to `v_i`. Requires `d(v) >= k^2` and
/// every part of size at least k.
pub fn expand_to_complete(g: &Graph, spec: &ExpandSpec) -> Result<Graph, TransformError> {
    let n = g.vertex_count();
    let v = spec.v.0;
    let k = spec.partitions.len();
    if v >= n {
        return Err(TransformError::VertexOutOfRange { index: v, n });
    }
    if k < 2 {
        return Err(TransformError::BadPartition(format!(
            "need at least 2 parts, got {k}"
        )));
    }
    let degree = g.degree(v);
    if degree < k * k {
        return Err(TransformError::DegreeTooSmall {
            v,
            degree,
            required: k * k,
        });
    }
    let part_refs: Vec<&Vec<usize>> = spec.partitions.iter().collect();
    check_partition(g, v, &part_refs)?;
    for (index, part) in spec.partitions.iter().enumerate() {
        if part.len() < k {
            return Err(TransformError::PartitionTooSmall {
                index,
                size: part.len(),
                required: k,
            });
        }
    }

    // Clique vertex for part i: index v for i = 0, then n, n+1, ...
    let clique = |i: usize| if i == 0 { v } else { n + i - 1 };
    let mut owner = vec![usize::MAX; n];
    for (i, part) in spec.partitions.iter().enumerate() {
        for &u in part {
            owner[u] = clique(i);
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (a, b) in g.edges() {
        if a != v && b != v {
            edges.push((a, b));
        } else {
            let other = if a == v { b } else { a };
            edges.push((other, owner[other]));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            edges.push((clique(i), clique(j)));
        }
    }
    Ok(Graph::from_edges(n + k - 1, &edges).expect("expansion preserves validity"))
}
