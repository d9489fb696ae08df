//! Undirected simple graphs, complements and blow-ups.

use std::collections::BTreeSet;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("blow-up order must be at least 1")]
    ZeroOrder,
}

/// An undirected simple graph on the vertices `0..n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`. The degree
/// sequence is kept in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges, in either
    /// orientation, collapse to one.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut degrees = vec![0; n];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Self { n, edges, degrees }
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The cycle `C_n`; for `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let closing = (n >= 3).then_some((0, n - 1));
        Self::new(n, (1..n).map(|v| (v - 1, v)).chain(closing))
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner
    /// pentagram on `5..10`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("valid edge list")
    }

    /// Erdős–Rényi `G(n, p)`: each of the `n(n-1)/2` pairs is an edge
    /// independently with probability `p`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = BTreeSet::new();
        for v in 1..n {
            for u in 0..v {
                if rng.random_bool(p) {
                    edges.insert((u, v));
                }
            }
        }
        Ok(Self::from_edge_set(n, edges))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// The complement: same vertex set, `{u, v}` is an edge iff it is not
    /// one here.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !self.edges.contains(e))
            .collect();
        Self::from_edge_set(n, edges)
    }

    /// The blow-up `G^(t)`.
    ///
    /// Vertices are numbered copy-major: copy `k` of vertex `v` is
    /// `k * n + v`. Copies `k*n + u` and `l*n + v` are adjacent iff `{u, v}`
    /// is an edge, for every pair of copies `k, l` (including `k == l`).
    pub fn blow_up(&self, params: BlowUpParams) -> Graph {
        let (n, t) = (self.n, params.t());
        let mut edges = BTreeSet::new();
        for &(u, v) in &self.edges {
            for k in 0..t {
                for l in 0..t {
                    let (a, b) = (k * n + u, l * n + v);
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
        Self::from_edge_set(n * t, edges)
    }
}

/// Order `t >= 1` of a blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlowUpParams {
    t: usize,
}

impl BlowUpParams {
    pub fn new(t: usize) -> Result<Self, GraphError> {
        if t == 0 {
            return Err(GraphError::ZeroOrder);
        }
        Ok(Self { t })
    }

    pub fn t(self) -> usize {
        self.t
    }
}
