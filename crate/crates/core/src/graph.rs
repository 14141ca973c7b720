//! Simple undirected graphs on contiguous 0-based vertex ids with bit-row
//! adjacency, plus degeneracy / co-degeneracy machinery.

use crate::bits::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge #{index} ({u}, {v}): vertex id out of range (n = {n})")]
    VertexOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("edge #{index}: self-loop at vertex {v}")]
    SelfLoop { index: usize, v: usize },
}

/// Undirected simple graph; `rows[v]` is the neighbor bitset of `v`.
/// Symmetry and irreflexivity are maintained by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected with the offending pair index.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, v });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Inserts edge `uv`; `u != v` is the caller's responsibility.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v, "self-loops are not representable");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement graph: edge `uv` iff `u != v` and `uv` is not an edge here.
    /// Materialized row by row with word-level flips.
    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.rows[v].clone();
            row.invert();
            row.remove(v);
            rows.push(row);
        }
        Graph { n: self.n, rows }
    }

    /// Induced subgraph on `verts` (must be strictly ascending and in range);
    /// vertex `verts[i]` becomes new id `i`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let m = verts.len();
        let mut g = Graph::new(m);
        for i in 0..m {
            for j in (i + 1)..m {
                if self.has_edge(verts[i], verts[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edge_count(),
            self.edges()
        )
    }
}

/// Degeneracy together with a witnessing elimination ordering: at each
/// position, the vertex has at most `k` neighbors later in `ordering`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyResult {
    pub k: usize,
    pub ordering: Vec<usize>,
}

impl DegeneracyResult {
    /// Largest forward-degree along the ordering; equals `k` for a valid
    /// witness of minimality.
    pub fn max_forward_degree(&self, g: &Graph) -> usize {
        let mut position = vec![0usize; g.n()];
        for (i, &v) in self.ordering.iter().enumerate() {
            position[v] = i;
        }
        let mut worst = 0;
        for (i, &v) in self.ordering.iter().enumerate() {
            let fwd = g.neighbors(v).filter(|&u| position[u] > i).count();
            worst = worst.max(fwd);
        }
        worst
    }
}

/// Degeneracy by repeated minimum-degree removal through a bucket queue.
/// Ties break to the smallest vertex id, so the ordering is deterministic.
pub fn degeneracy(g: &Graph) -> DegeneracyResult {
    let n = g.n();
    if n == 0 {
        return DegeneracyResult {
            k: 0,
            ordering: vec![],
        };
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut k = 0;
    let mut cur = 0;
    for _ in 0..n {
        while buckets[cur].is_empty() {
            cur += 1;
        }
        let v = *buckets[cur].iter().next().expect("nonempty bucket");
        buckets[cur].remove(&v);
        removed[v] = true;
        k = k.max(cur);
        ordering.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                buckets[deg[u]].remove(&u);
                deg[u] -= 1;
                buckets[deg[u]].insert(u);
            }
        }
        // A neighbor's degree may have dropped below the current level.
        cur = cur.saturating_sub(1);
    }
    DegeneracyResult { k, ordering }
}

/// Degeneracy of the complement graph (the complement is materialized; the
/// dense regime is the target).
pub fn co_degeneracy(g: &Graph) -> DegeneracyResult {
    degeneracy(&g.complement())
}
