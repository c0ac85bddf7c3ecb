//! Undirected simple graphs over dense integer vertex indices, plus the named
//! families used throughout the library.

use crate::error::{Error, Result};

/// An immutable undirected simple graph. Neighbor lists are sorted, so
/// iteration order is deterministic everywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { index: w, n });
                }
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            n,
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// Builds from pre-sorted, deduplicated neighbor lists. Used by the token
    /// graph constructor, which emits each edge exactly once.
    pub(crate) fn from_sorted_adj(adj: Vec<Vec<u32>>) -> Graph {
        let n = adj.len();
        let degree_sum: usize = adj.iter().map(Vec::len).sum();
        debug_assert!(adj
            .iter()
            .all(|l| l.windows(2).all(|w| w[0] < w[1]) && l.iter().all(|&v| (v as usize) < n)));
        Graph {
            n,
            adj,
            edge_count: degree_sum / 2,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&u| u as usize)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges as ordered pairs (u < v), in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Neighbor sets as one bitmask per vertex; requires n <= 64.
    pub fn adjacency_bitsets(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                rows[u] |= 1 << v;
            }
        }
        rows
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.edge_count == self.n * (self.n - 1) / 2
    }

    /// Subgraph induced by `keep`, with vertices remapped to `0..keep.len()`.
    /// Returns the graph together with the old index of each new vertex.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut old: Vec<usize> = keep.to_vec();
        old.sort_unstable();
        old.dedup();
        for &v in &old {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { index: v, n: self.n });
            }
        }
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &old {
            for u in self.neighbors(v) {
                if u > v && new_index[u] != usize::MAX {
                    edges.push((new_index[v], new_index[u]));
                }
            }
        }
        Ok((Graph::new(old.len(), &edges)?, old))
    }

    /// Graph with the vertices of `remove` deleted; remaining vertices are
    /// remapped order-preservingly.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let keep: Vec<usize> = (0..self.n).filter(|v| !remove.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Cartesian product; vertex (g, h) gets index `g * other.n() + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nh = other.n;
        let mut edges = Vec::with_capacity(self.n * other.edge_count + nh * self.edge_count);
        for g in 0..self.n {
            for (h, h2) in other.edges() {
                edges.push((g * nh + h, g * nh + h2));
            }
        }
        for (g, g2) in self.edges() {
            for h in 0..nh {
                edges.push((g * nh + h, g2 * nh + h));
            }
        }
        Graph::new(self.n * nh, &edges).expect("product edges are in range")
    }

    /// Relabels the graph by `perm`, where vertex v of `self` becomes
    /// `perm[v]` in the result.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges).expect("permutation preserves range")
    }

    /// Internal consistency check: symmetry, irreflexivity, cached count.
    pub fn check_invariants(&self) -> Result<()> {
        let mut degree_sum = 0;
        for u in 0..self.n {
            for &v in &self.adj[u] {
                let v = v as usize;
                if v == u {
                    return Err(Error::InvariantViolation(format!("loop at {u}")));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::InvariantViolation(format!(
                        "asymmetric edge ({u},{v})"
                    )));
                }
            }
            degree_sum += self.adj[u].len();
        }
        if degree_sum != 2 * self.edge_count {
            return Err(Error::InvariantViolation(
                "cached edge count out of sync".into(),
            ));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edge_count, self.edges())
    }
}

/// Named graph families.
pub mod family {
    use super::*;

    /// P_n, vertices in path order.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParameter("path needs n >= 1".into()));
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges)
    }

    /// C_n, vertices in cycle order.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    /// K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidParameter("complete needs n >= 1".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges)
    }

    /// K_{m1,m2}; the first class is `0..m1`.
    pub fn complete_bipartite(m1: usize, m2: usize) -> Result<Graph> {
        if m1 < 1 || m2 < 1 {
            return Err(Error::InvalidParameter(
                "complete bipartite needs both classes nonempty".into(),
            ));
        }
        let mut edges = Vec::new();
        for u in 0..m1 {
            for v in 0..m2 {
                edges.push((u, m1 + v));
            }
        }
        Graph::new(m1 + m2, &edges)
    }

    /// Star with `leaves` leaves; the center is vertex 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        if leaves < 1 {
            return Err(Error::InvalidParameter("star needs >= 1 leaf".into()));
        }
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges)
    }

    /// The tree with diameter `delta` whose k-token graph attains diameter
    /// `delta * k`: a spine path on `delta - 1` vertices (indices
    /// `0..delta-1`), plus `k` leaves on each spine endpoint. Leaves of the
    /// left endpoint come first.
    pub fn diameter_tree(delta: usize, k: usize) -> Result<Graph> {
        if delta < 2 || k < 1 {
            return Err(Error::InvalidParameter(
                "diameter tree needs delta >= 2 and k >= 1".into(),
            ));
        }
        let spine = delta - 1;
        let mut edges: Vec<_> = (0..spine - 1).map(|i| (i, i + 1)).collect();
        for i in 0..k {
            edges.push((0, spine + i));
        }
        for i in 0..k {
            edges.push((spine - 1, spine + k + i));
        }
        Graph::new(spine + 2 * k, &edges)
    }
}
