//! Isomorphism testing and canonical forms for small graphs.
//!
//! Both operations are exhaustive searches with pruning; they refuse inputs
//! beyond their size caps instead of ever returning a wrong answer.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cap for [`are_isomorphic`]: backtracking over vertex maps.
pub const ISO_MAX_VERTICES: usize = 16;
/// Cap for [`canonical_form`]: minimization over all vertex orders.
pub const CANON_MAX_VERTICES: usize = 8;

/// An explicit isomorphism: vertex v of the first graph maps to
/// `mapping[v]` in the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    mapping: Vec<usize>,
}

impl IsoWitness {
    pub fn new(mapping: Vec<usize>) -> Self {
        IsoWitness { mapping }
    }

    pub fn identity(n: usize) -> Self {
        IsoWitness {
            mapping: (0..n).collect(),
        }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.mapping[v]
    }

    /// Full recheck: the map is a bijection and preserves adjacency in both
    /// directions (u ~ v iff map(u) ~ map(v), over all pairs).
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.n();
        if h.n() != n || self.mapping.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &img in &self.mapping {
            if img >= n || seen[img] {
                return false;
            }
            seen[img] = true;
        }
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) != h.has_edge(self.mapping[u], self.mapping[v]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.mapping.len()];
        for (v, &img) in self.mapping.iter().enumerate() {
            inv[img] = v;
        }
        IsoWitness { mapping: inv }
    }
}

/// Per-vertex invariant used for pruning: degree plus the sorted multiset of
/// neighbor degrees.
fn vertex_keys(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Searches for an isomorphism between `g` and `h` by backtracking with
/// degree and neighbor-degree-multiset pruning. Any witness found is fully
/// rechecked before being returned.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<IsoWitness>> {
    let n = g.n();
    if n > ISO_MAX_VERTICES || h.n() > ISO_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "isomorphism search capped at {ISO_MAX_VERTICES} vertices, got {} and {}",
            n,
            h.n()
        )));
    }
    if h.n() != n || h.edge_count() != g.edge_count() {
        return Ok(None);
    }
    let gk = vertex_keys(g);
    let hk = vertex_keys(h);
    let mut gs = gk.clone();
    let mut hs = hk.clone();
    gs.sort();
    hs.sort();
    if gs != hs {
        return Ok(None);
    }

    // For each g-vertex, the h-vertices with the same invariant.
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| hk[w] == gk[v]).collect())
        .collect();

    // Assign the most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), std::cmp::Reverse(g.degree(v)), v));

    let g_adj = g.adjacency_bitsets();
    let h_adj = h.adjacency_bitsets();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn search(
        depth: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        g_adj: &[u64],
        h_adj: &[u64],
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for &w in &candidates[v] {
            if used[w] {
                continue;
            }
            for &u in &order[..depth] {
                let adj_g = g_adj[v] >> u & 1;
                let adj_h = h_adj[w] >> mapping[u] & 1;
                if adj_g != adj_h {
                    continue 'cand;
                }
            }
            mapping[v] = w;
            used[w] = true;
            if search(depth + 1, order, candidates, g_adj, h_adj, mapping, used) {
                return true;
            }
            used[w] = false;
            mapping[v] = usize::MAX;
        }
        false
    }

    if search(
        0,
        &order,
        &candidates,
        &g_adj,
        &h_adj,
        &mut mapping,
        &mut used,
    ) {
        let witness = IsoWitness::new(mapping);
        if !witness.verify(g, h) {
            return Err(Error::InvariantViolation(
                "isomorphism search produced an invalid witness".into(),
            ));
        }
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// Canonical form as the lexicographically smallest upper-triangle bit packing
/// over all vertex orders, returned as (n, packed bits). Bit order follows the
/// graph6 convention: column j contributes bits (0,j), (1,j), ..., (j-1,j).
pub(crate) fn canonical_bits(g: &Graph) -> Result<(usize, u32)> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "canonical form capped at {CANON_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if n < 2 {
        return Ok((n, 0));
    }
    let adj = g.adjacency_bitsets();
    let total_bits = n * (n - 1) / 2;

    // DFS over partial vertex orders; `perm[i]` is the old vertex placed at
    // position i. Bits are appended MSB-first so prefix comparison is
    // lexicographic comparison of the final packed value.
    struct State {
        best: u32,
        have_best: bool,
    }
    fn place(
        depth: usize,
        n: usize,
        total_bits: usize,
        bits_so_far: u32,
        len_so_far: usize,
        tight: bool,
        adj: &[u64],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        st: &mut State,
    ) {
        if depth == n {
            if !st.have_best || bits_so_far < st.best {
                st.best = bits_so_far;
                st.have_best = true;
            }
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let mut seg = 0u32;
            for &u in perm.iter() {
                seg = seg << 1 | (adj[v] >> u & 1) as u32;
            }
            let new_len = len_so_far + depth;
            let new_bits = bits_so_far << depth | seg;
            let mut new_tight = tight;
            if st.have_best && tight {
                let best_prefix = st.best >> (total_bits - new_len);
                if new_bits > best_prefix {
                    continue;
                }
                if new_bits < best_prefix {
                    new_tight = false;
                }
            }
            used[v] = true;
            perm.push(v);
            place(
                depth + 1,
                n,
                total_bits,
                new_bits,
                new_len,
                new_tight,
                adj,
                perm,
                used,
                st,
            );
            perm.pop();
            used[v] = false;
        }
    }

    let mut st = State {
        best: 0,
        have_best: false,
    };
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    place(
        0,
        n,
        total_bits,
        0,
        0,
        true,
        &adj,
        &mut perm,
        &mut used,
        &mut st,
    );
    Ok((n, st.best))
}

/// Canonical form rendered as a string `"n:bits"`. Equal strings iff the
/// graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let (n, bits) = canonical_bits(g)?;
    let len = n * (n - 1) / 2;
    let mut s = String::with_capacity(len + 4);
    s.push_str(&n.to_string());
    s.push(':');
    for i in (0..len).rev() {
        s.push(if bits >> i & 1 == 1 { '1' } else { '0' });
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;
    use std::collections::HashSet;

    #[test]
    fn c4_is_k22() {
        let c4 = family::cycle(4).unwrap();
        let k22 = family::complete_bipartite(2, 2).unwrap();
        let w = are_isomorphic(&c4, &k22).unwrap().expect("isomorphic");
        assert!(w.verify(&c4, &k22));
    }

    #[test]
    fn p4_is_not_claw() {
        let p4 = family::path(4).unwrap();
        let claw = family::star(3).unwrap();
        assert!(are_isomorphic(&p4, &claw).unwrap().is_none());
    }

    #[test]
    fn same_degree_sequence_not_isomorphic() {
        // C_6 vs two triangles: both 2-regular on 6 vertices.
        let c6 = family::cycle(6).unwrap();
        let two_k3 = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(are_isomorphic(&c6, &two_k3).unwrap().is_none());
    }

    #[test]
    fn size_cap_is_an_error() {
        let big = family::path(17).unwrap();
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::TooLarge(_))
        ));
        let big9 = family::path(9).unwrap();
        assert!(matches!(canonical_form(&big9), Err(Error::TooLarge(_))));
    }

    #[test]
    fn canonical_separates_and_joins() {
        let c4 = family::cycle(4).unwrap();
        let k22 = family::complete_bipartite(2, 2).unwrap();
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&k22).unwrap());
        let p3 = family::path(3).unwrap();
        let k3 = family::complete(3).unwrap();
        assert_ne!(canonical_form(&p3).unwrap(), canonical_form(&k3).unwrap());
    }

    #[test]
    fn canonical_invariant_under_permutation() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 3)]).unwrap();
        let base = canonical_form(&g).unwrap();
        let perms = [
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 4, 1, 5, 3],
            vec![1, 3, 5, 0, 2, 4],
        ];
        for p in perms {
            assert_eq!(canonical_form(&g.permuted(&p)).unwrap(), base);
        }
    }

    #[test]
    fn four_vertex_graphs_have_eleven_classes() {
        // Exhaustive enumeration of all 2^6 edge sets on 4 vertices.
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut forms = HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            forms.insert(canonical_form(&Graph::new(4, &edges).unwrap()).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }
}
