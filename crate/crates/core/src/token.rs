//! Construction of token graphs F_k(G) and the move-order generalizations
//! F_{k,r}(G) and F'_{k,r}(G).
//!
//! Vertices of the derived graph are k-subsets of V(G) indexed by colex rank.
//! In the standard graph two configurations are adjacent when their symmetric
//! difference is an edge of G; the generalizations connect configurations at
//! symmetric-difference 2r when A\B and B\A carry a perfect matching
//! (F_{k,r}) or all possible edges (F'_{k,r}).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::IsoWitness;
use crate::subset::{binomial, rank_colex, unrank_colex, KSubset, Ksubsets};

/// Hard cap on derived vertex count.
pub const TOKEN_VERTEX_CAP: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantMode {
    Standard,
    Matching,
    Complete,
}

/// Normalized variant tag. `r = 1` always normalizes to `Standard`, since
/// both generalized adjacency rules degenerate to the token-slide rule there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariantSpec {
    mode: VariantMode,
    r: usize,
}

impl VariantSpec {
    pub fn standard() -> Self {
        VariantSpec {
            mode: VariantMode::Standard,
            r: 1,
        }
    }

    pub fn new(mode: VariantMode, r: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidParameter("move order r must be >= 1".into()));
        }
        if mode == VariantMode::Standard && r != 1 {
            return Err(Error::InvalidParameter(
                "standard variant requires r = 1".into(),
            ));
        }
        Ok(if r == 1 {
            VariantSpec::standard()
        } else {
            VariantSpec { mode, r }
        })
    }

    pub fn mode(&self) -> VariantMode {
        self.mode
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

/// A materialized token graph: the base graph, the token count, the variant
/// tag, and the derived graph indexed by colex rank.
#[derive(Clone, Debug)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    variant: VariantSpec,
    derived: Graph,
}

impl TokenGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn variant(&self) -> VariantSpec {
        self.variant
    }

    pub fn derived(&self) -> &Graph {
        &self.derived
    }

    /// The configuration at a derived vertex index.
    pub fn config(&self, rank: usize) -> KSubset {
        unrank_colex(rank as u64, self.base.n(), self.k).expect("rank in range")
    }

    pub fn rank(&self, config: KSubset) -> Result<usize> {
        config.check(self.base.n(), self.k)?;
        Ok(rank_colex(config) as usize)
    }

    pub fn configs(&self) -> Ksubsets {
        masks_allowing_empty(self.base.n(), self.k)
    }

    pub fn are_adjacent(&self, a: KSubset, b: KSubset) -> Result<bool> {
        Ok(self.derived.has_edge(self.rank(a)?, self.rank(b)?))
    }
}

/// Like `enumerate_ksubsets` but yielding the single empty subset for k = 0,
/// which the fixed-token view needs when every token is pinned.
pub(crate) fn masks_allowing_empty(n: usize, k: usize) -> Ksubsets {
    if k == 0 {
        Ksubsets::empty_singleton()
    } else {
        crate::subset::enumerate_ksubsets(n, k).expect("checked by caller")
    }
}

fn check_build_params(g: &Graph, k: usize, allow_zero: bool) -> Result<u64> {
    let n = g.n();
    if k == 0 && !allow_zero {
        return Err(Error::InvalidParameter("token count k must be >= 1".into()));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!(
            "need k < n (n >= k+1), got k = {k}, n = {n}"
        )));
    }
    if n > crate::subset::MAX_GROUND_SET {
        return Err(Error::TooLarge(format!(
            "base graph with {n} vertices exceeds cap {}",
            crate::subset::MAX_GROUND_SET
        )));
    }
    let vertices = binomial(n, k);
    if vertices > TOKEN_VERTEX_CAP {
        return Err(Error::Capacity(format!(
            "C({n},{k}) = {vertices} derived vertices exceeds cap {TOKEN_VERTEX_CAP}"
        )));
    }
    Ok(vertices)
}

/// Expected derived counts from the counting formulas:
/// `C(n,k)` vertices and `C(n-2,k-1) * |E(G)|` edges.
pub fn expected_counts(g: &Graph, k: usize) -> Result<(u64, u64)> {
    let n = g.n();
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k < n, got k = {k}, n = {n}"
        )));
    }
    let vertices = binomial(n, k);
    let edges = binomial(n - 2, k - 1)
        .checked_mul(g.edge_count() as u64)
        .ok_or_else(|| Error::Capacity("edge-count formula overflows u64".into()))?;
    Ok((vertices, edges))
}

pub(crate) fn build_token_graph_allow_zero(g: &Graph, k: usize) -> Result<TokenGraph> {
    let vertices = check_build_params(g, k, true)? as usize;
    let n = g.n();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); vertices];

    if k >= 1 {
        // Charge each derived edge to the unique base edge ab it moves along:
        // for every choice of the k-1 shared tokens among the other n-2
        // vertices, configurations S+a and S+b are adjacent. This emits each
        // derived edge exactly once.
        for (a, b) in g.edges() {
            let rest: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            for shared in masks_allowing_empty(n - 2, k - 1) {
                let mut s = 0u64;
                let mut bits = shared.bits();
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    s |= 1 << rest[i];
                    bits &= bits - 1;
                }
                let ra = rank_colex(KSubset::from_bits(s | 1 << a)) as u32;
                let rb = rank_colex(KSubset::from_bits(s | 1 << b)) as u32;
                adj[ra as usize].push(rb);
                adj[rb as usize].push(ra);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        debug_assert!(list.windows(2).all(|w| w[0] != w[1]));
    }
    Ok(TokenGraph {
        base: g.clone(),
        k,
        variant: VariantSpec::standard(),
        derived: Graph::from_sorted_adj(adj),
    })
}

/// Builds F_k(G): configurations adjacent iff one token slides along one edge.
pub fn build_token_graph(g: &Graph, k: usize) -> Result<TokenGraph> {
    build_token_graph_allow_zero(g, k)
}

/// Is there a perfect matching between `left` and `right` (equal-size vertex
/// sets) using edges of `g`? Plain augmenting-path matching; the sets have at
/// most k vertices each.
fn has_perfect_matching(g_adj: &[u64], left: &[usize], right: &[usize]) -> bool {
    let r = left.len();
    debug_assert_eq!(r, right.len());
    let mut match_of_right = vec![usize::MAX; r];

    fn augment(
        li: usize,
        g_adj: &[u64],
        left: &[usize],
        right: &[usize],
        visited: &mut [bool],
        match_of_right: &mut [usize],
    ) -> bool {
        for (ri, &rv) in right.iter().enumerate() {
            if visited[ri] || g_adj[left[li]] >> rv & 1 == 0 {
                continue;
            }
            visited[ri] = true;
            if match_of_right[ri] == usize::MAX
                || augment(
                    match_of_right[ri],
                    g_adj,
                    left,
                    right,
                    visited,
                    match_of_right,
                )
            {
                match_of_right[ri] = li;
                return true;
            }
        }
        false
    }

    for li in 0..r {
        let mut visited = vec![false; r];
        if !augment(li, g_adj, left, right, &mut visited, &mut match_of_right) {
            return false;
        }
    }
    true
}

fn all_edges_present(g_adj: &[u64], left: &[usize], right: &[usize]) -> bool {
    left.iter()
        .all(|&u| right.iter().all(|&v| g_adj[u] >> v & 1 == 1))
}

/// Builds F_{k,r}(G) (`Matching` mode) or F'_{k,r}(G) (`Complete` mode):
/// A ~ B iff |A △ B| = 2r and the mode's condition holds between A\B and B\A.
/// With r = 1 both rules coincide with the standard adjacency.
pub fn build_variant_token_graph(
    g: &Graph,
    k: usize,
    mode: VariantMode,
    r: usize,
) -> Result<TokenGraph> {
    if mode == VariantMode::Standard {
        if r != 1 {
            return Err(Error::InvalidParameter(
                "standard variant requires r = 1".into(),
            ));
        }
        return build_token_graph(g, k);
    }
    if r < 1 || r > k {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= r <= k, got r = {r}, k = {k}"
        )));
    }
    let vertices = check_build_params(g, k, false)? as usize;
    let n = g.n();
    let g_adj = g.adjacency_bitsets();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); vertices];

    for (ra, a) in masks_allowing_empty(n, k).enumerate() {
        let a_elems = a.elems();
        let comp_elems = a.complement(n).elems();
        for drop in masks_allowing_empty(k, r) {
            let removed: Vec<usize> = drop.elems().iter().map(|&i| a_elems[i]).collect();
            for add in masks_allowing_empty(n - k, r) {
                let added: Vec<usize> = add.elems().iter().map(|&i| comp_elems[i]).collect();
                let mut b = a;
                for &v in &removed {
                    b = b.remove(v);
                }
                for &v in &added {
                    b = b.insert(v);
                }
                let rb = rank_colex(b) as usize;
                if rb <= ra {
                    continue;
                }
                let adjacent = match mode {
                    VariantMode::Matching => has_perfect_matching(&g_adj, &removed, &added),
                    VariantMode::Complete => all_edges_present(&g_adj, &removed, &added),
                    VariantMode::Standard => unreachable!(),
                };
                if adjacent {
                    adj[ra].push(rb as u32);
                    adj[rb].push(ra as u32);
                }
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(TokenGraph {
        base: g.clone(),
        k,
        variant: VariantSpec::new(mode, r)?,
        derived: Graph::from_sorted_adj(adj),
    })
}

/// Degree of configuration `a`, computed from the derived adjacency list and
/// from the cut formula (edges between A and V\A); the two must agree.
pub fn token_degree(tg: &TokenGraph, a: KSubset) -> Result<usize> {
    if tg.variant().mode() != VariantMode::Standard {
        return Err(Error::Precondition(
            "token_degree applies to the standard variant".into(),
        ));
    }
    let rank = tg.rank(a)?;
    let from_adjacency = tg.derived().degree(rank);
    let g_adj = tg.base().adjacency_bitsets();
    let from_cut: usize = a
        .elems()
        .iter()
        .map(|&u| (g_adj[u] & !a.bits()).count_ones() as usize)
        .sum();
    if from_adjacency != from_cut {
        return Err(Error::InvariantViolation(format!(
            "degree mismatch at {a:?}: adjacency {from_adjacency}, cut {from_cut}"
        )));
    }
    Ok(from_adjacency)
}

fn check_mapped_edges(from: &Graph, to: &Graph, map: impl Fn(usize) -> usize) -> bool {
    from.edges().iter().all(|&(u, v)| to.has_edge(map(u), map(v)))
}

/// Verifies that `w` is a bijection preserving edges in both directions.
pub(crate) fn verify_witness_edges(g1: &Graph, g2: &Graph, w: &IsoWitness) -> Result<()> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Err(Error::InvariantViolation(
            "witness endpoints have mismatched sizes".into(),
        ));
    }
    let mut seen = vec![false; g1.n()];
    for v in 0..g1.n() {
        let img = w.apply(v);
        if img >= g2.n() || seen[img] {
            return Err(Error::InvariantViolation("witness is not a bijection".into()));
        }
        seen[img] = true;
    }
    let inv = w.inverse();
    if !check_mapped_edges(g1, g2, |v| w.apply(v))
        || !check_mapped_edges(g2, g1, |v| inv.apply(v))
    {
        return Err(Error::InvariantViolation(
            "witness does not preserve edges".into(),
        ));
    }
    Ok(())
}

/// The complement bijection A -> V(G)\A between F_k(G) and F_{n-k}(G),
/// returned together with the freshly built target graph. The witness is
/// rechecked edge-preserving in both directions before returning.
pub fn complement_bijection(tg: &TokenGraph) -> Result<(TokenGraph, IsoWitness)> {
    if tg.variant().mode() != VariantMode::Standard {
        return Err(Error::Precondition(
            "complement bijection applies to the standard variant".into(),
        ));
    }
    let n = tg.base().n();
    let k = tg.k();
    let co = build_token_graph_allow_zero(tg.base(), n - k)?;
    let mapping: Vec<usize> = tg
        .configs()
        .map(|a| rank_colex(a.complement(n)) as usize)
        .collect();
    let witness = IsoWitness::new(mapping);
    verify_witness_edges(tg.derived(), co.derived(), &witness)?;
    Ok((co, witness))
}

/// The fixed-token view: the subgraph of F_k(G) induced by configurations
/// containing X, together with a verified isomorphism onto F_{k-|X|}(G-X).
#[derive(Clone, Debug)]
pub struct FixedTokenSubgraph {
    /// Induced subgraph, vertices reindexed by increasing original rank.
    pub subgraph: Graph,
    /// Original derived rank of each subgraph vertex.
    pub config_ranks: Vec<usize>,
    /// F_{k-|X|}(G-X); a single configuration when every token is pinned.
    pub reduced: TokenGraph,
    /// Old label of each vertex of G-X.
    pub reduced_vertex_map: Vec<usize>,
    /// subgraph vertex -> reduced derived rank.
    pub witness: IsoWitness,
}

pub fn fixed_token_subgraph(tg: &TokenGraph, x: &[usize]) -> Result<FixedTokenSubgraph> {
    if tg.variant().mode() != VariantMode::Standard {
        return Err(Error::Precondition(
            "fixed-token view applies to the standard variant".into(),
        ));
    }
    let n = tg.base().n();
    let k = tg.k();
    let mut fixed = KSubset::from_bits(0);
    for &v in x {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, n });
        }
        fixed = fixed.insert(v);
    }
    let r = fixed.k();
    if r > k {
        return Err(Error::Precondition(format!(
            "cannot fix {r} tokens when k = {k}"
        )));
    }

    let keep: Vec<usize> = tg
        .configs()
        .enumerate()
        .filter(|(_, a)| fixed.is_subset_of(*a))
        .map(|(rank, _)| rank)
        .collect();
    let (subgraph, config_ranks) = tg.derived().induced_subgraph(&keep)?;

    let (reduced_base, reduced_vertex_map) = tg.base().delete_vertices(&fixed.elems())?;
    let reduced = build_token_graph_allow_zero(&reduced_base, k - r)?;

    // Old vertex label -> label in G-X.
    let mut relabel = vec![usize::MAX; n];
    for (new, &old) in reduced_vertex_map.iter().enumerate() {
        relabel[old] = new;
    }
    let mapping: Vec<usize> = config_ranks
        .iter()
        .map(|&rank| {
            let mut bits = 0u64;
            for v in tg.config(rank).symmetric_difference(fixed).elems() {
                bits |= 1 << relabel[v];
            }
            rank_colex(KSubset::from_bits(bits)) as usize
        })
        .collect();
    let witness = IsoWitness::new(mapping);
    verify_witness_edges(&subgraph, reduced.derived(), &witness)?;

    Ok(FixedTokenSubgraph {
        subgraph,
        config_ranks,
        reduced,
        reduced_vertex_map,
        witness,
    })
}

impl Ksubsets {
    pub(crate) fn empty_singleton() -> Ksubsets {
        Ksubsets::raw(0, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;
    use crate::iso::are_isomorphic;

    /// Independent oracle: adjacency by scanning all configuration pairs and
    /// applying the definition directly.
    fn brute_force_edges(g: &Graph, k: usize) -> Vec<(usize, usize)> {
        let subsets: Vec<KSubset> = masks_allowing_empty(g.n(), k).collect();
        let mut edges = Vec::new();
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                let d = subsets[i].symmetric_difference(subsets[j]);
                if d.k() == 2 {
                    let e = d.elems();
                    if g.has_edge(e[0], e[1]) {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges
    }

    #[test]
    fn p7_counts_match_figure_and_formula() {
        let p7 = family::path(7).unwrap();
        let tg = build_token_graph(&p7, 2).unwrap();
        assert_eq!(tg.derived().n(), 21);
        assert_eq!(tg.derived().edge_count(), 30);
        assert_eq!(expected_counts(&p7, 2).unwrap(), (21, 30));
        assert_eq!(brute_force_edges(&p7, 2), tg.derived().edges());
    }

    #[test]
    fn one_token_graph_is_the_base_graph() {
        for g in [
            family::cycle(5).unwrap(),
            family::star(4).unwrap(),
            Graph::new(4, &[(0, 2), (1, 3), (2, 3)]).unwrap(),
        ] {
            let tg = build_token_graph(&g, 1).unwrap();
            // rank({v}) = v, so the derived graph is G under the identity.
            assert_eq!(tg.derived().edges(), g.edges());
        }
    }

    #[test]
    fn k4_two_tokens_is_the_octahedron() {
        let k4 = family::complete(4).unwrap();
        let tg = build_token_graph(&k4, 2).unwrap();
        assert_eq!(tg.derived().n(), 6);
        assert_eq!(tg.derived().edge_count(), 12);
        assert!((0..6).all(|v| tg.derived().degree(v) == 4));
        assert_eq!(brute_force_edges(&k4, 2), tg.derived().edges());
    }

    #[test]
    fn construction_matches_oracle_on_small_corpus() {
        let graphs = [
            family::path(5).unwrap(),
            family::cycle(6).unwrap(),
            family::complete_bipartite(2, 3).unwrap(),
            Graph::new(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap(),
        ];
        for g in &graphs {
            for k in 1..g.n() {
                let tg = build_token_graph(g, k).unwrap();
                assert_eq!(tg.derived().edges(), brute_force_edges(g, k));
                let (v, e) = expected_counts(g, k).unwrap();
                assert_eq!(tg.derived().n() as u64, v);
                assert_eq!(tg.derived().edge_count() as u64, e);
            }
        }
    }

    #[test]
    fn build_rejects_bad_k() {
        let p3 = family::path(3).unwrap();
        assert!(build_token_graph(&p3, 0).is_err());
        assert!(build_token_graph(&p3, 3).is_err());
    }

    fn petersen() -> Graph {
        // Outer 5-cycle, inner pentagram, spokes.
        Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn kneser_5_2_is_petersen_in_both_modes() {
        let k5 = family::complete(5).unwrap();
        for mode in [VariantMode::Matching, VariantMode::Complete] {
            let tg = build_variant_token_graph(&k5, 2, mode, 2).unwrap();
            assert_eq!(tg.derived().n(), 10);
            assert!((0..10).all(|v| tg.derived().degree(v) == 3));
            let w = are_isomorphic(tg.derived(), &petersen()).unwrap();
            assert!(w.is_some());
        }
    }

    #[test]
    fn r1_variants_equal_standard() {
        let graphs = [
            family::path(6).unwrap(),
            family::cycle(5).unwrap(),
            Graph::new(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]).unwrap(),
        ];
        for g in &graphs {
            for k in 1..g.n() {
                let std = build_token_graph(g, k).unwrap();
                for mode in [VariantMode::Matching, VariantMode::Complete] {
                    let var = build_variant_token_graph(g, k, mode, 1).unwrap();
                    assert_eq!(var.derived().edges(), std.derived().edges());
                    assert_eq!(var.variant(), VariantSpec::standard());
                }
            }
        }
    }

    #[test]
    fn matching_mode_checks_real_matchings() {
        // P_4: A = {0,1}, B = {2,3}. The only cross edge is 1-2, so no
        // perfect matching and the pair stays non-adjacent.
        let p4 = family::path(4).unwrap();
        let tg = build_variant_token_graph(&p4, 2, VariantMode::Matching, 2).unwrap();
        let a = KSubset::from_elems(&[0, 1]);
        let b = KSubset::from_elems(&[2, 3]);
        assert!(!tg.are_adjacent(a, b).unwrap());

        // C_4: A = {0,1}, B = {2,3} has the matching 0-3, 1-2.
        let c4 = family::cycle(4).unwrap();
        let tg = build_variant_token_graph(&c4, 2, VariantMode::Matching, 2).unwrap();
        assert!(tg.are_adjacent(a, b).unwrap());
        // Complete mode needs all four cross edges; C_4 only has two.
        let tgc = build_variant_token_graph(&c4, 2, VariantMode::Complete, 2).unwrap();
        assert!(!tgc.are_adjacent(a, b).unwrap());
    }

    #[test]
    fn complete_mode_implies_matching_mode() {
        let g = Graph::new(6, &[(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (0, 1)]).unwrap();
        for k in 2..5 {
            for r in 2..=k.min(3) {
                let m = build_variant_token_graph(&g, k, VariantMode::Matching, r).unwrap();
                let c = build_variant_token_graph(&g, k, VariantMode::Complete, r).unwrap();
                for (u, v) in c.derived().edges() {
                    assert!(m.derived().has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        let k4 = family::complete(4).unwrap();
        let tg = build_token_graph(&k4, 2).unwrap();
        for a in tg.configs() {
            assert_eq!(token_degree(&tg, a).unwrap(), 4);
        }

        let p7 = family::path(7).unwrap();
        let tg = build_token_graph(&p7, 2).unwrap();
        assert_eq!(
            token_degree(&tg, KSubset::from_elems(&[0, 1])).unwrap(),
            1
        );

        // Star with center 0: a configuration holding the center has degree
        // n - k (center to each unoccupied leaf).
        let star = family::star(5).unwrap();
        let n = star.n();
        for k in 2..4 {
            let tg = build_token_graph(&star, k).unwrap();
            let a = KSubset::from_elems(&(0..k).collect::<Vec<_>>());
            assert_eq!(token_degree(&tg, a).unwrap(), n - k);
        }
    }

    #[test]
    fn complement_bijection_examples() {
        let p7 = family::path(7).unwrap();
        let tg = build_token_graph(&p7, 2).unwrap();
        let (co, w) = complement_bijection(&tg).unwrap();
        assert_eq!(co.k(), 5);
        assert!(w.verify(tg.derived(), co.derived()));

        // Self-complementary index: n = 6, k = 3 gives an automorphism.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let tg = build_token_graph(&g, 3).unwrap();
        let (co, w) = complement_bijection(&tg).unwrap();
        assert_eq!(co.derived().edges(), tg.derived().edges());
        assert!(w.verify(tg.derived(), tg.derived()));

        // J(5,2) = J(5,3).
        let k5 = family::complete(5).unwrap();
        let tg = build_token_graph(&k5, 2).unwrap();
        let (co, w) = complement_bijection(&tg).unwrap();
        assert!(w.verify(tg.derived(), co.derived()));
    }

    #[test]
    fn fixed_token_views() {
        let p7 = family::path(7).unwrap();
        let tg = build_token_graph(&p7, 2).unwrap();

        // No pinned tokens: identity onto F_k(G).
        let view = fixed_token_subgraph(&tg, &[]).unwrap();
        assert_eq!(view.subgraph.edges(), tg.derived().edges());
        assert_eq!(view.witness.mapping(), &(0..21).collect::<Vec<_>>()[..]);

        // Pinning k-1 tokens leaves a copy of G - X.
        let view = fixed_token_subgraph(&tg, &[3]).unwrap();
        assert_eq!(view.reduced.k(), 1);
        assert_eq!(view.subgraph.n(), 6);
        assert!(view.witness.verify(&view.subgraph, view.reduced.derived()));

        // Pinning vertex 0 of P_7 leaves F_1(P_6) = P_6.
        let view = fixed_token_subgraph(&tg, &[0]).unwrap();
        let p6 = family::path(6).unwrap();
        assert!(are_isomorphic(&view.subgraph, &p6).unwrap().is_some());

        // Pinning all tokens leaves the single configuration X.
        let view = fixed_token_subgraph(&tg, &[2, 5]).unwrap();
        assert_eq!(view.subgraph.n(), 1);
        assert_eq!(view.reduced.derived().n(), 1);

        assert!(fixed_token_subgraph(&tg, &[0, 1, 2]).is_err());
    }

    #[test]
    fn capacity_cap_reported() {
        let g = family::complete(40).unwrap();
        assert!(matches!(
            build_token_graph(&g, 20),
            Err(Error::Capacity(_))
        ));
    }
}
