//! Co-vertex cover extraction, the 3|S|-vertex kernel, and the lift that
//! carries kernel covers back to the pre-kernel graph.

use crate::bits::VertexSet;
use crate::cover::{verify_cover, CoverViolation, CycleCover};
use crate::graph::Graph;
use std::collections::VecDeque;
use thiserror::Error;

/// Vertex set whose removal leaves a clique (a vertex cover of the
/// complement). Stored sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoVertexCover {
    verts: Vec<usize>,
}

impl CoVertexCover {
    pub fn new(mut verts: Vec<usize>) -> Self {
        verts.sort_unstable();
        verts.dedup();
        CoVertexCover { verts }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    /// True iff removing the set from `g` leaves a clique.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let rest: Vec<usize> = (0..g.n()).filter(|&v| !self.contains(v)).collect();
        rest.iter()
            .enumerate()
            .all(|(i, &u)| rest[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoVcError {
    #[error("no co-vertex cover within budget {budget}; the instance violates the assumed bound")]
    BudgetExceeded { budget: usize },
}

/// Minimum vertex cover of the complement of `g`, by iterative-deepening
/// bounded branching on complement edges (with degree-1 and dominated-vertex
/// simplifications). Errors once every cover within `budget` is refuted.
pub fn min_co_vertex_cover(g: &Graph, budget: usize) -> Result<CoVertexCover, CoVcError> {
    let h = g.complement();
    for k in 0..=budget {
        let mut picked = Vec::new();
        if vc_decide(&h, &VertexSet::full(h.n()), k, &mut picked) {
            return Ok(CoVertexCover::new(picked));
        }
    }
    Err(CoVcError::BudgetExceeded { budget })
}

/// Decides whether the subgraph of `h` induced by `alive` has a vertex cover
/// of size <= k, collecting a witness into `picked`.
fn vc_decide(h: &Graph, alive: &VertexSet, k: usize, picked: &mut Vec<usize>) -> bool {
    let mut alive = alive.clone();
    let mut k = k;
    let picked_base = picked.len();

    // Simplification loop: take forced vertices until only branching remains.
    loop {
        let mut max_deg = 0;
        let mut max_v = usize::MAX;
        let mut pendant: Option<(usize, usize)> = None;
        for v in alive.iter() {
            let mut row = h.neighbor_set(v).clone();
            row.intersect_with(&alive);
            let d = row.len();
            if d > max_deg || (d == max_deg && v < max_v) {
                max_deg = d;
                max_v = v;
            }
            if d == 1 && pendant.is_none() {
                pendant = Some((v, row.min_element().expect("degree 1")));
            }
        }
        if max_deg == 0 {
            return true; // no edges left
        }
        if k == 0 {
            picked.truncate(picked_base);
            return false;
        }
        if let Some((_, u)) = pendant {
            picked.push(u);
            alive.remove(u);
            k -= 1;
            continue;
        }
        // Dominated-vertex rule: adjacent u, v with N[v] ⊆ N[u] forces u.
        if let Some(u) = find_dominating(h, &alive) {
            picked.push(u);
            alive.remove(u);
            k -= 1;
            continue;
        }
        // Branch on an edge at a max-degree vertex: one endpoint must join.
        let u = max_v;
        let mut row = h.neighbor_set(u).clone();
        row.intersect_with(&alive);
        let v = row.min_element().expect("max_deg > 0");
        for pick in [u, v] {
            picked.push(pick);
            let mut next = alive.clone();
            next.remove(pick);
            if vc_decide(h, &next, k - 1, picked) {
                return true;
            }
            picked.truncate(picked.len() - 1);
        }
        picked.truncate(picked_base);
        return false;
    }
}

/// Smallest vertex u that dominates some live neighbor v (N[v] ⊆ N[u] within
/// the live set), if any.
fn find_dominating(h: &Graph, alive: &VertexSet) -> Option<usize> {
    for u in alive.iter() {
        let mut nu = h.neighbor_set(u).clone();
        nu.intersect_with(alive);
        if nu.is_empty() {
            continue;
        }
        let mut closed_u = nu.clone();
        closed_u.insert(u);
        for v in nu.iter() {
            let mut closed_v = h.neighbor_set(v).clone();
            closed_v.intersect_with(alive);
            closed_v.insert(v);
            if closed_v.is_subset(&closed_u) {
                return Some(u);
            }
        }
    }
    None
}

/// Matched pairs of a bipartite graph, left ids against right ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub left_size: usize,
    pub right_size: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// Maximum-cardinality bipartite matching (Hopcroft–Karp: layered BFS plus
/// DFS augmentation, O(E sqrt(V))).
pub fn max_bipartite_matching(
    left_size: usize,
    right_size: usize,
    edges: &[(usize, usize)],
) -> BipartiteMatching {
    let mut adj = vec![Vec::new(); left_size];
    for &(l, r) in edges {
        debug_assert!(l < left_size && r < right_size);
        adj[l].push(r);
    }
    const NONE: usize = usize::MAX;
    let mut match_l = vec![NONE; left_size];
    let mut match_r = vec![NONE; right_size];

    loop {
        // BFS builds layers from free left vertices.
        let mut dist = vec![NONE; left_size];
        let mut queue: VecDeque<usize> = (0..left_size).filter(|&l| match_l[l] == NONE).collect();
        for &l in &queue {
            dist[l] = 0;
        }
        let mut found_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match match_r[r] {
                    NONE => found_free_right = true,
                    l2 => {
                        if dist[l2] == NONE {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
        if !found_free_right {
            break;
        }
        fn dfs(
            l: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            match_l: &mut [usize],
            match_r: &mut [usize],
        ) -> bool {
            const NONE: usize = usize::MAX;
            let d = std::mem::replace(&mut dist[l], NONE);
            for &r in &adj[l] {
                let ok = match match_r[r] {
                    NONE => true,
                    l2 => dist[l2] == d + 1 && dfs(l2, adj, dist, match_l, match_r),
                };
                if ok {
                    match_l[l] = r;
                    match_r[r] = l;
                    return true;
                }
            }
            false
        }
        let mut advanced = false;
        for l in 0..left_size {
            if match_l[l] == NONE && dist[l] == 0 {
                advanced |= dfs(l, &adj, &mut dist, &mut match_l, &mut match_r);
            }
        }
        if !advanced {
            break;
        }
    }

    let pairs = match_l
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r != NONE)
        .map(|(l, &r)| (l, r))
        .collect();
    BipartiteMatching {
        left_size,
        right_size,
        pairs,
    }
}

/// The reduced instance together with everything needed to lift covers back:
/// id maps, the retained clique part, and the vertices dropped from it.
#[derive(Clone, Debug)]
pub struct Kernel {
    /// The reduced graph (an induced subgraph of the input).
    pub reduced: Graph,
    /// The co-vertex cover in kernel ids.
    pub s: CoVertexCover,
    /// Retained clique vertices, in kernel ids.
    pub c_prime: VertexSet,
    /// Kernel id -> original id.
    pub to_original: Vec<usize>,
    /// Original id -> kernel id, if retained.
    pub to_kernel: Vec<Option<usize>>,
    /// True when the size rule |C| <= 2|S| kept the graph unchanged.
    pub untouched: bool,
    /// Original ids of the dropped clique vertices, ascending.
    pub omitted: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelizeError {
    #[error("co-vertex cover must be nonempty")]
    EmptyCover,
    #[error("removing the cover does not leave a clique: ({u}, {v}) is a nonadjacent pair")]
    NotAClique { u: usize, v: usize },
}

/// Shrinks `g` to an induced subgraph with the same minimum cycle cover
/// size. If the clique part is already small the graph is kept; otherwise a
/// maximum matching between clique vertices and two copies of each cover
/// vertex selects which clique vertices survive.
///
/// Retention rule: when the matching saturates both copies of every cover
/// vertex, the saturated clique vertices alone suffice (the distinct
/// representatives chain into a Hamiltonian cycle on both sides, so the
/// value is 1 on both sides). Otherwise the saturated set is padded with
/// spare clique vertices up to |S| + 3: any cover of the shrunken graph
/// strands at most |S| clique vertices inside its cycles, so at least three
/// retained clique vertices stay free to close a cycle of their own —
/// padding to |S| + 1 would let exactly two stragglers remain, and two
/// vertices cannot form a cycle. The kernel thus has at most 3|S| vertices
/// in the saturated case and at most 2|S| + 3 otherwise.
pub fn kernelize(g: &Graph, s: &CoVertexCover) -> Result<Kernel, KernelizeError> {
    if s.is_empty() {
        return Err(KernelizeError::EmptyCover);
    }
    let n = g.n();
    let clique: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(KernelizeError::NotAClique { u, v });
            }
        }
    }

    if clique.len() <= 2 * s.len() {
        return Ok(Kernel {
            reduced: g.clone(),
            s: s.clone(),
            c_prime: VertexSet::from_iter(n, clique.iter().copied()),
            to_original: (0..n).collect(),
            to_kernel: (0..n).map(Some).collect(),
            untouched: true,
            omitted: vec![],
        });
    }

    // Bipartite graph: clique vertices against two representatives per cover
    // vertex; each cover edge appears towards both copies.
    let mut edges = Vec::new();
    for (ci, &c) in clique.iter().enumerate() {
        for (si, &v) in s.vertices().iter().enumerate() {
            if g.has_edge(c, v) {
                edges.push((ci, 2 * si));
                edges.push((ci, 2 * si + 1));
            }
        }
    }
    let matching = max_bipartite_matching(clique.len(), 2 * s.len(), &edges);
    let mut saturated = vec![false; clique.len()];
    for &(l, _) in &matching.pairs {
        saturated[l] = true;
    }
    let mut c_star: Vec<usize> = clique
        .iter()
        .enumerate()
        .filter(|&(ci, _)| saturated[ci])
        .map(|(_, &c)| c)
        .collect();
    let target = if c_star.len() == 2 * s.len() {
        c_star.len()
    } else {
        clique.len().min(c_star.len().max(s.len() + 3))
    };
    if target >= clique.len() {
        // Padding would retain the whole clique anyway.
        return Ok(Kernel {
            reduced: g.clone(),
            s: s.clone(),
            c_prime: VertexSet::from_iter(n, clique.iter().copied()),
            to_original: (0..n).collect(),
            to_kernel: (0..n).map(Some).collect(),
            untouched: true,
            omitted: vec![],
        });
    }
    // Pad with the smallest-id unmatched clique vertices up to the target.
    if c_star.len() < target {
        for (ci, &c) in clique.iter().enumerate() {
            if !saturated[ci] {
                c_star.push(c);
                if c_star.len() == target {
                    break;
                }
            }
        }
        c_star.sort_unstable();
    }
    let c_prime_orig = c_star;

    let mut keep: Vec<usize> = c_prime_orig.iter().chain(s.vertices()).copied().collect();
    keep.sort_unstable();
    let reduced = g.induced(&keep);
    let mut to_kernel = vec![None; n];
    for (ki, &orig) in keep.iter().enumerate() {
        to_kernel[orig] = Some(ki);
    }
    let kernel_s = CoVertexCover::new(
        s.vertices()
            .iter()
            .map(|&v| to_kernel[v].expect("kept"))
            .collect(),
    );
    let c_prime = VertexSet::from_iter(
        keep.len(),
        c_prime_orig.iter().map(|&v| to_kernel[v].expect("kept")),
    );
    let in_c_prime: std::collections::HashSet<usize> = c_prime_orig.iter().copied().collect();
    let omitted: Vec<usize> = clique
        .iter()
        .copied()
        .filter(|v| !in_c_prime.contains(v))
        .collect();

    debug_assert!(reduced.n() <= (3 * s.len()).max(2 * s.len() + 3));
    debug_assert!(c_prime.len() > s.len());
    Ok(Kernel {
        reduced,
        s: kernel_s,
        c_prime,
        to_original: keep,
        to_kernel,
        untouched: false,
        omitted,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("input cover is not a valid cover of the kernel: {0}")]
    InvalidCover(CoverViolation),
    #[error("no expandable cycle found; kernel bookkeeping is corrupt")]
    NoExpandableCycle,
    #[error("lifted cover failed verification: {0}")]
    UnsoundResult(CoverViolation),
}

/// Re-inserts the dropped clique vertices into a kernel cover: preferably by
/// splicing them into a clique-clique edge of some cycle, otherwise by
/// expanding a trivial clique-vertex cycle. Output size never exceeds the
/// input size.
pub fn lift_kernel_cover(
    g: &Graph,
    kernel: &Kernel,
    cover: &CycleCover,
) -> Result<CycleCover, LiftError> {
    verify_cover(&kernel.reduced, cover).map_err(LiftError::InvalidCover)?;
    if kernel.untouched {
        return Ok(cover.clone().canonical());
    }

    let lifted = cover.relabel(|v| kernel.to_original[v]).canonical();
    let s_orig: std::collections::HashSet<usize> = kernel
        .s
        .vertices()
        .iter()
        .map(|&v| kernel.to_original[v])
        .collect();
    let in_clique = |v: usize| !s_orig.contains(&v);
    let omitted = &kernel.omitted;
    debug_assert!(!omitted.is_empty());

    let mut cycles = lifted.cycles().to_vec();
    let spliced = 'done: {
        // Preferred: the first clique-clique edge in canonical cycle order.
        for cycle in cycles.iter_mut() {
            let len = cycle.len();
            if len < 3 {
                continue;
            }
            for i in 0..len {
                let a = cycle[i];
                let b = cycle[(i + 1) % len];
                if in_clique(a) && in_clique(b) {
                    // Replace edge a-b by the path a, omitted..., b.
                    let mut widened = Vec::with_capacity(len + omitted.len());
                    widened.extend_from_slice(&cycle[..=i]);
                    widened.extend_from_slice(omitted);
                    widened.extend_from_slice(&cycle[i + 1..]);
                    *cycle = widened;
                    break 'done true;
                }
            }
        }
        false
    };
    if !spliced {
        let trivials: Vec<usize> = cycles
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() == 1 && in_clique(c[0]))
            .map(|(i, _)| i)
            .collect();
        if omitted.len() >= 2 {
            let ti = *trivials.first().ok_or(LiftError::NoExpandableCycle)?;
            let c = cycles[ti][0];
            let mut widened = vec![c];
            widened.extend_from_slice(omitted);
            cycles[ti] = widened;
        } else {
            // A single dropped vertex cannot extend a trivial cycle (that
            // would be a 2-cycle); with no clique-clique edge anywhere the
            // cover must hold a second trivial clique vertex to close a
            // triangle with.
            if trivials.len() < 2 {
                return Err(LiftError::NoExpandableCycle);
            }
            let (t1, t2) = (trivials[0], trivials[1]);
            let triangle = vec![cycles[t1][0], cycles[t2][0], omitted[0]];
            cycles[t1] = triangle;
            cycles.remove(t2);
        }
    }

    let out = CycleCover::new(cycles).canonical();
    verify_cover(g, &out).map_err(LiftError::UnsoundResult)?;
    debug_assert!(out.len() <= cover.len());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::mcc_bruteforce;

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for u in 0..n {
            for v in (u + 1)..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Exhaustive minimum vertex cover of the complement, for cross-checking.
    fn min_co_vc_exhaustive(g: &Graph) -> usize {
        let h = g.complement();
        let n = h.n();
        let edges = h.edges();
        (0u32..1 << n)
            .filter(|mask| {
                edges
                    .iter()
                    .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn complete_graph_has_empty_cover() {
        let s = min_co_vertex_cover(&complete(6), 6).unwrap();
        assert!(s.is_empty());
        assert!(s.is_valid_for(&complete(6)));
    }

    #[test]
    fn k6_minus_perfect_matching() {
        let mut g = complete(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(u, v);
        }
        let s = min_co_vertex_cover(&g, 3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.is_valid_for(&g));
    }

    #[test]
    fn c5_cover_has_size_three() {
        // Exhausting all 32 subsets of the complement (also a C5) gives 3.
        let g = cycle_graph(5);
        assert_eq!(min_co_vc_exhaustive(&g), 3);
        let s = min_co_vertex_cover(&g, 3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.is_valid_for(&g));
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let g = cycle_graph(5);
        assert_eq!(
            min_co_vertex_cover(&g, 2),
            Err(CoVcError::BudgetExceeded { budget: 2 })
        );
    }

    #[test]
    fn cover_is_minimum_on_random_graphs() {
        for seed in 0..60 {
            let n = 6 + (seed as usize % 5); // 6..10
            let g = crate::gen::random_gnp(n, 0.55, seed);
            let expect = min_co_vc_exhaustive(&g);
            let s = min_co_vertex_cover(&g, n).unwrap();
            assert_eq!(s.len(), expect, "seed {seed}");
            assert!(s.is_valid_for(&g));
        }
    }

    #[test]
    fn matching_on_complete_bipartite() {
        let mut edges = vec![];
        for l in 0..3 {
            for r in 0..3 {
                edges.push((l, r));
            }
        }
        let m = max_bipartite_matching(3, 3, &edges);
        assert_eq!(m.pairs.len(), 3);
    }

    #[test]
    fn matching_on_star_is_one() {
        let edges: Vec<_> = (0..5).map(|r| (0, r)).collect();
        let m = max_bipartite_matching(1, 5, &edges);
        assert_eq!(m.pairs.len(), 1);
    }

    #[test]
    fn matching_on_path_is_two() {
        // a-x, x-b, b-y with left {a, b}, right {x, y}: both matched.
        let edges = vec![(0, 0), (1, 0), (1, 1)];
        let m = max_bipartite_matching(2, 2, &edges);
        assert_eq!(m.pairs.len(), 2);
    }

    #[test]
    fn matching_pairs_are_disjoint_edges() {
        for seed in 0..30 {
            let g = crate::gen::random_gnp(12, 0.4, seed);
            // split vertices 0..6 left, 6..12 right
            let edges: Vec<_> = g
                .edges()
                .into_iter()
                .filter(|&(u, v)| u < 6 && v >= 6)
                .map(|(u, v)| (u, v - 6))
                .collect();
            let m = max_bipartite_matching(6, 6, &edges);
            let mut seen_l = std::collections::HashSet::new();
            let mut seen_r = std::collections::HashSet::new();
            for &(l, r) in &m.pairs {
                assert!(edges.contains(&(l, r)));
                assert!(seen_l.insert(l) && seen_r.insert(r));
            }
        }
    }

    #[test]
    fn kernelize_k10_single_cover_vertex() {
        let g = complete(10);
        let s = CoVertexCover::new(vec![0]);
        let k = kernelize(&g, &s).unwrap();
        assert!(!k.untouched);
        assert_eq!(k.reduced.n(), 3);
        assert_eq!(k.c_prime.len(), 2);
        assert_eq!(k.reduced.edge_count(), 3); // K3
        let (m_orig, _) = mcc_bruteforce(&g).unwrap();
        let (m_kernel, _) = mcc_bruteforce(&k.reduced).unwrap();
        assert_eq!((m_orig, m_kernel), (1, 1));
    }

    #[test]
    fn kernelize_size_rule_keeps_graph() {
        // Two disjoint K5s with one side as the cover: |C| = 5 <= 2 * 5.
        let mut edges = vec![];
        for base in [0, 5] {
            for u in 0..5 {
                for v in (u + 1)..5 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let s = CoVertexCover::new((0..5).collect());
        let k = kernelize(&g, &s).unwrap();
        assert!(k.untouched);
        assert_eq!(k.reduced.n(), 10);
        assert!(k.omitted.is_empty());
    }

    #[test]
    fn kernelize_rejects_bad_inputs() {
        let err = kernelize(&complete(4), &CoVertexCover::new(vec![])).unwrap_err();
        assert_eq!(err, KernelizeError::EmptyCover);
        let g = cycle_graph(5);
        let err = kernelize(&g, &CoVertexCover::new(vec![0])).unwrap_err();
        assert_eq!(err, KernelizeError::NotAClique { u: 1, v: 3 });
    }

    #[test]
    fn kernel_respects_size_bound() {
        for seed in 0..40 {
            let n = 9;
            let g = crate::gen::random_gnp(n, 0.6, seed);
            let (closed, _) = crate::closure::compute_closure(&g, 0);
            let s = match min_co_vertex_cover(&closed, n) {
                Ok(s) if s.is_empty() => CoVertexCover::new(vec![0]),
                Ok(s) => s,
                Err(_) => unreachable!("budget n always suffices"),
            };
            let k = kernelize(&closed, &s).unwrap();
            assert!(k.untouched || k.reduced.n() <= (3 * s.len()).max(2 * s.len() + 3));
        }
    }

    /// When padding would retain every clique vertex anyway, the graph is
    /// returned unchanged.
    #[test]
    fn kernelize_keeps_graph_when_pad_covers_the_clique() {
        // K3 plus one cover vertex attached to a single clique vertex: the
        // matching saturates one clique vertex, the pad target reaches |C|.
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (1, 3), (0, 1)]).unwrap();
        let s = CoVertexCover::new(vec![0]);
        assert!(s.is_valid_for(&g));
        let k = kernelize(&g, &s).unwrap();
        assert!(k.untouched);
        assert_eq!(k.reduced.n(), 4);
        assert!(k.omitted.is_empty());
        let (m_orig, _) = mcc_bruteforce(&g).unwrap();
        let (m_kernel, _) = mcc_bruteforce(&k.reduced).unwrap();
        assert_eq!(m_orig, m_kernel);
    }

    /// A clique plus one isolated vertex: the padded retention rule must keep
    /// enough clique vertices for the kernel to still have answer 2 (a
    /// three-vertex kernel could only answer 1 or 3).
    #[test]
    fn kernel_preserves_mcc_with_isolated_cover_vertex() {
        let mut g = complete(7); // vertices 0..6
        for v in 0..6 {
            g.remove_edge(6, v);
        }
        let s = CoVertexCover::new(vec![6]);
        assert!(s.is_valid_for(&g));
        let k = kernelize(&g, &s).unwrap();
        let (m_orig, _) = mcc_bruteforce(&g).unwrap();
        let (m_kernel, cover) = mcc_bruteforce(&k.reduced).unwrap();
        assert_eq!(m_orig, 2);
        assert_eq!(m_kernel, 2);
        let lifted = lift_kernel_cover(&g, &k, &cover).unwrap();
        verify_cover(&g, &lifted).unwrap();
        assert_eq!(lifted.len(), 2);
    }

    /// Clique-plus-cover instances: kernelization preserves the minimum cycle
    /// cover size computed independently by the oracle.
    #[test]
    fn kernel_preserves_mcc_on_constructed_instances() {
        for seed in 0..80u64 {
            let clique_size = 5 + (seed as usize % 4); // 5..8
            let s_size = 1 + (seed as usize % 2); // 1..2
            let n = clique_size + s_size;
            if n > 10 {
                continue;
            }
            let mut g = Graph::new(n);
            for u in 0..clique_size {
                for v in (u + 1)..clique_size {
                    g.add_edge(u, v);
                }
            }
            // attach cover vertices with seeded random edges
            let attach = crate::gen::random_gnp(n, 0.4, seed);
            for si in clique_size..n {
                for v in 0..n {
                    if v != si && attach.has_edge(si, v) {
                        g.add_edge(si, v);
                    }
                }
            }
            let s = CoVertexCover::new((clique_size..n).collect());
            assert!(s.is_valid_for(&g));
            let k = kernelize(&g, &s).unwrap();
            let (m_orig, _) = mcc_bruteforce(&g).unwrap();
            let (m_kernel, cover) = mcc_bruteforce(&k.reduced).unwrap();
            assert_eq!(m_orig, m_kernel, "seed {seed}");
            let lifted = lift_kernel_cover(&g, &k, &cover).unwrap();
            assert!(lifted.len() <= cover.len());
            verify_cover(&g, &lifted).unwrap();
            assert_eq!(lifted.len(), m_orig);
        }
    }

    #[test]
    fn lift_untouched_kernel_is_identity() {
        let g = complete(4);
        let s = CoVertexCover::new(vec![0, 1]);
        let k = kernelize(&g, &s).unwrap();
        assert!(k.untouched);
        let cover = CycleCover::new(vec![vec![0, 1, 2, 3]]).canonical();
        assert_eq!(lift_kernel_cover(&g, &k, &cover).unwrap(), cover);
    }

    #[test]
    fn lift_splices_omitted_vertices_into_hamiltonian_cycle() {
        let g = complete(10);
        let k = kernelize(&g, &CoVertexCover::new(vec![0])).unwrap();
        let (_, cover) = mcc_bruteforce(&k.reduced).unwrap();
        assert_eq!(cover.len(), 1);
        let lifted = lift_kernel_cover(&g, &k, &cover).unwrap();
        assert_eq!(lifted.len(), 1);
        assert_eq!(lifted.cycles()[0].len(), 10);
        verify_cover(&g, &lifted).unwrap();
    }

    #[test]
    fn lift_expands_trivial_cycle_with_omitted_pair() {
        // Kernel cover that strands a clique vertex as a trivial cycle: build
        // it by hand on a K10 kernel with two omitted vertices.
        let g = complete(6);
        let s = CoVertexCover::new(vec![0]);
        // Force a kernel with omitted vertices: C = {1..5}, C' keeps 2.
        let k = kernelize(&g, &s).unwrap();
        assert_eq!(k.omitted.len(), 3);
        // All-trivial cover of the 3-vertex kernel.
        let cover = CycleCover::trivial(k.reduced.n());
        let lifted = lift_kernel_cover(&g, &k, &cover).unwrap();
        verify_cover(&g, &lifted).unwrap();
        assert!(lifted.len() <= cover.len());
    }

    #[test]
    fn lift_rejects_invalid_cover() {
        let g = complete(10);
        let k = kernelize(&g, &CoVertexCover::new(vec![0])).unwrap();
        let bad = CycleCover::new(vec![vec![0, 1]]);
        assert!(matches!(
            lift_kernel_cover(&g, &k, &bad),
            Err(LiftError::InvalidCover(_))
        ));
    }
}
