//! Exact minimum cycle cover by Held–Karp style dynamic programming over
//! vertex subsets.
//!
//! State: `M[X, s, t, p2]` is the least number of elements in a family of
//! vertex-disjoint cycles plus one open s–t path covering exactly `X` (the
//! path counts as one element); `p2` flags the path being exactly two
//! vertices, which is what keeps forbidden 2-cycles out when paths close.
//! Conceptually the recurrence runs on the input plus one fresh isolated
//! vertex whose own path element is subtracted from the final answer; the
//! table only enumerates subsets of the real vertices and the isolated
//! vertex's contribution collapses into one closing scan of the full mask.

use crate::cover::CycleCover;
use crate::graph::Graph;
use thiserror::Error;

/// Above this the flat table is refused outright.
pub const DEFAULT_MAX_VERTICES: usize = 24;

const INFEASIBLE: u8 = u8::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DpError {
    #[error(
        "graph has {n} vertices, above the configured ceiling {max}; \
         the table alone would need {bytes} bytes"
    )]
    TooManyVertices { n: usize, max: usize, bytes: u128 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    /// Candidate-domain size summed over every evaluated cell, matching the
    /// recurrence's own iteration bounds (quadratic for close-and-reopen
    /// cells, linear for path extensions, constant for the rest).
    pub recurrence_evals: u64,
    pub table_bytes: usize,
}

#[derive(Clone, Debug)]
pub struct DpSolution {
    pub size: usize,
    pub cover: CycleCover,
    pub stats: DpStats,
}

/// Value table over (vertex subset, path endpoints, two-vertex flag).
pub struct DpTable {
    n: usize,
    values: Vec<u8>,
}

impl DpTable {
    #[inline]
    fn idx(&self, mask: usize, s: usize, t: usize, p2: usize) -> usize {
        ((mask * self.n + s) * self.n + t) * 2 + p2
    }

    /// Finite value at a state, if any.
    pub fn get(&self, mask: usize, s: usize, t: usize, p2: bool) -> Option<u8> {
        let v = self.values[self.idx(mask, s, t, p2 as usize)];
        (v != INFEASIBLE).then_some(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn table_bytes(n: usize) -> u128 {
    (1u128 << n) * (n as u128) * (n as u128) * 2
}

/// Exact minimum cycle cover with certificate. Refuses inputs above
/// `max_vertices` (the table is 2^n * n^2 * 2 bytes).
pub fn mcc_exact_dp(g: &Graph, max_vertices: usize) -> Result<DpSolution, DpError> {
    let n = g.n();
    if n > max_vertices {
        return Err(DpError::TooManyVertices {
            n,
            max: max_vertices,
            bytes: table_bytes(n),
        });
    }
    if n == 0 {
        return Ok(DpSolution {
            size: 0,
            cover: CycleCover::empty(),
            stats: DpStats::default(),
        });
    }

    let (table, stats) = fill_table(g);
    let full = (1usize << n) - 1;
    let (size, s0, t0) = best_closable(g, &table, full).expect("all-trivial family always exists");
    let cover = reconstruct(g, &table, full, s0, t0);
    debug_assert_eq!(cover.len(), size);
    Ok(DpSolution { size, cover, stats })
}

fn fill_table(g: &Graph) -> (DpTable, DpStats) {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut table = DpTable {
        n,
        values: vec![INFEASIBLE; (1 << n) * n * n * 2],
    };
    let mut evals: u64 = 0;

    for v in 0..n {
        let i = table.idx(1 << v, v, v, 0);
        table.values[i] = 1;
    }

    for mask in 1usize..(1 << n) {
        let x = mask.count_ones() as usize;
        if x < 2 {
            continue;
        }
        let xm1 = (x - 1) as u64;
        let mut t_bits = mask;
        while t_bits != 0 {
            let t = t_bits.trailing_zeros() as usize;
            t_bits &= t_bits - 1;
            let rest = mask & !(1 << t);

            // Close the open path into a cycle (trivial allowed via s' = t')
            // and reopen a trivial path at t: cell (X, t, t, 0).
            let mut best = INFEASIBLE;
            let mut s_bits = rest;
            while s_bits != 0 {
                let s2 = s_bits.trailing_zeros() as usize;
                s_bits &= s_bits - 1;
                let base = table.idx(rest, s2, 0, 0);
                let mut t2_bits = rest & (adj[s2] as usize | 1 << s2);
                while t2_bits != 0 {
                    let t2 = t2_bits.trailing_zeros() as usize;
                    t2_bits &= t2_bits - 1;
                    let v = table.values[base + 2 * t2];
                    if v != INFEASIBLE && v + 1 < best {
                        best = v + 1;
                    }
                }
            }
            evals += xm1 * xm1;
            let i = table.idx(mask, t, t, 0);
            table.values[i] = best;
            evals += 1; // the (X, t, t, 1) cell is constant-infeasible

            let mut s_bits2 = mask & !(1 << t);
            while s_bits2 != 0 {
                let s = s_bits2.trailing_zeros() as usize;
                s_bits2 &= s_bits2 - 1;

                // Extend a trivial path at s into the two-vertex path s-t.
                if adj[s] as usize & 1 << t != 0 {
                    let from = table.idx(rest, s, s, 0);
                    let to = table.idx(mask, s, t, 1);
                    table.values[to] = table.values[from];
                }
                evals += 1;

                // Extend a longer path by the new endpoint t: previous
                // endpoint t' is a neighbor of t, from either p2' state (the
                // two layers are adjacent bytes, read as one u16).
                let mut best = INFEASIBLE;
                let base = table.idx(rest, s, 0, 0);
                let mut t2_bits = rest & adj[t] as usize & !(1 << s);
                while t2_bits != 0 {
                    let t2 = t2_bits.trailing_zeros() as usize;
                    t2_bits &= t2_bits - 1;
                    let pair = u16::from_le_bytes([
                        table.values[base + 2 * t2],
                        table.values[base + 2 * t2 + 1],
                    ]);
                    best = best.min((pair & 0xff) as u8).min((pair >> 8) as u8);
                }
                evals += 2 * xm1;
                let i = table.idx(mask, s, t, 0);
                table.values[i] = best;
            }
        }
    }

    let stats = DpStats {
        recurrence_evals: evals,
        table_bytes: table.values.len(),
    };
    (table, stats)
}

/// Minimum over states of `mask` whose open path can close into a cycle:
/// trivial paths (s = t) or paths whose endpoints are adjacent, read from the
/// not-two-vertex layer only. Smallest (s, t) wins ties.
fn best_closable(g: &Graph, table: &DpTable, mask: usize) -> Option<(usize, usize, usize)> {
    let n = table.n;
    let mut best: Option<(usize, usize, usize)> = None;
    for s in 0..n {
        if mask >> s & 1 == 0 {
            continue;
        }
        for t in 0..n {
            if mask >> t & 1 == 0 || (s != t && !g.has_edge(s, t)) {
                continue;
            }
            if let Some(v) = table.get(mask, s, t, false) {
                if best.is_none_or(|(b, _, _)| (v as usize) < b) {
                    best = Some((v as usize, s, t));
                }
            }
        }
    }
    best
}

/// Rebuilds one optimal family by re-deriving which recurrence branch
/// produced each stored value, peeling the path endpoint at every step;
/// smallest ids win ties so the certificate is deterministic.
fn reconstruct(g: &Graph, table: &DpTable, full: usize, s0: usize, t0: usize) -> CycleCover {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut collect: Vec<usize> = Vec::new();
    let (mut mask, mut s, mut t, mut p2) = (full, s0, t0, false);
    loop {
        let value = table
            .get(mask, s, t, p2)
            .expect("reconstruction follows finite states");
        if mask.count_ones() == 1 {
            collect.push(s);
            collect.reverse();
            cycles.push(collect);
            break;
        }
        let rest = mask & !(1 << t);
        if p2 {
            // Unique predecessor: the trivial path at s.
            collect.push(t);
            t = s;
            p2 = false;
            mask = rest;
            continue;
        }
        if s == t {
            // This cell closed the previous path; emit the cycle gathered so
            // far and chase the closing pair.
            collect.push(s);
            collect.reverse();
            cycles.push(std::mem::take(&mut collect));
            let mut found = None;
            'search: for s2 in 0..table.n {
                if rest >> s2 & 1 == 0 {
                    continue;
                }
                for t2 in 0..table.n {
                    if rest >> t2 & 1 == 0 || (s2 != t2 && !g.has_edge(s2, t2)) {
                        continue;
                    }
                    if table.get(rest, s2, t2, false) == Some(value - 1) {
                        found = Some((s2, t2));
                        break 'search;
                    }
                }
            }
            let (s2, t2) = found.expect("a closing predecessor must exist");
            mask = rest;
            s = s2;
            t = t2;
            continue;
        }
        // Path extension: find the previous endpoint.
        collect.push(t);
        let mut found = None;
        'ext: for t2 in 0..table.n {
            if rest >> t2 & 1 == 0 || t2 == s || !g.has_edge(t, t2) {
                continue;
            }
            for prev_p2 in [false, true] {
                if table.get(rest, s, t2, prev_p2) == Some(value) {
                    found = Some((t2, prev_p2));
                    break 'ext;
                }
            }
        }
        let (t2, prev_p2) = found.expect("an extension predecessor must exist");
        mask = rest;
        t = t2;
        p2 = prev_p2;
    }
    CycleCover::new(cycles).canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_cover;
    use crate::oracle::mcc_bruteforce;

    fn solve(g: &Graph) -> DpSolution {
        mcc_exact_dp(g, DEFAULT_MAX_VERTICES).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for u in 0..n {
            for v in (u + 1)..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn triangle_is_one_cycle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let sol = solve(&g);
        assert_eq!(sol.size, 1);
        assert_eq!(sol.cover.cycles(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn path_needs_three_trivial_cycles() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let sol = solve(&g);
        assert_eq!(sol.size, 3);
        assert_eq!(sol.cover, CycleCover::trivial(3));
    }

    #[test]
    fn single_edge_is_not_a_cycle() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(solve(&g).size, 2);
    }

    #[test]
    fn petersen_graph_needs_two_cycles() {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0), // outer
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9), // spokes
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5), // inner
        ];
        let g = Graph::from_edges(10, &edges).unwrap();
        let sol = solve(&g);
        assert_eq!(sol.size, 2);
        verify_cover(&g, &sol.cover).unwrap();
        let (oracle_size, _) = mcc_bruteforce(&g).unwrap();
        assert_eq!(oracle_size, 2);
    }

    #[test]
    fn empty_and_trivial_graphs() {
        assert_eq!(solve(&Graph::new(0)).size, 0);
        let one = solve(&Graph::new(1));
        assert_eq!(one.size, 1);
        assert_eq!(one.cover.cycles(), &[vec![0]]);
    }

    #[test]
    fn complete_graphs_are_hamiltonian() {
        for n in 3..=16usize {
            let sol = solve(&complete(n));
            assert_eq!(sol.size, 1, "K{n}");
            assert_eq!(sol.cover.cycles()[0].len(), n);
        }
    }

    #[test]
    fn refuses_oversized_input() {
        let err = mcc_exact_dp(&Graph::new(25), 24).unwrap_err();
        assert_eq!(
            err,
            DpError::TooManyVertices {
                n: 25,
                max: 24,
                bytes: (1u128 << 25) * 25 * 25 * 2
            }
        );
        // tighter configured ceiling
        assert!(mcc_exact_dp(&Graph::new(5), 4).is_err());
    }

    #[test]
    fn agrees_with_oracle_exhaustively_to_n5() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0..(1u32 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let sol = solve(&g);
                let (expect, _) = mcc_bruteforce(&g).unwrap();
                assert_eq!(sol.size, expect, "n={n} mask={mask}");
                verify_cover(&g, &sol.cover).unwrap();
                assert_eq!(sol.cover.len(), sol.size);
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_random_graphs() {
        for seed in 0..500u64 {
            let n = 8 + (seed as usize % 3); // 8..10
            let p = [0.2, 0.4, 0.6, 0.8][seed as usize % 4];
            let g = crate::gen::random_gnp(n, p, seed);
            let sol = solve(&g);
            let (expect, _) = mcc_bruteforce(&g).unwrap();
            assert_eq!(sol.size, expect, "seed {seed}");
            verify_cover(&g, &sol.cover).unwrap();
        }
    }

    #[test]
    fn hamiltonian_iff_size_one() {
        fn is_hamiltonian(g: &Graph) -> bool {
            let n = g.n();
            if n < 3 {
                return false;
            }
            fn ext(g: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
                if path.len() == g.n() {
                    return g.has_edge(*path.last().unwrap(), path[0]);
                }
                for v in 1..g.n() {
                    if !used[v] && g.has_edge(*path.last().unwrap(), v) {
                        used[v] = true;
                        path.push(v);
                        if ext(g, path, used) {
                            return true;
                        }
                        path.pop();
                        used[v] = false;
                    }
                }
                false
            }
            let mut used = vec![false; n];
            used[0] = true;
            ext(g, &mut vec![0], &mut used)
        }
        for seed in 0..60u64 {
            let n = 7;
            let g = crate::gen::random_gnp(n, 0.5, seed);
            assert_eq!(solve(&g).size == 1, is_hamiltonian(&g), "seed {seed}");
        }
    }

    #[test]
    fn edge_addition_never_increases_answer() {
        for seed in 0..25u64 {
            let mut g = crate::gen::random_gnp(8, 0.25, seed);
            let mut prev = solve(&g).size;
            for (u, v) in g.complement().edges() {
                g.add_edge(u, v);
                let cur = solve(&g).size;
                assert!(cur <= prev);
                prev = cur;
            }
        }
    }

    #[test]
    fn no_two_cycles_in_any_certificate() {
        for seed in 0..80u64 {
            let g = crate::gen::random_gnp(9, 0.5, seed);
            let sol = solve(&g);
            assert!(sol.cover.cycles().iter().all(|c| c.len() != 2));
        }
    }

    #[test]
    fn table_invariants_hold() {
        let g = crate::gen::random_gnp(6, 0.5, 3);
        let (table, _) = fill_table(&g);
        for mask in 1usize..(1 << 6) {
            for s in 0..6 {
                for t in 0..6 {
                    for p2 in [false, true] {
                        if let Some(v) = table.get(mask, s, t, p2) {
                            assert!(mask >> s & 1 == 1 && mask >> t & 1 == 1);
                            assert!(v >= 1);
                            if mask.count_ones() == 1 {
                                assert!(s == t && !p2 && v == 1);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eval_counter_is_deterministic_and_near_closed_form() {
        let g = crate::gen::random_gnp(10, 0.5, 7);
        let a = solve(&g).stats;
        let b = solve(&g).stats;
        assert_eq!(a, b);
        let closed_form = (1u64 << 10) * 1000;
        assert!(a.recurrence_evals * 4 >= closed_form);
        assert!(a.recurrence_evals <= closed_form * 4);
    }
}
