//! Brute-force minimum cycle cover for tiny graphs.
//!
//! Enumerates every set partition of the vertices (restricted growth form).
//! A partition is feasible iff each block is a single vertex or has size at
//! least three and induces a Hamiltonian subgraph; Hamiltonicity inside a
//! block is decided by fixed-first-vertex permutation search. Deliberately
//! independent of the DP solver: this is the ground truth the rest of the
//! crate is measured against.

use crate::cover::CycleCover;
use crate::graph::Graph;
use std::collections::HashMap;
use thiserror::Error;

/// Set partitions explode beyond this.
pub const MAX_ORACLE_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute force limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Minimum cycle cover size with a witness: the lexicographically least
/// canonical cover among all minimums, so output is reproducible.
pub fn mcc_bruteforce(g: &Graph) -> Result<(usize, CycleCover), OracleError> {
    let n = g.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_ORACLE_VERTICES,
        });
    }
    if n == 0 {
        return Ok((0, CycleCover::empty()));
    }

    let mut search = Search {
        g,
        n,
        ham_memo: HashMap::new(),
        best_count: usize::MAX,
        best_cover: None,
        assign: vec![0; n],
        block_masks: Vec::with_capacity(n),
    };
    search.recurse(0, 0);
    let count = search.best_count;
    let cover = search
        .best_cover
        .expect("all-trivial partition is always feasible");
    Ok((count, cover))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// For a vertex mask: least canonical Hamiltonian cycle of the induced
    /// subgraph, if one exists.
    ham_memo: HashMap<u32, Option<Vec<usize>>>,
    best_count: usize,
    best_cover: Option<CycleCover>,
    assign: Vec<usize>,
    block_masks: Vec<u32>,
}

impl Search<'_> {
    fn recurse(&mut self, pos: usize, blocks: usize) {
        if blocks > self.best_count {
            return; // block count only grows from here
        }
        if pos == self.n {
            self.evaluate(blocks);
            return;
        }
        for b in 0..=blocks {
            self.assign[pos] = b;
            if b == blocks {
                self.block_masks.push(1 << pos);
            } else {
                self.block_masks[b] |= 1 << pos;
            }
            self.recurse(pos + 1, blocks.max(b + 1));
            if b == blocks {
                self.block_masks.pop();
            } else {
                self.block_masks[b] &= !(1u32 << pos);
            }
        }
    }

    fn evaluate(&mut self, blocks: usize) {
        if blocks > self.best_count {
            return;
        }
        let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(blocks);
        for b in 0..blocks {
            let mask = self.block_masks[b];
            match mask.count_ones() {
                1 => cycles.push(vec![mask.trailing_zeros() as usize]),
                2 => return, // 2-cycles are forbidden
                _ => {
                    let cycle = match self.ham_memo.entry(mask) {
                        std::collections::hash_map::Entry::Occupied(e) => e.get().clone(),
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(least_ham_cycle(self.g, mask)).clone()
                        }
                    };
                    match cycle {
                        Some(c) => cycles.push(c),
                        None => return,
                    }
                }
            }
        }
        let cover = CycleCover::new(cycles).canonical();
        let better = blocks < self.best_count
            || (blocks == self.best_count
                && self
                    .best_cover
                    .as_ref()
                    .is_none_or(|b| cover.cycles() < b.cycles()));
        if better {
            self.best_count = blocks;
            self.best_cover = Some(cover);
        }
    }
}

/// Lexicographically least canonical Hamiltonian cycle of the subgraph
/// induced by `mask`, if any. Fixes the smallest vertex first and extends in
/// ascending order, so the first complete cycle found is the least; the
/// `path[1] < path[last]` constraint fixes the orientation.
fn least_ham_cycle(g: &Graph, mask: u32) -> Option<Vec<usize>> {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    let b = verts.len();
    debug_assert!(b >= 3);
    let mut path = vec![verts[0]];
    let mut used = 1u32; // bit i = verts[i] used
    if extend_ham(g, &verts, &mut path, &mut used) {
        Some(path)
    } else {
        None
    }
}

fn extend_ham(g: &Graph, verts: &[usize], path: &mut Vec<usize>, used: &mut u32) -> bool {
    let b = verts.len();
    if path.len() == b {
        return g.has_edge(*path.last().unwrap(), path[0]) && path[1] < path[b - 1];
    }
    let last = *path.last().unwrap();
    for (i, &v) in verts.iter().enumerate().skip(1) {
        if *used >> i & 1 == 0 && g.has_edge(last, v) {
            path.push(v);
            *used |= 1 << i;
            if extend_ham(g, verts, path, used) {
                return true;
            }
            path.pop();
            *used &= !(1u32 << i);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_cover;

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
    fn k4_is_one_cycle() {
        let (size, cover) = mcc_bruteforce(&complete(4)).unwrap();
        assert_eq!(size, 1);
        assert_eq!(cover.cycles(), &[vec![0, 1, 2, 3]]);
        assert_eq!(verify_cover(&complete(4), &cover), Ok(()));
    }

    #[test]
    fn star_needs_all_trivial() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (size, cover) = mcc_bruteforce(&star).unwrap();
        assert_eq!(size, 4);
        assert_eq!(cover, CycleCover::trivial(4));
    }

    #[test]
    fn two_disjoint_triangles() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let (size, cover) = mcc_bruteforce(&g).unwrap();
        assert_eq!(size, 2);
        assert_eq!(cover.cycles(), &[vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn single_edge_needs_two_trivials() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (size, cover) = mcc_bruteforce(&g).unwrap();
        assert_eq!(size, 2);
        assert_eq!(cover, CycleCover::trivial(2));
    }

    #[test]
    fn empty_graph() {
        let (size, cover) = mcc_bruteforce(&Graph::new(0)).unwrap();
        assert_eq!(size, 0);
        assert!(cover.is_empty());
    }

    #[test]
    fn refuses_large_input() {
        assert_eq!(
            mcc_bruteforce(&Graph::new(13)),
            Err(OracleError::TooLarge { n: 13, max: 12 })
        );
    }

    #[test]
    fn witness_is_deterministic_and_valid() {
        for seed in 0..40 {
            let g = crate::gen::random_gnp(8, 0.5, seed);
            let (size, cover) = mcc_bruteforce(&g).unwrap();
            let (size2, cover2) = mcc_bruteforce(&g).unwrap();
            assert_eq!((size, &cover), (size2, &cover2));
            assert_eq!(verify_cover(&g, &cover), Ok(()));
            assert_eq!(cover.len(), size);
            assert_eq!(cover.clone().canonical(), cover);
        }
    }

    #[test]
    fn monotone_under_edge_addition() {
        for seed in 0..20 {
            let mut g = crate::gen::random_gnp(7, 0.3, seed);
            let mut prev = mcc_bruteforce(&g).unwrap().0;
            let missing: Vec<_> = g.complement().edges();
            for (u, v) in missing {
                g.add_edge(u, v);
                let cur = mcc_bruteforce(&g).unwrap().0;
                assert!(cur <= prev, "adding ({u},{v}) raised mcc {prev} -> {cur}");
                prev = cur;
            }
            assert_eq!(prev, 1); // ended at a complete graph
        }
    }

    /// Definitional check: the answer is n exactly when no feasible partition
    /// with fewer blocks exists, exercised here through independent
    /// Hamiltonicity of all sub-blocks.
    #[test]
    fn answer_n_iff_no_smaller_feasible_partition() {
        let triangle_free = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(mcc_bruteforce(&triangle_free).unwrap().0, 5);
        let with_triangle = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(mcc_bruteforce(&with_triangle).unwrap().0, 3);
    }
}
