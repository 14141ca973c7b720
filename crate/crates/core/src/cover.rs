//! Cycle covers: the certificate format shared by every stage.
//!
//! A cover is a set of vertex-disjoint cycles (trivial single-vertex cycles
//! allowed, two-vertex cycles forbidden) whose union is the whole vertex set.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// First violated invariant when a cover fails verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    #[error("cycle #{index} has forbidden length {len} (must be 1 or >= 3)")]
    ForbiddenLength { index: usize, len: usize },
    #[error("cycle #{index} mentions vertex {v}, out of range for n = {n}")]
    OutOfRange { index: usize, v: usize, n: usize },
    #[error("cycle #{index} revisits vertex {v}")]
    DuplicateVertex { index: usize, v: usize },
    #[error("cycle #{index} uses nonadjacent pair ({u}, {v})")]
    NonAdjacent { index: usize, u: usize, v: usize },
    #[error("cover misses {missing} vertices")]
    Incomplete { missing: usize },
}

/// A set of cycles, each listed as a closed walk without repeating the first
/// vertex. Canonical form: each cycle rotated so its minimum vertex leads,
/// oriented so the second vertex is the smaller neighbor of the first, and
/// cycles sorted by their first vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleCover {
    cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        CycleCover { cycles }
    }

    pub fn empty() -> Self {
        CycleCover { cycles: vec![] }
    }

    /// All-trivial cover of an n-vertex graph.
    pub fn trivial(n: usize) -> Self {
        CycleCover {
            cycles: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Number of cycles: the quantity being minimized.
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Applies `map` to every vertex (used when moving between id spaces).
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> CycleCover {
        CycleCover {
            cycles: self
                .cycles
                .iter()
                .map(|c| c.iter().map(|&v| map(v)).collect())
                .collect(),
        }
    }

    pub fn canonicalize(&mut self) {
        for cycle in &mut self.cycles {
            canonicalize_cycle(cycle);
        }
        self.cycles.sort();
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }
}

fn canonicalize_cycle(cycle: &mut [usize]) {
    if cycle.len() <= 1 {
        return;
    }
    let min_pos = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .expect("nonempty cycle");
    cycle.rotate_left(min_pos);
    // Orient so the second entry is the smaller of the first vertex's two
    // cycle neighbors.
    if cycle.len() >= 3 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
}

/// Checks every cover invariant against `g`; reports the first violation.
pub fn verify_cover(g: &Graph, cover: &CycleCover) -> Result<(), CoverViolation> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut covered = 0usize;
    for (index, cycle) in cover.cycles().iter().enumerate() {
        let len = cycle.len();
        if len == 0 || len == 2 {
            return Err(CoverViolation::ForbiddenLength { index, len });
        }
        for &v in cycle {
            if v >= n {
                return Err(CoverViolation::OutOfRange { index, v, n });
            }
            if seen[v] {
                return Err(CoverViolation::DuplicateVertex { index, v });
            }
            seen[v] = true;
            covered += 1;
        }
        if len >= 3 {
            for i in 0..len {
                let u = cycle[i];
                let v = cycle[(i + 1) % len];
                if !g.has_edge(u, v) {
                    return Err(CoverViolation::NonAdjacent { index, u, v });
                }
            }
        }
    }
    if covered != n {
        return Err(CoverViolation::Incomplete {
            missing: n - covered,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn accepts_triangle_cycle() {
        let cover = CycleCover::new(vec![vec![0, 1, 2]]);
        assert_eq!(verify_cover(&triangle(), &cover), Ok(()));
    }

    #[test]
    fn rejects_two_cycle() {
        let cover = CycleCover::new(vec![vec![0, 1], vec![2]]);
        assert_eq!(
            verify_cover(&triangle(), &cover),
            Err(CoverViolation::ForbiddenLength { index: 0, len: 2 })
        );
    }

    #[test]
    fn accepts_all_trivial_cover_of_path() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(verify_cover(&p3, &CycleCover::trivial(3)), Ok(()));
    }

    #[test]
    fn rejects_missing_and_duplicate_vertices() {
        let g = triangle();
        assert_eq!(
            verify_cover(&g, &CycleCover::new(vec![vec![0], vec![1]])),
            Err(CoverViolation::Incomplete { missing: 1 })
        );
        assert_eq!(
            verify_cover(
                &g,
                &CycleCover::new(vec![vec![0], vec![0], vec![1], vec![2]])
            ),
            Err(CoverViolation::DuplicateVertex { index: 1, v: 0 })
        );
    }

    #[test]
    fn rejects_nonadjacent_step() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            verify_cover(&p3, &CycleCover::new(vec![vec![0, 1, 2]])),
            Err(CoverViolation::NonAdjacent {
                index: 0,
                u: 2,
                v: 0
            })
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            verify_cover(&triangle(), &CycleCover::new(vec![vec![0, 1, 3]])),
            Err(CoverViolation::OutOfRange {
                index: 0,
                v: 3,
                n: 3
            })
        );
    }

    #[test]
    fn canonical_form_examples() {
        let mut c = CycleCover::new(vec![vec![4], vec![2, 3, 1], vec![5, 0, 6]]);
        c.canonicalize();
        assert_eq!(c.cycles(), &[vec![0, 5, 6], vec![1, 2, 3], vec![4]]);

        // Orientation: second entry must be the smaller neighbor of the min.
        let mut c = CycleCover::new(vec![vec![0, 3, 1, 2]]);
        c.canonicalize();
        assert_eq!(c.cycles(), &[vec![0, 2, 1, 3]]);
    }

    proptest! {
        /// Canonicalization is idempotent and preserves verification verdicts.
        #[test]
        fn canonicalize_idempotent_and_verdict_preserving(
            n in 1usize..10, seed in 0u64..300
        ) {
            let g = crate::gen::random_gnp(n, 0.5, seed);
            // use the oracle's witness as a valid cover source
            let (_, cover) = crate::oracle::mcc_bruteforce(&g).unwrap();
            let verdict = verify_cover(&g, &cover);
            let once = cover.clone().canonical();
            let twice = once.clone().canonical();
            prop_assert_eq!(&once, &twice);
            prop_assert_eq!(verify_cover(&g, &once), verdict);
        }
    }
}
