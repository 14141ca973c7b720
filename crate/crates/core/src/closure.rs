//! Bondy–Chvátal closure with a full edge-addition trace, and the reverse
//! walk that rewires a cycle cover of the closure into one of the original
//! graph without growing it.

use crate::bits::VertexSet;
use crate::cover::{verify_cover, CoverViolation, CycleCover};
use crate::graph::Graph;
use std::collections::VecDeque;
use thiserror::Error;

/// One closure step: the added edge and both endpoint degrees immediately
/// before the addition, so the eligibility invariant is checkable without
/// replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub u: usize,
    pub v: usize,
    pub deg_u_before: usize,
    pub deg_v_before: usize,
}

/// Ordered record of every edge added while closing a graph, with the offset
/// `ell` that was in force (eligibility threshold is `n + ell`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub ell: i64,
    pub steps: Vec<TraceStep>,
}

impl ClosureTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Computes the (n + ell)-closure: repeatedly joins nonadjacent pairs whose
/// degree sum reaches `n + ell` until none remains.
///
/// A FIFO queue is seeded with all eligible pairs in lexicographic order;
/// after an addition only pairs incident to the two endpoints can become
/// newly eligible (degrees grow by exactly one, so a pair crosses the
/// threshold precisely when it lands on it). Traces are deterministic.
pub fn compute_closure(g: &Graph, ell: i64) -> (Graph, ClosureTrace) {
    let n = g.n();
    let threshold = n as i64 + ell;
    let mut work = g.clone();
    let mut deg: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !work.has_edge(u, v) && deg[u] + deg[v] >= threshold {
                queue.push_back((u, v));
            }
        }
    }
    let mut steps = Vec::new();
    while let Some((u, v)) = queue.pop_front() {
        if work.has_edge(u, v) {
            continue; // re-queued duplicate
        }
        debug_assert!(deg[u] + deg[v] >= threshold);
        steps.push(TraceStep {
            u,
            v,
            deg_u_before: deg[u] as usize,
            deg_v_before: deg[v] as usize,
        });
        work.add_edge(u, v);
        deg[u] += 1;
        deg[v] += 1;
        for &end in &[u, v] {
            let d = deg[end];
            for (x, &dx) in deg.iter().enumerate() {
                // A pair crosses the threshold exactly when it lands on it.
                if x != end && dx + d == threshold && !work.has_edge(end, x) {
                    queue.push_back((end.min(x), end.max(x)));
                }
            }
        }
    }
    (work, ClosureTrace { ell, steps })
}

/// The opened cycle and the four vertex sets driving one rewiring decision.
///
/// `path` is the cycle that used the removed edge, opened at that edge with
/// the smaller endpoint first; `other_cycles` are the untouched cycles.
/// Membership is evaluated against the adjacency of the graph *without* the
/// removed edge:
/// - `xp`: interior path vertices whose path predecessor sees the path's end,
/// - `xc`: cycle vertices whose cyclic successor sees the path's end,
/// - `yp`: interior path vertices seen by the path's start,
/// - `yc`: cycle vertices seen by the path's start.
#[derive(Clone, Debug)]
pub struct RewireContext {
    pub path: Vec<usize>,
    pub other_cycles: Vec<Vec<usize>>,
    pub xp: VertexSet,
    pub xc: VertexSet,
    pub yp: VertexSet,
    pub yc: VertexSet,
}

impl RewireContext {
    /// Builds the four sets for `path` (h >= 3) against `current`, which must
    /// already lack the edge between the path's two endpoints.
    pub fn build(current: &Graph, path: Vec<usize>, other_cycles: Vec<Vec<usize>>) -> Self {
        let n = current.n();
        let h = path.len();
        debug_assert!(h >= 3);
        let start = path[0];
        let end = path[h - 1];
        debug_assert!(!current.has_edge(start, end));

        let mut xp = VertexSet::new(n);
        let mut yp = VertexSet::new(n);
        for idx in 2..h - 1 {
            if current.has_edge(path[idx - 1], end) {
                xp.insert(path[idx]);
            }
            if current.has_edge(start, path[idx]) {
                yp.insert(path[idx]);
            }
        }
        let mut xc = VertexSet::new(n);
        let mut yc = VertexSet::new(n);
        for cycle in &other_cycles {
            let len = cycle.len();
            for q in 0..len {
                // For a trivial cycle the cyclic successor is the vertex itself.
                if current.has_edge(cycle[(q + 1) % len], end) {
                    xc.insert(cycle[q]);
                }
                if current.has_edge(cycle[q], start) {
                    yc.insert(cycle[q]);
                }
            }
        }
        RewireContext {
            path,
            other_cycles,
            xp,
            xc,
            yp,
            yc,
        }
    }

    /// Smallest vertex in (xp ∪ xc) ∩ (yp ∪ yc).
    pub fn pivot(&self) -> Option<usize> {
        let mut x = self.xp.clone();
        x.union_with(&self.xc);
        let mut y = self.yp.clone();
        y.union_with(&self.yc);
        x.intersect_with(&y);
        x.min_element()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnwindError {
    #[error("trace step #{step} replays onto an existing or inconsistent edge ({u}, {v})")]
    InvalidTrace { step: usize, u: usize, v: usize },
    #[error("input cover is not a valid cover of the closed graph: {0}")]
    InvalidCover(CoverViolation),
    #[error("no rewiring pivot at trace step #{step}; the trace or adjacency state is corrupt")]
    MissingPivot { step: usize },
    #[error("unwound cover failed verification against the original graph: {0}")]
    UnsoundResult(CoverViolation),
}

/// Walks the closure trace backwards, deleting each traced edge and, whenever
/// the current cover uses it, rewiring per the two-case analysis: a pivot on
/// the opened path reroutes that cycle in place; a pivot on another cycle
/// merges the two (shrinking the cover by one). Returns a cover of `g` of no
/// larger size.
pub fn unwind_cover(
    g: &Graph,
    trace: &ClosureTrace,
    cover: &CycleCover,
) -> Result<CycleCover, UnwindError> {
    let mut work = g.clone();
    for (step, s) in trace.steps.iter().enumerate() {
        let consistent = !work.has_edge(s.u, s.v)
            && work.degree(s.u) == s.deg_u_before
            && work.degree(s.v) == s.deg_v_before;
        if !consistent {
            return Err(UnwindError::InvalidTrace {
                step,
                u: s.u,
                v: s.v,
            });
        }
        work.add_edge(s.u, s.v);
    }
    verify_cover(&work, cover).map_err(UnwindError::InvalidCover)?;

    let mut cycles: Vec<Vec<usize>> = cover.cycles().to_vec();
    for (step, s) in trace.steps.iter().enumerate().rev() {
        work.remove_edge(s.u, s.v);
        if let Some((ci, pos)) = find_cycle_using_edge(&cycles, s.u, s.v) {
            rewire(&work, &mut cycles, ci, pos, step)?;
        }
        // Strict reverse order keeps the working cover valid at every prefix:
        // no later-added edge may survive in it (checked on small inputs).
        #[cfg(debug_assertions)]
        if g.n() <= 64 {
            debug_assert_eq!(
                verify_cover(&work, &CycleCover::new(cycles.clone())),
                Ok(()),
                "cover invalid after unwinding step {step}"
            );
        }
    }
    let out = CycleCover::new(cycles).canonical();
    verify_cover(g, &out).map_err(UnwindError::UnsoundResult)?;
    debug_assert!(out.len() <= cover.len());
    Ok(out)
}

/// Finds the cycle traversing edge {u, v}, returning (cycle index, position i)
/// with the edge between positions i and i+1 (mod len).
fn find_cycle_using_edge(cycles: &[Vec<usize>], u: usize, v: usize) -> Option<(usize, usize)> {
    for (ci, cycle) in cycles.iter().enumerate() {
        let len = cycle.len();
        if len < 3 {
            continue;
        }
        for i in 0..len {
            let a = cycle[i];
            let b = cycle[(i + 1) % len];
            if (a == u && b == v) || (a == v && b == u) {
                return Some((ci, i));
            }
        }
    }
    None
}

fn rewire(
    current: &Graph,
    cycles: &mut Vec<Vec<usize>>,
    ci: usize,
    pos: usize,
    step: usize,
) -> Result<(), UnwindError> {
    let cycle = &cycles[ci];
    let len = cycle.len();
    // Open the cycle at the edge between pos and pos+1: the walk from pos+1
    // around to pos visits every vertex with the cut edge at the ends.
    let mut path: Vec<usize> = (0..len).map(|o| cycle[(pos + 1 + o) % len]).collect();
    if path[0] > path[len - 1] {
        path.reverse(); // orient the smaller endpoint first
    }
    let others: Vec<Vec<usize>> = cycles
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != ci)
        .map(|(_, c)| c.clone())
        .collect();
    let ctx = RewireContext::build(current, path, others);
    let pivot = ctx.pivot().ok_or(UnwindError::MissingPivot { step })?;
    let path = &ctx.path;

    if ctx.xp.contains(pivot) {
        // Case 1: reroute the opened path into a single cycle through the pivot.
        debug_assert!(ctx.yp.contains(pivot));
        let q = path
            .iter()
            .position(|&v| v == pivot)
            .expect("pivot lies on the path");
        let mut rerouted: Vec<usize> = path[..q].to_vec();
        rerouted.extend(path[q..].iter().rev());
        cycles[ci] = rerouted;
    } else {
        // Case 2: merge the pivot's cycle with the opened path.
        debug_assert!(ctx.xc.contains(pivot) && ctx.yc.contains(pivot));
        let (cj, q) = locate(cycles, ci, pivot);
        let other = &cycles[cj];
        let xj = other.len();
        let mut merged: Vec<usize> = (0..xj).map(|o| other[(q + 1 + o) % xj]).collect();
        merged.extend_from_slice(path);
        cycles[ci] = merged;
        cycles.remove(cj);
    }
    Ok(())
}

fn locate(cycles: &[Vec<usize>], skip: usize, v: usize) -> (usize, usize) {
    for (cj, cycle) in cycles.iter().enumerate() {
        if cj == skip {
            continue;
        }
        if let Some(q) = cycle.iter().position(|&x| x == v) {
            return (cj, q);
        }
    }
    unreachable!("pivot vertex must belong to some other cycle");
}
