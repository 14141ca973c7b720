//! Seeded instance generators. All outputs are deterministic functions of
//! their parameters.

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("parameter out of range: need {requirement}, got n = {n}, k = {k}")]
    ParameterRange {
        requirement: &'static str,
        n: usize,
        k: usize,
    },
    #[error("no graph on {n} vertices can satisfy the degree bound")]
    Unsatisfiable { n: usize },
}

/// Erdős–Rényi G(n, p) with a fixed seed.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Graph whose complement is k-degenerate by construction: a random vertex
/// order where each vertex picks `min(k, i)` random back-neighbors in the
/// complement. The returned graph therefore has co-degeneracy at most `k`.
pub fn gen_co_degenerate(n: usize, k: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 || k > n - 1 {
        return Err(GenError::ParameterRange {
            requirement: "1 <= n and k <= n-1",
            n,
            k,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut co = Graph::new(n);
    for i in 0..n {
        let picks = k.min(i);
        let back = rand::seq::index::sample(&mut rng, i, picks);
        for j in back.iter() {
            co.add_edge(order[i], order[j]);
        }
    }
    let g = co.complement();
    debug_assert!(crate::graph::co_degeneracy(&g).k <= k);
    Ok(g)
}

/// Graph in which at least `n - k` vertices have degree at least n/2: a
/// random graph on the n-k "high" vertices densified until each meets the
/// bound, with the k "low" vertices attached sparsely at random. The degree
/// property is asserted before returning.
pub fn gen_dirac_deficient(n: usize, k: usize, seed: u64) -> Result<Graph, GenError> {
    if k > n {
        return Err(GenError::ParameterRange {
            requirement: "k <= n",
            n,
            k,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let high = n - k;
    if n == 0 {
        return Ok(Graph::new(0));
    }
    if k == n {
        // Vacuous bound: any graph qualifies.
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        return Ok(g);
    }
    if high >= 1 && n == 1 {
        // A single vertex has degree 0 < 1/2 rounded up; nothing to densify with.
        return Err(GenError::Unsatisfiable { n });
    }

    let mut g = Graph::new(n);
    // Vertices 0..high are the high-degree ones.
    for u in 0..high {
        for v in (u + 1)..high {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    // Sparse attachment for the low vertices.
    for v in high..n {
        let picks = rng.gen_range(1..=3.min(n - 1));
        for _ in 0..picks {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            g.add_edge(u, v);
        }
    }
    // Densify: every high vertex must reach degree >= n/2.
    let target = n.div_ceil(2);
    for u in 0..high {
        while g.degree(u) < target {
            let candidates: Vec<usize> = (0..n).filter(|&v| v != u && !g.has_edge(u, v)).collect();
            let &v = candidates
                .choose(&mut rng)
                .expect("degree target is below n - 1");
            g.add_edge(u, v);
        }
    }
    let satisfied = (0..n).filter(|&v| 2 * g.degree(v) >= n).count();
    assert!(satisfied >= n - k, "generator failed its own degree bound");
    Ok(g)
}
