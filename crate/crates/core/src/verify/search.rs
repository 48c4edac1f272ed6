//! Randomized local search for large spectral radius among unbalanced
//! `K_k^-`-free signed graphs, for orders beyond exhaustive reach.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexSet};
use crate::io::{round_sig, GraphJson};
use crate::spectral::eigenvalues;
use crate::subgraphs::contains_unbalanced_clique;

use super::SCHEMA_VERSION;

/// Largest order accepted by the search.
pub const MAX_SEARCH_ORDER: usize = 30;

const START_TEMPERATURE: f64 = 0.5;
const MAX_REPAIRS: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub iterations: u64,
    pub accepted_moves: u64,
    pub start_radius: f64,
    pub best_radius: f64,
    pub best_index: f64,
    pub best: GraphJson,
}

/// `K_{n-1}` on `1..n` plus vertex 0 joined to `1..=k-2`, with edge `{0, 1}` negative.
pub fn warm_start(n: usize, k: usize) -> SignedGraph {
    let mut g = SignedGraph::empty(n);
    for u in 1..n {
        for v in u + 1..n {
            g.set(u, v, 1);
        }
    }
    for v in 1..=k - 2 {
        g.set(0, v, if v == 1 { -1 } else { 1 });
    }
    g
}

fn feasible(g: &SignedGraph, k: usize) -> bool {
    !g.is_balanced() && contains_unbalanced_clique(g, k).is_none()
}

/// Delete random edges of unbalanced `K_k` witnesses until none is left.
/// Returns whether the result is feasible.
fn repair(g: &mut SignedGraph, k: usize, rng: &mut ChaCha8Rng) -> bool {
    for _ in 0..MAX_REPAIRS {
        let Some(w) = contains_unbalanced_clique(g, k) else {
            return !g.is_balanced();
        };
        let c = w.vertices.as_slice();
        let a = rng.gen_range(0..c.len());
        let mut b = rng.gen_range(0..c.len() - 1);
        if b >= a {
            b += 1;
        }
        g.set(c[a], c[b], 0);
    }
    feasible(g, k)
}

fn radius(g: &SignedGraph) -> f64 {
    eigenvalues(g).spectral_radius()
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u.min(v), u.max(v))
}

/// Apply one random move in place: toggle a pair, flip an edge sign, or switch a vertex set.
fn perturb(g: &mut SignedGraph, rng: &mut ChaCha8Rng) {
    let n = g.order();
    match rng.gen_range(0..3) {
        0 => {
            let (u, v) = random_pair(rng, n);
            let s = if g.has_edge(u, v) {
                0
            } else if rng.gen_bool(0.5) {
                1
            } else {
                -1
            };
            g.set(u, v, s);
        }
        1 => {
            let (u, v) = random_pair(rng, n);
            let s = g.entry(u, v);
            g.set(u, v, -s);
        }
        _ => {
            let set = VertexSet::new((0..n).filter(|_| rng.gen_bool(0.5))).expect("distinct vertices");
            *g = g.switch(&set).expect("vertices in range");
        }
    }
}

/// Simulated annealing from [`warm_start`]. A move creating an unbalanced `K_k`
/// is repaired by deleting clique edges; moves that stay infeasible are reverted.
/// The result depends only on the arguments.
pub fn extremal_search(n: usize, k: usize, iterations: u64, seed: u64) -> Result<SearchReport> {
    if k < 5 || n < k {
        return Err(Error::InvalidParameter(format!("search needs 5 <= k <= n (got n = {n}, k = {k})")));
    }
    if n > MAX_SEARCH_ORDER {
        return Err(Error::SizeLimit { what: "search", n, limit: MAX_SEARCH_ORDER });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = warm_start(n, k);
    debug_assert!(feasible(&current, k));
    let mut current_r = radius(&current);
    let start_radius = current_r;
    let mut best = current.clone();
    let mut best_r = current_r;
    let mut accepted = 0u64;
    for it in 0..iterations {
        let t = START_TEMPERATURE * (1.0 - it as f64 / iterations as f64) + 1e-6;
        let mut cand = current.clone();
        perturb(&mut cand, &mut rng);
        if !repair(&mut cand, k, &mut rng) {
            continue;
        }
        let r = radius(&cand);
        if r >= current_r || rng.gen::<f64>() < ((r - current_r) / t).exp() {
            current = cand;
            current_r = r;
            accepted += 1;
            if r > best_r {
                best = current.clone();
                best_r = r;
            }
        }
    }
    Ok(SearchReport {
        schema_version: SCHEMA_VERSION,
        n,
        k,
        seed,
        iterations,
        accepted_moves: accepted,
        start_radius: round_sig(start_radius),
        best_radius: round_sig(best_r),
        best_index: round_sig(eigenvalues(&best).index()),
        best: GraphJson::from(&best),
    })
}
