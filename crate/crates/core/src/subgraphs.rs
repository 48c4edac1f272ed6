//! Cliques of the underlying graph and their balance.

use serde::Serialize;

use crate::graph::{SignedGraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueWitness {
    pub vertices: VertexSet,
    pub balanced: bool,
}

/// Visit every `k`-clique in lexicographic order of its sorted vertex list.
/// The visitor returns `true` to stop early.
pub fn for_each_k_clique<F>(g: &SignedGraph, k: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> bool,
{
    fn grow<F: FnMut(&[usize]) -> bool>(
        g: &SignedGraph,
        k: usize,
        clique: &mut Vec<usize>,
        candidates: &[usize],
        visit: &mut F,
    ) -> bool {
        if clique.len() == k {
            return visit(clique);
        }
        // not enough candidates left to finish
        if clique.len() + candidates.len() < k {
            return false;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            clique.push(v);
            let stop = grow(g, k, clique, &next, visit);
            clique.pop();
            if stop {
                return true;
            }
        }
        false
    }
    if k == 0 || k > g.order() {
        return;
    }
    let all: Vec<usize> = (0..g.order()).collect();
    grow(g, k, &mut Vec::with_capacity(k), &all, &mut visit);
}

/// Lexicographically least unbalanced `K_k`, if any.
pub fn contains_unbalanced_clique(g: &SignedGraph, k: usize) -> Option<CliqueWitness> {
    let mut found = None;
    for_each_k_clique(g, k, |c| {
        let set = VertexSet::new(c.iter().copied()).expect("clique vertices are distinct");
        let sub = g.induced(&set).expect("clique vertices are in range");
        if sub.is_balanced() {
            false
        } else {
            found = Some(CliqueWitness { vertices: set, balanced: false });
            true
        }
    });
    found
}

pub fn is_unbalanced_clique_free(g: &SignedGraph, k: usize) -> bool {
    contains_unbalanced_clique(g, k).is_none()
}

/// Clique number of the underlying graph (Bron–Kerbosch with pivoting).
pub fn clique_number(g: &SignedGraph) -> usize {
    fn bk(g: &SignedGraph, r: usize, p: Vec<usize>, mut x: Vec<usize>, best: &mut usize) {
        if p.is_empty() {
            if x.is_empty() {
                *best = (*best).max(r);
            }
            return;
        }
        if r + p.len() <= *best {
            return;
        }
        let pivot = *p
            .iter()
            .chain(&x)
            .max_by_key(|&&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("p is non-empty");
        let todo: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        let mut p = p;
        for v in todo {
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            bk(g, r + 1, np, nx, best);
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut best = 0;
    bk(g, 0, (0..g.order()).collect(), Vec::new(), &mut best);
    best
}

/// Largest order of a balanced complete signed subgraph.
pub fn balanced_clique_number(g: &SignedGraph) -> usize {
    // Balance is hereditary, so only balanced cliques are extended. A balanced
    // clique stays balanced after adding v iff every triangle through v and
    // the clique's first vertex is positive.
    fn grow(g: &SignedGraph, clique: &mut Vec<usize>, candidates: &[usize], best: &mut usize) {
        *best = (*best).max(clique.len());
        if clique.len() + candidates.len() <= *best {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let keeps_balance = match clique.first() {
                None => true,
                Some(&a) => clique[1..].iter().all(|&u| g.entry(a, u) * g.entry(u, v) * g.entry(a, v) > 0),
            };
            if !keeps_balance {
                continue;
            }
            let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            clique.push(v);
            grow(g, clique, &next, best);
            clique.pop();
        }
    }
    let mut best = 0;
    let all: Vec<usize> = (0..g.order()).collect();
    grow(g, &mut Vec::new(), &all, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn cycle(n: usize) -> SignedGraph {
        SignedGraph::from_edges(n, (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n), P))).unwrap()
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&SignedGraph::complete(6)), 6);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&SignedGraph::empty(3)), 1);
        assert_eq!(clique_number(&SignedGraph::empty(0)), 0);
    }

    #[test]
    fn balanced_clique_numbers() {
        assert_eq!(balanced_clique_number(&SignedGraph::complete(5)), 5);
        let t = SignedGraph::from_edges(3, [(0, 1, N), (0, 2, P), (1, 2, P)]).unwrap();
        assert_eq!(balanced_clique_number(&t), 2);
        assert_eq!(balanced_clique_number(&SignedGraph::empty(2)), 1);
    }

    #[test]
    fn unbalanced_clique_search() {
        assert!(contains_unbalanced_clique(&SignedGraph::complete(6), 5).is_none());
        let t = SignedGraph::from_edges(3, [(0, 1, N), (0, 2, P), (1, 2, P)]).unwrap();
        let w = contains_unbalanced_clique(&t, 3).unwrap();
        assert_eq!(w.vertices.as_slice(), &[0, 1, 2]);
        assert!(!w.balanced);
        // k larger than n is vacuously free
        assert!(contains_unbalanced_clique(&t, 4).is_none());
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // K5 with edge {3,4} negative: unbalanced triangles are {0,3,4}, {1,3,4}, {2,3,4}
        let mut g = SignedGraph::complete(5);
        g.set(3, 4, -1);
        let w = contains_unbalanced_clique(&g, 3).unwrap();
        assert_eq!(w.vertices.as_slice(), &[0, 3, 4]);
    }
}
