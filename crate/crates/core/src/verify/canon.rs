//! Canonical forms for small signed graphs up to relabeling and switching.
//!
//! The underlying graph is canonized by brute force over all `n!` labelings
//! (minimum adjacency code). Among the labelings that reach the canonical
//! underlying graph, the least cycle-sign signature is taken; two graphs get
//! the same form iff they are switching equivalent after some relabeling.

use std::cmp::Ordering;

use serde::Serialize;

use crate::graph::{Sign, SignedGraph};

/// Largest order accepted by the brute-force canonizer.
pub const MAX_CANON_ORDER: usize = 10;

/// Upper-triangle adjacency code, pairs `(i, j)` with `i < j` in lexicographic order,
/// first pair in the most significant position.
pub fn underlying_code(g: &SignedGraph) -> u64 {
    let n = g.order();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | g.has_edge(i, j) as u64;
        }
    }
    code
}

fn permuted_code(g: &SignedGraph, perm: &[usize], pairs: &[(usize, usize)]) -> u64 {
    // bit for pair (perm[u], perm[v]) of the relabeled graph
    let n = g.order();
    let total = n * n.saturating_sub(1) / 2;
    let mut code = 0u64;
    for &(u, v) in pairs {
        let (a, b) = if perm[u] < perm[v] { (perm[u], perm[v]) } else { (perm[v], perm[u]) };
        let idx = a * (2 * n - a - 1) / 2 + (b - a - 1);
        code |= 1 << (total - 1 - idx);
    }
    code
}

/// Visit every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Canonical underlying code over all labelings, plus every labeling attaining it.
fn canonical_labelings(g: &SignedGraph) -> (u64, Vec<Vec<usize>>) {
    assert!(g.order() <= MAX_CANON_ORDER, "canonical forms are limited to order {MAX_CANON_ORDER}");
    let pairs: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    let mut best = u64::MAX;
    let mut perms = Vec::new();
    for_each_permutation(g.order(), |p| {
        let code = permuted_code(g, p, &pairs);
        match code.cmp(&best) {
            Ordering::Less => {
                best = code;
                perms.clear();
                perms.push(p.to_vec());
            }
            Ordering::Equal => perms.push(p.to_vec()),
            Ordering::Greater => {}
        }
    });
    (best, perms)
}

pub fn canonical_underlying_code(g: &SignedGraph) -> u64 {
    canonical_labelings(g).0
}

/// Complete invariant of a signed graph under relabeling and switching.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub underlying: u64,
    /// `true` marks a negative fundamental cycle, cotree edges in lexicographic order.
    pub negative_cycles: Vec<bool>,
}

/// Canonical form together with the graph it describes: canonically labeled,
/// spanning-forest edges positive, cotree edges carrying their cycle signs.
pub fn canonicalize(g: &SignedGraph) -> (CanonicalForm, SignedGraph) {
    let (code, perms) = canonical_labelings(g);
    let mut best: Option<(Vec<bool>, SignedGraph)> = None;
    for p in perms {
        let h = g.permute(&p);
        let sig = h.cycle_sign_signature();
        let neg: Vec<bool> = sig.signs.iter().map(|s| s.is_negative()).collect();
        if best.as_ref().is_none_or(|(b, _)| neg < *b) {
            let mut normal = h.underlying();
            for (&(u, v), s) in sig.cotree_edges.iter().zip(&sig.signs) {
                normal.set(u, v, s.value());
            }
            best = Some((neg, normal));
        }
    }
    let (negative_cycles, normal) = best.unwrap_or_else(|| (Vec::new(), g.clone()));
    (CanonicalForm { n: g.order(), underlying: code, negative_cycles }, normal)
}

pub fn canonical_form(g: &SignedGraph) -> CanonicalForm {
    canonicalize(g).0
}

/// Switching equivalence up to relabeling.
pub fn equivalent_up_to_relabeling(a: &SignedGraph, b: &SignedGraph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Graph from an underlying code, all edges positive.
pub fn graph_from_code(n: usize, code: u64) -> SignedGraph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = SignedGraph::empty(n);
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> (total - 1 - idx) & 1 == 1 {
                g.set(i, j, Sign::Positive.value());
            }
            idx += 1;
        }
    }
    g
}
