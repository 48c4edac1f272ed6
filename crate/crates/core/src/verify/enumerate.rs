//! Enumeration of signed graphs one switching class at a time.
//!
//! For a fixed underlying graph, fix the BFS spanning forest positive and
//! range over all sign assignments of the cotree edges. Each assignment
//! realizes a different set of fundamental-cycle signs, so every switching
//! class is produced exactly once.

use crate::graph::{SignedGraph, SpanningForest};
use crate::spectral::jacobi::jacobi_in_place;

use super::canon::{canonical_underlying_code, graph_from_code};

/// Largest order handled by the bitmask fast path.
pub const MAX_FAST_ORDER: usize = 11;

/// Precomputed data for streaming the switching classes of one underlying graph.
#[derive(Clone, Debug)]
pub struct ClassSpace {
    n: usize,
    edges: Vec<(usize, usize)>,
    cotree: Vec<usize>,
    components: usize,
    /// For each `K_k` of the underlying graph, the edge masks of the triangles
    /// through its least vertex.
    clique_triangles: Vec<Vec<u64>>,
}

impl ClassSpace {
    /// `forbidden` is the clique order `k` whose unbalanced copies are tracked.
    pub fn new(underlying: &SignedGraph, forbidden: usize) -> Self {
        let n = underlying.order();
        assert!(n <= MAX_FAST_ORDER, "fast class enumeration is limited to order {MAX_FAST_ORDER}");
        let edges: Vec<(usize, usize)> = underlying.edges().map(|(u, v, _)| (u, v)).collect();
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i;
            index[v * n + u] = i;
        }
        let forest = SpanningForest::of(underlying);
        let cotree =
            edges.iter().enumerate().filter(|(_, &(u, v))| !forest.is_tree_edge(u, v)).map(|(i, _)| i).collect();
        let mut clique_triangles = Vec::new();
        if forbidden >= 3 {
            crate::subgraphs::for_each_k_clique(underlying, forbidden, |c| {
                let a = c[0];
                let mut tris = Vec::new();
                for (x, &b) in c.iter().enumerate().skip(1) {
                    for &d in &c[x + 1..] {
                        tris.push((1u64 << index[a * n + b]) | (1u64 << index[a * n + d]) | (1u64 << index[b * n + d]));
                    }
                }
                clique_triangles.push(tris);
                false
            });
        }
        ClassSpace { n, edges, cotree, components: forest.components, clique_triangles }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// `m - n + c`.
    pub fn cotree_len(&self) -> usize {
        self.cotree.len()
    }

    pub fn class_count(&self) -> u64 {
        1u64 << self.cotree.len()
    }

    /// Negative-edge mask of the representative for cotree assignment `bits`.
    pub fn negative_mask(&self, bits: u64) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.cotree.iter().enumerate() {
            if bits >> i & 1 == 1 {
                mask |= 1 << e;
            }
        }
        mask
    }

    /// The representative is balanced iff no cotree edge is negative.
    pub fn is_balanced_bits(bits: u64) -> bool {
        bits == 0
    }

    /// Does the graph with negative-edge mask `neg` contain an unbalanced forbidden clique?
    pub fn has_unbalanced_clique(&self, neg: u64) -> bool {
        self.clique_triangles.iter().any(|tris| tris.iter().any(|&t| (t & neg).count_ones() % 2 == 1))
    }

    pub fn graph(&self, neg: u64) -> SignedGraph {
        let mut g = SignedGraph::empty(self.n);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            g.set(u, v, if neg >> i & 1 == 1 { -1 } else { 1 });
        }
        g
    }

    /// `(index, least eigenvalue)` of the graph with negative-edge mask `neg`.
    pub fn extreme_eigenvalues(&self, neg: u64, work: &mut Vec<f64>) -> (f64, f64) {
        let n = self.n;
        work.clear();
        work.resize(n * n, 0.0);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let s = if neg >> i & 1 == 1 { -1.0 } else { 1.0 };
            work[u * n + v] = s;
            work[v * n + u] = s;
        }
        jacobi_in_place(work, n, None);
        let mut hi = f64::NEG_INFINITY;
        let mut lo = f64::INFINITY;
        for i in 0..n {
            hi = hi.max(work[i * n + i]);
            lo = lo.min(work[i * n + i]);
        }
        if n == 0 {
            (0.0, 0.0)
        } else {
            (hi, lo)
        }
    }
}

/// Stream one representative per switching class of `underlying` (signs ignored).
/// Returns the number of classes, `2^(m - n + c)`.
pub fn enumerate_switching_classes<F>(underlying: &SignedGraph, mut sink: F) -> u64
where
    F: FnMut(&SignedGraph),
{
    let space = ClassSpace::new(underlying, 0);
    for bits in 0..space.class_count() {
        sink(&space.graph(space.negative_mask(bits)));
    }
    space.class_count()
}

/// All labeled graphs on `n` vertices, as all-positive signed graphs, indexed by code.
pub fn labeled_underlying(n: usize, code: u64) -> SignedGraph {
    graph_from_code(n, code)
}

pub fn labeled_underlying_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// One representative per isomorphism class of graphs on `n` vertices with at
/// most `max_missing` non-edges, sorted by canonical code.
///
/// Complements are grown one edge at a time and deduplicated by canonical form.
pub fn near_complete_underlying(n: usize, max_missing: usize) -> Vec<SignedGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let full = if pairs == 0 { 0 } else { u64::MAX >> (64 - pairs) };
    // canonical codes of complements with exactly h edges
    let mut layer = vec![0u64];
    let mut all = vec![0u64];
    for _ in 0..max_missing.min(pairs) {
        let mut next = std::collections::BTreeSet::new();
        for &code in &layer {
            for bit in 0..pairs {
                if code >> bit & 1 == 0 {
                    let g = graph_from_code(n, code | 1 << bit);
                    next.insert(canonical_underlying_code(&g));
                }
            }
        }
        layer = next.into_iter().collect();
        all.extend(&layer);
    }
    let mut reps: Vec<SignedGraph> = all.into_iter().map(|c| graph_from_code(n, full & !c)).collect();
    reps.sort_by_key(|g| std::cmp::Reverse(super::canon::underlying_code(g)));
    reps
}
