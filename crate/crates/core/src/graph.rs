//! Signed-graph data model and switching calculus.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sign of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// A sorted set of distinct vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(VertexSet(v))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    fn membership(&self, n: usize) -> Result<Vec<bool>> {
        self.check_range(n)?;
        let mut inside = vec![false; n];
        for &v in &self.0 {
            inside[v] = true;
        }
        Ok(inside)
    }
}

/// A simple signed graph on vertices `0..n`.
///
/// Stored as a dense signed adjacency matrix with entries in {-1, 0, 1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}, [", self.n)?;
        for (i, (u, v, s)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}{}", u, if s.is_negative() { '-' } else { '+' }, v)?;
        }
        write!(f, "])")
    }
}

impl SignedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SignedGraph { n, adj: vec![0; n * n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut g = SignedGraph::empty(n);
        for (u, v, s) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.adj[u * n + v] != 0 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v, s.value());
        }
        Ok(g)
    }

    /// Complete graph with every edge positive.
    pub fn complete(n: usize) -> Self {
        let mut g = SignedGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, 1);
            }
        }
        g
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, value: i8) {
        self.adj[u * self.n + v] = value;
        self.adj[v * self.n + u] = value;
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, u: usize, v: usize) -> i8 {
        self.adj[u * self.n + v]
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        Sign::from_value(self.entry(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.entry(u, v) != 0
    }

    /// Edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter_map(move |v| self.sign(u, v).map(|s| (u, v, s))))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&x| x != 0).count() / 2
    }

    /// Number of unordered non-adjacent pairs, `n(n-1)/2 - m`.
    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.edges().filter(|e| e.2.is_negative()).map(|(u, v, _)| (u, v)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    /// Signed adjacency matrix, row-major.
    pub fn adjacency(&self) -> Vec<f64> {
        self.adj.iter().map(|&x| x as f64).collect()
    }

    pub fn adjacency_i64(&self) -> Vec<i64> {
        self.adj.iter().map(|&x| x as i64).collect()
    }

    /// The same underlying graph with every edge positive.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&x| x.abs()).collect() }
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| (*a == 0) == (*b == 0))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Flip the sign of every edge with exactly one endpoint in `u`.
    pub fn switch(&self, u: &VertexSet) -> Result<SignedGraph> {
        let inside = u.membership(self.n)?;
        let mut g = self.clone();
        for a in 0..self.n {
            for b in 0..self.n {
                if inside[a] != inside[b] {
                    g.adj[a * self.n + b] = -g.adj[a * self.n + b];
                }
            }
        }
        Ok(g)
    }

    pub fn negate(&self) -> SignedGraph {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&x| -x).collect() }
    }

    /// Relabel vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut g = SignedGraph::empty(self.n);
        for (u, v, s) in self.edges() {
            g.set(perm[u], perm[v], s.value());
        }
        g
    }

    /// A vertex signing `s` with `sigma(uv) = s(u) s(v)` on every edge, if one exists.
    ///
    /// Found by breadth-first sign propagation from the least vertex of each component.
    pub fn balancing_signs(&self) -> Option<Vec<i8>> {
        let mut s = vec![0i8; self.n];
        for root in 0..self.n {
            if s[root] != 0 {
                continue;
            }
            s[root] = 1;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    let want = s[u] * self.entry(u, v);
                    if s[v] == 0 {
                        s[v] = want;
                        queue.push_back(v);
                    } else if s[v] != want {
                        return None;
                    }
                }
            }
        }
        Some(s)
    }

    pub fn is_balanced(&self) -> bool {
        self.balancing_signs().is_some()
    }

    pub fn cycle_sign_signature(&self) -> CycleSignSignature {
        CycleSignSignature::of(self)
    }

    /// Relabeling-free switching equivalence: same underlying graph and same cycle signs.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<bool> {
        if !self.same_underlying(other) {
            return Err(Error::UnderlyingMismatch);
        }
        Ok(self.cycle_sign_signature() == other.cycle_sign_signature())
    }

    /// Exact frustration index: minimum negative-edge count over all switchings.
    pub fn frustration_index(&self) -> Result<usize> {
        self.frustration_switching().map(|(eps, _)| eps)
    }

    /// Frustration index together with a switching set attaining it.
    ///
    /// Each component is searched independently, with its least vertex held
    /// fixed, by walking a Gray code over the remaining vertices.
    pub fn frustration_switching(&self) -> Result<(usize, VertexSet)> {
        const LIMIT: usize = 30;
        if self.n > LIMIT {
            return Err(Error::SizeLimit { what: "exact frustration index", n: self.n, limit: LIMIT });
        }
        let mut total = 0;
        let mut chosen = Vec::new();
        for comp in self.components() {
            let free = &comp[1..];
            let mut side = vec![1i8; self.n];
            // number of negative edges inside this component for the current switching
            let mut neg = comp
                .iter()
                .flat_map(|&u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
                .filter(|&(u, v)| self.entry(u, v) < 0)
                .count() as i64;
            let mut best = neg;
            let mut best_code = 0u64;
            let mut code = 0u64;
            for step in 1u64..(1u64 << free.len()) {
                let bit = step.trailing_zeros() as usize;
                let v = free[bit];
                // flipping v toggles every edge at v
                let mut delta = 0i64;
                for w in self.neighbors(v) {
                    let current = self.entry(v, w) * side[v] * side[w];
                    delta += if current < 0 { -1 } else { 1 };
                }
                side[v] = -side[v];
                code ^= 1 << bit;
                neg += delta;
                if neg < best {
                    best = neg;
                    best_code = code;
                }
            }
            total += best as usize;
            chosen.extend(free.iter().enumerate().filter(|(i, _)| best_code >> i & 1 == 1).map(|(_, &v)| v));
        }
        Ok((total, VertexSet::new(chosen)?))
    }

    /// Induced subgraph on `s`, relabeled `0..|s|` in ascending order.
    pub fn induced(&self, s: &VertexSet) -> Result<SignedGraph> {
        s.check_range(self.n)?;
        let vs = s.as_slice();
        let mut g = SignedGraph::empty(vs.len());
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                let x = self.entry(a, b);
                if x != 0 {
                    g.set(i, j, x);
                }
            }
        }
        Ok(g)
    }
}

/// Signs of the fundamental cycles of a deterministic BFS spanning forest.
///
/// The forest is grown from the least vertex of each component, visiting
/// neighbours in ascending order. Each cotree edge, in lexicographic order,
/// carries the sign of the unique cycle it closes with the forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleSignSignature {
    pub cotree_edges: Vec<(usize, usize)>,
    pub signs: Vec<Sign>,
}

impl CycleSignSignature {
    fn of(g: &SignedGraph) -> Self {
        let forest = SpanningForest::of(g);
        let potential = forest.potentials(g);
        let mut cotree_edges = Vec::new();
        let mut signs = Vec::new();
        for (u, v, s) in g.edges() {
            if forest.is_tree_edge(u, v) {
                continue;
            }
            cotree_edges.push((u, v));
            let cycle = s.value() * potential[u] * potential[v];
            signs.push(if cycle > 0 { Sign::Positive } else { Sign::Negative });
        }
        CycleSignSignature { cotree_edges, signs }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn all_positive(&self) -> bool {
        self.signs.iter().all(|s| *s == Sign::Positive)
    }
}

/// BFS spanning forest, rooted at the least vertex of each component.
#[derive(Clone, Debug)]
pub(crate) struct SpanningForest {
    pub parent: Vec<Option<usize>>,
    /// Vertices in BFS visiting order.
    pub order: Vec<usize>,
    pub components: usize,
}

impl SpanningForest {
    pub fn of(g: &SignedGraph) -> Self {
        let n = g.order();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut components = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        parent[v] = Some(u);
                        queue.push_back(v);
                    }
                }
            }
        }
        SpanningForest { parent, order, components }
    }

    pub fn is_tree_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    /// Product of edge signs along the forest path from each vertex to its root.
    pub fn potentials(&self, g: &SignedGraph) -> Vec<i8> {
        let mut pot = vec![1i8; g.order()];
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                pot[v] = pot[p] * g.entry(p, v);
            }
        }
        pot
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        SignedGraph::from_edges(3, [(0, 1, signs[0]), (0, 2, signs[1]), (1, 2, signs[2])]).unwrap()
    }

    use Sign::{Negative as N, Positive as P};

    #[test]
    fn switch_flips_cut_edges() {
        let g = triangle([N, P, P]);
        let s = g.switch(&VertexSet::new([0]).unwrap()).unwrap();
        assert_eq!(s.negative_edges(), vec![(0, 2)]);
        assert_eq!(g.switch(&VertexSet::empty()).unwrap(), g);
        assert_eq!(g.switch(&VertexSet::all(3)).unwrap(), g);
    }

    #[test]
    fn switch_rejects_out_of_range() {
        let g = triangle([P, P, P]);
        assert_eq!(g.switch(&VertexSet::new([3]).unwrap()), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(SignedGraph::from_edges(2, [(0, 0, P)]), Err(Error::SelfLoop(0))));
        assert!(matches!(SignedGraph::from_edges(3, [(0, 1, P), (1, 0, N)]), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(SignedGraph::from_edges(2, [(0, 2, P)]), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(VertexSet::new([1, 1]), Err(Error::DuplicateVertex(1))));
    }

    #[test]
    fn balance_examples() {
        assert!(SignedGraph::complete(5).is_balanced());
        assert!(!triangle([P, N, P]).is_balanced());
        let c4 = SignedGraph::from_edges(4, [(0, 1, N), (1, 2, P), (2, 3, N), (0, 3, P)]).unwrap();
        assert!(c4.is_balanced());
        assert!(SignedGraph::empty(0).is_balanced());
    }

    #[test]
    fn signature_examples() {
        let sig = triangle([P, P, N]).cycle_sign_signature();
        assert_eq!(sig.signs, vec![N]);
        assert_eq!(sig.cotree_edges, vec![(1, 2)]);
        assert!(SignedGraph::complete(5).cycle_sign_signature().all_positive());
        assert_eq!(SignedGraph::complete(5).cycle_sign_signature().len(), 10 - 5 + 1);
        assert!(SignedGraph::empty(0).cycle_sign_signature().is_empty());
    }

    #[test]
    fn equivalence_examples() {
        let one = triangle([N, P, P]);
        let all = triangle([N, N, N]);
        assert_eq!(one.switching_equivalent(&all), Ok(true));
        assert_eq!(triangle([P, P, P]).switching_equivalent(&one), Ok(false));
        let path = SignedGraph::from_edges(3, [(0, 1, P), (1, 2, P)]).unwrap();
        assert_eq!(path.switching_equivalent(&one), Err(Error::UnderlyingMismatch));
    }

    #[test]
    fn frustration_examples() {
        assert_eq!(SignedGraph::complete(6).frustration_index(), Ok(0));
        assert_eq!(triangle([P, N, P]).frustration_index(), Ok(1));
        assert_eq!(triangle([N, N, N]).frustration_index(), Ok(1));
        assert_eq!(SignedGraph::empty(0).frustration_index(), Ok(0));
        assert!(matches!(SignedGraph::empty(31).frustration_index(), Err(Error::SizeLimit { .. })));
        // two disjoint all-negative triangles
        let g = SignedGraph::from_edges(6, [(0, 1, N), (0, 2, N), (1, 2, N), (3, 4, N), (3, 5, N), (4, 5, N)]).unwrap();
        let (eps, u) = g.frustration_switching().unwrap();
        assert_eq!(eps, 2);
        assert_eq!(g.switch(&u).unwrap().negative_edges().len(), 2);
    }

    #[test]
    fn induced_relabels() {
        let g = triangle([N, P, P]);
        assert_eq!(g.induced(&VertexSet::all(3)).unwrap(), g);
        assert_eq!(g.induced(&VertexSet::empty()).unwrap().order(), 0);
        let e = g.induced(&VertexSet::new([0, 1]).unwrap()).unwrap();
        assert_eq!(e.negative_edges(), vec![(0, 1)]);
    }

    #[test]
    fn negate_involution() {
        let g = triangle([N, P, P]);
        assert_eq!(g.negate().negate(), g);
        assert_eq!(SignedGraph::empty(4).negate(), SignedGraph::empty(4));
        assert_eq!(g.negate().negative_edges(), vec![(0, 2), (1, 2)]);
    }
}
