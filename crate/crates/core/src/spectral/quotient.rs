//! Equitable partitions and their quotient matrices.

use serde::Serialize;

use super::jacobi::symmetric_eigenvalues;
use super::poly::{char_poly, IntPolynomial};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Default tolerance for matching quotient eigenvalues against the graph spectrum.
pub const CONTAINMENT_TOL: f64 = 1e-8;

/// Ordered list of disjoint, non-empty blocks covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(VertexPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition { n, blocks: (0..n).map(|v| vec![v]).collect() }
    }

    /// Consecutive blocks of the given sizes: `[0, s0)`, `[s0, s0 + s1)`, ...
    pub fn consecutive(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let mut blocks = Vec::with_capacity(sizes.len());
        for &s in sizes {
            blocks.push((start..start + s).collect());
            start += s;
        }
        VertexPartition::new(start, blocks)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// k x k matrix of common block row sums, with the block sizes it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix {
    k: usize,
    entries: Vec<i64>,
    sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Build from rows and block sizes. Rows must be square of length `sizes.len()`.
    pub fn from_rows(rows: &[Vec<i64>], sizes: &[usize]) -> Result<Self> {
        let k = sizes.len();
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension(rows.len()));
        }
        Ok(QuotientMatrix { k, entries: rows.concat(), sizes: sizes.to_vec() })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.k + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.k.max(1)).map(<[i64]>::to_vec).take(self.k).collect()
    }

    pub fn char_poly(&self) -> Result<IntPolynomial> {
        char_poly(&self.entries, self.k)
    }

    /// Eigenvalues, descending.
    ///
    /// A quotient of a symmetric matrix satisfies `s_i b_ij = s_j b_ji`, so
    /// `D^(1/2) Q D^(-1/2)` with `D = diag(sizes)` is symmetric and shares
    /// the spectrum of `Q`.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let k = self.k;
        let mut sym = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                let si = self.sizes[i] as i64;
                let sj = self.sizes[j] as i64;
                if si * self.entry(i, j) != sj * self.entry(j, i) {
                    return Err(Error::InvalidParameter(format!(
                        "quotient entry ({i}, {j}) is not consistent with a symmetric matrix"
                    )));
                }
                sym[i * k + j] = self.entry(i, j) as f64 * (si as f64 / sj as f64).sqrt();
            }
        }
        Ok(symmetric_eigenvalues(&sym, k))
    }
}

/// Quotient matrix of `A(g)` for an equitable partition.
pub fn equitable_quotient(g: &SignedGraph, p: &VertexPartition) -> Result<QuotientMatrix> {
    if p.order() != g.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.order(),
            g.order()
        )));
    }
    let k = p.blocks().len();
    let mut entries = vec![0i64; k * k];
    for (i, bi) in p.blocks().iter().enumerate() {
        for (j, bj) in p.blocks().iter().enumerate() {
            let row_sum = |r: usize| bj.iter().map(|&c| g.entry(r, c) as i64).sum::<i64>();
            let first = row_sum(bi[0]);
            if let Some(&r) = bi[1..].iter().find(|&&r| row_sum(r) != first) {
                return Err(Error::NotEquitable { i, j, row_a: bi[0], first, row_b: r, second: row_sum(r) });
            }
            entries[i * k + j] = first;
        }
    }
    Ok(QuotientMatrix { k, entries, sizes: p.sizes() })
}

/// Greedily match every value of `sub` to a distinct nearest value of `sup`.
pub fn eigenvalues_contained(sub: &[f64], sup: &[f64], tol: f64) -> bool {
    let mut used = vec![false; sup.len()];
    for &x in sub {
        let best = sup
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|a, b| (a.1 - x).abs().total_cmp(&(b.1 - x).abs()));
        match best {
            Some((i, &y)) if (y - x).abs() <= tol => used[i] = true,
            _ => return false,
        }
    }
    true
}

/// Every eigenvalue of `q` appears in the spectrum of `g`, within [`CONTAINMENT_TOL`].
pub fn quotient_containment_check(g: &SignedGraph, q: &QuotientMatrix) -> bool {
    let spec = super::eigenvalues(g);
    match q.eigenvalues() {
        Ok(qe) => eigenvalues_contained(&qe, &spec.eigenvalues, CONTAINMENT_TOL),
        Err(_) => false,
    }
}

/// Subtract from each block of `A(g)` the constant multiple of `J` that
/// matches its off-diagonal entries.
///
/// Every block must be constant apart from the diagonal of diagonal blocks.
/// The eigenvalues of the residual outside the (now zero) quotient are the
/// eigenvalues of `A(g)` outside the spectrum of its quotient.
pub fn block_shift_residual(g: &SignedGraph, p: &VertexPartition) -> Result<Vec<f64>> {
    let n = g.order();
    let mut res = g.adjacency();
    for (i, bi) in p.blocks().iter().enumerate() {
        for (j, bj) in p.blocks().iter().enumerate() {
            let mut constant = None;
            for &r in bi {
                for &c in bj {
                    if r == c {
                        continue;
                    }
                    let x = g.entry(r, c);
                    match constant {
                        None => constant = Some(x),
                        Some(y) if y != x => return Err(Error::NotBlockConstant { i, j }),
                        _ => {}
                    }
                }
            }
            let c = constant.unwrap_or(0) as f64;
            for &r in bi {
                for &col in bj {
                    res[r * n + col] -= c;
                }
            }
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::Positive as P;

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(matches!(VertexPartition::new(3, vec![vec![0, 1]]), Err(Error::InvalidPartition(_))));
        assert!(matches!(VertexPartition::new(2, vec![vec![0, 1], vec![]]), Err(Error::InvalidPartition(_))));
        assert!(matches!(VertexPartition::new(2, vec![vec![0, 1, 1]]), Err(Error::InvalidPartition(_))));
        assert!(matches!(VertexPartition::new(2, vec![vec![0, 2]]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn path_quotient() {
        let p3 = SignedGraph::from_edges(3, [(0, 1, P), (1, 2, P)]).unwrap();
        let part = VertexPartition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let q = equitable_quotient(&p3, &part).unwrap();
        assert_eq!(q.rows(), vec![vec![0, 1], vec![2, 0]]);
        assert!(quotient_containment_check(&p3, &q));
    }

    #[test]
    fn singleton_quotient_is_adjacency() {
        let k5 = SignedGraph::complete(5);
        let q = equitable_quotient(&k5, &VertexPartition::singletons(5)).unwrap();
        assert_eq!(q.entries(), k5.adjacency_i64().as_slice());
        assert!(quotient_containment_check(&k5, &q));
    }

    #[test]
    fn not_equitable_reports_witness() {
        let p3 = SignedGraph::from_edges(3, [(0, 1, P), (1, 2, P)]).unwrap();
        let part = VertexPartition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(
            equitable_quotient(&p3, &part),
            Err(Error::NotEquitable { i: 0, j: 1, row_a: 0, first: 0, row_b: 1, second: 1 })
        ));
    }

    #[test]
    fn containment_greedy() {
        assert!(eigenvalues_contained(&[1.0, 1.0], &[1.0, 1.0 + 1e-10, 0.0], 1e-8));
        assert!(!eigenvalues_contained(&[1.0, 1.0], &[1.0, 0.0], 1e-8));
    }
}
