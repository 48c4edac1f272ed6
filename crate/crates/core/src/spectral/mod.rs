//! Eigenvalues, exact characteristic polynomials and quotient-matrix calculus.

pub mod jacobi;
pub mod poly;
pub mod quotient;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexSet};

pub use poly::{char_poly, IntPolynomial};
pub use quotient::{
    block_shift_residual, eigenvalues_contained, equitable_quotient, quotient_containment_check, QuotientMatrix,
    VertexPartition,
};

/// Eigenvalues of a signed graph, sorted descending.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    /// Largest eigenvalue; 0 for the empty graph.
    pub fn index(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn least(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn spectral_radius(&self) -> f64 {
        self.index().abs().max(self.least().abs())
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }
}

pub fn eigenvalues(g: &SignedGraph) -> Spectrum {
    Spectrum { eigenvalues: jacobi::symmetric_eigenvalues(&g.adjacency(), g.order()) }
}

/// A switching of `g` whose top eigenvector is non-negative.
///
/// Takes a unit top eigenvector `x` of `g` and switches on `{i : x_i < 0}`;
/// the switched graph has `|x|` as a top eigenvector.
pub fn nonneg_eigenvector_form(g: &SignedGraph) -> Result<(SignedGraph, Vec<f64>)> {
    let n = g.order();
    if n == 0 {
        return Ok((g.clone(), Vec::new()));
    }
    let (lambda, x) = jacobi::symmetric_eigen(&g.adjacency(), n).swap_remove(0);
    let negative = VertexSet::new((0..n).filter(|&i| x[i] < 0.0))?;
    let switched = g.switch(&negative)?;
    let y: Vec<f64> = x.iter().map(|v| v.abs()).collect();
    let a = switched.adjacency();
    let residual =
        (0..n).map(|i| ((0..n).map(|j| a[i * n + j] * y[j]).sum::<f64>() - lambda * y[i]).abs()).fold(0.0, f64::max);
    if residual > 1e-8 {
        return Err(Error::DegenerateEigenvector { residual });
    }
    Ok((switched, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    #[test]
    fn complete_graph_spectrum() {
        for n in 1..8 {
            let s = eigenvalues(&SignedGraph::complete(n));
            assert!((s.index() - (n as f64 - 1.0)).abs() < 1e-12);
            for &l in &s.eigenvalues[1..] {
                assert!((l + 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn unbalanced_triangle_spectrum() {
        let g = SignedGraph::from_edges(3, [(0, 1, N), (0, 2, P), (1, 2, P)]).unwrap();
        let s = eigenvalues(&g);
        for (a, b) in s.eigenvalues.iter().zip([1.0, 1.0, -2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!((s.spectral_radius() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn empty_graph_spectrum() {
        let s = eigenvalues(&SignedGraph::empty(0));
        assert_eq!(s.index(), 0.0);
        assert_eq!(s.spectral_radius(), 0.0);
    }

    #[test]
    fn nonneg_form_on_triangle() {
        let g = SignedGraph::from_edges(3, [(0, 1, N), (0, 2, P), (1, 2, P)]).unwrap();
        let (h, x) = nonneg_eigenvector_form(&g).unwrap();
        assert!(x.iter().all(|&v| v >= -1e-9));
        assert_eq!(h.switching_equivalent(&g), Ok(true));
        assert!((eigenvalues(&h).index() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nonneg_form_on_balanced_graph_is_perron() {
        let g = SignedGraph::complete(4).switch(&VertexSet::new([1, 2]).unwrap()).unwrap();
        let (h, x) = nonneg_eigenvector_form(&g).unwrap();
        assert!(h.negative_edges().is_empty());
        assert!(x.iter().all(|&v| (v - 0.5).abs() < 1e-9));
    }
}
