//! Spectral upper bounds for signed graphs and a per-graph audit.

use serde::Serialize;

use crate::graph::SignedGraph;
use crate::io::round_sig;
use crate::spectral::eigenvalues;
use crate::subgraphs::{balanced_clique_number, clique_number, contains_unbalanced_clique};

pub const AUDIT_TOL: f64 = 1e-9;

/// Radius bound for connected unbalanced graphs without an unbalanced triangle.
pub fn bound_k3_free(n: usize) -> f64 {
    let n = n as f64;
    0.5 * ((n * n - 8.0).sqrt() + n - 4.0)
}

/// Radius bound for unbalanced graphs without an unbalanced `K_4`.
pub fn bound_k4_free(n: usize) -> f64 {
    n as f64 - 2.0
}

/// Index bound from the frustration index; `None` when the radicand is negative.
pub fn bound_frustration(n: usize, m: usize, eps: usize) -> Option<f64> {
    let radicand = 2.0 * (m as f64 - eps as f64) - n as f64 + 1.0;
    (radicand >= 0.0).then(|| radicand.sqrt())
}

/// Wilf's bound on the index of the underlying graph.
pub fn bound_wilf(n: usize, omega: usize) -> f64 {
    n as f64 * (1.0 - 1.0 / omega as f64)
}

/// Index bound from the balanced clique number.
pub fn bound_balanced_clique(n: usize, omega_b: usize) -> f64 {
    n as f64 * (1.0 - 1.0 / omega_b as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    K3Free,
    K4Free,
    Frustration,
    Wilf,
    BalancedClique,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::K3Free => "k3-free",
            BoundKind::K4Free => "k4-free",
            BoundKind::Frustration => "frustration",
            BoundKind::Wilf => "wilf",
            BoundKind::BalancedClique => "balanced-clique",
        }
    }

    /// Which quantity the bound controls.
    pub fn quantity(self) -> &'static str {
        match self {
            BoundKind::K3Free | BoundKind::K4Free => "spectral radius",
            BoundKind::Frustration | BoundKind::BalancedClique => "index",
            BoundKind::Wilf => "underlying index",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRecord {
    pub bound: BoundKind,
    pub quantity: &'static str,
    pub applicable: bool,
    pub bound_value: f64,
    pub actual_value: f64,
    pub satisfied: bool,
    pub slack: f64,
}

impl BoundRecord {
    fn new(bound: BoundKind, applicable: bool, bound_value: f64, actual_value: f64) -> Self {
        let slack = bound_value - actual_value;
        BoundRecord {
            bound,
            quantity: bound.quantity(),
            applicable,
            bound_value: round_sig(bound_value),
            actual_value: round_sig(actual_value),
            satisfied: !applicable || actual_value <= bound_value + AUDIT_TOL,
            slack: round_sig(slack),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub frustration_index: usize,
    pub clique_number: usize,
    pub balanced_clique_number: usize,
    pub connected: bool,
    pub balanced: bool,
    pub k3_free: bool,
    pub k4_free: bool,
    pub index: f64,
    pub spectral_radius: f64,
    pub records: Vec<BoundRecord>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundRecord> {
        self.records.iter().filter(|r| r.applicable && !r.satisfied)
    }

    pub fn all_satisfied(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn record(&self, kind: BoundKind) -> &BoundRecord {
        self.records.iter().find(|r| r.bound == kind).expect("every bound is recorded")
    }
}

/// Evaluate every bound against `g`.
///
/// Frustration index is exact, so `g` must have at most 30 vertices.
pub fn audit(g: &SignedGraph) -> BoundReport {
    let n = g.order();
    let m = g.edge_count();
    let spectrum = eigenvalues(g);
    let underlying = eigenvalues(&g.underlying());
    let eps = g.frustration_index().expect("audit is limited to graphs of exact-frustration size");
    let omega = clique_number(g);
    let omega_b = balanced_clique_number(g);
    let balanced = eps == 0;
    let connected = g.is_connected();
    let k3_free = contains_unbalanced_clique(g, 3).is_none();
    let k4_free = contains_unbalanced_clique(g, 4).is_none();
    let rho = spectrum.spectral_radius();
    let index = spectrum.index();

    let frustration = bound_frustration(n, m, eps);
    let records = vec![
        BoundRecord::new(
            BoundKind::K3Free,
            n >= 3 && connected && !balanced && k3_free,
            if n >= 3 { bound_k3_free(n) } else { 0.0 },
            rho,
        ),
        BoundRecord::new(BoundKind::K4Free, n >= 4 && !balanced && k4_free, bound_k4_free(n), rho),
        BoundRecord::new(BoundKind::Frustration, connected && frustration.is_some(), frustration.unwrap_or(0.0), index),
        BoundRecord::new(
            BoundKind::Wilf,
            omega >= 1,
            if omega >= 1 { bound_wilf(n, omega) } else { 0.0 },
            underlying.index(),
        ),
        BoundRecord::new(
            BoundKind::BalancedClique,
            omega_b >= 1,
            if omega_b >= 1 { bound_balanced_clique(n, omega_b) } else { 0.0 },
            index,
        ),
    ];
    BoundReport {
        n,
        m,
        frustration_index: eps,
        clique_number: omega,
        balanced_clique_number: omega_b,
        connected,
        balanced,
        k3_free,
        k4_free,
        index: round_sig(index),
        spectral_radius: round_sig(rho),
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    #[test]
    fn formula_values() {
        assert_eq!(bound_k3_free(3), 0.0);
        assert!((bound_k3_free(5) - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((bound_k3_free(9) - (5.0 + 73f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(bound_k4_free(9), 7.0);
        assert_eq!(bound_k4_free(4), 2.0);
        assert_eq!(bound_frustration(9, 29, 1), Some(48f64.sqrt()));
        assert!(48f64.sqrt() < 7.0);
        assert_eq!(bound_frustration(9, 31, 1), Some(52f64.sqrt()));
        assert_eq!(bound_frustration(5, 0, 0), None);
        assert_eq!(bound_wilf(9, 4), 6.75);
        assert_eq!(bound_wilf(5, 1), 0.0);
        assert_eq!(bound_balanced_clique(9, 4), 6.75);
        assert_eq!(bound_balanced_clique(3, 2), 1.5);
    }

    #[test]
    fn balanced_complete_tightness() {
        for n in 5..=8 {
            assert_eq!(bound_frustration(n, n * (n - 1) / 2, 0), Some(n as f64 - 1.0));
            assert_eq!(bound_wilf(n, n), n as f64 - 1.0);
        }
    }

    #[test]
    fn triangle_audit() {
        let g = SignedGraph::from_edges(3, [(0, 1, N), (0, 2, P), (1, 2, P)]).unwrap();
        let r = audit(&g);
        assert!(!r.record(BoundKind::K3Free).applicable);
        assert!(!r.record(BoundKind::K4Free).applicable);
        let bc = r.record(BoundKind::BalancedClique);
        assert!(bc.applicable && bc.satisfied);
        assert_eq!(bc.bound_value, 1.5);
        assert!(r.all_satisfied());
    }

    #[test]
    fn complete_audit_is_tight() {
        let r = audit(&SignedGraph::complete(7));
        assert!(r.all_satisfied());
        assert!(r.record(BoundKind::Wilf).slack.abs() < 1e-9);
        assert!(r.record(BoundKind::Frustration).slack.abs() < 1e-9);
    }
}
