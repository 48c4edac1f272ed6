//! Structural properties every extremal witness is expected to have.

use serde::Serialize;

use crate::graph::SignedGraph;
use crate::io::GraphJson;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimsReport {
    pub n: usize,
    /// Precondition: the witness must be unbalanced.
    pub unbalanced: bool,
    pub connected: bool,
    pub frustration_index: usize,
    pub single_negative_edge: bool,
    pub non_edges: usize,
    pub non_edges_at_most_n_minus_3: bool,
    /// The switching with one negative edge, when it exists.
    pub normalized: Option<GraphJson>,
    pub negative_edge_on_negative_triangle: bool,
    pub all_pass: bool,
    pub precondition_violation: Option<String>,
}

/// Check a theorem maximizer for connectivity, frustration index 1, at most
/// `n - 3` non-edges, and a negative edge lying on a negative triangle.
pub fn verify_extremal_claims(witness: &SignedGraph) -> ClaimsReport {
    let n = witness.order();
    let unbalanced = !witness.is_balanced();
    let connected = witness.is_connected();
    let non_edges = witness.non_edge_count();
    let (eps, normalized) = match witness.frustration_switching() {
        Ok((eps, u)) => (eps, witness.switch(&u).ok()),
        Err(_) => (usize::MAX, None),
    };
    let single_negative_edge = eps == 1;
    let on_triangle = match (&normalized, single_negative_edge) {
        (Some(g), true) => {
            let (a, b) = g.negative_edges()[0];
            // every other triangle edge is positive, so any common neighbour closes a negative triangle
            (0..n).any(|w| g.has_edge(a, w) && g.has_edge(b, w))
        }
        _ => false,
    };
    let h_ok = n >= 3 && non_edges + 3 <= n;
    ClaimsReport {
        n,
        unbalanced,
        connected,
        frustration_index: eps,
        single_negative_edge,
        non_edges,
        non_edges_at_most_n_minus_3: h_ok,
        normalized: normalized.filter(|_| single_negative_edge).as_ref().map(GraphJson::from),
        negative_edge_on_negative_triangle: on_triangle,
        all_pass: unbalanced && connected && single_negative_edge && h_ok && on_triangle,
        precondition_violation: (!unbalanced).then(|| "witness is balanced, not a theorem maximizer".to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gamma3;

    #[test]
    fn gamma3_passes() {
        for n in [5, 7] {
            let r = verify_extremal_claims(&gamma3(n).unwrap());
            assert!(r.all_pass, "{r:?}");
            assert_eq!(r.non_edges, n - 4);
        }
    }

    #[test]
    fn balanced_input_is_flagged() {
        let r = verify_extremal_claims(&SignedGraph::complete(7));
        assert!(!r.all_pass);
        assert!(r.precondition_violation.is_some());
    }
}
