//! Named signed graphs and their block structures.
//!
//! Each family is laid out block by block with consecutive vertex labels, so
//! the defining partition of `gamma1(n)` is `{0} {1} {2} {3,4} {5..n}` and so on.
//! Every family has exactly one negative edge, `{0, 1}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::spectral::{IntPolynomial, QuotientMatrix, VertexPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedFamily {
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma5,
    CompleteBalanced,
    UnbalancedComplete,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 6] = [
        NamedFamily::Gamma1,
        NamedFamily::Gamma2,
        NamedFamily::Gamma3,
        NamedFamily::Gamma5,
        NamedFamily::CompleteBalanced,
        NamedFamily::UnbalancedComplete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedFamily::Gamma1 => "gamma1",
            NamedFamily::Gamma2 => "gamma2",
            NamedFamily::Gamma3 => "gamma3",
            NamedFamily::Gamma5 => "gamma5",
            NamedFamily::CompleteBalanced => "complete",
            NamedFamily::UnbalancedComplete => "unbalanced-complete",
        }
    }

    /// Smallest supported order, and the fixed order if there is one.
    pub fn min_order(self) -> usize {
        match self {
            NamedFamily::Gamma1 | NamedFamily::Gamma2 => 7,
            NamedFamily::Gamma3 => 5,
            NamedFamily::Gamma5 => 4,
            NamedFamily::CompleteBalanced => 0,
            NamedFamily::UnbalancedComplete => 3,
        }
    }

    pub fn build(self, n: usize) -> Result<SignedGraph> {
        match self {
            NamedFamily::Gamma1 => gamma1(n),
            NamedFamily::Gamma2 => gamma2(n),
            NamedFamily::Gamma3 => gamma3(n),
            NamedFamily::Gamma5 if n == 4 => Ok(gamma5()),
            NamedFamily::Gamma5 => Err(Error::OrderOutOfRange { family: "gamma5", n }),
            NamedFamily::CompleteBalanced => Ok(SignedGraph::complete(n)),
            NamedFamily::UnbalancedComplete => unbalanced_complete(n),
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NamedFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// Realize a block pattern: `pattern[i][j]` is the sign of every edge between
/// blocks `i` and `j` (0 for none); diagonal entries make the block a clique.
fn from_block_pattern(sizes: &[usize], pattern: &[&[i8]]) -> SignedGraph {
    let part = VertexPartition::consecutive(sizes).expect("block sizes are positive");
    let n = part.order();
    let blocks = part.blocks();
    let mut g = SignedGraph::empty(n);
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate().skip(i) {
            let s = pattern[i][j];
            if s == 0 {
                continue;
            }
            for &u in bi {
                for &v in bj {
                    if u < v || (i != j && u != v) {
                        g.set(u, v, s);
                    }
                }
            }
        }
    }
    g
}

fn check_order(family: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::OrderOutOfRange { family, n })
    } else {
        Ok(())
    }
}

pub fn gamma1_partition(n: usize) -> Result<VertexPartition> {
    check_order("gamma1", n, 7)?;
    VertexPartition::consecutive(&[1, 1, 1, 2, n - 5])
}

pub fn gamma1(n: usize) -> Result<SignedGraph> {
    check_order("gamma1", n, 7)?;
    Ok(from_block_pattern(
        &[1, 1, 1, 2, n - 5],
        &[&[0, -1, 1, 1, 1], &[-1, 0, 1, 1, 0], &[1, 1, 0, 1, 1], &[1, 1, 1, 0, 1], &[1, 0, 1, 1, 1]],
    ))
}

pub fn gamma2_partition(n: usize) -> Result<VertexPartition> {
    check_order("gamma2", n, 7)?;
    VertexPartition::consecutive(&[1, 1, 1, 3, n - 6])
}

pub fn gamma2(n: usize) -> Result<SignedGraph> {
    check_order("gamma2", n, 7)?;
    Ok(from_block_pattern(
        &[1, 1, 1, 3, n - 6],
        &[&[0, -1, 1, 1, 1], &[-1, 0, 1, 1, 0], &[1, 1, 0, 1, 1], &[1, 1, 1, 0, 1], &[1, 0, 1, 1, 1]],
    ))
}

pub fn gamma3_partition(n: usize) -> Result<VertexPartition> {
    check_order("gamma3", n, 5)?;
    VertexPartition::consecutive(&[1, 1, 2, n - 4])
}

/// An all-positive `K_{n-1}` on `1..n` plus vertex 0 joined to 1, 2, 3,
/// with `{0, 1}` the only negative edge.
pub fn gamma3(n: usize) -> Result<SignedGraph> {
    check_order("gamma3", n, 5)?;
    Ok(from_block_pattern(&[1, 1, 2, n - 4], &[&[0, -1, 1, 0], &[-1, 0, 1, 1], &[1, 1, 1, 1], &[0, 1, 1, 1]]))
}

/// `K_4` with the single negative edge `{0, 1}`.
pub fn gamma5() -> SignedGraph {
    let mut g = SignedGraph::complete(4);
    g.set(0, 1, -1);
    g
}

/// `K_n` with the single negative edge `{0, 1}`.
pub fn unbalanced_complete(n: usize) -> Result<SignedGraph> {
    check_order("unbalanced-complete", n, 3)?;
    let mut g = SignedGraph::complete(n);
    g.set(0, 1, Sign::Negative.value());
    Ok(g)
}

/// Quotient matrix of `gamma1(n)` as written out for its defining partition.
pub fn gamma1_quotient(n: usize) -> Result<QuotientMatrix> {
    check_order("gamma1", n, 7)?;
    let n = n as i64;
    QuotientMatrix::from_rows(
        &[
            vec![0, -1, 1, 2, n - 5],
            vec![-1, 0, 1, 2, 0],
            vec![1, 1, 0, 2, n - 5],
            vec![1, 1, 1, 0, n - 5],
            vec![1, 0, 1, 2, n - 6],
        ],
        &gamma1_partition(n as usize)?.sizes(),
    )
}

pub fn gamma2_quotient(n: usize) -> Result<QuotientMatrix> {
    check_order("gamma2", n, 7)?;
    let n = n as i64;
    QuotientMatrix::from_rows(
        &[
            vec![0, -1, 1, 3, n - 6],
            vec![-1, 0, 1, 3, 0],
            vec![1, 1, 0, 3, n - 6],
            vec![1, 1, 1, 0, n - 6],
            vec![1, 0, 1, 3, n - 7],
        ],
        &gamma2_partition(n as usize)?.sizes(),
    )
}

pub fn gamma3_quotient(n: usize) -> Result<QuotientMatrix> {
    check_order("gamma3", n, 5)?;
    let n = n as i64;
    QuotientMatrix::from_rows(
        &[vec![0, -1, 2, 0], vec![-1, 0, 2, n - 4], vec![1, 1, 1, n - 4], vec![0, 1, 2, n - 5]],
        &gamma3_partition(n as usize)?.sizes(),
    )
}

/// `x^5 + (6-n)x^4 + (11-4n)x^3 - (6+n)x^2 + (8n-32)x + 6n-20`
pub fn gamma1_quotient_charpoly(n: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[6 * n - 20, 8 * n - 32, -(6 + n), 11 - 4 * n, 6 - n, 1])
}

/// `x^5 + (7-n)x^4 + (18-5n)x^3 - (4+2n)x^2 + (11n-55)x + 9n-39`
pub fn gamma2_quotient_charpoly(n: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[9 * n - 39, 11 * n - 55, -(4 + 2 * n), 18 - 5 * n, 7 - n, 1])
}

/// Cubic factor `x^3 + (3-n)x^2 - (n+1)x + 3n-7` of the `gamma3` quotient polynomial.
pub fn gamma3_quotient_cubic(n: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[3 * n - 7, -(n + 1), 3 - n, 1])
}

/// `(x+1)(x^3 + (3-n)x^2 - (n+1)x + 3n-7)`
pub fn gamma3_quotient_charpoly(n: i64) -> IntPolynomial {
    &IntPolynomial::from_i64s(&[1, 1]) * &gamma3_quotient_cubic(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{char_poly, eigenvalues, equitable_quotient};

    #[test]
    fn order_checks() {
        assert!(matches!(gamma1(6), Err(Error::OrderOutOfRange { .. })));
        assert!(matches!(gamma2(6), Err(Error::OrderOutOfRange { .. })));
        assert!(matches!(gamma3(4), Err(Error::OrderOutOfRange { .. })));
        assert!(matches!(unbalanced_complete(2), Err(Error::OrderOutOfRange { .. })));
        assert!(NamedFamily::Gamma5.build(5).is_err());
    }

    #[test]
    fn gamma3_counts() {
        let g = gamma3(9).unwrap();
        assert_eq!(g.edge_count(), 31);
        assert_eq!(g.non_edge_count(), 5);
        assert_eq!(g.negative_edges(), vec![(0, 1)]);
        assert_eq!(g.degree(0), 3);
        let g5 = gamma3(5).unwrap();
        assert_eq!(g5.edge_count(), 9);
    }

    #[test]
    fn gamma1_counts() {
        // blocks realise 31 pairs at n = 9: K9 has 36, missing are {1} x X5 (4) and the O2 pair
        let g = gamma1(9).unwrap();
        assert_eq!(g.edge_count(), 31);
        assert_eq!(g.negative_edges(), vec![(0, 1)]);
        assert!(!g.has_edge(3, 4));
        assert!(!g.has_edge(1, 5));
    }

    #[test]
    fn gamma2_counts() {
        // n = 9: missing pairs are {1} x X5 (3) and the three pairs inside O3
        let g = gamma2(9).unwrap();
        assert_eq!(g.edge_count(), 36 - 6);
        assert_eq!(g.negative_edges(), vec![(0, 1)]);
    }

    #[test]
    fn quotients_match_definitions() {
        for n in 7..12 {
            let q1 = equitable_quotient(&gamma1(n).unwrap(), &gamma1_partition(n).unwrap()).unwrap();
            assert_eq!(q1, gamma1_quotient(n).unwrap());
            let q2 = equitable_quotient(&gamma2(n).unwrap(), &gamma2_partition(n).unwrap()).unwrap();
            assert_eq!(q2, gamma2_quotient(n).unwrap());
        }
        for n in 5..12 {
            let q3 = equitable_quotient(&gamma3(n).unwrap(), &gamma3_partition(n).unwrap()).unwrap();
            assert_eq!(q3, gamma3_quotient(n).unwrap());
        }
    }

    #[test]
    fn char_poly_at_seven_and_nine() {
        let q1 = gamma1_quotient(7).unwrap();
        assert_eq!(char_poly(q1.entries(), 5).unwrap(), IntPolynomial::from_i64s(&[22, 24, -13, -17, -1, 1]));
        let q2 = gamma2_quotient(9).unwrap();
        assert_eq!(char_poly(q2.entries(), 5).unwrap(), IntPolynomial::from_i64s(&[42, 44, -22, -27, -2, 1]));
        let q3 = gamma3_quotient(9).unwrap();
        let expect = &IntPolynomial::from_i64s(&[1, 1]) * &IntPolynomial::from_i64s(&[20, -10, -6, 1]);
        assert_eq!(char_poly(q3.entries(), 4).unwrap(), expect);
    }

    #[test]
    fn gamma5_spectrum() {
        let g = gamma5();
        assert!(!g.is_balanced());
        let s = eigenvalues(&g);
        assert!(s.trace().abs() < 1e-12);
        assert!((s.index() - 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(char_poly(&g.adjacency_i64(), 4).unwrap(), IntPolynomial::from_i64s(&[5, 0, -6, 0, 1]));
    }

    #[test]
    fn family_names_round_trip() {
        for f in NamedFamily::ALL {
            assert_eq!(f.name().parse::<NamedFamily>().unwrap(), f);
        }
        assert!("gamma4".parse::<NamedFamily>().is_err());
    }
}
