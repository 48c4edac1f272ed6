//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's switching, balance, clique or polynomial routines.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use signed_turan::{Sign, SignedGraph};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// `signs[i]` for the i-th pair in lexicographic order: 0 none, 1 positive, 2 negative.
pub fn from_pair_signs(n: usize, signs: &[u8]) -> SignedGraph {
    let edges = pairs(n)
        .into_iter()
        .zip(signs)
        .filter(|(_, &s)| s != 0)
        .map(|((u, v), &s)| (u, v, if s == 1 { Sign::Positive } else { Sign::Negative }));
    SignedGraph::from_edges(n, edges).unwrap()
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * n.saturating_sub(1) / 2).prop_map(move |s| from_pair_signs(n, &s))
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p_edge: f64, p_neg: f64) -> SignedGraph {
    let signs: Vec<u8> = pairs(n)
        .iter()
        .map(|_| {
            if !rng.gen_bool(p_edge) {
                0
            } else if rng.gen_bool(p_neg) {
                2
            } else {
                1
            }
        })
        .collect();
    from_pair_signs(n, &signs)
}

/// Sign matrix as plain integers.
pub fn matrix(g: &SignedGraph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.entry(u, v) as i64).collect()).collect()
}

/// Switching by the vertex set encoded in `mask`, recomputed from scratch.
pub fn switch_mask(g: &SignedGraph, mask: u32) -> SignedGraph {
    let edges = g.edges().map(|(u, v, s)| {
        let cut = (mask >> u & 1) != (mask >> v & 1);
        (u, v, if cut { s.flip() } else { s })
    });
    SignedGraph::from_edges(g.order(), edges.collect::<Vec<_>>()).unwrap()
}

pub fn negatives(g: &SignedGraph) -> usize {
    g.edges().filter(|e| e.2 == Sign::Negative).count()
}

pub fn brute_frustration(g: &SignedGraph) -> usize {
    (0..1u32 << g.order()).map(|m| negatives(&switch_mask(g, m))).min().unwrap_or(0)
}

pub fn brute_balanced(g: &SignedGraph) -> bool {
    brute_frustration(g) == 0
}

pub fn brute_equivalent(a: &SignedGraph, b: &SignedGraph) -> bool {
    a.order() == b.order() && (0..1u32 << a.order()).any(|m| &switch_mask(a, m) == b)
}

/// Smallest negative-edge bitmask over the switching class; a complete class
/// invariant for a fixed labeled underlying graph.
pub fn class_key(g: &SignedGraph) -> u64 {
    let ps = pairs(g.order());
    (0..1u32 << g.order())
        .map(|m| {
            let h = switch_mask(g, m);
            ps.iter().enumerate().filter(|(_, &(u, v))| h.entry(u, v) < 0).fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .min()
        .unwrap()
}

pub fn subgraph(g: &SignedGraph, vs: &[usize]) -> SignedGraph {
    let mut edges = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            if let Some(s) = g.sign(u, v) {
                edges.push((i, j, s));
            }
        }
    }
    SignedGraph::from_edges(vs.len(), edges).unwrap()
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn is_clique(g: &SignedGraph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Lexicographically least vertex set of an unbalanced `K_k`.
pub fn brute_unbalanced_clique(g: &SignedGraph, k: usize) -> Option<Vec<usize>> {
    subsets(g.order(), k).into_iter().find(|s| is_clique(g, s) && !brute_balanced(&subgraph(g, s)))
}

pub fn brute_clique_number(g: &SignedGraph) -> usize {
    (1..=g.order()).rev().find(|&k| subsets(g.order(), k).iter().any(|s| is_clique(g, s))).unwrap_or(0)
}

pub fn brute_balanced_clique_number(g: &SignedGraph) -> usize {
    (1..=g.order())
        .rev()
        .find(|&k| subsets(g.order(), k).iter().any(|s| is_clique(g, s) && brute_balanced(&subgraph(g, s))))
        .unwrap_or(0)
}

/// Fraction-free Gaussian elimination; returns every leading principal minor
/// when no pivoting is needed, otherwise `None`.
pub fn leading_minors(m: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut minors = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            return None;
        }
        minors.push(a[k][k].clone());
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Some(minors)
}

/// Exact determinant by fraction-free elimination with row pivoting.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

/// `det(xI - A)` sampled at `x = 0..=n` and interpolated (Newton form), ascending coefficients.
pub fn char_poly_by_interpolation(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let values: Vec<BigRational> = (0..=n as i64)
        .map(|x| {
            let m: Vec<Vec<BigInt>> =
                (0..n).map(|i| (0..n).map(|j| BigInt::from(if i == j { x } else { 0 } - a[i][j])).collect()).collect();
            BigRational::from_integer(det(&m))
        })
        .collect();
    // divided differences over nodes 0..=n
    let mut coef = values.clone();
    for level in 1..=n {
        for i in (level..=n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / BigRational::from_integer(BigInt::from(level as i64));
        }
    }
    let mut poly = vec![BigRational::zero(); n + 1];
    let mut basis = vec![BigRational::one()];
    for (i, c) in coef.iter().enumerate() {
        for (d, b) in basis.iter().enumerate() {
            poly[d] += c * b;
        }
        // basis *= (x - i)
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (d, b) in basis.iter().enumerate() {
            next[d + 1] += b;
            next[d] -= b * BigRational::from_integer(BigInt::from(i as i64));
        }
        basis = next;
    }
    poly.into_iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Number of eigenvalues of `a` below `num / den` (den > 0), by counting sign
/// changes among the leading principal minors of `num I - den A`. `None` when a
/// minor vanishes.
pub fn count_below(a: &[Vec<i64>], num: i64, den: i64) -> Option<usize> {
    let n = a.len();
    // eigenvalues of den*A - num*I below zero
    let m: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| BigInt::from(den * a[i][j] - if i == j { num } else { 0 })).collect()).collect();
    let minors = leading_minors(&m)?;
    let mut changes = 0;
    let mut last_positive = true;
    for d in minors {
        let positive = d.is_positive();
        if positive != last_positive {
            changes += 1;
        }
        last_positive = positive;
    }
    Some(changes)
}
