mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_turan::constructions::{gamma1, gamma1_partition, gamma2, gamma2_partition, gamma3, gamma3_partition};
use signed_turan::spectral::jacobi::symmetric_eigen;
use signed_turan::spectral::{char_poly, equitable_quotient, nonneg_eigenvector_form, IntPolynomial};
use signed_turan::{eigenvalues, SignedGraph};

fn sample(count: usize, max_n: usize, seed: u64) -> Vec<SignedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let (pe, pn) = (rng.gen_range(0.2..1.0), rng.gen_range(0.0..1.0));
            random_graph(&mut rng, n, pe, pn)
        })
        .collect()
}

#[test]
fn char_poly_matches_determinant_interpolation() {
    for g in sample(150, 8, 1) {
        let a = matrix(&g);
        let ours = char_poly(&g.adjacency_i64(), g.order()).unwrap();
        assert_eq!(ours, IntPolynomial::new(char_poly_by_interpolation(&a)), "{g:?}");
    }
}

#[test]
fn float_and_exact_eigenvalues_agree() {
    for g in sample(200, 8, 2) {
        let float = eigenvalues(&g).eigenvalues;
        let exact = char_poly(&g.adjacency_i64(), g.order()).unwrap().real_roots(1e-13);
        assert_eq!(float.len(), exact.len());
        for (x, y) in float.iter().zip(&exact) {
            assert!((x - y).abs() <= 1e-9, "{g:?}: {float:?} vs {exact:?}");
        }
    }
}

#[test]
fn eigenvalue_counts_match_exact_inertia() {
    let mut checked = 0;
    for g in sample(120, 8, 3) {
        let a = matrix(&g);
        let ev = eigenvalues(&g).eigenvalues;
        for t2 in -17..=17 {
            // probe at t2 / 2, away from every eigenvalue
            let t = t2 as f64 / 2.0;
            if ev.iter().any(|x| (x - t).abs() < 1e-6) {
                continue;
            }
            if let Some(below) = count_below(&a, t2, 2) {
                assert_eq!(below, ev.iter().filter(|&&x| x < t).count(), "{g:?} at {t}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn eigenpairs_have_small_residuals() {
    for g in sample(100, 10, 4) {
        let n = g.order();
        let a = g.adjacency();
        for (lambda, v) in symmetric_eigen(&a, n) {
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-9);
            for i in 0..n {
                let av: f64 = (0..n).map(|j| a[i * n + j] * v[j]).sum();
                assert!((av - lambda * v[i]).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn spectral_moments() {
    for g in sample(100, 9, 5) {
        let s = eigenvalues(&g);
        assert!(s.trace().abs() < 1e-9);
        assert!((s.sum_of_squares() - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        assert!(s.spectral_radius() >= s.index().abs() - 1e-12);
    }
}

#[test]
fn nonnegative_eigenvector_switching() {
    for g in sample(60, 7, 6) {
        let (h, x) = nonneg_eigenvector_form(&g).unwrap();
        assert!(brute_equivalent(&g, &h));
        assert!(x.iter().all(|&v| v >= -1e-12));
        let n = g.order();
        let a = h.adjacency();
        let lambda = eigenvalues(&g).index();
        for i in 0..n {
            let ax: f64 = (0..n).map(|j| a[i * n + j] * x[j]).sum();
            assert!((ax - lambda * x[i]).abs() < 1e-8);
        }
    }
}

#[test]
fn family_quotients_count_block_neighbours() {
    for n in 7..=12 {
        for (g, p) in [
            (gamma1(n).unwrap(), gamma1_partition(n).unwrap()),
            (gamma2(n).unwrap(), gamma2_partition(n).unwrap()),
            (gamma3(n).unwrap(), gamma3_partition(n).unwrap()),
        ] {
            let q = equitable_quotient(&g, &p).unwrap();
            let blocks = p.blocks();
            for (i, bi) in blocks.iter().enumerate() {
                for (j, bj) in blocks.iter().enumerate() {
                    for &u in bi {
                        let s: i64 = bj.iter().map(|&v| g.entry(u, v) as i64).sum();
                        assert_eq!(q.entry(i, j), s);
                    }
                }
            }
            let mut qe = q.eigenvalues().unwrap();
            let exact = q.char_poly().unwrap().real_roots(1e-13);
            qe.sort_by(|a, b| b.total_cmp(a));
            for (x, y) in qe.iter().zip(&exact) {
                assert!((x - y).abs() < 1e-9);
            }
        }
    }
}
