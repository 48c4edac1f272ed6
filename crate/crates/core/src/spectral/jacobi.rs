//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

const MAX_SWEEPS: usize = 100;
const REL_TOL: f64 = 1e-12;

fn off_norm_sq(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s
}

/// Diagonalize the symmetric row-major matrix `a` in place.
///
/// On return the diagonal of `a` holds the eigenvalues (unsorted). When
/// `vecs` is given it is overwritten with the eigenvectors as columns.
pub fn jacobi_in_place(a: &mut [f64], n: usize, mut vecs: Option<&mut [f64]>) {
    debug_assert_eq!(a.len(), n * n);
    if let Some(v) = vecs.as_deref_mut() {
        v.iter_mut().for_each(|x| *x = 0.0);
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
    }
    let frob_sq: f64 = a.iter().map(|x| x * x).sum();
    let target = (REL_TOL * REL_TOL) * frob_sq;
    for _ in 0..MAX_SWEEPS {
        if off_norm_sq(a, n) <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                if let Some(v) = vecs.as_deref_mut() {
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = c * vrp - s * vrq;
                        v[r * n + q] = s * vrp + c * vrq;
                    }
                }
            }
        }
    }
}

/// Eigenvalues of a symmetric matrix, sorted descending.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
    let mut work = a.to_vec();
    jacobi_in_place(&mut work, n, None);
    let mut vals: Vec<f64> = (0..n).map(|i| work[i * n + i]).collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    vals
}

/// Eigenpairs of a symmetric matrix, sorted by descending eigenvalue.
pub fn symmetric_eigen(a: &[f64], n: usize) -> Vec<(f64, Vec<f64>)> {
    let mut work = a.to_vec();
    let mut vecs = vec![0.0; n * n];
    jacobi_in_place(&mut work, n, Some(&mut vecs));
    let mut pairs: Vec<(f64, Vec<f64>)> =
        (0..n).map(|j| (work[j * n + j], (0..n).map(|i| vecs[i * n + j]).collect())).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    pairs
}
