//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! A Hermitian `H = X + iY` is embedded as the real symmetric matrix
//! `[[X, -Y], [Y, X]]` of twice the size. Each eigenvalue of `H` appears there
//! twice, and an eigenvector `(u, v)` of the embedding gives the eigenvector
//! `u + iv` of `H` with the same eigenvalue.

use num_complex::Complex64;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns of `vecs`)
/// of a real symmetric `n x n` matrix stored row-major.
pub(crate) fn symmetric_eigen(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum();
        let scale: f64 = (0..n * n).map(|k| a[k] * a[k]).sum::<f64>().max(f64::MIN_POSITIVE);
        if off <= scale * 1e-32 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vecs = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for k in 0..n {
            vecs[k * n + col] = v[k * n + src];
        }
    }
    (values, vecs)
}

/// Eigenvalues of a Hermitian `d x d` matrix (row-major), ascending.
pub(crate) fn hermitian_eigenvalues(h: &[Complex64], d: usize) -> Vec<f64> {
    let (values, _) = symmetric_eigen(embed(h, d), 2 * d);
    values.into_iter().step_by(2).collect()
}

/// Smallest eigenvalue of a Hermitian matrix and a unit eigenvector for it.
pub(crate) fn hermitian_min_eigenpair(h: &[Complex64], d: usize) -> (f64, Vec<Complex64>) {
    let n = 2 * d;
    let (values, vecs) = symmetric_eigen(embed(h, d), n);
    let x = (0..d)
        .map(|k| Complex64::new(vecs[k * n], vecs[(k + d) * n]))
        .collect();
    (values[0], x)
}

fn embed(h: &[Complex64], d: usize) -> Vec<f64> {
    let n = 2 * d;
    let mut m = vec![0.0; n * n];
    for i in 0..d {
        for j in 0..d {
            let z = h[i * d + j];
            m[i * n + j] = z.re;
            m[i * n + (j + d)] = -z.im;
            m[(i + d) * n + j] = z.im;
            m[(i + d) * n + (j + d)] = z.re;
        }
    }
    m
}
