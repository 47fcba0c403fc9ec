//! Eigenvalues of a symmetric tridiagonal matrix together with the first
//! component of each unit eigenvector.
//!
//! Implicit QL with Wilkinson-type shifts. Only the first row of the
//! accumulated rotation product is tracked, which is all the quadrature
//! weights need, so the cost is O(n^2) time and O(n) memory.

use crate::{Error, Result};

const MAX_ITERATIONS: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymmetricTridiagonal {
    /// `offdiag` has one entry fewer than `diag`, all strictly positive.
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Argument("matrix must be at least 1x1".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Argument(format!(
                "expected {} off-diagonal entries, got {}",
                diag.len() - 1,
                offdiag.len()
            )));
        }
        if diag.iter().any(|d| !d.is_finite()) {
            return Err(Error::Argument("diagonal entries must be finite".into()));
        }
        if let Some(e) = offdiag.iter().find(|&&e| !(e > 0.0 && e.is_finite())) {
            return Err(Error::Argument(format!(
                "off-diagonal entries must be finite and positive, got {e}"
            )));
        }
        Ok(SymmetricTridiagonal { diag, offdiag })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Squared first components of the matching unit eigenvectors.
    pub firstsq: Vec<f64>,
}

pub fn eigen_tridiagonal(t: &SymmetricTridiagonal) -> Result<EigenResult> {
    let n = t.len();
    let mut d = t.diag.clone();
    let mut e = t.offdiag.clone();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                if e[m].abs() <= f64::EPSILON * (d[m].abs() + d[m + 1].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_ITERATIONS {
                return Err(Error::NoConvergence { index: l });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    Ok(EigenResult {
        values: order.iter().map(|&i| d[i]).collect(),
        firstsq: order.iter().map(|&i| z[i] * z[i]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::DMatrix;
    use proptest::prelude::*;

    fn solve(d: &[f64], e: &[f64]) -> EigenResult {
        eigen_tridiagonal(&SymmetricTridiagonal::new(d.to_vec(), e.to_vec()).unwrap()).unwrap()
    }

    /// Number of eigenvalues below `x`, from the signs of the LDL^T pivots.
    fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
        let mut count = 0;
        let mut q = d[0] - x;
        for i in 0..d.len() {
            if i > 0 {
                let prev = if q == 0.0 { f64::EPSILON } else { q };
                q = d[i] - x - e[i - 1] * e[i - 1] / prev;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn bisection_eigenvalues(d: &[f64], e: &[f64]) -> Vec<f64> {
        let n = d.len();
        let radius = (0..n)
            .map(|i| {
                let left = if i > 0 { e[i - 1] } else { 0.0 };
                let right = if i + 1 < n { e[i] } else { 0.0 };
                d[i].abs() + left + right
            })
            .fold(0.0, f64::max);
        (0..n)
            .map(|k| {
                let (mut lo, mut hi) = (-radius - 1.0, radius + 1.0);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if sturm_count(d, e, mid) > k {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                0.5 * (lo + hi)
            })
            .collect()
    }

    #[test]
    fn one_by_one() {
        let r = solve(&[0.0], &[]);
        assert_eq!(r.values, vec![0.0]);
        assert_eq!(r.firstsq, vec![1.0]);
    }

    #[test]
    fn monic_legendre_two_by_two() {
        let r = solve(&[0.0, 0.0], &[1.0 / 3f64.sqrt()]);
        let x = 1.0 / 3f64.sqrt();
        assert_relative_eq!(r.values[0], -x, max_relative = 1e-15);
        assert_relative_eq!(r.values[1], x, max_relative = 1e-15);
        assert_relative_eq!(r.firstsq[0], 0.5, max_relative = 1e-15);
        assert_relative_eq!(r.firstsq[1], 0.5, max_relative = 1e-15);
    }

    #[test]
    fn unsymmetric_diagonal_two_by_two() {
        let r = solve(&[1.0, 3.0], &[1.0]);
        assert_relative_eq!(r.values[0], 2.0 - 2f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(r.values[1], 2.0 + 2f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn malformed_input_rejected() {
        assert!(SymmetricTridiagonal::new(vec![], vec![]).is_err());
        assert!(SymmetricTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(SymmetricTridiagonal::new(vec![1.0, 2.0], vec![0.0]).is_err());
        assert!(SymmetricTridiagonal::new(vec![1.0, 2.0], vec![-1.0]).is_err());
        assert!(SymmetricTridiagonal::new(vec![f64::NAN, 2.0], vec![1.0]).is_err());
    }

    #[test]
    fn large_hermite_matrix_converges() {
        let n = 2000;
        let e: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
        let r = solve(&vec![0.0; n], &e);
        assert!(r.values.windows(2).all(|w| w[0] < w[1]));
        let total: f64 = r.firstsq.iter().sum();
        assert!((total - 1.0).abs() < 1e-13);
    }

    fn tridiagonal() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
        (1usize..=12).prop_flat_map(|n| {
            (
                prop::collection::vec(-10.0f64..10.0, n),
                prop::collection::vec(0.05f64..5.0, n - 1),
            )
        })
    }

    proptest! {
        #[test]
        fn trace_and_ordering((d, e) in tridiagonal()) {
            let r = solve(&d, &e);
            let trace: f64 = d.iter().sum();
            let sum: f64 = r.values.iter().sum();
            prop_assert!((sum - trace).abs() <= 1e-12 * (1.0 + trace.abs()));
            prop_assert!(r.values.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(r.firstsq.iter().all(|&v| v >= 0.0));
            let total: f64 = r.firstsq.iter().sum();
            prop_assert!((total - 1.0).abs() <= 1e-13);
        }

        #[test]
        fn values_match_sturm_bisection((d, e) in tridiagonal()) {
            let r = solve(&d, &e);
            for (got, want) in r.values.iter().zip(bisection_eigenvalues(&d, &e)) {
                prop_assert!((got - want).abs() <= 1e-11, "{} vs {}", got, want);
            }
        }

        #[test]
        fn first_components_match_dense_eigenvectors((d, e) in tridiagonal()) {
            let n = d.len();
            let dense = DMatrix::from_fn(n, n, |i, j| {
                if i == j { d[i] } else if i + 1 == j { e[i] } else if j + 1 == i { e[j] } else { 0.0 }
            });
            let eig = dense.symmetric_eigen();
            let mut pairs: Vec<(f64, f64)> = (0..n)
                .map(|k| (eig.eigenvalues[k], eig.eigenvectors[(0, k)].powi(2)))
                .collect();
            pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
            let r = solve(&d, &e);
            for (got, (_, want)) in r.firstsq.iter().zip(pairs) {
                prop_assert!((got - want).abs() <= 1e-10, "{} vs {}", got, want);
            }
        }

        #[test]
        fn deterministic((d, e) in tridiagonal()) {
            prop_assert_eq!(solve(&d, &e), solve(&d, &e));
        }
    }
}
