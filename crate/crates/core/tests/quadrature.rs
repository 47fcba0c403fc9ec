use std::f64::consts::PI;

use approx::assert_relative_eq;
use baryquad::quadrature::rule;
use baryquad::special::ln_gamma;
use baryquad::{
    gauss_rule, integrate, lobatto_rule_jacobi, radau_rule_jacobi, radau_rule_laguerre, Endpoint,
    Error, RuleVariant, WeightFamily,
};
use proptest::prelude::*;

fn assert_slice(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
    }
}

/// Test polynomials of degree `k`: `(1 + x)^k` for Jacobi weights, so that
/// the moments are positive beta integrals, and `x^k` otherwise.
fn basis(family: WeightFamily, k: usize, x: f64) -> f64 {
    match family {
        WeightFamily::Jacobi { .. } => (1.0 + x).powi(k as i32),
        _ => x.powi(k as i32),
    }
}

/// `int basis_k w dx`, in closed form.
fn moment(family: WeightFamily, k: usize) -> f64 {
    let kf = k as f64;
    match family {
        WeightFamily::Jacobi { alpha, beta } => ((alpha + beta + 1.0 + kf) * 2f64.ln()
            + ln_gamma(beta + kf + 1.0)
            + ln_gamma(alpha + 1.0)
            - ln_gamma(alpha + beta + kf + 2.0))
        .exp(),
        WeightFamily::Laguerre { alpha } => ln_gamma(alpha + kf + 1.0).exp(),
        WeightFamily::Hermite => {
            if k % 2 == 1 {
                0.0
            } else {
                ln_gamma((kf + 1.0) / 2.0).exp()
            }
        }
    }
}

#[test]
fn gauss_legendre_two_points() {
    let r = gauss_rule(WeightFamily::legendre(), 2).unwrap();
    let x = 1.0 / 3f64.sqrt();
    assert_slice(r.nodes(), &[-x, x], 1e-15);
    assert_slice(r.weights(), &[1.0, 1.0], 1e-15);
    assert_relative_eq!(integrate(&r, |x| x * x), 2.0 / 3.0, max_relative = 1e-15);
}

#[test]
fn gauss_laguerre_one_point() {
    let r = gauss_rule(WeightFamily::Laguerre { alpha: 0.0 }, 1).unwrap();
    assert_eq!(r.nodes(), &[1.0]);
    assert_eq!(r.weights(), &[1.0]);
}

#[test]
fn gauss_chebyshev_closed_form() {
    for n in [1usize, 2, 7, 50, 301] {
        let r = gauss_rule(WeightFamily::chebyshev_first(), n).unwrap();
        for j in 0..n {
            let want = -((2 * j + 1) as f64 * PI / (2 * n) as f64).cos();
            assert!((r.nodes()[j] - want).abs() < 1e-15, "n={n} j={j}");
            assert_relative_eq!(r.weights()[j], PI / n as f64, max_relative = 1e-14);
        }
    }
}

#[test]
fn lobatto_examples() {
    let r = lobatto_rule_jacobi(0.0, 0.0, 3).unwrap();
    assert_slice(r.nodes(), &[-1.0, 0.0, 1.0], 0.0);
    assert_slice(r.weights(), &[1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0], 1e-15);
    let r = lobatto_rule_jacobi(0.0, 0.0, 4).unwrap();
    let x = 1.0 / 5f64.sqrt();
    assert_slice(r.nodes(), &[-1.0, -x, x, 1.0], 1e-15);
    assert_slice(
        r.weights(),
        &[1.0 / 6.0, 5.0 / 6.0, 5.0 / 6.0, 1.0 / 6.0],
        1e-15,
    );
    let r = lobatto_rule_jacobi(0.0, 0.0, 2).unwrap();
    assert_slice(r.weights(), &[1.0, 1.0], 1e-15);
}

#[test]
fn chebyshev_lobatto_halves_the_end_weights() {
    for n in [2usize, 9, 40] {
        let r = lobatto_rule_jacobi(-0.5, -0.5, n + 1).unwrap();
        for (j, &w) in r.weights().iter().enumerate() {
            let want = if j == 0 || j == n {
                PI / (2 * n) as f64
            } else {
                PI / n as f64
            };
            assert_relative_eq!(w, want, max_relative = 1e-14);
            assert!((r.nodes()[j] + (j as f64 * PI / n as f64).cos()).abs() < 1e-15);
        }
    }
}

#[test]
fn radau_examples() {
    let r = radau_rule_jacobi(0.0, 0.0, 2, Endpoint::Left).unwrap();
    assert_slice(r.nodes(), &[-1.0, 1.0 / 3.0], 1e-15);
    assert_slice(r.weights(), &[0.5, 1.5], 1e-15);
    let r = radau_rule_jacobi(0.0, 0.0, 1, Endpoint::Left).unwrap();
    assert_eq!(r.nodes(), &[-1.0]);
    assert_slice(r.weights(), &[2.0], 1e-15);
    let r = radau_rule_jacobi(0.0, 0.0, 2, Endpoint::Right).unwrap();
    assert_slice(r.nodes(), &[-1.0 / 3.0, 1.0], 1e-15);
    assert_slice(r.weights(), &[1.5, 0.5], 1e-15);
}

#[test]
fn laguerre_radau_examples() {
    let r = radau_rule_laguerre(0.0, 2).unwrap();
    assert_slice(r.nodes(), &[0.0, 2.0], 1e-15);
    assert_slice(r.weights(), &[0.5, 0.5], 1e-15);
    assert_relative_eq!(integrate(&r, |x| x * x), 2.0, max_relative = 1e-15);
    let r = radau_rule_laguerre(0.0, 1).unwrap();
    assert_eq!(r.nodes(), &[0.0]);
    assert_slice(r.weights(), &[1.0], 1e-15);
    let r = radau_rule_laguerre(1.0, 2).unwrap();
    assert_slice(r.nodes(), &[0.0, 3.0], 1e-14);
    assert_slice(r.weights(), &[1.0 / 3.0, 2.0 / 3.0], 1e-15);
}

#[test]
fn unsupported_variants() {
    for v in [
        RuleVariant::Lobatto,
        RuleVariant::RadauLeft,
        RuleVariant::RadauRight,
    ] {
        let e = rule(WeightFamily::Hermite, v, 4).unwrap_err();
        assert!(matches!(e, Error::UnsupportedVariant { .. }));
        assert!(e.to_string().contains("variant unsupported for family"));
    }
    for v in [RuleVariant::Lobatto, RuleVariant::RadauRight] {
        assert!(matches!(
            rule(WeightFamily::Laguerre { alpha: 0.0 }, v, 4),
            Err(Error::UnsupportedVariant { .. })
        ));
    }
}

#[test]
fn argument_errors() {
    assert!(matches!(
        lobatto_rule_jacobi(0.0, 0.0, 1),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        radau_rule_jacobi(0.0, 0.0, 0, Endpoint::Left),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        radau_rule_laguerre(0.0, 0),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        gauss_rule(WeightFamily::Hermite, 0),
        Err(Error::Argument(_))
    ));
    assert!(matches!(
        lobatto_rule_jacobi(-1.5, 0.0, 4),
        Err(Error::Parameter(_))
    ));
}

#[test]
fn one_point_weight_is_the_mass() {
    for f in [
        WeightFamily::legendre(),
        WeightFamily::Jacobi {
            alpha: 2.5,
            beta: -0.7,
        },
        WeightFamily::Laguerre { alpha: 3.25 },
        WeightFamily::Hermite,
    ] {
        let r = gauss_rule(f, 1).unwrap();
        assert_relative_eq!(r.weights()[0], f.mu0(), max_relative = 1e-14);
    }
}

#[test]
fn monomial_moments_through_the_exactness_degree() {
    let families = [
        WeightFamily::legendre(),
        WeightFamily::Jacobi {
            alpha: 1.5,
            beta: -0.5,
        },
        WeightFamily::Laguerre { alpha: 0.5 },
        WeightFamily::Hermite,
    ];
    for f in families {
        let vs: &[RuleVariant] = match f {
            WeightFamily::Jacobi { .. } => &[
                RuleVariant::Gauss,
                RuleVariant::Lobatto,
                RuleVariant::RadauLeft,
                RuleVariant::RadauRight,
            ],
            WeightFamily::Laguerre { .. } => &[RuleVariant::Gauss, RuleVariant::RadauLeft],
            WeightFamily::Hermite => &[RuleVariant::Gauss],
        };
        for &v in vs {
            for n in 2..=6 {
                let r = rule(f, v, n).unwrap();
                for k in 0..=r.exactness_degree() {
                    let got = integrate(&r, |x| basis(f, k, x));
                    let want = moment(f, k);
                    let scale = moment(f, k + k % 2);
                    assert!(
                        (got - want).abs() <= 1e-13 * scale,
                        "{f} {v} n={n} k={k}: {got} vs {want}"
                    );
                }
                // One degree higher is not integrated exactly.
                let k = r.exactness_degree() + 1;
                let got = integrate(&r, |x| basis(f, k, x));
                let want = moment(f, k);
                let scale = moment(f, k + k % 2);
                assert!(
                    (got - want).abs() > 1e-10 * scale,
                    "{f} {v} n={n} exact beyond its degree"
                );
            }
        }
    }
}

#[test]
fn large_rules_keep_their_invariants() {
    let cases = [
        (WeightFamily::legendre(), RuleVariant::Gauss),
        (
            WeightFamily::Jacobi {
                alpha: -0.5,
                beta: -0.25,
            },
            RuleVariant::Lobatto,
        ),
        (
            WeightFamily::Jacobi {
                alpha: 5.0,
                beta: 5.0,
            },
            RuleVariant::RadauRight,
        ),
        (
            WeightFamily::Jacobi {
                alpha: 0.0,
                beta: 0.5,
            },
            RuleVariant::RadauLeft,
        ),
        (
            WeightFamily::Laguerre { alpha: 0.5 },
            RuleVariant::RadauLeft,
        ),
        (WeightFamily::Hermite, RuleVariant::Gauss),
    ];
    for (f, v) in cases {
        for n in [500, 2000] {
            let r = rule(f, v, n).unwrap();
            assert_eq!(r.len(), n);
            assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
            assert!(r.weights().iter().all(|&w| w >= 0.0));
            if f.is_bounded() {
                assert!(r.weights().iter().all(|&w| w > 0.0), "{f} {v} n={n}");
            }
            let total: f64 = r.weights().iter().sum();
            assert_relative_eq!(total, f.mu0(), max_relative = 1e-12);
        }
    }
}

#[test]
fn interior_weights_relate_to_the_modified_gauss_rule() {
    for (alpha, beta) in [(0.0, 0.0), (-0.5, 0.25), (3.0, 1.5)] {
        for n in [3usize, 10, 40] {
            let lob = lobatto_rule_jacobi(alpha, beta, n).unwrap();
            let g = gauss_rule(
                WeightFamily::Jacobi {
                    alpha: alpha + 1.0,
                    beta: beta + 1.0,
                },
                n - 2,
            )
            .unwrap();
            for j in 0..n - 2 {
                let x = lob.nodes()[j + 1];
                assert_eq!(x, g.nodes()[j]);
                let r = (1.0 - x) * (1.0 + x);
                assert_relative_eq!(
                    lob.weights()[j + 1] * r,
                    g.weights()[j],
                    max_relative = 1e-13
                );
            }
            let rad = radau_rule_jacobi(alpha, beta, n, Endpoint::Left).unwrap();
            let g = gauss_rule(
                WeightFamily::Jacobi {
                    alpha,
                    beta: beta + 1.0,
                },
                n - 1,
            )
            .unwrap();
            for j in 0..n - 1 {
                let x = rad.nodes()[j + 1];
                assert_relative_eq!(
                    rad.weights()[j + 1] * (1.0 + x),
                    g.weights()[j],
                    max_relative = 1e-13
                );
            }
        }
        let lag = radau_rule_laguerre(alpha, 12).unwrap();
        let g = gauss_rule(WeightFamily::Laguerre { alpha: alpha + 1.0 }, 11).unwrap();
        for j in 0..11 {
            let x = lag.nodes()[j + 1];
            assert_relative_eq!(
                lag.weights()[j + 1] * x,
                g.weights()[j],
                max_relative = 1e-13
            );
        }
    }
}

#[test]
fn metadata() {
    let r = lobatto_rule_jacobi(0.0, 0.0, 5).unwrap();
    assert_eq!((r.npreassigned_left(), r.npreassigned_right()), (1, 1));
    assert_eq!(r.exactness_degree(), 7);
    let r = radau_rule_jacobi(0.0, 0.0, 5, Endpoint::Right).unwrap();
    assert_eq!((r.npreassigned_left(), r.npreassigned_right()), (0, 1));
    assert_eq!(r.exactness_degree(), 8);
    let r = gauss_rule(WeightFamily::Hermite, 5).unwrap();
    assert_eq!(r.exactness_degree(), 9);
    assert_eq!(r.variant(), RuleVariant::Gauss);
    assert_eq!(r.family(), WeightFamily::Hermite);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn right_radau_mirrors_left(alpha in -0.95f64..6.0, beta in -0.95f64..6.0, n in 1usize..40) {
        let right = radau_rule_jacobi(alpha, beta, n, Endpoint::Right).unwrap();
        let left = radau_rule_jacobi(beta, alpha, n, Endpoint::Left).unwrap();
        let mirrored: Vec<u64> = left.nodes().iter().rev().map(|x| (-x).to_bits()).collect();
        let got: Vec<u64> = right.nodes().iter().map(|x| x.to_bits()).collect();
        prop_assert_eq!(got, mirrored);
        let w: Vec<f64> = left.weights().iter().rev().copied().collect();
        prop_assert_eq!(right.weights(), &w[..]);
    }

    #[test]
    fn weights_sum_to_the_mass(alpha in -0.95f64..8.0, beta in -0.95f64..8.0, n in 2usize..150) {
        let f = WeightFamily::Jacobi { alpha, beta };
        for v in [RuleVariant::Gauss, RuleVariant::Lobatto, RuleVariant::RadauLeft, RuleVariant::RadauRight] {
            let r = rule(f, v, n).unwrap();
            let total: f64 = r.weights().iter().sum();
            prop_assert!(((total - f.mu0()) / f.mu0()).abs() <= 1e-12, "{} {}: {} vs {}", f, v, total, f.mu0());
            prop_assert!(r.weights().iter().all(|&w| w > 0.0));
            prop_assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn laguerre_rules_integrate_polynomials(alpha in -0.95f64..5.0, n in 1usize..12) {
        let f = WeightFamily::Laguerre { alpha };
        for v in [RuleVariant::Gauss, RuleVariant::RadauLeft] {
            let r = rule(f, v, n).unwrap();
            for k in 0..=r.exactness_degree().min(10) {
                let got = integrate(&r, |x| basis(f, k, x));
                let want = moment(f, k);
                prop_assert!(((got - want) / want).abs() <= 1e-12, "{} n={} k={}", v, n, k);
            }
        }
    }
}
