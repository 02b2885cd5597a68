//! Centered 11-point finite-difference derivatives on uniform grids.
//!
//! Both stencils are evaluated as combinations of averaged central
//! differences `μδ^k f_i`, built from forward differences of the samples:
//!
//! ```text
//! h f'     ≈ μδ - μδ³/6 + μδ⁵/30 - μδ⁷/140 + μδ⁹/630     (error O(h¹⁰))
//! h⁵ f⁽⁵⁾  ≈ μδ⁵ - μδ⁷/3 + 13 μδ⁹/144                     (error O(h⁶))
//! ```
//!
//! Expanded over the offsets `-5..=5` the fifth-derivative weights are
//! `[-13/288, 19/36, -87/32, 13/2, -323/48, 0, 323/48, -13/2, 87/32, -19/36, 13/288]`
//! and the first-derivative weights are
//! `[-1/1260, 5/504, -5/84, 5/21, -5/6, 0, 5/6, -5/21, 5/84, -5/504, 1/1260]`.
//!
//! Differences of exactly represented polynomial samples of degree four or
//! less vanish exactly, so the fifth derivative of such data is exactly 0.

/// Points on each side of the evaluation point.
pub const HALF_WIDTH: usize = 5;
/// Total stencil width.
pub const WIDTH: usize = 2 * HALF_WIDTH + 1;

/// Fifth-derivative weights over offsets `-5..=5`, for reference and tests.
pub const FIFTH_DERIVATIVE_WEIGHTS: [f64; WIDTH] = [
    -13.0 / 288.0,
    19.0 / 36.0,
    -87.0 / 32.0,
    13.0 / 2.0,
    -323.0 / 48.0,
    0.0,
    323.0 / 48.0,
    -13.0 / 2.0,
    87.0 / 32.0,
    -19.0 / 36.0,
    13.0 / 288.0,
];

/// First-derivative weights over offsets `-5..=5`.
pub const FIRST_DERIVATIVE_WEIGHTS: [f64; WIDTH] = [
    -1.0 / 1260.0,
    5.0 / 504.0,
    -5.0 / 84.0,
    5.0 / 21.0,
    -5.0 / 6.0,
    0.0,
    5.0 / 6.0,
    -5.0 / 21.0,
    5.0 / 84.0,
    -5.0 / 504.0,
    1.0 / 1260.0,
];

/// `μδ^k` for odd k = 1, 3, …, 9 at the centre of an 11-sample window.
fn central_differences(window: &[f64]) -> [f64; 5] {
    debug_assert_eq!(window.len(), WIDTH);
    let mut diff: Vec<f64> = window.to_vec();
    let mut out = [0.0; 5];
    for order in 1usize..=9 {
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        if order % 2 == 1 {
            // Forward differences Δ^order f_j are centred at j + order/2;
            // the two nearest the window centre straddle it.
            let j = HALF_WIDTH - order.div_ceil(2);
            out[order / 2] = 0.5 * (diff[j] + diff[j + 1]);
        }
    }
    out
}

fn map_interior(samples: &[f64], f: impl Fn(&[f64; 5]) -> f64) -> Vec<Option<f64>> {
    let n = samples.len();
    (0..n)
        .map(|i| {
            (i >= HALF_WIDTH && i + HALF_WIDTH < n).then(|| {
                f(&central_differences(
                    &samples[i - HALF_WIDTH..=i + HALF_WIDTH],
                ))
            })
        })
        .collect()
}

/// Fifth derivative at every sample; `None` within five samples of either end.
pub fn fifth_derivative(samples: &[f64], step: f64) -> Vec<Option<f64>> {
    let h5 = step.powi(5);
    map_interior(samples, |d| (d[2] - d[3] / 3.0 + 13.0 * d[4] / 144.0) / h5)
}

/// First derivative at every sample; `None` within five samples of either end.
pub fn first_derivative(samples: &[f64], step: f64) -> Vec<Option<f64>> {
    map_interior(samples, |d| {
        (d[0] - d[1] / 6.0 + d[2] / 30.0 - d[3] / 140.0 + d[4] / 630.0) / step
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offsets() -> impl Iterator<Item = f64> {
        (-5..=5).map(|o| o as f64)
    }

    fn apply_weights(w: &[f64; WIDTH], f: impl Fn(f64) -> f64) -> f64 {
        w.iter().zip(offsets()).map(|(w, x)| w * f(x)).sum()
    }

    #[test]
    fn weights_reproduce_monomials() {
        // Σ w_j j^m = m! δ_{m,5} for m ≤ 10
        for m in 0..=10 {
            let got = apply_weights(&FIFTH_DERIVATIVE_WEIGHTS, |x| x.powi(m));
            let want = if m == 5 { 120.0 } else { 0.0 };
            assert!((got - want).abs() < 1e-10, "m = {m}: {got}");
            let got = apply_weights(&FIRST_DERIVATIVE_WEIGHTS, |x| x.powi(m));
            let want = if m == 1 { 1.0 } else { 0.0 };
            assert!((got - want).abs() < 1e-10, "m = {m}: {got}");
        }
    }

    #[test]
    fn difference_form_matches_weights() {
        let samples: Vec<f64> = (0..11)
            .map(|i| ((i as f64) * 0.37).sin() + 0.1 * i as f64)
            .collect();
        let d5 = fifth_derivative(&samples, 1.0)[5].unwrap();
        let w5: f64 = FIFTH_DERIVATIVE_WEIGHTS
            .iter()
            .zip(&samples)
            .map(|(w, s)| w * s)
            .sum();
        assert!((d5 - w5).abs() < 1e-12);
        let d1 = first_derivative(&samples, 1.0)[5].unwrap();
        let w1: f64 = FIRST_DERIVATIVE_WEIGHTS
            .iter()
            .zip(&samples)
            .map(|(w, s)| w * s)
            .sum();
        assert!((d1 - w1).abs() < 1e-13);
    }

    #[test]
    fn t5_and_t6() {
        let h = 0.5;
        let t5: Vec<f64> = (0..21).map(|i| (i as f64 * h).powi(5)).collect();
        let t6: Vec<f64> = (0..21).map(|i| (i as f64 * h).powi(6)).collect();
        for (i, d) in fifth_derivative(&t5, h).iter().enumerate() {
            if let Some(d) = d {
                assert!((d - 120.0).abs() < 1e-6, "{i}: {d}");
            }
        }
        for (i, d) in fifth_derivative(&t6, h).iter().enumerate() {
            if let Some(d) = d {
                let t = i as f64 * h;
                assert!(
                    (d - 720.0 * t).abs() < 1e-6 * (720.0 * t).max(1.0),
                    "{i}: {d}"
                );
            }
        }
    }

    #[test]
    fn boundaries_are_none() {
        let s = vec![0.0; 12];
        let d = fifth_derivative(&s, 1.0);
        assert_eq!(d.iter().filter(|x| x.is_some()).count(), 2);
        assert!(d[..5].iter().all(Option::is_none));
        assert!(first_derivative(&s[..10], 1.0).iter().all(Option::is_none));
    }
}
