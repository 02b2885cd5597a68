//! Globally adaptive Gauss-Legendre quadrature on finite and semi-infinite
//! intervals.
//!
//! Each panel is integrated once with an `n`-point rule and once as the sum
//! of the same rule on its two halves. The difference between the two is the
//! panel's error estimate and the halves' sum is the accepted value, so the
//! estimate bounds the reported value's error by a wide margin for smooth
//! integrands. The panel with the largest estimate is bisected until the
//! total estimate meets the tolerance.
//!
//! Panels are summed in order of their left endpoint, so a given integrand
//! and tolerance always yield the same bits.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes the `n`-point rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Tricomi's initial guess for the i-th largest root
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Applies the rule to `[a, b]`.
    pub fn apply<F>(&self, f: &mut F, a: f64, b: f64) -> Result<f64>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        Ok(self.apply_with_errors(&mut |x| Ok((f(x)?, 0.0)), a, b)?.0)
    }

    /// Applies the rule to an integrand that carries its own absolute error,
    /// returning the integral and the propagated error `Σ w |δf|`.
    fn apply_with_errors<F>(&self, f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
    where
        F: FnMut(f64) -> Result<(f64, f64)>,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let (mut sum, mut err) = (0.0, 0.0);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let (y, dy) = f(mid + half * x)?;
            if !y.is_finite() {
                return Err(Error::NonConvergence(format!(
                    "integrand is not finite at x = {}",
                    mid + half * x
                )));
            }
            sum += w * y;
            err += w * dy.abs();
        }
        Ok((sum * half, err * half.abs()))
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

const DEFAULT_ORDER: usize = 10;

fn default_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(DEFAULT_ORDER))
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    /// Absolute error estimate.
    pub error: f64,
    pub panels: usize,
}

impl Estimate {
    /// Relative error estimate; zero integrals with zero error give 0.
    pub fn relative_error(&self) -> f64 {
        if self.error == 0.0 {
            0.0
        } else {
            self.error / self.value.abs()
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

// Max-heap on error; ties broken by position for a deterministic order.
impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Adaptive integrator settings.
#[derive(Debug, Clone, Copy)]
pub struct Integrator {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_panels: usize,
    /// Number of equal panels the interval is cut into before refinement.
    pub initial_panels: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 0.0,
            max_panels: 4000,
            initial_panels: 4,
        }
    }
}

impl Integrator {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    fn panel<F>(&self, f: &mut F, a: f64, b: f64) -> Result<Panel>
    where
        F: FnMut(f64) -> Result<(f64, f64)>,
    {
        let rule = default_rule();
        let m = 0.5 * (a + b);
        let (whole, _) = rule.apply_with_errors(f, a, b)?;
        let (left, left_err) = rule.apply_with_errors(f, a, m)?;
        let (right, right_err) = rule.apply_with_errors(f, m, b)?;
        let halves = left + right;
        Ok(Panel {
            a,
            b,
            value: halves,
            error: (whole - halves).abs() + left_err + right_err,
        })
    }

    /// Integrates a fallible integrand over the finite interval `[a, b]`.
    pub fn try_integrate<F>(&self, mut f: F, a: f64, b: f64) -> Result<Estimate>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        self.try_integrate_with_errors(|x| Ok((f(x)?, 0.0)), a, b)
    }

    /// Like [`Integrator::try_integrate`] for an integrand returning
    /// `(value, absolute error)`, such as an inner integral of a nested
    /// quadrature. Inner errors are propagated through the weights into each
    /// panel's error estimate.
    pub fn try_integrate_with_errors<F>(&self, mut f: F, a: f64, b: f64) -> Result<Estimate>
    where
        F: FnMut(f64) -> Result<(f64, f64)>,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::domain("integration bounds must be finite"));
        }
        if a == b {
            return Ok(Estimate {
                value: 0.0,
                error: 0.0,
                panels: 0,
            });
        }
        let n0 = self.initial_panels.max(1);
        let width = (b - a) / n0 as f64;
        let mut heap = BinaryHeap::with_capacity(self.max_panels + 2);
        for i in 0..n0 {
            let lo = a + width * i as f64;
            let hi = if i + 1 == n0 {
                b
            } else {
                a + width * (i + 1) as f64
            };
            heap.push(self.panel(&mut f, lo, hi)?);
        }

        loop {
            let (value, error) = totals(&heap);
            let target = self.abs_tol.max(self.rel_tol * value.abs());
            if error <= target {
                return Ok(finish(heap));
            }
            if heap.len() >= self.max_panels {
                return Err(Error::NonConvergence(format!(
                    "adaptive quadrature on [{a}, {b}] stopped at {} panels with \
                     estimated error {error:e} for value {value:e} (target {target:e})",
                    heap.len()
                )));
            }
            let worst = heap.pop().expect("heap is never empty");
            let m = 0.5 * (worst.a + worst.b);
            if m <= worst.a || m >= worst.b {
                // Panel cannot be split further in floating point.
                return Err(Error::NonConvergence(format!(
                    "panel [{}, {}] reached floating-point resolution",
                    worst.a, worst.b
                )));
            }
            heap.push(self.panel(&mut f, worst.a, m)?);
            heap.push(self.panel(&mut f, m, worst.b)?);
        }
    }

    /// Integrates an infallible integrand over `[a, b]`.
    pub fn integrate<F>(&self, mut f: F, a: f64, b: f64) -> Result<Estimate>
    where
        F: FnMut(f64) -> f64,
    {
        self.try_integrate(|x| Ok(f(x)), a, b)
    }

    /// Integrates over `[a, ∞)` with the map `x = a + scale·s/(1 - s)`,
    /// `s ∈ [0, 1)`. The integrand must decay faster than `1/x`; for an
    /// exponential tail `exp(-x/scale)` the mapped integrand vanishes smoothly
    /// at `s = 1`.
    pub fn try_integrate_to_infinity<F>(&self, mut f: F, a: f64, scale: f64) -> Result<Estimate>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        self.try_integrate_to_infinity_with_errors(|x| Ok((f(x)?, 0.0)), a, scale)
    }

    /// Semi-infinite version of [`Integrator::try_integrate_with_errors`].
    pub fn try_integrate_to_infinity_with_errors<F>(
        &self,
        mut f: F,
        a: f64,
        scale: f64,
    ) -> Result<Estimate>
    where
        F: FnMut(f64) -> Result<(f64, f64)>,
    {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::domain("tail scale must be finite and > 0"));
        }
        self.try_integrate_with_errors(
            |s| {
                let one_minus = 1.0 - s;
                let x = a + scale * s / one_minus;
                if !x.is_finite() {
                    return Ok((0.0, 0.0));
                }
                let (y, dy) = f(x)?;
                let jacobian = scale / (one_minus * one_minus);
                Ok(if y == 0.0 && dy == 0.0 {
                    (0.0, 0.0)
                } else {
                    (y * jacobian, dy * jacobian)
                })
            },
            0.0,
            1.0,
        )
    }

    pub fn integrate_to_infinity<F>(&self, mut f: F, a: f64, scale: f64) -> Result<Estimate>
    where
        F: FnMut(f64) -> f64,
    {
        self.try_integrate_to_infinity(|x| Ok(f(x)), a, scale)
    }
}

fn totals(heap: &BinaryHeap<Panel>) -> (f64, f64) {
    heap.iter()
        .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
}

fn finish(heap: BinaryHeap<Panel>) -> Estimate {
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let (value, error) = panels
        .iter()
        .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
    Estimate {
        value,
        error,
        panels: panels.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(10);
        let w: f64 = rule.weights().iter().sum();
        assert!((w - 2.0).abs() < 1e-14);
        for deg in 0..20 {
            let mut f = |x: f64| Ok(x.powi(deg));
            let got = rule.apply(&mut f, 0.0, 1.0).unwrap();
            let want = 1.0 / (deg as f64 + 1.0);
            assert!((got - want).abs() < 1e-14, "degree {deg}: {got} vs {want}");
        }
    }

    #[test]
    fn odd_rule_has_zero_node() {
        let rule = GaussLegendre::new(7);
        assert_eq!(rule.nodes()[3], 0.0);
        let w: f64 = rule.weights().iter().sum();
        assert!((w - 2.0).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_finite_integral() {
        let est = Integrator::default()
            .integrate(|x| (20.0 * x).sin().powi(2), 0.0, PI)
            .unwrap();
        assert!((est.value - PI / 2.0).abs() < 1e-12);
        assert!(est.error < 1e-9);
    }

    #[test]
    fn endpoint_log_singularity() {
        // ∫0^1 ln x dx = -1
        let est = Integrator::default().integrate(f64::ln, 0.0, 1.0).unwrap();
        assert!((est.value + 1.0).abs() < 1e-9, "{est:?}");
    }

    #[test]
    fn semi_infinite_zeta_integrals() {
        // ∫0^∞ u³/(e^u - 1) du = π⁴/15
        let est = Integrator::default()
            .integrate_to_infinity(|u| u.powi(3) / u.exp_m1(), 0.0, 1.0)
            .unwrap();
        assert!(
            (est.value / (PI.powi(4) / 15.0) - 1.0).abs() < 1e-12,
            "{est:?}"
        );
        // shifted lower bound: ∫a^∞ e^-u du = e^-a
        let est = Integrator::default()
            .integrate_to_infinity(|u| (-u).exp(), 7.5, 1.0)
            .unwrap();
        assert!((est.value / (-7.5f64).exp() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn error_estimate_bounds_true_error() {
        for k in [1.0, 3.0, 10.0] {
            let est = Integrator::with_rel_tol(1e-6)
                .integrate(|x| (-k * x).exp(), 0.0, 1.0)
                .unwrap();
            let exact = (1.0 - (-k).exp()) / k;
            assert!((est.value - exact).abs() <= est.error.max(1e-15));
        }
    }

    #[test]
    fn reports_non_convergence() {
        let limited = Integrator {
            max_panels: 8,
            ..Integrator::default()
        };
        let err = limited
            .integrate(|x| (1.0 / x).sin(), 1e-6, 1.0)
            .unwrap_err();
        assert!(matches!(err, Error::NonConvergence(_)));
    }

    #[test]
    fn non_finite_integrand_is_an_error() {
        let err = Integrator::default()
            .integrate(|x| 1.0 / (x - 0.5), 0.0, 1.0)
            .unwrap_err();
        assert!(matches!(err, Error::NonConvergence(_)));
    }

    #[test]
    fn deterministic() {
        let f = |x: f64| (x * 3.0).cos() * (-x).exp();
        let a = Integrator::default().integrate(f, 0.0, 10.0).unwrap();
        let b = Integrator::default().integrate(f, 0.0, 10.0).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }
}
