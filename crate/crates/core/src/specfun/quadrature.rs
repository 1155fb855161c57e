//! Adaptive bisection with a fixed Gauss-Legendre panel rule.
//!
//! Every panel is integrated once as a whole and once as two halves; the
//! difference is the panel's error estimate and the halves are its value.
//! The panel with the largest estimate (leftmost on ties) is split until the
//! summed estimate meets the tolerance. Panels are kept sorted and summed
//! left to right, so results are bit-identical across runs.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Number of nodes of the panel rule.
pub const PANEL_ORDER: usize = 15;

/// Default cap on function evaluations.
pub const DEFAULT_MAX_EVALUATIONS: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadratureResult {
    pub value: f64,
    /// Same units as `value`; never negative.
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on `P_n` from the Chebyshev-like initial
    /// guesses `cos(π(i - 1/4)/(n + 1/2))`.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let n = order;
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 1..=n {
            let mut x = libm::cos(core::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `(∫f, ∫|f|)` over `[a, b]`.
    fn apply<F: FnMut(f64) -> f64>(&self, f: &mut F, a: f64, b: f64) -> (f64, f64) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let (mut s, mut s_abs) = (0.0, 0.0);
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let y = f(mid + half * x);
            s += w * y;
            s_abs += w * y.abs();
        }
        (s * half, s_abs * half.abs())
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    left: (f64, f64),
    right: (f64, f64),
    err: f64,
}

impl Panel {
    fn value(&self) -> f64 {
        self.left.0 + self.right.0
    }

    fn abs_value(&self) -> f64 {
        self.left.1 + self.right.1
    }
}

/// Adaptive integrator configuration.
#[derive(Clone, Debug)]
pub struct Integrator {
    rule: GaussLegendre,
    max_evaluations: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator::new(DEFAULT_MAX_EVALUATIONS)
    }
}

impl Integrator {
    pub fn new(max_evaluations: usize) -> Self {
        Integrator {
            rule: GaussLegendre::new(PANEL_ORDER),
            max_evaluations,
        }
    }

    fn make_panel<F: FnMut(f64) -> f64>(&self, f: &mut F, a: f64, b: f64, whole: f64) -> Panel {
        let m = 0.5 * (a + b);
        let left = self.rule.apply(f, a, m);
        let right = self.rule.apply(f, m, b);
        Panel {
            a,
            b,
            left,
            right,
            err: (whole - (left.0 + right.0)).abs(),
        }
    }

    /// Integrates `f` over the finite interval `[a, b]`.
    ///
    /// Stops once the summed error estimate is at most `tol · max(|I|, ∫|f|·ε)`
    /// where the second term only matters for integrals that cancel to zero;
    /// for those the target is `tol` relative to `∫|f|`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
        if !(tol > 0.0) {
            return Err(Error::Domain("quadrature tolerance must be positive"));
        }
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain("quadrature bounds must be finite"));
        }
        let n = self.rule.order();
        let mut evaluations = n;
        let (whole, _) = self.rule.apply(&mut f, a, b);
        let mut panels = alloc::vec![self.make_panel(&mut f, a, b, whole)];
        evaluations += 2 * n;
        loop {
            let value: f64 = panels.iter().map(Panel::value).sum();
            let abs_value: f64 = panels.iter().map(Panel::abs_value).sum();
            let err: f64 = panels.iter().map(|p| p.err).sum();
            let target = tol * value.abs().max(libm::sqrt(f64::EPSILON) * abs_value);
            let floor = 64.0 * f64::EPSILON * abs_value;
            if err <= target || err <= floor || err == 0.0 {
                return Ok(QuadratureResult {
                    value,
                    abs_error_estimate: err,
                    evaluations,
                });
            }
            if evaluations + 4 * n > self.max_evaluations {
                return Err(Error::NonConvergence {
                    tol,
                    estimate: err,
                    evaluations,
                });
            }
            let (idx, _) = panels
                .iter()
                .enumerate()
                .fold((0, -1.0), |best, (i, p)| if p.err > best.1 { (i, p.err) } else { best });
            let p = panels[idx];
            let m = 0.5 * (p.a + p.b);
            if !(m > p.a && m < p.b) {
                return Err(Error::NonConvergence {
                    tol,
                    estimate: err,
                    evaluations,
                });
            }
            let left = self.make_panel(&mut f, p.a, m, p.left.0);
            let right = self.make_panel(&mut f, m, p.b, p.right.0);
            evaluations += 4 * n;
            panels[idx] = left;
            panels.insert(idx + 1, right);
        }
    }
}

/// Integrates `f` over `[a, b]` with the default integrator.
pub fn integrate<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    Integrator::default().integrate(f, a, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_for_degree_29() {
        let rule = GaussLegendre::new(PANEL_ORDER);
        let wsum: f64 = rule.weights().iter().sum();
        assert!((wsum - 2.0).abs() < 1e-14);
        for deg in 0..=29 {
            let mut f = |x: f64| libm::pow(x, deg as f64);
            let (v, _) = rule.apply(&mut f, -1.0, 1.0);
            let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
            assert!((v - exact).abs() < 1e-14, "deg {deg}: {v} vs {exact}");
        }
    }

    #[test]
    fn smooth_integrals() {
        let r = integrate(libm::exp, 0.0, 1.0, 1e-13).unwrap();
        assert!((r.value - (core::f64::consts::E - 1.0)).abs() < 1e-13);
        assert!(r.abs_error_estimate >= 0.0 && r.evaluations >= 1);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫₀¹ x^{-1/2} dx = 2
        let r = integrate(|x| 1.0 / libm::sqrt(x), 0.0, 1.0, 1e-10).unwrap();
        assert!((r.value - 2.0).abs() < 1e-9, "{r:?}");
    }

    #[test]
    fn cancelling_integral_converges_to_zero() {
        let r = integrate(|x| libm::sin(3.0 * x), -1.0, 1.0, 1e-12).unwrap();
        assert!(r.value.abs() < 1e-14);
    }

    #[test]
    fn budget_exhaustion_reports_nonconvergence() {
        let r = Integrator::new(200).integrate(|x| libm::sin(1.0 / x), 1e-6, 1.0, 1e-14);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn deterministic() {
        let f = |x: f64| libm::exp(-x * x) * libm::cos(7.0 * x);
        let a = integrate(f, -3.0, 2.0, 1e-12).unwrap();
        let b = integrate(f, -3.0, 2.0, 1e-12).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.evaluations, b.evaluations);
    }
}
