//! Log-Gamma, Beta and the radial integral
//! `A(α, β) = ∫₀^∞ sinh^α t · cosh^{-β} t dt`.
//!
//! Substituting `u = tanh t` gives `sinh t = u/√(1-u²)`, `cosh t = 1/√(1-u²)`
//! and `dt = du/(1-u²)`, so
//!
//! ```text
//! A(α, β) = ∫₀¹ u^α (1-u²)^{(β-α)/2 - 1} du = ½ B((α+1)/2, (β-α)/2)
//! ```
//!
//! The quadrature route integrates the middle expression numerically; the
//! closed route evaluates the right-hand side through [`log_gamma`]. The
//! first Beta argument was chosen by comparing both candidates against
//! quadrature, see [`BetaArgument`] and `docs/beta_adjudication.md`.

pub mod quadrature;

use alloc::vec::Vec;

pub use quadrature::{integrate, GaussLegendre, Integrator, QuadratureResult};

use crate::error::{Error, Result};

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain("log_gamma needs a finite x > 0"));
    }
    Ok(libm::lgamma(x))
}

/// `B(x, y) = Γ(x)Γ(y)/Γ(x+y)`, through log-Gamma.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::Domain("beta needs x > 0 and y > 0"));
    }
    Ok(libm::exp(log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?))
}

/// Candidate forms of the first Beta argument in the closed form of `A(α, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BetaArgument {
    /// `(α-1)/2`. Diverges at `α = 1` and disagrees with quadrature.
    AlphaMinusOne,
    /// `(α+1)/2`. Matches the substitution above.
    AlphaPlusOne,
}

impl BetaArgument {
    /// The variant used by [`radial_integral_closed`].
    pub const ADJUDICATED: BetaArgument = BetaArgument::AlphaPlusOne;

    pub fn first_argument(self, alpha: f64) -> f64 {
        match self {
            BetaArgument::AlphaMinusOne => (alpha - 1.0) / 2.0,
            BetaArgument::AlphaPlusOne => (alpha + 1.0) / 2.0,
        }
    }
}

fn check_convergence(alpha: f64, beta_exp: f64) -> Result<()> {
    if alpha > -1.0 && beta_exp - alpha > 0.0 && alpha.is_finite() && beta_exp.is_finite() {
        Ok(())
    } else {
        Err(Error::Divergent {
            alpha,
            beta: beta_exp,
        })
    }
}

/// `½ B(u, (β-α)/2)` with `u` given by `variant`.
pub fn radial_integral_variant(variant: BetaArgument, alpha: f64, beta_exp: f64) -> Result<f64> {
    check_convergence(alpha, beta_exp)?;
    let u = variant.first_argument(alpha);
    beta(u, (beta_exp - alpha) / 2.0)
        .map(|b| 0.5 * b)
        .map_err(|_| Error::Divergent {
            alpha,
            beta: beta_exp,
        })
}

/// Closed form of `∫₀^∞ sinh^α t · cosh^{-β} t dt`.
pub fn radial_integral_closed(alpha: f64, beta_exp: f64) -> Result<f64> {
    radial_integral_variant(BetaArgument::ADJUDICATED, alpha, beta_exp)
}

/// Quadrature of `∫₀^∞ sinh^α t · cosh^{-β} t dt` after `u = tanh t`.
pub fn radial_integral_quadrature(alpha: f64, beta_exp: f64, tol: f64) -> Result<QuadratureResult> {
    check_convergence(alpha, beta_exp)?;
    let e = (beta_exp - alpha) / 2.0 - 1.0;
    integrate(
        |u| libm::pow(u, alpha) * libm::pow((1.0 - u) * (1.0 + u), e),
        0.0,
        1.0,
        tol,
    )
}

/// One row of the Beta-argument evidence table.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AdjudicationRow {
    pub alpha: f64,
    pub beta_exp: f64,
    pub quadrature: f64,
    /// `None` where the candidate diverges.
    pub alpha_minus_one: Option<f64>,
    pub alpha_plus_one: Option<f64>,
}

impl AdjudicationRow {
    fn matches(candidate: Option<f64>, reference: f64, rel_tol: f64) -> bool {
        candidate.is_some_and(|v| (v - reference).abs() <= rel_tol * reference.abs())
    }
}

/// Integer pairs used for the committed evidence table.
pub const ADJUDICATION_PAIRS: [(f64, f64); 6] = [(1.0, 3.0), (3.0, 7.0), (2.0, 5.0), (5.0, 9.0), (4.0, 10.0), (1.0, 5.0)];

pub fn adjudication_table(pairs: &[(f64, f64)], tol: f64) -> Result<Vec<AdjudicationRow>> {
    pairs
        .iter()
        .map(|&(alpha, beta_exp)| {
            Ok(AdjudicationRow {
                alpha,
                beta_exp,
                quadrature: radial_integral_quadrature(alpha, beta_exp, tol)?.value,
                alpha_minus_one: radial_integral_variant(BetaArgument::AlphaMinusOne, alpha, beta_exp).ok(),
                alpha_plus_one: radial_integral_variant(BetaArgument::AlphaPlusOne, alpha, beta_exp).ok(),
            })
        })
        .collect()
}

/// The variant agreeing with quadrature on every row, if exactly one does.
pub fn select_beta_argument(rows: &[AdjudicationRow], rel_tol: f64) -> Option<BetaArgument> {
    let minus = rows
        .iter()
        .all(|r| AdjudicationRow::matches(r.alpha_minus_one, r.quadrature, rel_tol));
    let plus = rows
        .iter()
        .all(|r| AdjudicationRow::matches(r.alpha_plus_one, r.quadrature, rel_tol));
    match (minus, plus) {
        (true, false) => Some(BetaArgument::AlphaMinusOne),
        (false, true) => Some(BetaArgument::AlphaPlusOne),
        _ => None,
    }
}
