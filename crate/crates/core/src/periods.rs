//! Flensted-Jensen functions on rank-one families and the period integral
//! pairing them across `G ⊃ G'`.
//!
//! A Flensted-Jensen function is of product type,
//! `ψ(k b_s) = (cosh s)^{-(iλ+ρ)} · P^{(α,β)}(x)`. For the complex family on
//! `SU(p,q+1)` with `q > p > 0` the period integral against the function of
//! `SU(p,q)` separates into
//!
//! ```text
//! I = A(2p-1, 2q+n+k-1) · ∫_{-1}^{1} P_n^{(q-1,0)} P_k^{(q-2,0)} (1-x)^{q-2} dx
//! ```
//!
//! where the radial exponents come from the two spectral exponents and the
//! radial density (see [`radial_exponents`]).
//!
//! Conventions:
//! - In the period formulas the labels `n`, `k` are used directly as the
//!   polynomial degrees. [`fj_eval`] instead evaluates the polynomial of
//!   degree `n/2`, the degree attached to the label. Vanishing (`k ≤ n`) is
//!   the same under both readings.
//! - The angular measure is the bare weight `(1-x)^α dx`; values are in that
//!   normalisation, vanishing does not depend on it.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::jacobi::{jacobi_poly_int, jacobi_recurrence_eval, weighted_inner_product};
use crate::specfun::{integrate, radial_integral_closed, radial_integral_quadrature, QuadratureResult};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum FieldKind {
    Complex,
    Quaternionic,
    Octonionic,
}

/// A rank-one family of hyperbolic spaces with its compact dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpaceFamily {
    pub kind: FieldKind,
    pub p: u32,
    pub q: u32,
}

impl SpaceFamily {
    pub fn new(kind: FieldKind, p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Domain("family needs p > 0 and q > 0"));
        }
        Ok(SpaceFamily { kind, p, q })
    }

    pub fn complex(p: u32, q: u32) -> Result<Self> {
        Self::new(FieldKind::Complex, p, q)
    }

    pub fn quaternionic(p: u32, q: u32) -> Result<Self> {
        Self::new(FieldKind::Quaternionic, p, q)
    }

    /// The family of the subgroup, one step down in `q`.
    pub fn subgroup(&self) -> Result<Self> {
        Self::new(self.kind, self.p, self.q.saturating_sub(1))
    }

    pub fn jacobi_alpha(&self) -> u32 {
        match self.kind {
            FieldKind::Complex => self.q - 1,
            FieldKind::Quaternionic => 2 * self.q - 1,
            FieldKind::Octonionic => 7,
        }
    }

    pub fn jacobi_beta(&self) -> u32 {
        match self.kind {
            FieldKind::Complex => 0,
            FieldKind::Quaternionic => 1,
            FieldKind::Octonionic => 3,
        }
    }

    pub fn rho(&self) -> Option<u32> {
        match self.kind {
            FieldKind::Complex => Some(self.p + self.q),
            FieldKind::Quaternionic => Some(2 * self.p + 2 * self.q + 1),
            FieldKind::Octonionic => None,
        }
    }

    pub fn rho_t(&self) -> Option<u32> {
        match self.kind {
            FieldKind::Complex => Some(self.q),
            FieldKind::Quaternionic => Some(self.q + 1),
            FieldKind::Octonionic => None,
        }
    }

    /// `(cosh power, sinh power)` of the radial density.
    pub fn density_powers(&self) -> Option<(u32, u32)> {
        match self.kind {
            FieldKind::Complex => Some((2 * self.q - 1, 2 * self.p - 1)),
            FieldKind::Quaternionic => Some((4 * self.q + 3, 4 * self.p - 1)),
            FieldKind::Octonionic => None,
        }
    }
}

/// The lowest-K-type function with Flensted-Jensen label `n` (even).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FJFunction {
    pub family: SpaceFamily,
    pub n: u32,
}

impl FJFunction {
    pub fn new(family: SpaceFamily, n: u32) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::Domain("Flensted-Jensen label must be even"));
        }
        Ok(FJFunction { family, n })
    }

    /// `iλ`.
    pub fn i_lambda(&self) -> Result<i64> {
        let (p, q, n) = (self.family.p as i64, self.family.q as i64, self.n as i64);
        match self.family.kind {
            FieldKind::Complex => Ok(q - p + n),
            FieldKind::Quaternionic => Ok(2 * q - 2 * p + 1 + n),
            FieldKind::Octonionic => Err(Error::UnsupportedFamily("octonionic radial factor")),
        }
    }

    /// `iλ + ρ`, the decay exponent in `cosh s`.
    pub fn spectral_exponent(&self) -> Result<u32> {
        let rho = self
            .family
            .rho()
            .ok_or(Error::UnsupportedFamily("octonionic radial factor"))?;
        Ok((self.i_lambda()? + rho as i64) as u32)
    }

    /// `μ = iλ + ρ - 2ρ_t`; equal to the label on the complex family.
    pub fn mu(&self) -> Result<i64> {
        let rho_t = self.family.rho_t().ok_or(Error::UnsupportedFamily("octonionic radial factor"))?;
        Ok(self.spectral_exponent()? as i64 - 2 * rho_t as i64)
    }

    /// Degree of the angular polynomial attached to the label.
    pub fn degree(&self) -> u32 {
        self.n / 2
    }
}

/// `(cosh s)^{-(iλ+ρ)} · P_{n/2}^{(α,β)}(x)`.
pub fn fj_eval(f: &FJFunction, s: f64, x: f64) -> Result<f64> {
    let e = f.spectral_exponent()?;
    let poly = jacobi_poly_int(f.degree() as usize, f.family.jacobi_alpha(), f.family.jacobi_beta());
    Ok(libm::pow(libm::cosh(s), -(e as f64)) * poly.eval(x))
}

/// `(α, β)` of the radial integral `A(α, β)` for the pairing of label `n`
/// on the family with label `k` on its subgroup: `α` is the sinh power of
/// the density, `β` the total decay minus the density's cosh power.
pub fn radial_exponents(family: &SpaceFamily, n: u32, k: u32) -> Result<(u32, u32)> {
    let big = FJFunction::new(*family, n)?;
    let small = FJFunction::new(family.subgroup()?, k)?;
    let (cosh_pow, sinh_pow) = family
        .density_powers()
        .ok_or(Error::UnsupportedFamily("octonionic radial factor"))?;
    let decay = big.spectral_exponent()? + small.spectral_exponent()?;
    Ok((sinh_pow, decay - cosh_pow))
}

fn check_period_args(p: u32, q: u32, n: u32, k: u32) -> Result<()> {
    if !(q > p && p > 0) {
        return Err(Error::Domain("period integral needs q > p > 0"));
    }
    if !n.is_multiple_of(2) || !k.is_multiple_of(2) {
        return Err(Error::Domain("period labels n, k must be even"));
    }
    Ok(())
}

/// Exact angular factor `∫ P_n^{(q-1,0)} P_k^{(q-2,0)} (1-x)^{q-2} dx`.
pub fn angular_factor_exact(p: u32, q: u32, n: u32, k: u32) -> Result<Rational> {
    check_period_args(p, q, n, k)?;
    Ok(weighted_inner_product(n as usize, k as usize, q - 2))
}

/// Closed form of the complex period integral.
pub fn period_integral_closed(p: u32, q: u32, n: u32, k: u32) -> Result<f64> {
    let angular = angular_factor_exact(p, q, n, k)?;
    let (a, b) = radial_exponents(&SpaceFamily::complex(p, q)?, n, k)?;
    let radial = radial_integral_closed(a as f64, b as f64)?;
    Ok(radial * angular.to_f64().unwrap_or(f64::NAN))
}

/// `true` iff `0 ≤ k ≤ n`, decided on the exact angular factor.
pub fn period_nonvanishing(p: u32, q: u32, n: u32, k: u32) -> Result<bool> {
    Ok(!angular_factor_exact(p, q, n, k)?.is_zero())
}

/// Quadrature of a period integral as radial × angular factor.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PeriodQuadrature {
    /// The product with a first-order error estimate.
    pub result: QuadratureResult,
    pub radial: QuadratureResult,
    pub angular: QuadratureResult,
    /// `√(∫f² w · ∫g² w)`, a bound on `|angular|`; the yardstick for zero.
    pub angular_scale: f64,
}

impl PeriodQuadrature {
    /// `|angular| > threshold · angular_scale`.
    pub fn is_nonzero(&self, threshold: f64) -> bool {
        self.angular.value.abs() > threshold * self.angular_scale
    }
}

fn combine(radial: QuadratureResult, angular: QuadratureResult, angular_scale: f64) -> PeriodQuadrature {
    let value = radial.value * angular.value;
    let err = radial.value.abs() * angular.abs_error_estimate + angular.value.abs() * radial.abs_error_estimate;
    PeriodQuadrature {
        result: QuadratureResult {
            value,
            abs_error_estimate: err,
            evaluations: radial.evaluations + angular.evaluations,
        },
        radial,
        angular,
        angular_scale,
    }
}

fn weighted_quadrature<F, G>(f: F, g: G, a: u32, b: u32, tol: f64) -> Result<(QuadratureResult, f64)>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let w = |x: f64| libm::pow(1.0 - x, a as f64) * libm::pow(1.0 + x, b as f64);
    let angular = integrate(|x| f(x) * g(x) * w(x), -1.0, 1.0, tol)?;
    let ff = integrate(|x| f(x) * f(x) * w(x), -1.0, 1.0, tol)?;
    let gg = integrate(|x| g(x) * g(x) * w(x), -1.0, 1.0, tol)?;
    Ok((angular, libm::sqrt(ff.value * gg.value)))
}

/// The complex period integral by two independent quadratures; the Jacobi
/// polynomials are evaluated by the floating-point recurrence.
pub fn period_integral_quadrature(p: u32, q: u32, n: u32, k: u32, tol: f64) -> Result<PeriodQuadrature> {
    check_period_args(p, q, n, k)?;
    let (a, b) = radial_exponents(&SpaceFamily::complex(p, q)?, n, k)?;
    let radial = radial_integral_quadrature(a as f64, b as f64, tol)?;
    let (al, ak) = ((q - 1) as f64, (q - 2) as f64);
    let (angular, scale) = weighted_quadrature(
        |x| jacobi_recurrence_eval(n as usize, al, 0.0, x),
        |x| jacobi_recurrence_eval(k as usize, ak, 0.0, x),
        q - 2,
        0,
        tol,
    )?;
    Ok(combine(radial, angular, scale))
}

/// Quaternionic period integral: radial density `cosh^{4q+3} sinh^{4p-1}`,
/// angular factor `P_n^{(2q-1,1)} · P_k^{(2q-3,1)}` against the `(2q-3,1)`
/// weight. Numerical only.
pub fn quaternionic_period_quadrature(p: u32, q: u32, n: u32, k: u32, tol: f64) -> Result<PeriodQuadrature> {
    check_period_args(p, q, n, k)?;
    let (a, b) = radial_exponents(&SpaceFamily::quaternionic(p, q)?, n, k)?;
    let radial = radial_integral_quadrature(a as f64, b as f64, tol)?;
    let (al, ak) = ((2 * q - 1) as f64, (2 * q - 3) as f64);
    let (angular, scale) = weighted_quadrature(
        |x| jacobi_recurrence_eval(n as usize, al, 1.0, x),
        |x| jacobi_recurrence_eval(k as usize, ak, 1.0, x),
        2 * q - 3,
        1,
        tol,
    )?;
    Ok(combine(radial, angular, scale))
}

/// Spherical polynomial `P_n^{(7,3)}(x)` of the octonionic projective plane.
pub fn octonionic_spherical(n: usize, x: f64) -> f64 {
    jacobi_recurrence_eval(n, 7.0, 3.0, x)
}

/// `∫ P_m^{(7,3)} P_k^{(7,3)} (1-x)^7 (1+x)^3 dx` by quadrature.
pub fn octonionic_inner_product(m: usize, k: usize, tol: f64) -> Result<QuadratureResult> {
    integrate(
        |x| octonionic_spherical(m, x) * octonionic_spherical(k, x) * libm::pow(1.0 - x, 7.0) * libm::pow(1.0 + x, 3.0),
        -1.0,
        1.0,
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn family_invariants() {
        let c = SpaceFamily::complex(2, 5).unwrap();
        assert_eq!((c.jacobi_alpha(), c.jacobi_beta(), c.rho(), c.rho_t()), (4, 0, Some(7), Some(5)));
        assert_eq!(c.density_powers(), Some((9, 3)));
        let h = SpaceFamily::quaternionic(2, 5).unwrap();
        assert_eq!((h.jacobi_alpha(), h.jacobi_beta(), h.rho(), h.rho_t()), (9, 1, Some(15), Some(6)));
        assert_eq!(h.density_powers(), Some((23, 7)));
        let o = SpaceFamily::new(FieldKind::Octonionic, 1, 2).unwrap();
        assert_eq!((o.jacobi_alpha(), o.jacobi_beta(), o.rho()), (7, 3, None));
    }

    #[test]
    fn spectral_exponents() {
        for p in 1..5 {
            for q in p + 1..7 {
                for n in (0..10).step_by(2) {
                    let c = FJFunction::new(SpaceFamily::complex(p, q).unwrap(), n).unwrap();
                    assert_eq!(c.spectral_exponent().unwrap(), 2 * q + n);
                    assert_eq!(c.mu().unwrap(), n as i64);
                    let h = FJFunction::new(SpaceFamily::quaternionic(p, q).unwrap(), n).unwrap();
                    assert_eq!(h.spectral_exponent().unwrap(), 4 * q + n + 2);
                }
            }
        }
        assert!(FJFunction::new(SpaceFamily::complex(1, 2).unwrap(), 3).is_err());
    }

    #[test]
    fn radial_exponent_bookkeeping() {
        // total cosh power -(2q+n+k-1), sinh power 2p-1
        for p in 1..4 {
            for q in p + 1..6 {
                for n in (0..8).step_by(2) {
                    for k in (0..8).step_by(2) {
                        let fam = SpaceFamily::complex(p, q).unwrap();
                        assert_eq!(radial_exponents(&fam, n, k).unwrap(), (2 * p - 1, 2 * q + n + k - 1));
                        let fam = SpaceFamily::quaternionic(p, q).unwrap();
                        assert_eq!(radial_exponents(&fam, n, k).unwrap(), (4 * p - 1, 4 * q + n + k - 3));
                    }
                }
            }
        }
    }

    #[test]
    fn fj_eval_examples() {
        let fam = SpaceFamily::complex(1, 2).unwrap();
        let f0 = FJFunction::new(fam, 0).unwrap();
        assert_eq!(fj_eval(&f0, 0.0, 1.0).unwrap(), 1.0);
        for x in [-1.0, -0.3, 0.0, 0.8] {
            assert_eq!(fj_eval(&f0, 0.0, x).unwrap(), 1.0);
        }
        let f2 = FJFunction::new(fam, 2).unwrap();
        let expected = libm::pow(libm::cosh(1.0), -6.0) * 0.5;
        assert!(rel(fj_eval(&f2, 1.0, 0.0).unwrap(), expected) < 1e-15);
        let oct = FJFunction::new(SpaceFamily::new(FieldKind::Octonionic, 1, 2).unwrap(), 2).unwrap();
        assert!(matches!(fj_eval(&oct, 1.0, 0.0), Err(Error::UnsupportedFamily(_))));
    }

    #[test]
    fn fj_decay_slope() {
        let (p, q, n) = (1, 3, 4);
        let f = FJFunction::new(SpaceFamily::complex(p, q).unwrap(), n).unwrap();
        let x = 0.4;
        let (s0, s1) = (5.0, 10.0);
        let slope = (libm::log(fj_eval(&f, s1, x).unwrap().abs()) - libm::log(fj_eval(&f, s0, x).unwrap().abs()))
            / (libm::log(libm::cosh(s1)) - libm::log(libm::cosh(s0)));
        let expected = -((2 * q + n) as f64);
        assert!(((slope - expected) / expected).abs() < 0.01);
    }

    #[test]
    fn closed_examples() {
        assert!(rel(period_integral_closed(1, 2, 0, 0).unwrap(), 1.0) < 1e-14);
        assert_eq!(period_integral_closed(1, 2, 0, 2).unwrap(), 0.0);
        // A(3,11)·2/5 = 0.01 (30-digit reference)
        assert!(rel(period_integral_closed(2, 3, 4, 2).unwrap(), 0.01) < 1e-13);
        assert!(rel(period_integral_closed(2, 3, 2, 2).unwrap(), 1.0 / 24.0) < 1e-13);
        assert!(rel(period_integral_closed(1, 4, 8, 6).unwrap(), 0.022_626_262_626_262_626) < 1e-13);
        assert!(period_integral_closed(2, 2, 0, 0).is_err());
        assert!(period_integral_closed(1, 2, 1, 0).is_err());
    }

    #[test]
    fn quadrature_examples() {
        let r = period_integral_quadrature(1, 2, 0, 0, 1e-10).unwrap();
        assert!((r.result.value - 1.0).abs() < 1e-10);
        let r = period_integral_quadrature(1, 2, 2, 4, 1e-10).unwrap();
        assert!(r.result.value.abs() < 1e-10);
        assert!(!r.is_nonzero(1e-9));
        let r = period_integral_quadrature(2, 3, 2, 2, 1e-10).unwrap();
        assert!(rel(r.result.value, period_integral_closed(2, 3, 2, 2).unwrap()) < 1e-8);
        let r = period_integral_quadrature(2, 3, 4, 2, 1e-10).unwrap();
        assert!(rel(r.result.value, period_integral_closed(2, 3, 4, 2).unwrap()) < 1e-8);
    }

    #[test]
    fn nonvanishing_examples() {
        assert!(period_nonvanishing(1, 2, 4, 2).unwrap());
        assert!(!period_nonvanishing(1, 2, 2, 4).unwrap());
        assert!(period_nonvanishing(1, 2, 0, 0).unwrap());
    }

    #[test]
    fn angular_factor_matches_rational() {
        let exact = angular_factor_exact(2, 3, 4, 2).unwrap();
        assert_eq!(exact, Rational::new(BigInt::from(2), BigInt::from(5)));
    }

    #[test]
    fn quaternionic_examples() {
        let r = quaternionic_period_quadrature(1, 2, 0, 0, 1e-10).unwrap();
        assert!(r.result.value > 0.0);
        assert!(rel(r.result.value, 1.0 / 3.0) < 1e-9);
        let r = quaternionic_period_quadrature(1, 2, 0, 2, 1e-10).unwrap();
        assert!(!r.is_nonzero(1e-9));
        let r = quaternionic_period_quadrature(1, 2, 2, 0, 1e-10).unwrap();
        assert!(r.is_nonzero(1e-9));
        // 6/5 · A(3, 7) = 0.1
        assert!(rel(r.result.value, 0.1) < 1e-9);
    }

    #[test]
    fn octonionic_orthogonality() {
        for m in 0..5 {
            for k in 0..5 {
                let v = octonionic_inner_product(m, k, 1e-12).unwrap().value;
                if m == k {
                    assert!(v > 1e-3);
                } else {
                    assert!(v.abs() < 1e-9, "m={m} k={k} {v}");
                }
            }
        }
    }
}
