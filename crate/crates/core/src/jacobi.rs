//! Exact-rational Jacobi polynomials `P_n^{(α,β)}`, normalised by
//! `P_n^{(α,β)}(1) = Γ(n+α+1) / (Γ(n+1) Γ(α+1))`.
//!
//! Coefficients are kept in the monomial basis as big rationals, so
//! vanishing of an inner product is decided exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Highest degree accepted by [`jacobi_poly`]; bounds coefficient growth.
pub const MAX_DEGREE: usize = 64;

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `P_n^{(α,β)}` with exact coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiPoly {
    n: usize,
    alpha: Rational,
    beta: Rational,
    coeffs: Vec<Rational>,
}

impl JacobiPoly {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Coefficients of `1, x, x², …`; length `n + 1`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact value at `x = 1`.
    pub fn value_at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |s, c| s + c)
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation of the exact coefficients in floating point.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// `P_n^{(α,β)}` from the three-term recurrence in exact arithmetic.
///
/// # Panics
///
/// If `α` or `β` is negative or `n > MAX_DEGREE`.
pub fn jacobi_poly(n: usize, alpha: &Rational, beta: &Rational) -> JacobiPoly {
    assert!(!alpha.is_negative() && !beta.is_negative(), "Jacobi parameters must be >= 0");
    assert!(n <= MAX_DEGREE, "degree {n} exceeds MAX_DEGREE");
    let (a, b) = (alpha.clone(), beta.clone());
    let two = int(2);
    let mut prev = vec![Rational::one()];
    if n == 0 {
        return JacobiPoly {
            n,
            alpha: a,
            beta: b,
            coeffs: prev,
        };
    }
    // P_1 = (α+1) + (α+β+2)(x-1)/2
    let slope = (&a + &b + &two) / &two;
    let mut cur = vec![&a + Rational::one() - &slope, slope];
    for k in 2..=n {
        let k = int(k as i64);
        let s = &two * &k + &a + &b; // 2k+α+β
        let denom = &two * &k * (&k + &a + &b) * (&s - &two);
        let lin = (&s - Rational::one()) * &s * (&s - &two);
        let constant = (&s - Rational::one()) * (&a * &a - &b * &b);
        let back = &two * (&k + &a - Rational::one()) * (&k + &b - Rational::one()) * &s;
        let mut next = vec![Rational::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += &lin * c;
            next[i] += &constant * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= &back * c;
        }
        for c in next.iter_mut() {
            *c /= &denom;
        }
        prev = cur;
        cur = next;
    }
    JacobiPoly {
        n,
        alpha: a,
        beta: b,
        coeffs: cur,
    }
}

/// Convenience for integer parameters.
pub fn jacobi_poly_int(n: usize, alpha: u32, beta: u32) -> JacobiPoly {
    jacobi_poly(n, &int(alpha as i64), &int(beta as i64))
}

/// `P_n^{(α,β)}(x)` by running the recurrence directly in floating point.
pub fn jacobi_recurrence_eval(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    let mut p0 = 1.0;
    if n == 0 {
        return p0;
    }
    let mut p1 = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + alpha + beta;
        let denom = 2.0 * k * (k + alpha + beta) * (s - 2.0);
        let p2 = ((s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta) * p1
            - 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s * p0)
            / denom;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `Γ(n+α+1) / (n! Γ(α+1)) = ∏_{j=1..n} (α+j)/j` for integer `α`.
pub fn normalization_at_one(n: usize, alpha: u32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, j| acc * int(alpha as i64 + j) / int(j))
}

/// Coefficients `c_0..c_n` with `P_n^{(α+1,0)} = Σ c_k P_k^{(α,0)}`:
///
/// ```text
/// c_k = Γ(n+1)/Γ(n+α+2) · Γ(k+α+1)(2k+α+1)/Γ(k+1)
/// ```
pub fn connection_coeffs(n: usize, alpha: u32) -> Vec<Rational> {
    let alpha = alpha as i64;
    let n = n as i64;
    // Γ(n+1)/Γ(n+α+2) = 1/((n+1)(n+2)…(n+α+1))
    let front = (1..=alpha + 1).fold(Rational::one(), |acc, j| acc / int(n + j));
    (0..=n)
        .map(|k| {
            // Γ(k+α+1)/Γ(k+1) = (k+1)…(k+α)
            let rising = (1..=alpha).fold(Rational::one(), |acc, j| acc * int(k + j));
            &front * rising * int(2 * k + alpha + 1)
        })
        .collect()
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1-x)^a (1+x)^b` in the monomial basis.
fn weight_poly(a: u32, b: u32) -> Vec<Rational> {
    let minus = [Rational::one(), -Rational::one()];
    let plus = [Rational::one(), Rational::one()];
    let mut w = vec![Rational::one()];
    for _ in 0..a {
        w = poly_mul(&w, &minus);
    }
    for _ in 0..b {
        w = poly_mul(&w, &plus);
    }
    w
}

/// `∫_{-1}^{1} f(x) (1-x)^a (1+x)^b dx` for a polynomial `f`, exactly.
pub fn integrate_weighted(f: &[Rational], a: u32, b: u32) -> Rational {
    poly_mul(f, &weight_poly(a, b))
        .iter()
        .enumerate()
        .filter(|(r, _)| r % 2 == 0)
        .fold(Rational::zero(), |s, (r, c)| s + c * int(2) / int(r as i64 + 1))
}

/// `∫_{-1}^{1} f g (1-x)^a (1+x)^b dx`, exactly.
pub fn inner_product(f: &JacobiPoly, g: &JacobiPoly, a: u32, b: u32) -> Rational {
    integrate_weighted(&poly_mul(f.coeffs(), g.coeffs()), a, b)
}

/// `∫_{-1}^{1} P_m^{(α+1,0)} P_k^{(α,0)} (1-x)^α dx`, exactly.
///
/// Nonzero exactly when `k ≤ m`.
pub fn weighted_inner_product(m: usize, k: usize, alpha: u32) -> Rational {
    inner_product(&jacobi_poly_int(m, alpha + 1, 0), &jacobi_poly_int(k, alpha, 0), alpha, 0)
}
