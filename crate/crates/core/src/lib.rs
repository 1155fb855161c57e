//! Relative branching laws for the discrete series of the unitary symmetric
//! spaces `U(p,q)/U(1)U(p-1,q)` and `U(p,q)/U(1)U(p,q-1)`.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`specfun`]: log-Gamma, Beta, the radial hyperbolic integral and the
//!   adaptive Gauss-Legendre engine used as a numerical oracle.
//! - [`jacobi`]: exact-rational Jacobi polynomials, the `(α+1,0) → (α,0)`
//!   connection coefficients and weighted inner products.
//! - [`periods`]: Flensted-Jensen functions and period integrals, closed form
//!   and by quadrature.
//! - [`reps`]: half-integer parameters of the discrete series, minimal
//!   K-types, infinitesimal characters and epsilon characters.
//! - [`branching`]: the branching predicates, interlacing patterns, the
//!   `Π⁻` summands and the two stage-branching pipelines.
//! - [`oracle`]: classical `U(n) → U(n-1)` interlacing and the explicit
//!   `SU(2)` matrix-coefficient model.
//! - [`hepattern`]: sign-pattern alignment for the `U(2,n) → U(1,n)` case.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod branching;
mod error;
pub mod hepattern;
pub mod jacobi;
pub mod oracle;
pub mod periods;
pub mod reps;
pub mod specfun;

pub use error::{Error, Result};
pub use reps::HalfInt;

/// Exact rational number used for polynomial coefficients and inner products.
pub type Rational = num_rational::BigRational;
