//! Independent ground truth: the classical `U(n) ⊃ U(n-1)` branching rule,
//! spherical highest weights, and an explicit model of `SU(2)` acting on
//! binary forms.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::reps::HighestWeight;
use crate::HalfInt;

/// One interlacing inequality `upper ≥ value ≥ lower`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InterlacingCheck {
    pub index: usize,
    pub upper: HalfInt,
    pub value: HalfInt,
    pub lower: HalfInt,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GTBranchResult {
    pub multiplicity: u8,
    pub witness: Vec<InterlacingCheck>,
}

/// Multiplicity of `μ` in `λ|_{U(n-1)}`: 1 iff `λ_i ≥ μ_i ≥ λ_{i+1}`.
pub fn un_branch_mult(lam: &HighestWeight, mu: &HighestWeight) -> Result<GTBranchResult> {
    if lam.is_empty() || mu.len() + 1 != lam.len() {
        return Err(Error::LengthMismatch {
            expected: lam.len().saturating_sub(1),
            got: mu.len(),
        });
    }
    if !(lam.is_integral() && mu.is_integral()) {
        return Err(Error::NotIntegral);
    }
    let (l, m) = (lam.entries(), mu.entries());
    let witness: Vec<InterlacingCheck> = (0..m.len())
        .map(|i| InterlacingCheck {
            index: i,
            upper: l[i],
            value: m[i],
            lower: l[i + 1],
            holds: l[i] >= m[i] && m[i] >= l[i + 1],
        })
        .collect();
    Ok(GTBranchResult {
        multiplicity: witness.iter().all(|c| c.holds) as u8,
        witness,
    })
}

/// `λ = (a, 0, …, 0, -a)` with `a ≥ 0`; these carry a `U(1)U(n-1)`-fixed vector.
pub fn is_spherical(lam: &HighestWeight) -> bool {
    let e = lam.entries();
    match e.len() {
        0 => true,
        1 => e[0] == HalfInt::ZERO,
        n => e[0] == -e[n - 1] && e[0] >= HalfInt::ZERO && e[1..n - 1].iter().all(|&x| x == HalfInt::ZERO),
    }
}

/// Multiplicity of the spherical `μ_b` of `U(n-1)` in the spherical `λ_a`
/// of `U(n)`: 1 iff `a ≥ b ≥ 0`.
pub fn compact_relative_mult(a: u32, b: u32, n: u32) -> Result<u8> {
    if n < 3 {
        return Err(Error::Domain("compact_relative_mult needs n >= 3"));
    }
    Ok((a >= b) as u8)
}

/// Largest imaginary part tolerated in the `SU(2)` matrix coefficient.
pub const IMAG_TOLERANCE: f64 = 1e-12;

/// Coefficients of `Π_k (a_k z + b_k w)` in the basis `z^{d-j} w^j`.
fn linear_product(factors: &[(Complex64, Complex64)]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(1.0, 0.0)];
    for &(a, b) in factors {
        let mut next = vec![Complex64::new(0.0, 0.0); out.len() + 1];
        for (j, &c) in out.iter().enumerate() {
            next[j] += c * a;
            next[j + 1] += c * b;
        }
        out = next;
    }
    out
}

/// Squared norms `j!(m-j)!/m!` of `z^{m-j} w^j`.
pub fn binary_form_norms(m: usize) -> Vec<f64> {
    // 1 / C(m, j)
    let mut out = Vec::with_capacity(m + 1);
    let mut binom = 1.0;
    for j in 0..=m {
        out.push(1.0 / binom);
        binom = binom * (m - j) as f64 / (j + 1) as f64;
    }
    out
}

/// Matrix of `g = [[α, β], [γ, δ]]` on binary forms of degree `m`, acting by
/// `(g·f)(z, w) = f(αz + γw, βz + δw)`. Column `j` holds `g·z^{m-j}w^j`.
pub fn su2_rep_matrix(m: usize, g: [[Complex64; 2]; 2]) -> Vec<Vec<Complex64>> {
    let zz = (g[0][0], g[1][0]);
    let ww = (g[0][1], g[1][1]);
    let mut cols = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut factors = vec![zz; m - j];
        factors.extend(core::iter::repeat_n(ww, j));
        cols.push(linear_product(&factors));
    }
    // transpose to rows
    (0..=m).map(|i| (0..=m).map(|j| cols[j][i]).collect()).collect()
}

/// `max |M* D M - D|` over entries, `D` the diagonal of norms.
pub fn unitarity_defect(mat: &[Vec<Complex64>], norms: &[f64]) -> f64 {
    let n = norms.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..n {
                s += mat[k][i].conj() * norms[k] * mat[k][j];
            }
            let target = if i == j { norms[i] } else { 0.0 };
            worst = worst.max((s - target).norm());
        }
    }
    worst
}

/// The rotation `[[cos θ, sin θ], [-sin θ, cos θ]]`.
pub fn rotation(theta: f64) -> [[Complex64; 2]; 2] {
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    [
        [Complex64::new(c, 0.0), Complex64::new(s, 0.0)],
        [Complex64::new(-s, 0.0), Complex64::new(c, 0.0)],
    ]
}

/// `diag(e^{iθ}, e^{-iθ})`.
pub fn torus(theta: f64) -> [[Complex64; 2]; 2] {
    [
        [Complex64::from_polar(1.0, theta), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::from_polar(1.0, -theta)],
    ]
}

/// `⟨zⁿwⁿ, g·zⁿwⁿ⟩ / ⟨zⁿwⁿ, zⁿwⁿ⟩` on `V_{2n}` for a general `g`.
pub fn spherical_matrix_coefficient(n: usize, g: [[Complex64; 2]; 2]) -> Complex64 {
    let m = 2 * n;
    let factors: Vec<(Complex64, Complex64)> = core::iter::repeat_n((g[0][0], g[1][0]), n)
        .chain(core::iter::repeat_n((g[0][1], g[1][1]), n))
        .collect();
    // ⟨e_n, v⟩ = norm_n · v_n; dividing by norm_n leaves v_n.
    let v = linear_product(&factors);
    debug_assert_eq!(v.len(), m + 1);
    v[n]
}

/// `φ_n(θ)` for the rotation by `θ`, normalised so `φ_n(0) = 1`.
pub fn su2_spherical_coefficient(n: usize, theta_grid: &[f64]) -> Result<Vec<f64>> {
    theta_grid
        .iter()
        .map(|&theta| {
            let c = spherical_matrix_coefficient(n, rotation(theta));
            if c.im.abs() > IMAG_TOLERANCE {
                return Err(Error::Range(format!(
                    "matrix coefficient not real at theta = {theta}: imaginary part {}",
                    c.im
                )));
            }
            Ok(c.re)
        })
        .collect()
}

/// The Flensted-Jensen label of the spherical vector of `V_{2n}`: `2n`.
pub fn su2_fj_label(n: usize) -> usize {
    2 * n
}

/// `θ_i = iπ/180`, `i = 0..=180`.
pub fn degree_grid() -> Vec<f64> {
    (0..=180).map(|i| i as f64 * core::f64::consts::PI / 180.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::jacobi_poly_int;

    fn hw(e: &[i64]) -> HighestWeight {
        HighestWeight::from_ints(e).unwrap()
    }

    #[test]
    fn branch_examples() {
        assert_eq!(un_branch_mult(&hw(&[2, 0, -2]), &hw(&[1, -1])).unwrap().multiplicity, 1);
        let r = un_branch_mult(&hw(&[2, 0, -2]), &hw(&[3, 0])).unwrap();
        assert_eq!(r.multiplicity, 0);
        assert!(!r.witness[0].holds);
        assert!(matches!(
            un_branch_mult(&hw(&[2, 0, -2]), &hw(&[1])),
            Err(Error::LengthMismatch { .. })
        ));
        let half = HighestWeight::new(alloc::vec![HalfInt::HALF, -HalfInt::HALF]).unwrap();
        assert!(matches!(un_branch_mult(&half, &hw(&[0])), Err(Error::NotIntegral)));
    }

    #[test]
    fn spherical_examples() {
        assert!(is_spherical(&hw(&[3, 0, 0, -3])));
        assert!(!is_spherical(&hw(&[3, 1, 0, -4])));
        assert!(is_spherical(&hw(&[0, 0, 0])));
        assert!(!is_spherical(&hw(&[2, 0, -1])));
    }

    #[test]
    fn compact_interlacing_truth_table() {
        // λ = (a,0,…,0,-a), μ = (b,0,…,0,c): multiplicity 1 iff 0 ≤ b ≤ a, -a ≤ c ≤ 0
        for n in [4usize, 5, 6] {
            for a in 0..=8i64 {
                let mut lam = alloc::vec![0; n];
                lam[0] = a;
                lam[n - 1] = -a;
                let lam = hw(&lam);
                for b in 0..=8i64 {
                    for c in -8..=0i64 {
                        let mut mu = alloc::vec![0; n - 1];
                        mu[0] = b;
                        mu[n - 2] = c;
                        let mu = hw(&mu);
                        let m = un_branch_mult(&lam, &mu).unwrap().multiplicity;
                        assert_eq!(m == 1, b <= a && -a <= c, "n={n} a={a} b={b} c={c}");
                        if is_spherical(&mu) {
                            assert_eq!(m, compact_relative_mult(a as u32, b as u32, n as u32).unwrap());
                        }
                    }
                }
            }
        }
        assert_eq!(compact_relative_mult(2, 1, 4).unwrap(), 1);
        assert_eq!(compact_relative_mult(1, 2, 4).unwrap(), 0);
        assert_eq!(compact_relative_mult(3, 3, 5).unwrap(), 1);
        assert!(compact_relative_mult(1, 1, 2).is_err());
    }

    #[test]
    fn norms() {
        let n = binary_form_norms(4);
        let expected = [1.0, 0.25, 1.0 / 6.0, 0.25, 1.0];
        for (a, b) in n.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn representation_is_unitary() {
        for m in 0..=12 {
            let norms = binary_form_norms(m);
            for theta in [0.0, 0.3, 1.1, 2.9] {
                assert!(unitarity_defect(&su2_rep_matrix(m, rotation(theta)), &norms) < 1e-12);
                assert!(unitarity_defect(&su2_rep_matrix(m, torus(theta)), &norms) < 1e-12);
            }
        }
    }

    #[test]
    fn torus_eigenvalues() {
        for m in 0..=10usize {
            let theta = 0.37;
            let t = su2_rep_matrix(m, torus(theta));
            for i in 0..=m {
                for j in 0..=m {
                    let expected = if i == j {
                        Complex64::from_polar(1.0, (m as f64 - 2.0 * j as f64) * theta)
                    } else {
                        Complex64::new(0.0, 0.0)
                    };
                    assert!((t[i][j] - expected).norm() < 1e-13);
                }
            }
            // the rotation by θ is conjugate to the torus element: equal traces
            let r = su2_rep_matrix(m, rotation(theta));
            let tr_r: Complex64 = (0..=m).map(|i| r[i][i]).sum();
            let tr_t: Complex64 = (0..=m).map(|i| t[i][i]).sum();
            assert!((tr_r - tr_t).norm() < 1e-12);
        }
    }

    #[test]
    fn legendre_agreement() {
        let grid = degree_grid();
        assert_eq!(grid.len(), 181);
        for n in 0..=6usize {
            let phi = su2_spherical_coefficient(n, &grid).unwrap();
            assert!((phi[0] - 1.0).abs() < 1e-15);
            let legendre = jacobi_poly_int(n, 0, 0);
            let worst = grid
                .iter()
                .zip(&phi)
                .map(|(&t, &v)| (v - legendre.eval(libm::cos(2.0 * t))).abs())
                .fold(0.0, f64::max);
            assert!(worst < 1e-10, "n={n}: {worst}");
        }
        let phi = su2_spherical_coefficient(0, &grid).unwrap();
        assert!(phi.iter().all(|&v| v == 1.0));
        assert_eq!(su2_fj_label(2), 4);
    }

    #[test]
    fn degree_two_is_quadratic_in_cos() {
        let grid = degree_grid();
        let phi = su2_spherical_coefficient(2, &grid).unwrap();
        let shape: Vec<f64> = grid.iter().map(|&t| 3.0 * libm::pow(libm::cos(2.0 * t), 2.0) - 1.0).collect();
        let scale = phi[0] / shape[0];
        assert!((scale - 0.5).abs() < 1e-15);
        for (v, s) in phi.iter().zip(&shape) {
            assert!((v - scale * s).abs() < 1e-12);
        }
    }

    #[test]
    fn complex_rotation_gives_the_same_coefficient() {
        // exp(iθσ_x) is conjugate to the real rotation by θ
        for theta in [0.2, 0.9, 1.7] {
            let (s, c) = (libm::sin(theta), libm::cos(theta));
            let g = [
                [Complex64::new(c, 0.0), Complex64::new(0.0, s)],
                [Complex64::new(0.0, s), Complex64::new(c, 0.0)],
            ];
            for n in 0..5 {
                let a = spherical_matrix_coefficient(n, g);
                let b = spherical_matrix_coefficient(n, rotation(theta));
                assert!((a - b).norm() < 1e-13);
            }
        }
    }
}
