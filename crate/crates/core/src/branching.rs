//! Relative branching from `U(p,q)` to `U(p-1,q)` (`+` side) and `U(p,q-1)`
//! (`-` side) as executable predicates.
//!
//! `Π±_a` lives on `G = U(p,q)`, `π±_b` on `G'`. For an RB pair the merged
//! tuple `(a, -a, b, -b)` sorts into one of two interlacing patterns,
//! `P1 = (a, b, -b, -a)` when `a > b` and `P2 = (b, a, -a, -b)` when `b > a`.
//! `Π⁺_a` restricts with `π⁺_b` exactly in pattern `P1`, `Π⁻_a` with `π⁻_b`
//! exactly in pattern `P2`, and mixed sides never occur.
//!
//! The stage enumerators follow the two ways of going from `O(2p,2q)` down
//! to `U(p-1,q)`:
//!
//! 1. `O(2p,2q) ⊃ O(2)×O(2p-2,2q)`, keep the `O(2)`-invariant terms, then
//!    take relative members of `O(2p-2,2q) ⊃ U(p-1,q)`;
//! 2. `O(2p,2q) ⊃ U(p,q)`, keep the relative member `x = y = ℓ/2`, then
//!    branch it to `U(p-1,q)`.
//!
//! Label conventions: `ℓ` is the unshifted label of the `O(2p,2q)` discrete
//! series, with `λ = ℓ + p + q - 1` on the orthogonal side. The relative
//! member of `O(2p,2q) ⊃ U(p,q)` has `a = ℓ/2 + (p+q-1)/2`; one rank down
//! the relative member of label `ℓ''` has `b = ℓ''/2 + (p+q-2)/2`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jacobi::weighted_inner_product;
use crate::reps::{epsilon_of, make_param, DiscreteSeriesParam, EpsilonCharacter, Level, Side, Sign, Signature};
use crate::HalfInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum PatternKind {
    P1,
    P2,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::P1 => write!(f, "P1"),
            PatternKind::P2 => write!(f, "P2"),
        }
    }
}

/// `(a, -a, b, -b)` in decreasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InterlacingPattern {
    pub kind: PatternKind,
    pub merged: [HalfInt; 4],
}

impl InterlacingPattern {
    pub fn a(&self) -> HalfInt {
        match self.kind {
            PatternKind::P1 => self.merged[0],
            PatternKind::P2 => self.merged[1],
        }
    }

    pub fn b(&self) -> HalfInt {
        match self.kind {
            PatternKind::P1 => self.merged[1],
            PatternKind::P2 => self.merged[0],
        }
    }
}

pub fn classify_interlacing(a: HalfInt, b: HalfInt) -> Result<InterlacingPattern> {
    if !(a.is_positive() && b.is_positive()) {
        return Err(Error::Domain("interlacing needs a > 0 and b > 0"));
    }
    if a == b {
        return Err(Error::Tie(a));
    }
    Ok(if a > b {
        InterlacingPattern {
            kind: PatternKind::P1,
            merged: [a, b, -b, -a],
        }
    } else {
        InterlacingPattern {
            kind: PatternKind::P2,
            merged: [b, a, -a, -b],
        }
    })
}

/// Counts behind [`pattern_characters`]: `a(i,>)` is the number of `b_j`
/// above `a_i`, `b(j,>)` the number of `a_i` above `b_j`, with
/// `a_1 = a, a_2 = -a, b_1 = b, b_2 = -b`.
pub fn pattern_counts(pat: &InterlacingPattern) -> ([usize; 2], [usize; 2]) {
    let (a, b) = (pat.a(), pat.b());
    let aa = [a, -a];
    let bb = [b, -b];
    let above = |x: HalfInt, ys: &[HalfInt; 2]| ys.iter().filter(|&&y| y > x).count();
    (
        [above(aa[0], &bb), above(aa[1], &bb)],
        [above(bb[0], &aa), above(bb[1], &aa)],
    )
}

/// `ε̌(E_i) = (-1)^{i+1+a(i,>)}` and `ε̌'(E_j) = (-1)^{j+b(j,>)}`.
pub fn pattern_characters(pat: &InterlacingPattern) -> (EpsilonCharacter, EpsilonCharacter) {
    let (ac, bc) = pattern_counts(pat);
    let eps = EpsilonCharacter {
        on_e1: Sign::pow_minus_one(2 + ac[0] as i64),
        on_e2: Sign::pow_minus_one(3 + ac[1] as i64),
    };
    let eps_prime = EpsilonCharacter {
        on_e1: Sign::pow_minus_one(1 + bc[0] as i64),
        on_e2: Sign::pow_minus_one(2 + bc[1] as i64),
    };
    (eps, eps_prime)
}

/// `dim Hom_{G'}(Π|_{G'}, π)` for `Π` on `G` and `π` on `G'`.
pub fn hom_dim(big: &DiscreteSeriesParam, small: &DiscreteSeriesParam) -> Result<u8> {
    if big.level() != Level::G || small.level() != Level::GPrime {
        return Err(Error::Mismatch("hom_dim expects a G parameter and a G' parameter"));
    }
    if !big.sig().same_group(small.sig()) {
        return Err(Error::Mismatch("parameters belong to different signatures"));
    }
    let (a, b) = (big.a(), small.a());
    Ok(match (big.side(), small.side()) {
        (Side::Plus, Side::Plus) => (a > b) as u8,
        (Side::Minus, Side::Minus) => (b > a) as u8,
        _ => 0,
    })
}

/// Result of summing `hom_dim` over the four side pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GpSum {
    pub dim: u8,
    /// The side pair with `hom_dim = 1` when the sum is 1.
    pub witness: Option<(Side, Side)>,
    pub pattern: InterlacingPattern,
    /// `(side of Π, side of π, hom_dim)`, in the order `++, +-, -+, --`.
    pub entries: Vec<(Side, Side, u8)>,
    /// Set when the signature is outside `p, q > 3, p ≠ q`.
    pub hypothesis_warning: bool,
}

pub fn gp_sum_dim(a: HalfInt, b: HalfInt, sig: Signature) -> Result<GpSum> {
    let pattern = classify_interlacing(a, b)?;
    let mut entries = Vec::with_capacity(4);
    for big_side in Side::BOTH {
        let big = make_param(sig, big_side, Level::G, a)?;
        for small_side in Side::BOTH {
            let small = make_param(sig, small_side, Level::GPrime, b)?;
            entries.push((big_side, small_side, hom_dim(&big, &small)?));
        }
    }
    let dim: u8 = entries.iter().map(|e| e.2).sum();
    let witness = if dim == 1 {
        entries.iter().find(|e| e.2 == 1).map(|e| (e.0, e.1))
    } else {
        None
    };
    let hypothesis_warning = !(sig.p() > 3 && sig.q() > 3 && sig.p() != sig.q());
    Ok(GpSum {
        dim,
        witness,
        pattern,
        entries,
        hypothesis_warning,
    })
}

/// `π⁻_b` with `b = a + k + 1/2`, `k = 0..=max_k`.
pub fn pi_minus_summands(big: &DiscreteSeriesParam, max_k: u32) -> Result<Vec<DiscreteSeriesParam>> {
    if big.side() != Side::Minus || big.level() != Level::G {
        return Err(Error::Mismatch("pi_minus_summands expects a minus parameter on G"));
    }
    (0..=max_k as i64)
        .map(|k| {
            let b = big.a() + HalfInt::from_int(k) + HalfInt::HALF;
            make_param(big.sig(), Side::Minus, Level::GPrime, b)
        })
        .collect()
}

fn check_label(n: u32) -> Result<()> {
    if !n.is_multiple_of(2) {
        return Err(Error::Domain("Flensted-Jensen label must be even"));
    }
    Ok(())
}

/// `a = n/2 + (p+q-1)/2` on `G`.
pub fn fj_label_to_param(sig: Signature, n: u32) -> Result<HalfInt> {
    check_label(n)?;
    Ok(HalfInt::from_twice(n as i64 + sig.rank() as i64 - 1))
}

/// `b = k/2 + (p+q-2)/2` on `G'`.
pub fn fj_label_to_param_prime(sig: Signature, k: u32) -> Result<HalfInt> {
    check_label(k)?;
    Ok(HalfInt::from_twice(k as i64 + sig.rank() as i64 - 2))
}

fn label_back(value: HalfInt, shift_twice: i64) -> Result<u32> {
    let twice = value.twice() - shift_twice;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Domain("parameter does not come from an even label"));
    }
    Ok(twice as u32)
}

/// Inverse of [`fj_label_to_param`].
pub fn param_to_fj_label(sig: Signature, a: HalfInt) -> Result<u32> {
    label_back(a, sig.rank() as i64 - 1)
}

/// Inverse of [`fj_label_to_param_prime`].
pub fn param_prime_to_fj_label(sig: Signature, b: HalfInt) -> Result<u32> {
    label_back(b, sig.rank() as i64 - 2)
}

/// One term `π^{2,0}_{+,λ'} ⊗ π^{2p-2,2q}_{+,λ''}` in the restriction of
/// the `O(2p,2q)` representation with label `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StageParams {
    pub ell: i64,
    pub lambda: i64,
    pub lambda_prime: i64,
    pub lambda_dprime: HalfInt,
}

/// `λ = ℓ + p + q - 1`.
pub fn orthogonal_lambda(sig: Signature, ell: i64) -> i64 {
    ell + sig.rank() as i64 - 1
}

fn check_ell(sig: Signature, ell: i64) -> Result<()> {
    let bound = sig.rank() as i64 - 1;
    if ell <= bound {
        return Err(Error::Range(alloc::format!("ell must exceed p+q-1 = {bound}, got {ell}")));
    }
    Ok(())
}

/// All `(λ', λ'')` with `λ' ≥ 0`, `λ'' > 0` in `ℤ + (p''+q'')/2` and
/// `λ - λ' - λ'' - 1 ∈ 2ℕ`, for `(p'',q'') = (2p-2, 2q)`. No range check on
/// `λ`; empty when `λ < 2`.
pub fn stage1_terms(ell: i64, lambda: i64) -> Vec<StageParams> {
    // (p''+q'')/2 = p+q-1 is an integer, so λ'' ranges over positive integers.
    let mut out = Vec::new();
    for lambda_prime in 0..lambda.max(0) {
        let mut lambda_dprime = lambda - lambda_prime - 1;
        while lambda_dprime > 0 {
            out.push(StageParams {
                ell,
                lambda,
                lambda_prime,
                lambda_dprime: HalfInt::from_int(lambda_dprime),
            });
            lambda_dprime -= 2;
        }
    }
    out
}

/// The `(++)` terms for the `O(2p,2q)` label `ell > p+q-1`.
pub fn stage1_enumerate(sig: Signature, ell: i64) -> Result<Vec<StageParams>> {
    check_ell(sig, ell)?;
    Ok(stage1_terms(ell, orthogonal_lambda(sig, ell)))
}

/// `(x, y)` with `x + y = ℓ` in the restriction to `U(p,q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Stage2Pair {
    pub x: i64,
    pub y: i64,
    pub relative: bool,
}

/// Pairs `x + y = ℓ` with `|x - y| ≤ window`, ordered by increasing `x`.
pub fn stage2_enumerate(sig: Signature, ell: i64, window: u32) -> Result<Vec<Stage2Pair>> {
    check_ell(sig, ell)?;
    let w = window as i64;
    // x - y = 2x - ℓ
    let lo = (ell - w + 1).div_euclid(2);
    let hi = (ell + w).div_euclid(2);
    Ok((lo..=hi)
        .map(|x| Stage2Pair {
            x,
            y: ell - x,
            relative: 2 * x == ell,
        })
        .filter(|pr| (pr.x - pr.y).abs() <= w)
        .collect())
}

/// Default stage-2 window `|x - y| ≤ ℓ`.
pub fn default_window(ell: i64) -> u32 {
    ell.max(0) as u32
}

/// `b` of the relative member with label `ℓ''` one rank down.
fn relative_b(sig: Signature, ell_dprime: i64) -> HalfInt {
    HalfInt::from_twice(ell_dprime + sig.rank() as i64 - 2)
}

/// `a` of the relative member `x = y = ℓ/2`.
pub fn relative_a(sig: Signature, ell: i64) -> HalfInt {
    HalfInt::from_twice(ell + sig.rank() as i64 - 1)
}

/// Pipeline 1: the `λ' = 0` terms of stage 1, then their relative members.
pub fn pipeline_one(sig: Signature, ell: i64) -> Result<Vec<HalfInt>> {
    let shift = sig.rank() as i64 - 2;
    let mut out: Vec<HalfInt> = stage1_enumerate(sig, ell)?
        .into_iter()
        .filter(|t| t.lambda_prime == 0)
        .filter_map(|t| {
            let ell_dprime = t.lambda_dprime.to_int()? - shift;
            (ell_dprime >= 0 && ell_dprime % 2 == 0).then(|| relative_b(sig, ell_dprime))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Pipeline 2: the relative member of stage 2, then every `π⁺_b` with
/// `hom_dim(Π⁺_a, π⁺_b) = 1`.
pub fn pipeline_two(sig: Signature, ell: i64, window: u32) -> Result<Vec<HalfInt>> {
    let pairs = stage2_enumerate(sig, ell, window)?;
    let Some(rel) = pairs.iter().find(|pr| pr.relative) else {
        return Ok(Vec::new());
    };
    let big = make_param(sig, Side::Plus, Level::G, relative_a(sig, rel.x + rel.y))?;
    let mut out = Vec::new();
    let mut b = sig.good_range_bound() - HalfInt::HALF;
    while b < big.a() + HalfInt::ONE {
        let small = make_param(sig, Side::Plus, Level::GPrime, b)?;
        if hom_dim(&big, &small)? == 1 {
            out.push(b);
        }
        b = b + HalfInt::ONE;
    }
    Ok(out)
}

/// Period prediction: the `b` whose label `k` pairs non-trivially with the
/// label `n = ℓ` of the relative member.
pub fn period_prediction(sig: Signature, ell: i64, margin: u32) -> Result<Vec<HalfInt>> {
    check_ell(sig, ell)?;
    if ell % 2 != 0 {
        return Ok(Vec::new());
    }
    let n = ell as usize;
    let alpha = sig.p().saturating_sub(3);
    let mut out = Vec::new();
    for k in (0..=n + margin as usize).step_by(2) {
        if !weighted_inner_product(n, k, alpha).is_zero() {
            out.push(fj_label_to_param_prime(sig, k as u32)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExhaustionReport {
    pub p: u32,
    pub q: u32,
    pub ell: i64,
    /// `a` of the relative member, absent for odd `ℓ`.
    pub a: Option<HalfInt>,
    pub stage1_terms: usize,
    pub pipeline_one: Vec<HalfInt>,
    pub pipeline_two: Vec<HalfInt>,
    pub period_prediction: Vec<HalfInt>,
    pub agreement: bool,
    /// Parameters present in some but not all of the three sets.
    pub mismatches: Vec<HalfInt>,
}

/// Compares the two stage pipelines and the period prediction.
pub fn exhaustion_check(sig: Signature, ell: i64) -> Result<ExhaustionReport> {
    let one = pipeline_one(sig, ell)?;
    let two = pipeline_two(sig, ell, default_window(ell))?;
    let period = period_prediction(sig, ell, 4)?;
    let mut mismatches: Vec<HalfInt> = one
        .iter()
        .chain(&two)
        .chain(&period)
        .copied()
        .filter(|b| !(one.contains(b) && two.contains(b) && period.contains(b)))
        .collect();
    mismatches.sort();
    mismatches.dedup();
    let agreement = one == two && two == period;
    Ok(ExhaustionReport {
        p: sig.p(),
        q: sig.q(),
        ell,
        a: (ell % 2 == 0).then(|| relative_a(sig, ell)),
        stage1_terms: stage1_enumerate(sig, ell)?.len(),
        pipeline_one: one,
        pipeline_two: two,
        period_prediction: period,
        agreement,
        mismatches,
    })
}

/// `(ε(Π), ε(π))` for the side with `hom_dim = 1`.
pub fn side_characters(side: Side) -> (EpsilonCharacter, EpsilonCharacter) {
    (epsilon_of(side), epsilon_of(side))
}
