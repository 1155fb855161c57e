//! Acceptance gate. Prints one PASS/FAIL line per criterion with its runtime
//! and exits non-zero if any criterion fails.
//!
//! Run with `cargo test -p relbranch --test acceptance`.

use std::time::{Duration, Instant};

use relbranch::commands;
use relbranch_core::branching::{
    exhaustion_check, fj_label_to_param, fj_label_to_param_prime, gp_sum_dim, hom_dim, pattern_characters,
    pi_minus_summands, PatternKind,
};
use relbranch_core::hepattern::u2n_case_report;
use relbranch_core::jacobi::{connection_coeffs, jacobi_poly_int};
use relbranch_core::oracle::{compact_relative_mult, degree_grid, su2_spherical_coefficient, un_branch_mult};
use relbranch_core::periods::{
    angular_factor_exact, period_integral_closed, period_integral_quadrature, period_nonvanishing,
    quaternionic_period_quadrature,
};
use relbranch_core::reps::{make_param, EpsilonCharacter, HighestWeight, Level, Sign, Side, Signature};
use relbranch_core::specfun::{adjudication_table, select_beta_argument, BetaArgument, ADJUDICATION_PAIRS};
use relbranch_core::{HalfInt, Rational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `2a` runs over `lo2, lo2+2, …` up to `hi2`.
fn halves(lo2: i64, hi2: i64) -> impl Iterator<Item = HalfInt> {
    (lo2..=hi2).step_by(2).map(HalfInt::from_twice)
}

fn binomial(n: u128, k: u128) -> u128 {
    (1..=k).fold(1, |acc, j| acc * (n + 1 - j) / j)
}

fn jacobi_normalization() -> Outcome {
    let mut checked = 0;
    for n in 0..=10usize {
        for alpha in 0..=8u32 {
            // Γ(n+α+1) / (n! Γ(α+1)) = C(n+α, n)
            let want = binomial((n as u128) + alpha as u128, n as u128).to_string();
            for beta in [0u32, 1, 3] {
                let got = jacobi_poly_int(n, alpha, beta).value_at_one();
                ensure(got.to_string() == want, || {
                    format!("P_{n}^({alpha},{beta})(1) = {got}, want {want}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} values exact"))
}

fn connection_identity() -> Outcome {
    let mut checked = 0;
    for n in 0..=12usize {
        for alpha in 0..=8u32 {
            let c = connection_coeffs(n, alpha);
            let lower: Vec<_> = (0..=n).map(|k| jacobi_poly_int(k, alpha, 0)).collect();
            let target = jacobi_poly_int(n, alpha + 1, 0);
            ensure(target.coeffs().len() == n + 1, || format!("degree of P_{n}^({},0)", alpha + 1))?;
            for (j, want) in target.coeffs().iter().enumerate() {
                let got: Rational = (j..=n).map(|k| &c[k] * &lower[k].coeffs()[j]).sum();
                ensure(&got == want, || {
                    format!("n={n} alpha={alpha}: coefficient of x^{j} is {got}, want {want}")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} expansions exact"))
}

fn period_dichotomy() -> Outcome {
    let mut checked = 0;
    let mut worst_rel: f64 = 0.0;
    for q in 2..=4u32 {
        for p in 1..q {
            for n in (0..=8u32).step_by(2) {
                for k in (0..=8u32).step_by(2) {
                    let exact = angular_factor_exact(p, q, n, k).map_err(err)?;
                    let nonzero = exact != Rational::from_integer(0.into());
                    ensure(nonzero == (k <= n), || format!("({p},{q}) n={n} k={k}: angular factor {exact}"))?;
                    ensure(period_nonvanishing(p, q, n, k).map_err(err)? == (k <= n), || {
                        format!("({p},{q}) n={n} k={k}: period_nonvanishing")
                    })?;
                    let closed = period_integral_closed(p, q, n, k).map_err(err)?;
                    let quad = period_integral_quadrature(p, q, n, k, 1e-12).map_err(err)?;
                    let diff = (quad.result.value - closed).abs();
                    if nonzero {
                        let rel = diff / closed.abs();
                        worst_rel = worst_rel.max(rel);
                        ensure(rel <= 1e-8, || {
                            format!("({p},{q}) n={n} k={k}: closed {closed} quadrature {} rel {rel:e}", quad.result.value)
                        })?;
                    } else {
                        // A vanishing closed form has no relative scale of its
                        // own; measure against radial × angular bound.
                        let scale = quad.radial.value.abs() * quad.angular_scale;
                        ensure(closed == 0.0 && diff <= 1e-8 * scale, || {
                            format!("({p},{q}) n={n} k={k}: expected zero, closed {closed} quadrature {}", quad.result.value)
                        })?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} grid points, worst relative difference {worst_rel:.2e}"))
}

fn beta_adjudication() -> Outcome {
    let rows = adjudication_table(&ADJUDICATION_PAIRS, 1e-12).map_err(err)?;
    ensure(rows.len() >= 5, || format!("only {} pairs", rows.len()))?;
    let chosen = select_beta_argument(&rows, 1e-10);
    ensure(chosen == Some(BetaArgument::AlphaPlusOne), || format!("chosen variant {chosen:?}"))?;
    for r in &rows {
        let v = r.alpha_plus_one.ok_or("chosen variant diverges")?;
        ensure((v - r.quadrature).abs() <= 1e-10 * r.quadrature.abs(), || {
            format!("({}, {}): closed {v} quadrature {}", r.alpha, r.beta_exp, r.quadrature)
        })?;
    }
    for (alpha, beta, want) in [(1.0, 3.0, 0.5), (3.0, 7.0, 1.0 / 12.0)] {
        let r = rows
            .iter()
            .find(|r| r.alpha == alpha && r.beta_exp == beta)
            .ok_or_else(|| format!("pair ({alpha}, {beta}) missing"))?;
        ensure((r.quadrature - want).abs() <= 1e-10 * want, || {
            format!("({alpha}, {beta}): quadrature {} want {want}", r.quadrature)
        })?;
    }
    let (rows, chosen) = commands::adjudication_rows(1e-12).map_err(err)?;
    let fresh = commands::adjudication_markdown(&rows, chosen, 1e-12);
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/beta_adjudication.md");
    let committed = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    ensure(fresh == committed, || "docs/beta_adjudication.md is out of date".to_string())?;
    Ok(format!("{} pairs, (α+1)/2 chosen, evidence table current", rows.len()))
}

const EPS1: EpsilonCharacter = EpsilonCharacter {
    on_e1: Sign::Plus,
    on_e2: Sign::Minus,
};
const EPS2: EpsilonCharacter = EpsilonCharacter {
    on_e1: Sign::Minus,
    on_e2: Sign::Plus,
};

fn branching_truth_table() -> Outcome {
    let mut checked = 0;
    for (p, q) in [(4, 5), (5, 4), (4, 6)] {
        let sig = Signature::new(p, q).map_err(err)?;
        let r = (p + q) as i64;
        let top = r + 9;
        for a in halves(r - 1, top) {
            for b in halves(r - 2, top) {
                let sum = gp_sum_dim(a, b, sig).map_err(err)?;
                for &(big, small, dim) in &sum.entries {
                    let want = match (big, small) {
                        (Side::Plus, Side::Plus) => a > b,
                        (Side::Minus, Side::Minus) => b > a,
                        _ => false,
                    } as u8;
                    ensure(dim == want, || format!("{sig} a={a} b={b} ({big},{small}): {dim}, want {want}"))?;
                }
                ensure(sum.dim == 1, || format!("{sig} a={a} b={b}: four-pair sum {}", sum.dim))?;
                let (kind, eps) = if a > b {
                    (PatternKind::P1, EPS1)
                } else {
                    (PatternKind::P2, EPS2)
                };
                ensure(sum.pattern.kind == kind, || format!("{sig} a={a} b={b}: pattern {}", sum.pattern.kind))?;
                let (e, e_prime) = pattern_characters(&sum.pattern);
                ensure(e == eps && e_prime == eps, || {
                    format!("{sig} a={a} b={b}: characters {e} {e_prime}, want {eps}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} RB pairs"))
}

fn period_branching_agreement() -> Outcome {
    let mut checked = 0;
    for q in 2..=4u32 {
        for p in 1..q {
            let sig = Signature::relaxed(q + 1, p).map_err(err)?;
            for n in (0..=12u32).step_by(2) {
                for k in (0..=12u32).step_by(2) {
                    let big = make_param(sig, Side::Plus, Level::G, fj_label_to_param(sig, n).map_err(err)?)
                        .map_err(err)?;
                    let small = make_param(
                        sig,
                        Side::Plus,
                        Level::GPrime,
                        fj_label_to_param_prime(sig, k).map_err(err)?,
                    )
                    .map_err(err)?;
                    let branch = hom_dim(&big, &small).map_err(err)? == 1;
                    let period = period_nonvanishing(p, q, n, k).map_err(err)?;
                    ensure(branch == period, || {
                        format!("({p},{q}) n={n} k={k}: period {period}, hom_dim(+,+) {branch}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} label pairs"))
}

fn compact_oracle() -> Outcome {
    let mut checked = 0;
    for n in 4..=6usize {
        for a in 0..=8u32 {
            for b in 0..=8u32 {
                let lam = HighestWeight::spherical(n, HalfInt::from_int(a as i64));
                let mu = HighestWeight::spherical(n - 1, HalfInt::from_int(b as i64));
                let oracle = un_branch_mult(&lam, &mu).map_err(err)?.multiplicity;
                let got = compact_relative_mult(a, b, n as u32).map_err(err)?;
                ensure(got == oracle, || format!("n={n} a={a} b={b}: {got}, interlacing says {oracle}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} triples"))
}

fn su2_legendre() -> Outcome {
    let grid = degree_grid();
    ensure(grid.len() == 181, || format!("{} grid points", grid.len()))?;
    let mut worst: f64 = 0.0;
    for n in 0..=6usize {
        let phi = su2_spherical_coefficient(n, &grid).map_err(err)?;
        let legendre = jacobi_poly_int(n, 0, 0);
        for (&theta, &v) in grid.iter().zip(&phi) {
            worst = worst.max((v - legendre.eval((2.0 * theta).cos())).abs());
        }
    }
    ensure(worst <= 1e-10, || format!("sup-norm {worst:e}"))?;
    let phi2 = su2_spherical_coefficient(2, &grid).map_err(err)?;
    let shape = |t: f64| 3.0 * (2.0 * t).cos().powi(2) - 1.0;
    let c = phi2[0] / shape(grid[0]);
    let off = grid
        .iter()
        .zip(&phi2)
        .map(|(&t, &v)| (v - c * shape(t)).abs())
        .fold(0.0, f64::max);
    ensure(off <= 1e-10, || format!("n=2 deviates from c(3cos²2θ-1) by {off:e}"))?;
    Ok(format!("sup-norm {worst:.2e}, n=2 constant {c}"))
}

fn exhaustion() -> Outcome {
    let sig = Signature::new(3, 3).map_err(err)?;
    let mut sizes = Vec::new();
    for ell in (8..=16).step_by(2) {
        let rep = exhaustion_check(sig, ell).map_err(err)?;
        ensure(!rep.pipeline_one.is_empty(), || format!("ell={ell}: empty parameter set"))?;
        ensure(
            rep.pipeline_one == rep.pipeline_two && rep.pipeline_two == rep.period_prediction,
            || format!("ell={ell}: mismatches {:?}", rep.mismatches),
        )?;
        sizes.push(rep.pipeline_one.len());
    }
    Ok(format!("set sizes {sizes:?}"))
}

fn pi_minus() -> Outcome {
    let mut checked = 0;
    for (p, q) in [(3, 3), (4, 5), (5, 4), (4, 6)] {
        let sig = Signature::new(p, q).map_err(err)?;
        let r = (p + q) as i64;
        for a in halves(r - 1, r + 11) {
            let big = make_param(sig, Side::Minus, Level::G, a).map_err(err)?;
            let got: Vec<HalfInt> = pi_minus_summands(&big, 10).map_err(err)?.iter().map(|s| s.a()).collect();
            let want: Vec<HalfInt> = (0..=10).map(|k| a + HalfInt::from_twice(2 * k + 1)).collect();
            ensure(got == want, || format!("{sig} a={a}: {got:?}"))?;
            for s in pi_minus_summands(&big, 10).map_err(err)? {
                ensure(s.side() == Side::Minus && s.level() == Level::GPrime, || format!("{sig} a={a}: {s:?}"))?;
                ensure(hom_dim(&big, &s).map_err(err)? == 1, || format!("{sig} a={a} b={}: hom_dim 0", s.a()))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} parameters, 11 summands each"))
}

fn he_alignments() -> Outcome {
    for n in 4..=10usize {
        let rep = u2n_case_report(n).map_err(err)?;
        ensure(rep.total_alignments == 2, || format!("n={n}: {} alignments", rep.total_alignments))?;
        let first = format!("+P{}+", "M-".repeat(n));
        let second = format!("+{}P+", "-M".repeat(n));
        for (cand, want) in rep.candidates.iter().zip([first, second]) {
            let got: Vec<String> = cand.alignments.iter().map(|s| s.to_string()).collect();
            ensure(got == [want.clone()], || format!("n={n}: {got:?}, want {want}"))?;
        }
    }
    Ok("n = 4..10, two alignments each".to_string())
}

fn quaternionic_periods() -> Outcome {
    let mut checked = 0;
    for (p, q) in [(1, 2), (1, 3)] {
        for n in (0..=6u32).step_by(2) {
            for k in (0..=6u32).step_by(2) {
                let quad = quaternionic_period_quadrature(p, q, n, k, 1e-12).map_err(err)?;
                let nonzero = quad.is_nonzero(1e-9);
                ensure(nonzero == (k <= n), || {
                    format!(
                        "({p},{q}) n={n} k={k}: angular {} scale {}",
                        quad.angular.value, quad.angular_scale
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} label pairs"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 12] = [
        ("jacobi normalization at 1", jacobi_normalization, Some(1)),
        ("connection-formula identity", connection_identity, Some(5)),
        ("period dichotomy, closed vs quadrature", period_dichotomy, Some(120)),
        ("beta-argument adjudication", beta_adjudication, Some(10)),
        ("branching truth table", branching_truth_table, Some(1)),
        ("period / branching agreement", period_branching_agreement, None),
        ("compact interlacing oracle", compact_oracle, None),
        ("SU(2) matrix coefficients vs Legendre", su2_legendre, Some(1)),
        ("exhaustion cross-check (3,3)", exhaustion, None),
        ("pi-minus summands", pi_minus, None),
        ("He sign-pattern alignments", he_alignments, None),
        ("quaternionic periods", quaternionic_periods, Some(60)),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(*s) => {
                Err(format!("took {elapsed:.2?}, budget {s} s"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
