//! One function per subcommand, each turning parsed arguments into records.

use serde_json::{json, Value};

use relbranch_core::branching::{
    classify_interlacing, exhaustion_check, gp_sum_dim, hom_dim, pattern_characters, pi_minus_summands,
    InterlacingPattern,
};
use relbranch_core::hepattern::u2n_case_report;
use relbranch_core::jacobi::MAX_DEGREE;
use relbranch_core::periods::{
    angular_factor_exact, period_integral_closed, period_integral_quadrature, period_nonvanishing,
    quaternionic_period_quadrature,
};
use relbranch_core::reps::{make_param, DiscreteSeriesParam, Level, Side, Signature};
use relbranch_core::specfun::{adjudication_table, select_beta_argument, AdjudicationRow, BetaArgument, ADJUDICATION_PAIRS};
use relbranch_core::{Error, HalfInt};

use crate::range::{check_cap, half_points, int_points, Range};
use crate::record::{inputs, OutputRecord};

/// Relative threshold, in units of the angular scale, below which a
/// quaternionic period counts as zero.
pub const QUATERNIONIC_ZERO_THRESHOLD: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    NonConvergence(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Validation(_) => 2,
            CommandError::NonConvergence(_) => 3,
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. } => CommandError::NonConvergence(e.to_string()),
            other => CommandError::Validation(other.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CommandError>;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(CommandError::Validation(msg.into()))
}

/// `p,q` as written on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pq(pub u32, pub u32);

impl std::str::FromStr for Pq {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (p, q) = s.split_once(',').ok_or_else(|| format!("expected p,q, got {s:?}"))?;
        let p = p.trim().parse().map_err(|_| format!("bad p in {s:?}"))?;
        let q = q.trim().parse().map_err(|_| format!("bad q in {s:?}"))?;
        Ok(Pq(p, q))
    }
}

impl std::fmt::Display for Pq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

pub fn signature(pq: Pq, relaxed: bool) -> Result<Signature> {
    Ok(if relaxed {
        Signature::relaxed(pq.0, pq.1)?
    } else {
        Signature::new(pq.0, pq.1)?
    })
}

fn side_str(s: Side) -> String {
    s.symbol().to_string()
}

fn pattern_json(pat: &InterlacingPattern) -> Value {
    let (eps, eps_prime) = pattern_characters(pat);
    json!({
        "kind": pat.kind.to_string(),
        "merged": pat.merged.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "epsilon": eps.to_string(),
        "epsilon_prime": eps_prime.to_string(),
    })
}

fn param_json(param: &DiscreteSeriesParam) -> Result<Value> {
    let mut v = json!({
        "param": param.to_string(),
        "group": format!("U({},{})", param.group_signature().0, param.group_signature().1),
        "a_zero": param.a_zero().to_string(),
        "epsilon": param.epsilon().to_string(),
    });
    if param.level() == Level::G {
        // small relaxed signatures have no spherical factor of size >= 2
        v["minimal_k_type"] = param
            .minimal_k_type()
            .map(|(u, w)| json!([u.to_string(), w.to_string()]))
            .unwrap_or(Value::Null);
        v["infinitesimal_character"] = json!(param
            .infinitesimal_character()?
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>());
        v["center_lift"] = param.center_lift_check().map(Value::Bool).unwrap_or(Value::Null);
    }
    Ok(v)
}

pub struct BranchRequest {
    pub pq: Pq,
    pub relaxed: bool,
    pub plus_a: Option<HalfInt>,
    pub minus_a: Option<HalfInt>,
    pub plus_b: Option<HalfInt>,
    pub minus_b: Option<HalfInt>,
    pub gp: Option<(HalfInt, HalfInt)>,
    pub max_k: Option<u32>,
}

fn pick(plus: Option<HalfInt>, minus: Option<HalfInt>, what: &str) -> Result<Option<(Side, HalfInt)>> {
    match (plus, minus) {
        (Some(_), Some(_)) => invalid(format!("give at most one of --plus-{what} and --minus-{what}")),
        (Some(x), None) => Ok(Some((Side::Plus, x))),
        (None, Some(x)) => Ok(Some((Side::Minus, x))),
        (None, None) => Ok(None),
    }
}

pub fn branch(req: &BranchRequest) -> Result<OutputRecord> {
    let sig = signature(req.pq, req.relaxed)?;
    let mut ins = inputs([("pq", req.pq.to_string()), ("relaxed", req.relaxed.to_string())]);
    if let Some((a, b)) = req.gp {
        if req.plus_a.is_some() || req.minus_a.is_some() || req.plus_b.is_some() || req.minus_b.is_some() {
            return invalid("--gp cannot be combined with individual parameters");
        }
        ins.insert("gp".into(), format!("{a} {b}"));
        let sum = gp_sum_dim(a, b, sig)?;
        let result = json!({
            "dim": sum.dim,
            "witness": sum.witness.map(|(x, y)| format!("({x},{y})")),
            "entries": sum.entries.iter().map(|(x, y, d)| json!({"big": side_str(*x), "small": side_str(*y), "hom_dim": d})).collect::<Vec<_>>(),
            "pattern": pattern_json(&sum.pattern),
            "hypothesis_warning": sum.hypothesis_warning,
        });
        return Ok(OutputRecord::new("branch", ins, result, &["rb-validity", "exactly-one", "interlacing-pattern"]));
    }
    let big = pick(req.plus_a, req.minus_a, "a")?;
    let small = pick(req.plus_b, req.minus_b, "b")?;
    let big = big
        .map(|(side, a)| {
            ins.insert(format!("{}a", side.symbol()), a.to_string());
            make_param(sig, side, Level::G, a)
        })
        .transpose()?;
    let small = small
        .map(|(side, b)| {
            ins.insert(format!("{}b", side.symbol()), b.to_string());
            make_param(sig, side, Level::GPrime, b)
        })
        .transpose()?;
    if let Some(k) = req.max_k {
        ins.insert("max_k".into(), k.to_string());
    }
    match (big, small) {
        (Some(big), Some(small)) => {
            let dim = hom_dim(&big, &small)?;
            let pattern = classify_interlacing(big.a(), small.a())?;
            let result = json!({
                "big": big.to_string(),
                "small": small.to_string(),
                "hom_dim": dim,
                "pattern": pattern_json(&pattern),
            });
            let rule = if big.side() == Side::Plus { "hom-dim-plus" } else { "hom-dim-minus" };
            Ok(OutputRecord::new("branch", ins, result, &["rb-validity", rule, "interlacing-pattern"]))
        }
        (Some(big), None) => {
            let mut result = param_json(&big)?;
            let mut prov = vec!["rb-validity", "minimal-k-type", "epsilon-label"];
            if let Some(k) = req.max_k {
                if big.side() != Side::Minus {
                    return invalid("--max-k lists summands of a minus parameter (use --minus-a)");
                }
                result["pi_minus_summands"] =
                    json!(pi_minus_summands(&big, k)?.iter().map(|p| p.a().to_string()).collect::<Vec<_>>());
                prov.push("pi-minus-summands");
            }
            Ok(OutputRecord::new("branch", ins, result, &prov))
        }
        (None, Some(small)) => Ok(OutputRecord::new("branch", ins, param_json(&small)?, &["rb-validity"])),
        (None, None) => invalid("nothing to compute: give --plus-a/--minus-a, --plus-b/--minus-b or --gp"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complex,
    Quaternionic,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Complex => "complex",
            Family::Quaternionic => "quaternionic",
        })
    }
}

fn check_period(pq: Pq, n: u32, k: u32) -> Result<()> {
    if !(pq.1 > pq.0 && pq.0 > 0) {
        return invalid(format!("period integrals need q > p > 0, got {pq}"));
    }
    if !n.is_multiple_of(2) || !k.is_multiple_of(2) {
        return invalid(format!("labels n, k must be even, got n={n} k={k}"));
    }
    if n as usize > MAX_DEGREE || k as usize > MAX_DEGREE {
        return invalid(format!("labels are capped at {MAX_DEGREE}"));
    }
    Ok(())
}

fn period_result(family: Family, pq: Pq, n: u32, k: u32, tol: f64) -> Result<Value> {
    check_period(pq, n, k)?;
    let Pq(p, q) = pq;
    Ok(match family {
        Family::Complex => {
            let closed = period_integral_closed(p, q, n, k)?;
            let quad = period_integral_quadrature(p, q, n, k, tol)?;
            json!({
                "closed": closed,
                "quadrature": quad.result.value,
                "abs_error_estimate": quad.result.abs_error_estimate,
                "abs_difference": (closed - quad.result.value).abs(),
                "angular_exact": angular_factor_exact(p, q, n, k)?.to_string(),
                "angular_scale": quad.angular_scale,
                "nonvanishing": period_nonvanishing(p, q, n, k)?,
                "evaluations": quad.result.evaluations,
            })
        }
        Family::Quaternionic => {
            let quad = quaternionic_period_quadrature(p, q, n, k, tol)?;
            json!({
                "closed": Value::Null,
                "quadrature": quad.result.value,
                "abs_error_estimate": quad.result.abs_error_estimate,
                "abs_difference": Value::Null,
                "angular_exact": Value::Null,
                "angular_scale": quad.angular_scale,
                "nonvanishing": quad.is_nonzero(QUATERNIONIC_ZERO_THRESHOLD),
                "evaluations": quad.result.evaluations,
            })
        }
    })
}

fn period_provenance(family: Family) -> &'static [&'static str] {
    match family {
        Family::Complex => &["period-closed", "radial-beta-adjudicated", "fj-dictionary"],
        Family::Quaternionic => &["period-quaternionic"],
    }
}

fn period_inputs(family: Family, pq: Pq, n: u32, k: u32, tol: f64) -> std::collections::BTreeMap<String, String> {
    inputs([
        ("family", family.to_string()),
        ("pq", pq.to_string()),
        ("n", n.to_string()),
        ("k", k.to_string()),
        ("tol", format!("{tol:e}")),
    ])
}

pub fn period(family: Family, pq: Pq, n: u32, k: u32, tol: f64) -> Result<OutputRecord> {
    if !(tol > 0.0) {
        return invalid("--tol must be positive");
    }
    let result = period_result(family, pq, n, k, tol)?;
    Ok(OutputRecord::new(
        "period",
        period_inputs(family, pq, n, k, tol),
        result,
        period_provenance(family),
    ))
}

pub fn table_branch(pq: Pq, relaxed: bool, a_range: Range<HalfInt>, b_range: Range<HalfInt>) -> Result<Vec<OutputRecord>> {
    let sig = signature(pq, relaxed)?;
    let a0 = sig.good_range_bound();
    let b0 = a0 - HalfInt::HALF;
    let (alo, ahi) = a_range.or(a0, a0 + HalfInt::from_int(8));
    let (blo, bhi) = b_range.or(b0, b0 + HalfInt::from_int(8));
    let a_pts = half_points(alo, ahi)?;
    let b_pts = half_points(blo, bhi)?;
    check_cap(a_pts.len() as u128 * b_pts.len() as u128)?;
    let mut out = Vec::with_capacity(a_pts.len() * b_pts.len());
    for &a in &a_pts {
        for &b in &b_pts {
            let sum = gp_sum_dim(a, b, sig)?;
            let get = |x: Side, y: Side| sum.entries.iter().find(|e| e.0 == x && e.1 == y).map(|e| e.2).unwrap_or(0);
            let result = json!({
                "hom_pp": get(Side::Plus, Side::Plus),
                "hom_pm": get(Side::Plus, Side::Minus),
                "hom_mp": get(Side::Minus, Side::Plus),
                "hom_mm": get(Side::Minus, Side::Minus),
                "sum": sum.dim,
                "witness": sum.witness.map(|(x, y)| format!("({x},{y})")),
                "pattern": sum.pattern.kind.to_string(),
            });
            out.push(OutputRecord::new(
                "table branch",
                inputs([("pq", pq.to_string()), ("a", a.to_string()), ("b", b.to_string())]),
                result,
                &["rb-validity", "hom-dim-plus", "hom-dim-minus", "exactly-one"],
            ));
        }
    }
    Ok(out)
}

pub struct PeriodGrid {
    pub family: Family,
    pub q_max: u32,
    pub n_max: u32,
    pub k_max: u32,
    pub tol: f64,
}

pub fn table_period(grid: &PeriodGrid) -> Result<Vec<OutputRecord>> {
    if !(grid.tol > 0.0) {
        return invalid("--tol must be positive");
    }
    if grid.n_max as usize > MAX_DEGREE || grid.k_max as usize > MAX_DEGREE {
        return invalid(format!("labels are capped at {MAX_DEGREE}"));
    }
    let pairs = (grid.q_max as u128) * (grid.q_max as u128) / 2;
    check_cap(pairs * (grid.n_max as u128 / 2 + 1) * (grid.k_max as u128 / 2 + 1))?;
    let mut out = Vec::new();
    for q in 2..=grid.q_max {
        for p in 1..q {
            for n in (0..=grid.n_max).step_by(2) {
                for k in (0..=grid.k_max).step_by(2) {
                    let pq = Pq(p, q);
                    let result = period_result(grid.family, pq, n, k, grid.tol)?;
                    out.push(OutputRecord::new(
                        "table period",
                        period_inputs(grid.family, pq, n, k, grid.tol),
                        result,
                        period_provenance(grid.family),
                    ));
                }
            }
        }
    }
    Ok(out)
}

pub fn table_exhaustion(pq: Pq, relaxed: bool, ell: Range<i64>) -> Result<Vec<OutputRecord>> {
    let sig = signature(pq, relaxed)?;
    let base = sig.rank() as i64;
    let (lo, hi) = ell.or(base, base + 8);
    int_points(lo, hi)?
        .into_iter()
        .map(|l| {
            let report = exhaustion_check(sig, l)?;
            let result = serde_json::to_value(&report).expect("reports serialize");
            Ok(OutputRecord::new(
                "table exhaustion",
                inputs([("pq", pq.to_string()), ("ell", l.to_string())]),
                result,
                &["stage-branching", "hom-dim-plus", "period-closed", "fj-dictionary"],
            ))
        })
        .collect()
}

pub fn table_he(n: Range<i64>) -> Result<Vec<OutputRecord>> {
    let (lo, hi) = n.or(4, 10);
    int_points(lo, hi)?
        .into_iter()
        .map(|n| {
            if n < 0 {
                return invalid("n must be non-negative");
            }
            let report = u2n_case_report(n as usize)?;
            let result = json!({
                "big": report.big.to_string(),
                "candidates": report.candidates.iter().map(|c| c.candidate.to_string()).collect::<Vec<_>>(),
                "alignments": report.candidates.iter().map(|c| c.alignments.iter().map(|s| s.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "total_alignments": report.total_alignments,
                "infinitesimal_character_test_implemented": report.infinitesimal_character_test_implemented,
            });
            Ok(OutputRecord::new("table he", inputs([("n", n)]), result, &["he-alignment"]))
        })
        .collect()
}

pub fn adjudication_rows(tol: f64) -> Result<(Vec<AdjudicationRow>, Option<BetaArgument>)> {
    let rows = adjudication_table(&ADJUDICATION_PAIRS, tol)?;
    let chosen = select_beta_argument(&rows, 1e-10);
    Ok((rows, chosen))
}

pub fn adjudicate(tol: f64) -> Result<OutputRecord> {
    if !(tol > 0.0) {
        return invalid("--tol must be positive");
    }
    let (rows, chosen) = adjudication_rows(tol)?;
    let result = json!({
        "rows": rows,
        "selected": chosen.map(|c| match c {
            BetaArgument::AlphaMinusOne => "(alpha-1)/2",
            BetaArgument::AlphaPlusOne => "(alpha+1)/2",
        }),
    });
    Ok(OutputRecord::new(
        "adjudicate",
        inputs([("tol", format!("{tol:e}"))]),
        result,
        &["radial-beta-adjudicated"],
    ))
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.15e}")).unwrap_or_else(|| "diverges".to_string())
}

/// The evidence table committed under `docs/`.
pub fn adjudication_markdown(rows: &[AdjudicationRow], chosen: Option<BetaArgument>, tol: f64) -> String {
    let mut s = String::new();
    s.push_str("# Beta argument of the radial integral\n\n");
    s.push_str("`A(α, β) = ∫₀^∞ sinh^α t · cosh^{-β} t dt` is written as `½ B(u, (β-α)/2)`.\n");
    s.push_str("Two candidates for `u` were compared with adaptive quadrature after\n");
    s.push_str(&format!(
        "`u = tanh t` (tolerance {tol:e}). Regenerate with `relbranch adjudicate --markdown`.\n\n"
    ));
    s.push_str("| α | β | quadrature | u = (α-1)/2 | u = (α+1)/2 |\n");
    s.push_str("|---|---|---|---|---|\n");
    for r in rows {
        s.push_str(&format!(
            "| {} | {} | {:.15e} | {} | {} |\n",
            r.alpha,
            r.beta_exp,
            r.quadrature,
            fmt_opt(r.alpha_minus_one),
            fmt_opt(r.alpha_plus_one)
        ));
    }
    let verdict = match chosen {
        Some(BetaArgument::AlphaPlusOne) => "`u = (α+1)/2` agrees with quadrature to 1e-10 relative on every row and is the form used by `radial_integral_closed`. `u = (α-1)/2` diverges at α = 1 and disagrees on the other rows.",
        Some(BetaArgument::AlphaMinusOne) => "`u = (α-1)/2` agrees with quadrature on every row.",
        None => "Neither candidate agrees with quadrature on every row.",
    };
    s.push_str(&format!("\n{verdict}\n"));
    s
}
