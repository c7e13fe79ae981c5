//! The theorem harness: sweeps parameter grids and computes each counted
//! quantity along every route the library offers — brute-force enumeration,
//! closed form, and recurrence — recording any disagreement.
//!
//! Check recipes, by id (the sweep parameter comes first, then n):
//!
//! * `T1` (s, n): count_a == s_step_fib, enum(A) == count_a.
//! * `T2` (u, n): count_b == k_seq, enum(B, minimal caps) == count_b, and a
//!   multiplicity-invariance sub-check enum(B, uniform caps) == count_b.
//! * `T3` (s, n): count_c == tau, enum(C) == count_c.
//! * `T4_S` (p, n): count_k(n, p) == count_s(p+1, n) == enum(S with power
//!   p+1). The sweep parameter is the composition-side power.
//! * `T4_A` (p, n): count_k(n+1, p) == count_ap(p+1, n) == enum(Ap with
//!   power p+1).
//! * `T_AB` (p, n): count_ap(p, n) == count_bp(p, n), each against its own
//!   enumeration. Here p is the family power itself.
//! * `COR1` (n): count_k(n, 0) == classic_fib(n-1).
//! * `DIAG_SUM` (s, n): diagonal_sum(s, n) == s_step_fib(s+1, n+1).
//! * `TAU_REC` (s, n_max): check_tau_recurrence up to n_max. The default
//!   grid sweeps only s = 2 and s = 4, where the recurrence is established;
//!   other s may be requested explicitly and the outcome is reported as-is.
//! * `MULT_INVARIANCE` (u, n): enum(B, minimal caps) == enum(B, uniform
//!   caps) — the count must not depend on the cap sequence.
//! * `D_FIB` (n): enum(D) == classic_fib(n).
//! * `HOCKEY` (r, n_max): hockey_stick_check up to n_max.
//! * `STARS_BARS` (p, n): stars_and_bars against a direct solution count,
//!   over every lower-bound tuple in {0..3}^p.
//!
//! Enumeration is guarded by the caller's [`EnumerationBudget`]; a grid
//! point whose projected cost exceeds it is recorded as skipped with the
//! projected and allowed node counts, never silently dropped, and the
//! checks that need no enumeration still run. Reports are deterministic:
//! grids are sorted and deduplicated before the sweep, so two runs with the
//! same inputs differ only in wall time.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::ser::Serializer;
use serde::Serialize;

use crate::enumerate::{self, EnumerationBudget, FamilySpec, MultSeq};
use crate::{closed_form, pascal, sequences};
use crate::{BigCount, Error};
use num_traits::Zero;

/// One verifiable statement. `ALL` fixes the canonical order used by
/// [`verify_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4S,
    T4A,
    TAb,
    Cor1,
    DiagSum,
    TauRec,
    MultInvariance,
    DFib,
    Hockey,
    StarsBars,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4S,
        TheoremId::T4A,
        TheoremId::TAb,
        TheoremId::Cor1,
        TheoremId::DiagSum,
        TheoremId::TauRec,
        TheoremId::MultInvariance,
        TheoremId::DFib,
        TheoremId::Hockey,
        TheoremId::StarsBars,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4S => "T4_S",
            TheoremId::T4A => "T4_A",
            TheoremId::TAb => "T_AB",
            TheoremId::Cor1 => "COR1",
            TheoremId::DiagSum => "DIAG_SUM",
            TheoremId::TauRec => "TAU_REC",
            TheoremId::MultInvariance => "MULT_INVARIANCE",
            TheoremId::DFib => "D_FIB",
            TheoremId::Hockey => "HOCKEY",
            TheoremId::StarsBars => "STARS_BARS",
        }
    }

    /// Name of the sweep parameter, if the theorem has one.
    pub fn param_name(self) -> Option<&'static str> {
        match self {
            TheoremId::T1 | TheoremId::T3 | TheoremId::DiagSum | TheoremId::TauRec => Some("s"),
            TheoremId::T2 | TheoremId::MultInvariance => Some("u"),
            TheoremId::T4S | TheoremId::T4A | TheoremId::TAb | TheoremId::StarsBars => Some("p"),
            TheoremId::Hockey => Some("r"),
            TheoremId::Cor1 | TheoremId::DFib => None,
        }
    }

    fn param_min(self) -> u64 {
        match self {
            TheoremId::T1 | TheoremId::T3 | TheoremId::TauRec => 2,
            TheoremId::T2 | TheoremId::MultInvariance => 2,
            TheoremId::DiagSum | TheoremId::TAb | TheoremId::StarsBars => 1,
            TheoremId::T4S | TheoremId::T4A | TheoremId::Hockey => 0,
            TheoremId::Cor1 | TheoremId::DFib => 0,
        }
    }

    fn n_min(self) -> u64 {
        match self {
            TheoremId::DiagSum
            | TheoremId::TauRec
            | TheoremId::Hockey
            | TheoremId::StarsBars => 0,
            _ => 1,
        }
    }

    fn default_param(self) -> Option<Vec<u64>> {
        match self {
            TheoremId::T1 | TheoremId::T2 => Some((2..=5).collect()),
            TheoremId::T3 => Some((2..=4).collect()),
            TheoremId::T4S | TheoremId::T4A | TheoremId::TAb => Some((1..=3).collect()),
            TheoremId::DiagSum | TheoremId::StarsBars => Some((1..=4).collect()),
            TheoremId::TauRec => Some(vec![2, 4]),
            TheoremId::MultInvariance => Some(vec![2, 3]),
            TheoremId::Hockey => Some((0..=6).collect()),
            TheoremId::Cor1 | TheoremId::DFib => None,
        }
    }

    fn default_n(self) -> Vec<u64> {
        match self {
            TheoremId::T1 => (1..=14).collect(),
            TheoremId::T2 | TheoremId::TAb => (1..=16).collect(),
            TheoremId::T3 => (1..=9).collect(),
            TheoremId::T4S | TheoremId::T4A => (1..=18).collect(),
            TheoremId::Cor1 => (1..=30).collect(),
            TheoremId::DiagSum => (0..=30).collect(),
            TheoremId::TauRec | TheoremId::Hockey => vec![30],
            TheoremId::MultInvariance => (1..=14).collect(),
            TheoremId::DFib => (1..=20).collect(),
            TheoremId::StarsBars => (0..=12).collect(),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown theorem id '{s}'")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Requested parameter grid. `None` fields fall back to the theorem's
/// default range; explicit lists are sorted and deduplicated. An explicit
/// empty list yields zero points and a vacuous pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grid {
    /// Values for the theorem's sweep parameter (s, u, p, or r). Must be
    /// absent for theorems without one.
    pub param: Option<Vec<u64>>,
    /// Values for n (for the cumulative checks TAU_REC and HOCKEY, each
    /// value is an n_max).
    pub n: Option<Vec<u64>>,
}

impl Grid {
    pub fn new(param: Option<Vec<u64>>, n: Option<Vec<u64>>) -> Self {
        Grid { param, n }
    }
}

/// The grid a report actually swept, after defaults and normalization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolvedGrid {
    pub param_name: Option<&'static str>,
    pub param: Option<Vec<u64>>,
    pub n: Vec<u64>,
}

/// One detected disagreement: `expected` came from `sources.0`, `got` from
/// `sources.1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    #[serde(serialize_with = "serialize_big")]
    pub expected: BigCount,
    #[serde(serialize_with = "serialize_big")]
    pub got: BigCount,
    pub sources: (String, String),
}

/// Why a grid point (or one route at a point) was not evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SkipReason {
    /// Enumeration was withheld because its projected node count exceeded
    /// the run's budget.
    Budget {
        #[serde(serialize_with = "serialize_big")]
        projected: BigCount,
        #[serde(serialize_with = "serialize_big")]
        allowed: BigCount,
    },
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::Budget { projected, allowed } => {
                write!(f, "budget projected={projected} allowed={allowed}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub params: String,
    pub reason: SkipReason,
}

/// Outcome of one theorem sweep. `passed` iff no failures were recorded;
/// skipped points are listed, never dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub grid: ResolvedGrid,
    pub points_checked: u64,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skip>,
    #[serde(rename = "wall_time_ms", serialize_with = "serialize_millis")]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// A pass with zero evaluated points — typically an empty grid override
    /// or a budget that excluded every check. Flagged in the text format so
    /// a grid typo cannot masquerade as a green run.
    pub fn is_vacuous(&self) -> bool {
        self.points_checked == 0 && self.failures.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if !self.passed() {
            "fail"
        } else if self.is_vacuous() {
            "pass-vacuous"
        } else {
            "pass"
        }
    }

    /// Everything except wall time; two runs over the same grid and budget
    /// compare equal under this view.
    pub fn outcome(&self) -> (TheoremId, &ResolvedGrid, u64, &[Failure], &[Skip]) {
        (
            self.theorem,
            &self.grid,
            self.points_checked,
            &self.failures,
            &self.skipped,
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} points={} failures={} skipped={} wall_ms={}",
            self.theorem,
            self.status(),
            self.points_checked,
            self.failures.len(),
            self.skipped.len(),
            self.wall_time.as_millis()
        )?;
        for skip in &self.skipped {
            writeln!(f, "  skip {}: {}", skip.params, skip.reason)?;
        }
        for failure in &self.failures {
            writeln!(
                f,
                "  fail {}: {}={} {}={}",
                failure.params,
                failure.sources.0,
                failure.expected,
                failure.sources.1,
                failure.got
            )?;
        }
        Ok(())
    }
}

fn serialize_big<S: Serializer>(value: &BigCount, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

fn serialize_millis<S: Serializer>(value: &Duration, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_u64(value.as_millis() as u64)
}

/// Names one closed-form counter so a test run can deliberately perturb it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormId {
    CountA,
    CountB,
    CountC,
    CountK,
    CountS,
    CountAp,
    CountBp,
}

impl ClosedFormId {
    pub const ALL: [ClosedFormId; 7] = [
        ClosedFormId::CountA,
        ClosedFormId::CountB,
        ClosedFormId::CountC,
        ClosedFormId::CountK,
        ClosedFormId::CountS,
        ClosedFormId::CountAp,
        ClosedFormId::CountBp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFormId::CountA => "count_a",
            ClosedFormId::CountB => "count_b",
            ClosedFormId::CountC => "count_c",
            ClosedFormId::CountK => "count_k",
            ClosedFormId::CountS => "count_s",
            ClosedFormId::CountAp => "count_ap",
            ClosedFormId::CountBp => "count_bp",
        }
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedFormId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClosedFormId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown closed form '{s}'")))
    }
}

/// Harness knobs. `off_by_one` adds 1 to every value the named closed form
/// produces inside the harness, so the surrounding test suite can confirm
/// that verification actually detects a wrong counter instead of merely
/// running green.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub off_by_one: Option<ClosedFormId>,
}

/// Runs one theorem over `grid` (defaults where fields are None) under
/// `budget`. Errors only on an invalid grid; mismatches and skips are
/// reported, not raised.
pub fn verify(
    theorem: TheoremId,
    grid: &Grid,
    budget: &EnumerationBudget,
) -> Result<VerificationReport, Error> {
    verify_with(theorem, grid, budget, &VerifyOptions::default())
}

/// [`verify`] with explicit [`VerifyOptions`].
pub fn verify_with(
    theorem: TheoremId,
    grid: &Grid,
    budget: &EnumerationBudget,
    options: &VerifyOptions,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let resolved = resolve_grid(theorem, grid)?;
    let mut ctx = RunCtx {
        budget,
        options,
        points_checked: 0,
        failures: Vec::new(),
        skipped: Vec::new(),
    };
    run_theorem(theorem, &resolved, &mut ctx);
    Ok(VerificationReport {
        theorem,
        grid: resolved,
        points_checked: ctx.points_checked,
        failures: ctx.failures,
        skipped: ctx.skipped,
        wall_time: start.elapsed(),
    })
}

/// Runs every theorem on its default grid, in [`TheoremId::ALL`] order.
pub fn verify_all(budget: &EnumerationBudget) -> Vec<VerificationReport> {
    verify_all_with(budget, &VerifyOptions::default())
}

/// [`verify_all`] with explicit [`VerifyOptions`].
pub fn verify_all_with(
    budget: &EnumerationBudget,
    options: &VerifyOptions,
) -> Vec<VerificationReport> {
    TheoremId::ALL
        .into_iter()
        .map(|theorem| {
            verify_with(theorem, &Grid::default(), budget, options)
                .expect("default grids are valid")
        })
        .collect()
}

fn resolve_grid(theorem: TheoremId, grid: &Grid) -> Result<ResolvedGrid, Error> {
    let param_name = theorem.param_name();
    let param = match (&grid.param, param_name) {
        (Some(_), None) => {
            return Err(Error::InvalidSpec(format!(
                "{theorem} takes no sweep parameter"
            )));
        }
        (Some(values), Some(_)) => {
            let mut values = values.clone();
            values.sort_unstable();
            values.dedup();
            Some(values)
        }
        (None, _) => theorem.default_param(),
    };
    if let (Some(values), Some(name)) = (&param, param_name) {
        let min = theorem.param_min();
        if let Some(bad) = values.iter().find(|&&v| v < min) {
            return Err(Error::InvalidSpec(format!(
                "{theorem}: {name}={bad} is below the domain minimum {min}"
            )));
        }
    }
    let mut n = grid.n.clone().unwrap_or_else(|| theorem.default_n());
    n.sort_unstable();
    n.dedup();
    if let Some(bad) = n.iter().find(|&&v| v < theorem.n_min()) {
        return Err(Error::InvalidSpec(format!(
            "{theorem}: n={bad} is below the domain minimum {}",
            theorem.n_min()
        )));
    }
    Ok(ResolvedGrid {
        param_name,
        param,
        n,
    })
}

struct RunCtx<'a> {
    budget: &'a EnumerationBudget,
    options: &'a VerifyOptions,
    points_checked: u64,
    failures: Vec<Failure>,
    skipped: Vec<Skip>,
}

impl RunCtx<'_> {
    /// Applies the fault-injection option to a closed-form value.
    fn closed(&self, id: ClosedFormId, value: BigCount) -> BigCount {
        if self.options.off_by_one == Some(id) {
            value + 1u32
        } else {
            value
        }
    }

    fn check(
        &mut self,
        params: &str,
        expected_source: &str,
        expected: &BigCount,
        got_source: &str,
        got: &BigCount,
    ) {
        if expected != got {
            self.failures.push(Failure {
                params: params.to_owned(),
                expected: expected.clone(),
                got: got.clone(),
                sources: (expected_source.to_owned(), got_source.to_owned()),
            });
        }
    }

    /// Counts a family by enumeration, or records a skip when the budget
    /// guard refuses.
    fn oracle(&mut self, params: &str, label: &str, spec: &FamilySpec) -> Option<BigCount> {
        match enumerate::enumerate_family(spec, self.budget, false) {
            Ok(result) => Some(result.count),
            Err(Error::BudgetExceeded { projected, allowed }) => {
                self.skipped.push(Skip {
                    params: format!("{params} {label}"),
                    reason: SkipReason::Budget { projected, allowed },
                });
                None
            }
            Err(err) => unreachable!("enumeration failed on a validated grid point: {err:?}"),
        }
    }
}

fn run_theorem(theorem: TheoremId, grid: &ResolvedGrid, ctx: &mut RunCtx<'_>) {
    let params = grid
        .param
        .as_deref()
        .unwrap_or(&[u64::MAX])
        .to_vec();
    let has_param = grid.param.is_some();
    for &p in &params {
        for &n in &grid.n {
            let point = if has_param {
                format!(
                    "{}={p} n={n}",
                    grid.param_name.expect("sweep parameter has a name")
                )
            } else {
                format!("n={n}")
            };
            run_point(theorem, p, n, &point, ctx);
        }
    }
}

fn run_point(theorem: TheoremId, p: u64, n: u64, point: &str, ctx: &mut RunCtx<'_>) {
    match theorem {
        TheoremId::T1 => {
            let s = p;
            let seq = sequences::s_step_fib(s, n as i64).expect("grid is in domain");
            let cf = ctx.closed(ClosedFormId::CountA, closed_form::count_a(s, n));
            ctx.check(point, "s_step_fib", &seq, "count_A", &cf);
            if let Some(count) = ctx.oracle(point, "enum(A)", &FamilySpec::A { s, n }) {
                ctx.check(point, "enum(A)", &count, "count_A", &cf);
            }
            ctx.points_checked += 1;
        }
        TheoremId::T2 => {
            let u = p;
            let seq = sequences::k_seq(u, n).expect("grid is in domain");
            let cf = ctx.closed(ClosedFormId::CountB, closed_form::count_b(u, n));
            ctx.check(point, "k_seq", &seq, "count_B", &cf);
            let minimal = FamilySpec::B {
                u,
                caps: MultSeq::Minimal,
                n,
            };
            if let Some(count) = ctx.oracle(point, "enum(B minimal)", &minimal) {
                ctx.check(point, "enum(B minimal)", &count, "count_B", &cf);
            }
            // Multiplicity-invariance sub-check: the count must be the same
            // under the fattest cap sequence.
            let uniform = FamilySpec::B {
                u,
                caps: MultSeq::Uniform,
                n,
            };
            if let Some(count) = ctx.oracle(point, "enum(B uniform)", &uniform) {
                ctx.check(point, "enum(B uniform)", &count, "count_B", &cf);
            }
            ctx.points_checked += 1;
        }
        TheoremId::T3 => {
            let s = p;
            let seq = sequences::tau(s, n).expect("grid is in domain");
            let cf = ctx.closed(ClosedFormId::CountC, closed_form::count_c(s, n));
            ctx.check(point, "tau", &seq, "count_C", &cf);
            if let Some(count) = ctx.oracle(point, "enum(C)", &FamilySpec::C { s, n }) {
                ctx.check(point, "enum(C)", &count, "count_C", &cf);
            }
            ctx.points_checked += 1;
        }
        TheoremId::T4S => {
            let k_route = ctx.closed(ClosedFormId::CountK, closed_form::count_k(n, p));
            let cf = ctx.closed(ClosedFormId::CountS, closed_form::count_s(p + 1, n));
            ctx.check(point, "count_K_np", &k_route, "count_S", &cf);
            let family = FamilySpec::S { p: p + 1, n };
            if let Some(count) = ctx.oracle(point, "enum(S)", &family) {
                ctx.check(point, "enum(S)", &count, "count_S", &cf);
            }
            ctx.points_checked += 1;
        }
        TheoremId::T4A => {
            let k_route = ctx.closed(ClosedFormId::CountK, closed_form::count_k(n + 1, p));
            let cf = ctx.closed(ClosedFormId::CountAp, closed_form::count_ap(p + 1, n));
            ctx.check(point, "count_K_np", &k_route, "count_Ap", &cf);
            let family = FamilySpec::Ap { p: p + 1, n };
            if let Some(count) = ctx.oracle(point, "enum(Ap)", &family) {
                ctx.check(point, "enum(Ap)", &count, "count_Ap", &cf);
            }
            ctx.points_checked += 1;
        }
        TheoremId::TAb => {
            let ap = ctx.closed(ClosedFormId::CountAp, closed_form::count_ap(p, n));
            let bp = ctx.closed(ClosedFormId::CountBp, closed_form::count_bp(p, n));
            ctx.check(point, "count_Ap", &ap, "count_Bp", &bp);
            if let Some(count) = ctx.oracle(point, "enum(Ap)", &FamilySpec::Ap { p, n }) {
                ctx.check(point, "enum(Ap)", &count, "count_Ap", &ap);
            }
            if let Some(count) = ctx.oracle(point, "enum(Bp)", &FamilySpec::Bp { p, n }) {
                ctx.check(point, "enum(Bp)", &count, "count_Bp", &bp);
            }
            ctx.points_checked += 1;
        }
        TheoremId::Cor1 => {
            let fib = sequences::classic_fib(n - 1);
            let k_route = ctx.closed(ClosedFormId::CountK, closed_form::count_k(n, 0));
            ctx.check(point, "classic_fib", &fib, "count_K_np", &k_route);
            ctx.points_checked += 1;
        }
        TheoremId::DiagSum => {
            let s = p;
            let seq = sequences::s_step_fib(s + 1, n as i64 + 1).expect("grid is in domain");
            let diag = pascal::diagonal_sum(s, n);
            ctx.check(point, "s_step_fib", &seq, "diagonal_sum", &diag);
            ctx.points_checked += 1;
        }
        TheoremId::TauRec => {
            let s = p;
            let outcome = sequences::check_tau_recurrence(s, n).expect("grid is in domain");
            if let Some(mismatch) = outcome.first_mismatch {
                ctx.failures.push(Failure {
                    params: format!("s={s} n={}", mismatch.n),
                    expected: mismatch.tau_value,
                    got: mismatch.recurrence_value,
                    sources: ("tau".to_owned(), "binomial recurrence".to_owned()),
                });
            }
            ctx.points_checked += 1;
        }
        TheoremId::MultInvariance => {
            let u = p;
            let minimal = FamilySpec::B {
                u,
                caps: MultSeq::Minimal,
                n,
            };
            let uniform = FamilySpec::B {
                u,
                caps: MultSeq::Uniform,
                n,
            };
            let lhs = ctx.oracle(point, "enum(B minimal)", &minimal);
            let rhs = ctx.oracle(point, "enum(B uniform)", &uniform);
            if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
                ctx.check(point, "enum(B minimal)", &lhs, "enum(B uniform)", &rhs);
                ctx.points_checked += 1;
            }
        }
        TheoremId::DFib => {
            let fib = sequences::classic_fib(n);
            if let Some(count) = ctx.oracle(point, "enum(D)", &FamilySpec::D { n }) {
                ctx.check(point, "classic_fib", &fib, "enum(D)", &count);
                ctx.points_checked += 1;
            }
        }
        TheoremId::Hockey => {
            let r = p;
            if !pascal::hockey_stick_check(r, n) {
                // Re-walk the sums to pin the first offending index.
                let mut running = BigCount::zero();
                for m in r..=n {
                    running += pascal::binom(m as i64, r as i64);
                    let closed = pascal::binom(m as i64 + 1, r as i64 + 1);
                    if running != closed {
                        ctx.failures.push(Failure {
                            params: format!("r={r} n={m}"),
                            expected: running,
                            got: closed,
                            sources: (
                                "cumulative binom sum".to_owned(),
                                "binom(n+1, r+1)".to_owned(),
                            ),
                        });
                        break;
                    }
                }
            }
            ctx.points_checked += 1;
        }
        TheoremId::StarsBars => {
            for bounds in bound_tuples(p as usize, 3) {
                let formula = pascal::stars_and_bars(n, &bounds);
                let direct = count_bounded_solutions(n, &bounds);
                if formula != direct {
                    ctx.failures.push(Failure {
                        params: format!("p={p} n={n} bounds={bounds:?}"),
                        expected: direct,
                        got: formula,
                        sources: ("direct solution count".to_owned(), "stars_and_bars".to_owned()),
                    });
                }
            }
            ctx.points_checked += 1;
        }
    }
}

/// Every lower-bound tuple in {0..=max_bound}^p, in lexicographic-ish
/// (odometer) order.
fn bound_tuples(p: usize, max_bound: u64) -> Vec<Vec<u64>> {
    let base = max_bound + 1;
    let total = base.pow(p as u32);
    (0..total)
        .map(|mut index| {
            (0..p)
                .map(|_| {
                    let digit = index % base;
                    index /= base;
                    digit
                })
                .collect()
        })
        .collect()
}

/// Counts solutions of x_1 + ... + x_p = n with x_i >= bounds[i] by direct
/// recursion — the reference the stars-and-bars formula is checked against.
fn count_bounded_solutions(n: u64, bounds: &[u64]) -> BigCount {
    fn recurse(remaining: u64, bounds: &[u64]) -> u64 {
        match bounds.split_first() {
            None => u64::from(remaining == 0),
            Some((&lowest, rest)) => (lowest..=remaining)
                .map(|x| recurse(remaining - x, rest))
                .sum(),
        }
    }
    BigCount::from(recurse(n, bounds))
}
