//! Verification suites and their machine-readable report.
//!
//! A suite runs a fixed list of named checks for one `(n, q)` parameter
//! point. Every check carries the predicted and computed values as decimal
//! strings so the JSON serialization is stable, and every determinant that
//! any check computes is evaluated by both engines; a single disagreement
//! clears the report's `engine_agreement` flag.

use crate::counting;
use crate::det::{det_exact, det_modular};
use crate::field::FieldCtx;
use crate::gorenstein;
use crate::incidence;
use crate::lattice;
use crate::matrix::{mat_is_phi, IntMatrix, PhiSpec};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt::Display;
use std::time::Instant;

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Incidence,
    Gorenstein,
    Counting,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "all" => Ok(Suite::All),
            "incidence" => Ok(Suite::Incidence),
            "gorenstein" => Ok(Suite::Gorenstein),
            "counting" => Ok(Suite::Counting),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: u32,
    pub q: u64,
}

/// One named check: predicted vs computed, both rendered as strings
/// (big integers in decimal). `ms` is wall-clock timing and is the only
/// nondeterministic field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub predicted: String,
    pub computed: String,
    pub pass: bool,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: ReportParams,
    pub checks: Vec<Check>,
    pub engine_agreement: bool,
    pub version: String,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Renders a report in the requested format. Stdout-ready; timing stays in
/// the JSON `ms` fields only, so text and CSV are byte-deterministic.
pub fn render_report(report: &VerificationReport, format: crate::table::OutputFormat) -> String {
    use crate::table::OutputFormat;
    use std::fmt::Write as _;
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        OutputFormat::Csv => {
            let mut out = String::from("name,predicted,computed,pass\n");
            for c in &report.checks {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    c.name,
                    csv_quote(&c.predicted),
                    csv_quote(&c.computed),
                    c.pass
                );
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "verification at n = {}, q = {}\n",
                report.params.n, report.params.q
            );
            for c in &report.checks {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                let detail = if c.predicted.is_empty() || c.predicted == c.computed {
                    c.computed.clone()
                } else {
                    format!("predicted {} / computed {}", c.predicted, c.computed)
                };
                let _ = writeln!(out, "  [{mark}] {}: {detail}", c.name);
            }
            let _ = writeln!(
                out,
                "engine agreement: {}",
                if report.engine_agreement { "yes" } else { "NO" }
            );
            let _ = writeln!(
                out,
                "overall: {}",
                if report.all_pass() { "pass" } else { "FAIL" }
            );
            out
        }
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct SuiteRunner {
    checks: Vec<Check>,
    engine_agreement: bool,
}

impl SuiteRunner {
    fn new() -> SuiteRunner {
        SuiteRunner {
            checks: Vec::new(),
            engine_agreement: true,
        }
    }

    fn record(
        &mut self,
        name: &str,
        predicted: impl Display,
        computed: impl Display,
        pass: bool,
        started: Instant,
    ) {
        self.checks.push(Check {
            name: name.to_string(),
            predicted: predicted.to_string(),
            computed: computed.to_string(),
            pass,
            ms: started.elapsed().as_millis() as u64,
        });
    }

    fn check_eq<T: PartialEq + Display>(&mut self, name: &str, predicted: T, computed: T) {
        let started = Instant::now();
        let pass = predicted == computed;
        self.record(name, predicted, computed, pass, started);
    }

    fn skip(&mut self, name: &str, reason: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            predicted: String::new(),
            computed: format!("skipped: {reason}"),
            pass: true,
            ms: 0,
        });
    }

    /// Signed determinant via both engines; a disagreement fails the run's
    /// engine flag but still returns the elimination value.
    fn det_both(&mut self, m: &IntMatrix) -> BigInt {
        let exact = det_exact(m);
        if det_modular(m) != exact {
            self.engine_agreement = false;
        }
        exact
    }
}

/// Runs the selected verification suite at one parameter point.
pub fn run_suite(n: u32, q: u64, suite: Suite, budget: u64) -> Result<VerificationReport, Error> {
    let ctx = FieldCtx::from_order(q)?;
    if n < 2 {
        return Err(Error::AmbientTooSmall { n });
    }
    let mut runner = SuiteRunner::new();
    if matches!(suite, Suite::All | Suite::Counting) {
        counting_checks(&mut runner, n, &ctx, budget)?;
    }
    if matches!(suite, Suite::All | Suite::Incidence) {
        incidence_checks(&mut runner, n, &ctx, budget)?;
    }
    if matches!(suite, Suite::All | Suite::Gorenstein) {
        gorenstein_checks(&mut runner, n, &ctx, budget)?;
    }
    Ok(VerificationReport {
        params: ReportParams { n, q },
        checks: runner.checks,
        engine_agreement: runner.engine_agreement,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

/// Counting formulas against their enumeration oracles.
fn counting_checks(
    runner: &mut SuiteRunner,
    n: u32,
    ctx: &FieldCtx,
    budget: u64,
) -> Result<(), Error> {
    let q = ctx.q();
    let started = Instant::now();
    let points = match lattice::enum_points(n as usize, ctx) {
        Ok(points) => points,
        Err(Error::BudgetExceeded { .. }) => {
            runner.skip("counting-suite", "point enumeration over budget");
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    runner.record(
        "point-count",
        counting::q_int(n, q),
        points.len(),
        counting::q_int(n, q) == points.len().into(),
        started,
    );

    runner.check_eq(
        "point-count-split",
        counting::q_int(n, q),
        counting::q_int(n - 1, q) + counting::q_pow(q, u64::from(n) - 1),
    );

    for j in 0..=n {
        let expected = counting::q_binom(i64::from(n), i64::from(j), q);
        let started = Instant::now();
        match lattice::enum_level(n as usize, j as usize, ctx) {
            Ok(level) => {
                let pass = expected == level.len().into();
                runner.record(
                    &format!("level-count-{j}"),
                    expected,
                    level.len(),
                    pass,
                    started,
                );
            }
            Err(Error::BudgetExceeded { .. }) => {
                runner.skip(&format!("level-count-{j}"), "enumeration over budget");
            }
            Err(e) => return Err(e),
        }
    }

    let started = Instant::now();
    match lattice::count_paths_bruteforce(n as usize, ctx, budget) {
        Ok(paths) => {
            let expected = counting::p_count(n, q);
            let pass = expected == paths;
            runner.record("path-count", expected, paths, pass, started);
        }
        Err(Error::BudgetExceeded { .. }) => runner.skip("path-count", "chain search over budget"),
        Err(e) => return Err(e),
    }

    let started = Instant::now();
    match gorenstein::build_basis_set(n, ctx, budget) {
        Ok(bs) => {
            let expected = counting::s_count(n, q);
            let pass = expected == bs.bases.len().into();
            runner.record("basis-count", expected, bs.bases.len(), pass, started);
        }
        Err(Error::BudgetExceeded { .. }) => {
            runner.skip("basis-count", "basis enumeration over budget")
        }
        Err(e) => return Err(e),
    }

    // Formula cross-identities (pure arithmetic, always in budget).
    runner.check_eq(
        "ordered-basis-count-ratio",
        counting::t_count(n, q),
        counting::s_count(n, q) * counting::factorial(n),
    );
    for j in 0..=n {
        runner.check_eq(
            &format!("fixed-subset-ratio-{j}"),
            counting::t_fixed(n, j, q),
            counting::s_fixed(n, j, q) * counting::factorial(n - j),
        );
    }
    Ok(())
}

/// Incidence-pair structure, product identities, and determinants.
fn incidence_checks(
    runner: &mut SuiteRunner,
    n: u32,
    ctx: &FieldCtx,
    budget: u64,
) -> Result<(), Error> {
    use num_traits::ToPrimitive;
    let q = ctx.q();
    // Elimination dominates: roughly N^3 steps.
    let needed = counting::q_int(n, q)
        .to_u64()
        .and_then(|c| c.checked_pow(3))
        .unwrap_or(u64::MAX);
    if needed > budget {
        runner.skip("incidence-suite", "matrix work over budget");
        return Ok(());
    }
    let pair = incidence::build_incidence(n, ctx)?;
    let dim = pair.a.dim();

    let started = Instant::now();
    runner.record(
        "symmetry",
        "A and B symmetric",
        format!(
            "A {}, B {}",
            if pair.a.is_symmetric() {
                "symmetric"
            } else {
                "asymmetric"
            },
            if pair.b.is_symmetric() {
                "symmetric"
            } else {
                "asymmetric"
            }
        ),
        pair.a.is_symmetric() && pair.b.is_symmetric(),
        started,
    );

    let started = Instant::now();
    let a_sum = BigInt::from(counting::q_int(n - 1, q));
    let b_sum = BigInt::from(counting::q_pow(q, u64::from(n) - 1));
    let sums_ok = (0..dim).all(|i| {
        pair.a.row_sum(i) == a_sum
            && pair.a.col_sum(i) == a_sum
            && pair.b.row_sum(i) == b_sum
            && pair.b.col_sum(i) == b_sum
    });
    runner.record(
        "line-sums",
        format!("rows(A)={a_sum}, rows(B)={b_sum}"),
        if sums_ok { "all match" } else { "mismatch" },
        sums_ok,
        started,
    );

    let started = Instant::now();
    let sum_spec = mat_is_phi(&{
        let mut s = pair.a.clone();
        for i in 0..dim {
            for j in 0..dim {
                s.set(i, j, pair.a.get(i, j) + pair.b.get(i, j));
            }
        }
        s
    });
    let all_ones = PhiSpec::new(dim, 1, 1);
    runner.record(
        "complement-sum",
        &all_ones,
        sum_spec
            .as_ref()
            .map_or_else(|| "not constant".to_string(), |s| s.to_string()),
        sum_spec == Some(all_ones.clone()),
        started,
    );

    for check in incidence::verify_square_identities(&pair) {
        let started = Instant::now();
        runner.record(
            &format!("product-{}", check.name),
            &check.predicted,
            check
                .witnessed
                .as_ref()
                .map_or_else(|| "not constant".to_string(), |s| s.to_string()),
            check.pass,
            started,
        );
    }

    let started = Instant::now();
    let det_a = runner.det_both(&pair.a);
    runner.record(
        "det-A-closed-form",
        incidence::det_a_closed(n, q),
        det_a.abs(),
        BigInt::from(incidence::det_a_closed(n, q)) == det_a.abs(),
        started,
    );
    let started = Instant::now();
    let det_b = runner.det_both(&pair.b);
    runner.record(
        "det-B-closed-form",
        incidence::det_b_closed(n, q),
        det_b.abs(),
        BigInt::from(incidence::det_b_closed(n, q)) == det_b.abs(),
        started,
    );
    runner.check_eq(
        "det-A-alternative-form",
        incidence::det_ab_alternative(n, q),
        incidence::det_a_closed(n, q),
    );
    Ok(())
}

/// Basis-set, Hessian, and multiplication-matrix checks.
fn gorenstein_checks(
    runner: &mut SuiteRunner,
    n: u32,
    ctx: &FieldCtx,
    budget: u64,
) -> Result<(), Error> {
    let q = ctx.q();
    let bs = match gorenstein::build_basis_set(n, ctx, budget) {
        Ok(bs) => bs,
        Err(Error::BudgetExceeded { .. }) => {
            runner.skip("hessian-suite", "basis enumeration over budget");
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let pair = incidence::build_incidence(n, ctx)?;

    let started = Instant::now();
    let hessian = gorenstein::hessian_at_ones(&bs).matrix;
    let shape_ok =
        hessian.is_symmetric() && (0..hessian.dim()).all(|i| hessian.get(i, i).is_zero());
    runner.record(
        "hessian-shape",
        "symmetric, zero diagonal",
        if shape_ok {
            "symmetric, zero diagonal"
        } else {
            "violated"
        },
        shape_ok,
        started,
    );

    let started = Instant::now();
    let ab = pair.a.mul(&pair.b).expect("dimensions match");
    let predicted = ab
        .scale(&BigInt::from(counting::t_fixed(n - 1, 1, q)))
        .div_exact(&BigInt::from(counting::factorial(n - 2)));
    runner.record(
        "hessian-factorization",
        "H = t/(n-2)! * AB",
        if predicted == hessian {
            "entrywise equal"
        } else {
            "differs"
        },
        predicted == hessian,
        started,
    );

    let started = Instant::now();
    let spec = mat_is_phi(&hessian);
    let off_diag = spec.as_ref().map(|s| s.beta.magnitude().clone());
    let t_pair = counting::t_fixed(n, 2, q);
    let s_pair = counting::s_fixed(n, 2, q);
    let (verdict, pass) = match &off_diag {
        Some(beta) if *beta == t_pair && *beta == s_pair => {
            ("matches both candidate pair counts".to_string(), true)
        }
        Some(beta) if *beta == s_pair => ("matches unordered pair count".to_string(), true),
        Some(beta) if *beta == t_pair => ("matches ordered pair count".to_string(), true),
        Some(beta) => (format!("matches neither candidate: {beta}"), false),
        None => ("off-diagonal not constant".to_string(), false),
    };
    runner.record(
        "hessian-off-diagonal",
        format!("ordered {t_pair} or unordered {s_pair}"),
        verdict,
        pass,
        started,
    );

    let started = Instant::now();
    let det_h = runner.det_both(&hessian);
    match &off_diag {
        Some(beta) => {
            let closed = gorenstein::det_hessian_closed(n, q, beta);
            runner.record(
                "det-H-closed-form",
                &closed,
                det_h.magnitude(),
                *det_h.magnitude() == closed,
                started,
            );
        }
        None => runner.skip("det-H-closed-form", "no constant off-diagonal"),
    }

    let started = Instant::now();
    let mu = gorenstein::mu_matrix(n, ctx)?;
    runner.record(
        "multiplication-pairing",
        "mu matrix equals B",
        if mu == pair.b { "equal" } else { "differs" },
        mu == pair.b,
        started,
    );

    let started = Instant::now();
    match gorenstein::lefschetz_matrix(n, ctx, budget) {
        Ok(lm) => {
            let predicted = pair.a.scale(&BigInt::from(lm.scalar.clone()));
            runner.record(
                "multiplication-matrix",
                format!("{} * A", lm.scalar),
                if lm.matrix == predicted {
                    "tuple count agrees"
                } else {
                    "differs"
                },
                lm.matrix == predicted,
                started,
            );
            let started = Instant::now();
            let lhs = pair.b.mul(&lm.matrix).expect("dimensions match");
            let rhs = hessian.scale(&BigInt::from(counting::factorial(n - 2)));
            runner.record(
                "composed-identity",
                "B * M = (n-2)! * H",
                if lhs == rhs {
                    "entrywise equal"
                } else {
                    "differs"
                },
                lhs == rhs,
                started,
            );
        }
        Err(Error::BudgetExceeded { .. }) => {
            runner.skip("multiplication-matrix", "tuple count over budget");
            runner.skip("composed-identity", "tuple count over budget");
        }
        Err(e) => return Err(e),
    }

    runner.check_eq(
        "degree-n-scalar",
        gorenstein::ell_n_scalar(n, q),
        counting::factorial(n) * bs.bases.len(),
    );
    Ok(())
}
