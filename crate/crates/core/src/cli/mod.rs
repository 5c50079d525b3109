//! Command implementations behind the `blackburn` binary.
//!
//! Every command returns an [`Output`] holding the text for stdout/stderr
//! and the exit status: 0 when every check passed, 1 when a mathematical
//! claim failed, 2 for usage or input errors.

mod formats;
mod suites;

use std::fmt::Write as _;
use std::path::Path;

pub use formats::{parse_cayley, parse_cayley_with, parse_permgen, parse_permgen_with, serialize_cayley, PERMGEN_CAP};
pub use suites::{run_suites, suite_list, Level, SuiteResult, CATALOG_BOUND, SUITE_SEED};

use crate::autos::{enumerate_autc, AutcOptions, DEFAULT_AUTC_BUDGET};
use crate::catalog::{self, CATALOG_VERSION, MANIFEST};
use crate::classify::{blackburn_2group_form, is_blackburn, is_dedekind, q_group_witness, r_of_with, RStatus};
use crate::counterexample::{build_bundle, extend_to_ga, verify_example};
use crate::error::{Error, Result};
use crate::group::{prime_power_base, Group, Limits, DEFAULT_MAX_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit status for an error: 1 for failed mathematical claims, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ClaimFailed(_)
        | Error::TrichotomyViolated(_)
        | Error::CounterexampleFound { .. }
        | Error::NoWitness
        | Error::NoFormMatched
        | Error::ActionPropertyFailed(_)
        | Error::NotAutomorphism(_) => EXIT_CLAIM_FAILED,
        _ => EXIT_USAGE,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub porcelain: bool,
    pub max_order: usize,
    pub budget: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { porcelain: false, max_order: DEFAULT_MAX_ORDER, budget: DEFAULT_AUTC_BUDGET }
    }
}

impl Options {
    fn limits(&self) -> Limits {
        Limits { max_order: self.max_order, ..Limits::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn error(e: &Error) -> Output {
        Output { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(e) }
    }

    fn from_result(r: Result<Output>) -> Output {
        r.unwrap_or_else(|e| Output::error(&e))
    }
}

/// Where a group comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    CayleyFile(String),
    PermGenFile(String),
    /// A catalog name, a catalog expression, or `witness_g(3)` / `witness_ga(3)`
    /// for the order-243 group and its order-2187 extension.
    Builtin(String),
}

impl GroupSource {
    /// A path to an existing file is sniffed by its header; anything else is
    /// taken as a builtin.
    pub fn from_arg(arg: &str) -> Result<GroupSource> {
        let path = Path::new(arg);
        if !path.is_file() {
            return Ok(GroupSource::Builtin(arg.to_string()));
        }
        let text = read(arg)?;
        let first =
            text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()).unwrap_or("");
        match first.split_whitespace().next() {
            Some("cayley") => Ok(GroupSource::CayleyFile(arg.to_string())),
            Some("permgen") => Ok(GroupSource::PermGenFile(arg.to_string())),
            _ => Err(Error::Syntax { line: 1, msg: format!("{arg}: expected a `cayley` or `permgen` header") }),
        }
    }

    pub fn load(&self, limits: &Limits) -> Result<Group> {
        match self {
            GroupSource::CayleyFile(path) => parse_cayley_with(&read(path)?, limits),
            GroupSource::PermGenFile(path) => parse_permgen_with(&read(path)?, limits.max_order.min(PERMGEN_CAP)),
            GroupSource::Builtin(name) => load_builtin(name, limits),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            GroupSource::CayleyFile(s) | GroupSource::PermGenFile(s) | GroupSource::Builtin(s) => s,
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Syntax { line: 0, msg: format!("{path}: {e}") })
}

fn load_builtin(name: &str, limits: &Limits) -> Result<Group> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "witness_g(3)" || compact == "witness_ga(3)" {
        let mut b = build_bundle(3)?;
        if compact == "witness_g(3)" {
            limits.check_order(b.g.order() as u128)?;
            return Ok(b.g);
        }
        extend_to_ga(&mut b)?;
        let ga = b.ga.expect("extended");
        limits.check_order(ga.order() as u128)?;
        return Ok(ga);
    }
    let expr = MANIFEST.iter().find(|(n, _)| *n == name).map_or(name, |(_, e)| e);
    catalog::parse_expression_with(expr, limits)
}

/// Ordered `key`/`value` pairs rendered as `key: value` or `key=value`.
#[derive(Debug, Default)]
struct Records(Vec<(String, String)>);

impl Records {
    fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.0.push((key.into(), value.to_string()));
    }

    fn render(&self, porcelain: bool) -> String {
        let mut out = String::new();
        for (k, v) in &self.0 {
            if porcelain {
                let _ = writeln!(out, "{k}={v}");
            } else {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

pub fn cmd_classify(source: &GroupSource, opts: &Options) -> Output {
    Output::from_result((|| {
        let g = source.load(&opts.limits())?;
        let r = r_of_with(&g, &opts.limits())?;
        let blackburn = is_blackburn(&g)?;
        let mut rec = Records::default();
        rec.push("source", source.label());
        rec.push("order", g.order());
        rec.push("abelian", yes_no(g.is_abelian()));
        rec.push("nilpotent", yes_no(g.is_nilpotent()));
        rec.push("dedekind", yes_no(is_dedekind(&g)));
        rec.push("q_group", yes_no(q_group_witness(&g).is_some()));
        rec.push("r", r.tag());
        rec.push("r_order", r.subgroup().map_or("-".to_string(), |s| s.order().to_string()));
        rec.push("blackburn", yes_no(blackburn));
        let p = match &r {
            RStatus::Nontrivial(s) if blackburn => prime_power_base(s.order()),
            _ => None,
        };
        rec.push("p", p.map_or("-".to_string(), |p| p.to_string()));
        let form = if blackburn && prime_power_base(g.order()) == Some(2) {
            match blackburn_2group_form(&g) {
                Ok(f) => f.to_string(),
                Err(Error::OrderCap { .. }) => "unknown (order above cap)".to_string(),
                Err(e) => return Err(e),
            }
        } else {
            "-".to_string()
        };
        rec.push("form", &form);
        let mut stdout = rec.render(opts.porcelain);
        if !opts.porcelain {
            let mut summary = format!("Blackburn: {}", yes_no(blackburn));
            if form != "-" {
                let _ = write!(summary, ", form: {form}");
            }
            if let Some(s) = r.subgroup() {
                let _ = write!(summary, ", R order {}", s.order());
            }
            let _ = writeln!(stdout, "{summary}");
        }
        Ok(Output { stdout, stderr: String::new(), code: EXIT_OK })
    })())
}

pub fn cmd_autc(source: &GroupSource, opts: &Options) -> Output {
    Output::from_result((|| {
        let g = source.load(&opts.limits())?;
        let autc_opts =
            AutcOptions { budget: opts.budget, max_order: opts.max_order.min(crate::autos::DEFAULT_AUTC_CAP) };
        let (_, rep) = enumerate_autc(&g, &autc_opts)?;
        let mut rec = Records::default();
        rec.push("source", source.label());
        rec.push("order", rep.group_order);
        rec.push("generators", format!("{:?}", rep.generating_set));
        rec.push("autc_order", rep.autc_order);
        rec.push("inn_order", rep.inn_order);
        rec.push("outc_order", rep.autc_order.checked_div(rep.inn_order).unwrap_or(0));
        rec.push("outc_trivial", yes_no(rep.outc_trivial));
        let witness = rep.witness.as_ref().map_or("none".to_string(), |w| {
            rep.generating_set.iter().map(|&s| format!("{s}->{}", w.apply(s))).collect::<Vec<_>>().join(",")
        });
        rec.push("witness", witness);
        rec.push("nodes", rep.nodes);
        let consistent = rep.inn_order > 0
            && rep.autc_order % rep.inn_order == 0
            && rep.outc_trivial == (rep.autc_order == rep.inn_order)
            && rep.witness.is_some() != rep.outc_trivial;
        rec.push("consistent", yes_no(consistent));
        let code = if consistent { EXIT_OK } else { EXIT_CLAIM_FAILED };
        Ok(Output { stdout: rec.render(opts.porcelain), stderr: String::new(), code })
    })())
}

pub fn cmd_example(p: usize, opts: &Options) -> Output {
    Output::from_result((|| {
        let rep = verify_example(p)?;
        let code = if rep.passed() { EXIT_OK } else { EXIT_CLAIM_FAILED };
        let stdout = if opts.porcelain {
            let mut rec = Records::default();
            rec.push("p", rep.p);
            rec.push("kappa", &rep.kappa);
            rec.push("kappa_matrix_order", rep.kappa_matrix_order.map_or("-".to_string(), |o| o.to_string()));
            for (name, order) in &rep.orders {
                rec.push(format!("order.{name}"), order);
            }
            for c in &rep.checks {
                rec.push(format!("check.{}", slug(&c.name)), if c.passed { "pass" } else { "fail" });
            }
            rec.push("passed", yes_no(rep.passed()));
            rec.push(
                "sigma",
                match rep.sigma {
                    Some((cp, inner)) => format!(
                        "{},{}",
                        if cp { "class-preserving" } else { "not-class-preserving" },
                        if inner { "inner" } else { "non-inner" }
                    ),
                    None => "not-built".to_string(),
                },
            );
            rec.render(true)
        } else {
            format!("{rep}\n")
        };
        Ok(Output { stdout, stderr: String::new(), code })
    })())
}

pub fn cmd_suite(level: Level, opts: &Options) -> Output {
    let results = run_suites(level);
    let failed = results.iter().filter(|r| !r.ok()).count();
    let mut out = String::new();
    for r in &results {
        if opts.porcelain {
            let _ = writeln!(out, "suite.{}={}/{}", r.name, r.passed, r.run);
            if let Some(f) = &r.failure {
                let _ = writeln!(out, "suite.{}.failure={f}", r.name);
            }
        } else {
            let status = if r.ok() { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {} ({}/{})", r.name, r.passed, r.run);
            if let Some(f) = &r.failure {
                let _ = write!(out, ": {f}");
            }
            out.push('\n');
        }
    }
    if opts.porcelain {
        let _ = writeln!(out, "level={level}\nsuites={}\nfailed={failed}", results.len());
    } else {
        let _ = writeln!(out, "level {level}: {} suites, {failed} failed", results.len());
    }
    Output { stdout: out, stderr: String::new(), code: if failed == 0 { EXIT_OK } else { EXIT_CLAIM_FAILED } }
}

pub fn cmd_catalog(opts: &Options) -> Output {
    Output::from_result((|| {
        let mut out = String::new();
        if opts.porcelain {
            let _ = writeln!(out, "catalog_version={CATALOG_VERSION}");
        } else {
            let _ = writeln!(out, "catalog version {CATALOG_VERSION}");
        }
        for &(name, expr) in MANIFEST {
            let order = catalog::expression_order(expr)?;
            if order > opts.max_order as u128 {
                continue;
            }
            if opts.porcelain {
                let _ = writeln!(out, "group={name} order={order} expr={expr}");
            } else {
                let _ = writeln!(out, "{name:<14} {order:>5}  {expr}");
            }
        }
        Ok(Output { stdout: out, stderr: String::new(), code: EXIT_OK })
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn builtin(s: &str) -> GroupSource {
        GroupSource::from_arg(s).unwrap()
    }

    #[test]
    fn classify_quaternion16() {
        let out = cmd_classify(&builtin("quaternion(16)"), &Options::default());
        assert_eq!(out.code, 0);
        assert!(out.stdout.ends_with("Blackburn: yes, form: QGroup, R order 2\n"), "{}", out.stdout);
        let porcelain = Options { porcelain: true, ..Options::default() };
        let out = cmd_classify(&builtin("Q16"), &porcelain);
        assert!(out.stdout.contains("blackburn=yes\n") && out.stdout.contains("form=QGroup\n"));
    }

    #[test]
    fn exit_codes() {
        let out = cmd_classify(&builtin("nonsense(1)"), &Options::default());
        assert_eq!(out.code, EXIT_USAGE);
        assert_eq!(cmd_example(7, &Options::default()).code, EXIT_USAGE);
        let small = Options { max_order: 10, ..Options::default() };
        assert_eq!(cmd_classify(&builtin("S4"), &small).code, EXIT_USAGE);
        assert_eq!(exit_code(&Error::ClaimFailed("x".into())), EXIT_CLAIM_FAILED);
    }

    #[test]
    fn autc_on_extension() {
        let porcelain = Options { porcelain: true, ..Options::default() };
        let out = cmd_autc(&builtin("witness_ga(3)"), &porcelain);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("outc_trivial=no\n"));
        assert!(out.stdout.contains("inn_order=243\n"));
    }

    #[test]
    fn example_report_ends_with_sigma() {
        let out = cmd_example(3, &Options::default());
        assert_eq!(out.code, 0);
        assert!(out.stdout.trim_end().ends_with("sigma: class-preserving, non-inner"));
    }

    #[test]
    fn catalog_lists_versioned_manifest() {
        let out = cmd_catalog(&Options { porcelain: true, max_order: 8, ..Options::default() });
        assert!(out.stdout.starts_with("catalog_version=1\n"));
        assert!(out.stdout.contains("group=Q8 order=8 expr=quaternion(8)\n"));
        assert!(!out.stdout.contains("order=16"));
    }
}
