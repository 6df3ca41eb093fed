//! The `mdeg` command line. [`dispatch`] runs one command against arbitrary
//! writers and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, including negative answers to a query (`NotRealizable`, `false`) |
//! | 1 | a check failed (`verify-lemma` trial failure, unconfirmed contradiction) |
//! | 2 | usage, parse or precondition error |
//! | 3 | internal inconsistency: a computation contradicted a theorem |

pub mod scenario_file;

use clap::{Parser, Subcommand, ValueEnum};
use mdeg_core::degree_estimates::{elementary_reduction_feasible, semigroup_member, su_lower_bound, DegreeBoundQuery};
use mdeg_core::h_reduction::{reduce_homogeneous, ReductionError, ReductionSummary};
use mdeg_core::lemma_verifier::decompose::DecompositionSummary;
use mdeg_core::lemma_verifier::{
    self, alternative_readings, check_poisson2_collapse, decompose_top_pair, verify_record, Branch, IdentityReport,
    VerifyError,
};
use mdeg_core::mdeg_criteria::{classify_dim2, classify_dim3, MdegTriple};
use mdeg_core::poisson::bracket;
use mdeg_core::Polynomial;
use scenario_file::Scenario;
use serde::Serialize;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(name = "mdeg", version, about = "Multidegrees of tame automorphisms and the (4,5,6) lemma chain")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Trials per identity for verification commands.
    #[arg(long, global = true, default_value_t = 100)]
    pub trials: u64,
    /// Master seed for randomized commands.
    #[arg(long, global = true, default_value_t = lemma_verifier::DEFAULT_SEED)]
    pub seed: u64,
    /// Number of variables for polynomial arguments (x, y, z when at most 3, else x1..xN).
    #[arg(long = "vars", global = true, default_value_t = 3)]
    pub vars: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ContradictionKind {
    /// Squarefree branch.
    Sqf,
    /// Power branch, case 1 (h and Fb1 span x and z).
    Pwr1,
    /// Power branch, case 2 (Fb1 = f h).
    Pwr2,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a multidegree.
    Classify {
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 3)]
        dim: u32,
    },
    /// Poisson bracket of two polynomials.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Solve [H, P] = 0 for homogeneous P.
    Hreduce {
        #[arg(long = "H", allow_hyphen_values = true)]
        h: String,
        #[arg(long = "P", allow_hyphen_values = true)]
        p: String,
    },
    /// The Shestakov-Umirbaev lower bound.
    Subound { deg_f: u32, deg_g: u32, deg_bracket: u32, q: u32, r: u32 },
    /// Is n = s a + t b with s, t >= 0?
    Semigroup { a: u32, b: u32, n: u32 },
    /// Can an elementary reduction reach degree TARGET through g(f1, f2)?
    Feasible { target: u32, deg_f: u32, deg_g: u32, min_bracket: u32 },
    /// Factor a commuting top pair (F4, G6).
    Decompose {
        #[arg(long = "F4", allow_hyphen_values = true)]
        f4: String,
        #[arg(long = "G6", allow_hyphen_values = true)]
        g6: String,
    },
    /// Check the two-variable collapse for f = x_i + ..., g = x_j + ....
    Collapse {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Verify one catalog identity on seeded random inputs.
    VerifyLemma { id: String },
    /// Verify every catalog and supplementary identity.
    VerifyAll {
        /// Also check the alternative coefficient readings (informational).
        #[arg(long)]
        readings: bool,
    },
    /// Run a terminal contradiction checker.
    Contradiction {
        kind: ContradictionKind,
        /// Number of random level-5 scenarios (default 1).
        #[arg(long)]
        sweep: Option<u64>,
    },
    /// Build (F, G) from a scenario file and report deg[F, G].
    Scenario { file: std::path::PathBuf },
}

/// A failed command: exit code plus message.
struct Failure(i32, String);

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Inconsistent(_) | VerifyError::Reduction(ReductionError::Inconsistent(_)) => {
                Failure(3, format!("{e}\nplease report this: a theorem-contradicting computation"))
            }
            other => Failure(2, other.to_string()),
        }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        VerifyError::from(e).into()
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure(2, e.to_string())
}

struct Out<'a> {
    json: bool,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
        let s = if self.json { serde_json::to_string_pretty(value).map_err(usage)? } else { text() };
        writeln!(self.w, "{s}").map_err(usage)
    }
}

fn parse_poly(s: &str, nvars: usize) -> Result<Polynomial, Failure> {
    Polynomial::parse(s, nvars).map_err(usage)
}

fn report_text(r: &IdentityReport) -> String {
    let status = if r.ok() { "PASS" } else { "FAIL" };
    let mut s = format!("{status} {} ({}/{} trials, seed {}): {}", r.id, r.passed, r.trials, r.seed, r.summary);
    if let Some(f) = r.failures.first() {
        s.push_str(&format!("\n  first failure at trial {}: lhs - rhs = {}", f.trial, f.difference));
        for (k, v) in &f.inputs {
            s.push_str(&format!("\n    {k} = {v}"));
        }
    }
    s
}

#[derive(Serialize)]
struct BracketOutput {
    components: Vec<(String, String)>,
    degree: String,
}

#[derive(Serialize)]
struct ScenarioOutput {
    level: u32,
    f: String,
    g: String,
    bracket_degree: String,
    below_level: bool,
}

fn run(cli: &Cli, out: &mut Out) -> Result<i32, Failure> {
    let n = cli.vars;
    if n == 0 {
        return Err(Failure(2, "--vars must be positive".into()));
    }
    match &cli.command {
        Command::Classify { degrees, dim } => {
            let c = match (dim, degrees.as_slice()) {
                (2, [a, b]) if *a > 0 && *b > 0 => classify_dim2(*a, *b),
                (3, [a, b, c]) if *a > 0 && *b > 0 && *c > 0 => classify_dim3(MdegTriple::new(*a, *b, *c)),
                _ => return Err(Failure(2, format!("classify expects {dim} positive degrees (dimension 2 or 3)"))),
            };
            out.emit(&c, || c.to_string())?;
        }
        Command::Bracket { f, g } => {
            let b = bracket(&parse_poly(f, n)?, &parse_poly(g, n)?).map_err(usage)?;
            let o = BracketOutput {
                components: b
                    .components()
                    .map(|((i, j), p)| {
                        (format!("[{},{}]", Polynomial::var_name(n, *i), Polynomial::var_name(n, *j)), p.to_string())
                    })
                    .collect(),
                degree: b.degree().to_string(),
            };
            out.emit(&o, || {
                let mut s: Vec<String> = o.components.iter().map(|(k, v)| format!("{k}: {v}")).collect();
                if s.is_empty() {
                    s.push("0".into());
                }
                s.push(format!("deg = {}", o.degree));
                s.join("\n")
            })?;
        }
        Command::Hreduce { h, p } => {
            let r = reduce_homogeneous(&parse_poly(h, n)?, &parse_poly(p, n)?).map_err(|e| match e {
                ReductionError::Inconsistent(_) => Failure::from(e),
                other => usage(other),
            })?;
            let s = ReductionSummary::from(&r);
            out.emit(&s, || match &s {
                ReductionSummary::MonomialInH { a, k } => format!("MonomialInH a = {a} k = {k}"),
                other => format!("{other:?}"),
            })?;
        }
        Command::Subound { deg_f, deg_g, deg_bracket, q, r } => {
            let query = DegreeBoundQuery { deg_f: *deg_f, deg_g: *deg_g, deg_bracket: *deg_bracket, q: *q, r: *r };
            let v = su_lower_bound(&query).map_err(usage)?;
            out.emit(&v, || v.to_string())?;
        }
        Command::Semigroup { a, b, n: target } => {
            if *a == 0 || *b == 0 {
                return Err(Failure(2, "generators must be positive".into()));
            }
            let v = semigroup_member(*a, *b, *target);
            out.emit(&v, || v.to_string())?;
        }
        Command::Feasible { target, deg_f, deg_g, min_bracket } => {
            let v = elementary_reduction_feasible(*target, *deg_f, *deg_g, *min_bracket).map_err(usage)?;
            out.emit(&v, || v.explain().join("\n"))?;
        }
        Command::Decompose { f4, g6 } => {
            let d = decompose_top_pair(&parse_poly(f4, n)?, &parse_poly(g6, n)?)?;
            let s = DecompositionSummary::from(&d);
            out.emit(&s, || match &s {
                DecompositionSummary::Squarefree { h, alpha } => format!("Squarefree H = {h} alpha = {alpha}"),
                DecompositionSummary::Power { h, alpha } => format!("Power h = {h} alpha = {alpha}"),
                DecompositionSummary::NotDependent => "NotDependent".into(),
                DecompositionSummary::NeedsFieldExtension { scale, root, k } => {
                    format!("NeedsFieldExtension F4 = ({scale}) * ({root})^{k}")
                }
            })?;
        }
        Command::Collapse { f, g } => {
            let r = check_poisson2_collapse(&parse_poly(f, n)?, &parse_poly(g, n)?)?;
            out.emit(&r, || format!("{r:?}"))?;
            if matches!(r, lemma_verifier::CollapseReport::Inconsistent { .. }) {
                return Ok(3);
            }
        }
        Command::VerifyLemma { id } => {
            let r = lemma_verifier::verify_identity(id, cli.trials, cli.seed)?;
            out.emit(&r, || report_text(&r))?;
            return Ok(if r.ok() { 0 } else { 1 });
        }
        Command::VerifyAll { readings } => {
            let reports = lemma_verifier::verify_all(cli.trials, cli.seed)?;
            let alt = if *readings {
                alternative_readings()
                    .iter()
                    .map(|r| verify_record(r, cli.trials, cli.seed))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                Vec::new()
            };
            let ok = reports.iter().all(IdentityReport::ok);
            #[derive(Serialize)]
            struct All<'a> {
                reports: &'a [IdentityReport],
                alternative_readings: &'a [IdentityReport],
                all_passed: bool,
            }
            out.emit(&All { reports: &reports, alternative_readings: &alt, all_passed: ok }, || {
                let mut lines: Vec<String> = reports.iter().map(report_text).collect();
                if !alt.is_empty() {
                    lines.push("alternative readings (informational):".into());
                    lines.extend(
                        alt.iter()
                            .map(|r| format!("  {} {}: {}", if r.ok() { "holds" } else { "fails" }, r.id, r.summary)),
                    );
                }
                lines.push(format!(
                    "{} of {} identities verified",
                    reports.iter().filter(|r| r.ok()).count(),
                    reports.len()
                ));
                lines.join("\n")
            })?;
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Contradiction { kind, sweep } => {
            let count = sweep.unwrap_or(1);
            if count == 0 {
                return Err(Failure(2, "--sweep must be positive".into()));
            }
            let reports = match kind {
                ContradictionKind::Sqf => lemma_verifier::sweep_squarefree(count, cli.seed)?,
                ContradictionKind::Pwr1 => lemma_verifier::sweep_power(Branch::Span, count, cli.seed)?,
                ContradictionKind::Pwr2 => lemma_verifier::sweep_power(Branch::Proportional, count, cli.seed)?,
            };
            let confirmed = reports.iter().filter(|r| r.confirmed).count();
            out.emit(&reports, || {
                let mut lines = Vec::new();
                if reports.len() == 1 {
                    for c in &reports[0].checks {
                        lines.push(format!("  [{}] {}: {}", if c.holds { "ok" } else { "FAILED" }, c.name, c.detail));
                    }
                }
                lines.push(format!(
                    "{}: contradiction confirmed in {confirmed} of {} scenarios",
                    reports[0].kind,
                    reports.len()
                ));
                lines.join("\n")
            })?;
            return Ok(if confirmed == reports.len() { 0 } else { 1 });
        }
        Command::Scenario { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
            let sc = scenario_file::parse(&text).map_err(usage)?;
            let ((f, g), level) = match &sc {
                Scenario::Squarefree(s) => (s.build()?, s.level),
                Scenario::Power(s) => (s.build()?, s.level),
            };
            let d = bracket(&f, &g).map_err(usage)?.degree();
            let o = ScenarioOutput {
                level,
                f: f.to_string(),
                g: g.to_string(),
                bracket_degree: d.to_string(),
                below_level: d.lt_int(level),
            };
            out.emit(&o, || format!("F = {}\nG = {}\ndeg[F,G] = {} (level {level})", o.f, o.g, o.bracket_degree))?;
            if !o.below_level {
                return Ok(3);
            }
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command.
pub fn dispatch<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut o = Out { json: cli.json, w: out };
    match run(&cli, &mut o) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
