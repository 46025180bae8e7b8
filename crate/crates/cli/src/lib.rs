//! Library side of the `dualroots` binary, so commands can be driven
//! in-process by tests.

pub mod args;
pub mod grid;
pub mod render;

use std::ffi::OsString;

use clap::Parser;
use rayon::prelude::*;
use serde::Serialize;

use dualroots_core::families::{charlier, gegenbauer_tilde, FamilyId, FamilyKind, MAX_DEFAULT_N};
use dualroots_core::polycore::rational::{self, parse_rational};
use dualroots_core::rootlab::{isolate, nonreal_scan, EnclosureView, ScanPoint};
use dualroots_core::trajectory::{self, TraceConfig};
use dualroots_core::veritas::suite::{full_suite, run_theorem, TheoremRequest};
use dualroots_core::veritas::{ids, Report, Verdict, SCHEMA_VERSION};
use dualroots_core::{BiPoly, Error, Rational, Result, UniPoly, Var};

use args::{Cli, Command, FamilyArgs, Format, GenArgs, RootsArgs, ScanArgs, TraceArgs, VerifyArgs};
use grid::{parse_grid, parse_range};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Result of one invocation, with output fully buffered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Execution {
    fn config_error(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_CONFIG,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn execute<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Execution {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => Execution {
                    code: EXIT_CONFIG,
                    stdout: String::new(),
                    stderr: e.to_string(),
                },
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => return Execution::config_error(e),
    };
    let outcome = match pool.install(|| run(&cli)) {
        Ok(o) => o,
        Err(e) => return Execution::config_error(e),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &outcome.body) {
            Ok(()) => Execution {
                code: outcome.code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Execution::config_error(format!("cannot write {}: {e}", path.display())),
        },
        None => Execution {
            code: outcome.code,
            stdout: outcome.body,
            stderr: String::new(),
        },
    }
}

pub struct Outcome {
    pub code: i32,
    pub body: String,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let default = match cli.command {
        Command::Trace(_) => Format::Csv,
        _ => Format::Json,
    };
    let format = cli.format.unwrap_or(default);
    match &cli.command {
        Command::Gen(a) => cmd_gen(a, format, cli.allow_large),
        Command::Roots(a) => cmd_roots(a, format, cli.allow_large),
        Command::Verify(a) => cmd_verify(a, format, cli.allow_large),
        Command::Scan(a) => cmd_scan(a, format, cli.allow_large),
        Command::Trace(a) => cmd_trace(a, format, cli.allow_large),
    }
}

fn check_degree(n: u32, allow_large: bool) -> Result<()> {
    if n > MAX_DEFAULT_N && !allow_large {
        return Err(Error::Domain(format!(
            "n = {n} exceeds {MAX_DEFAULT_N}; pass --allow-large to proceed"
        )));
    }
    Ok(())
}

fn rat(s: &Option<String>) -> Result<Option<Rational>> {
    s.as_deref().map(parse_rational).transpose()
}

fn ok(body: String) -> Result<Outcome> {
    Ok(Outcome { code: EXIT_PASS, body })
}

#[derive(Serialize)]
struct Term {
    x: u32,
    z: u32,
    coeff: String,
}

#[derive(Serialize)]
struct Specialization {
    var: String,
    value: String,
}

#[derive(Serialize)]
struct GenOutput {
    schema: u32,
    family: FamilyKind,
    n: u32,
    k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    x0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    specialized: Option<Specialization>,
    /// Constant `z`-roots divided out (reduced family only).
    #[serde(skip_serializing_if = "Option::is_none")]
    constant_roots: Option<Vec<String>>,
    text: String,
    terms: Vec<Term>,
}

enum Poly {
    Bi(BiPoly),
    Uni(UniPoly),
}

impl Poly {
    fn text(&self) -> String {
        match self {
            Poly::Bi(p) => p.to_text(),
            Poly::Uni(p) => p.to_text(),
        }
    }

    fn terms(&self) -> Vec<Term> {
        match self {
            Poly::Bi(p) => p
                .terms()
                .map(|(&(x, z), c)| Term {
                    x,
                    z,
                    coeff: rational::to_exact(c),
                })
                .collect(),
            Poly::Uni(p) => p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != Rational::from_integer(0.into()))
                .map(|(i, c)| {
                    let (x, z) = match p.var() {
                        Var::X => (i as u32, 0),
                        Var::Z => (0, i as u32),
                    };
                    Term {
                        x,
                        z,
                        coeff: rational::to_exact(c),
                    }
                })
                .collect(),
        }
    }
}

/// The requested polynomial: `∂_z^k` of the family member, specialized if
/// asked. Charlier members are univariate in `z` from the start.
fn build(
    f: &FamilyArgs,
    at_x: &Option<String>,
    at_z: &Option<String>,
    allow_large: bool,
) -> Result<(FamilyKind, Poly, Option<Specialization>)> {
    let kind: FamilyKind = f.family.parse()?;
    check_degree(f.n, allow_large)?;
    let (at_x, at_z) = (rat(at_x)?, rat(at_z)?);
    if kind == FamilyKind::Charlier {
        let x0 = rat(&f.x0)?
            .ok_or_else(|| Error::Domain("charlier needs --x0".into()))?;
        if at_x.is_some() || at_z.is_some() {
            return Err(Error::Domain(
                "charlier polynomials are already univariate in z".into(),
            ));
        }
        let p = charlier(f.n, &x0)?.nth_derivative(f.k as usize);
        return Ok((kind, Poly::Uni(p), None));
    }
    if f.x0.is_some() {
        return Err(Error::Domain("--x0 applies to charlier only; use --at-x".into()));
    }
    let bi = FamilyId::new(kind, f.n).poly()?.differentiate(Var::Z, f.k);
    Ok(match (at_x, at_z) {
        (Some(x), _) => (
            kind,
            Poly::Uni(bi.specialize(Var::X, &x)),
            Some(Specialization {
                var: "x".into(),
                value: rational::to_exact(&x),
            }),
        ),
        (_, Some(z)) => (
            kind,
            Poly::Uni(bi.specialize(Var::Z, &z)),
            Some(Specialization {
                var: "z".into(),
                value: rational::to_exact(&z),
            }),
        ),
        _ => (kind, Poly::Bi(bi), None),
    })
}

fn cmd_gen(a: &GenArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    let (kind, poly, specialized) = build(&a.family, &a.at_x, &a.at_z, allow_large)?;
    let constant_roots = if kind == FamilyKind::GegenbauerTilde {
        Some(
            gegenbauer_tilde(a.family.n)?
                .constant_roots
                .iter()
                .map(rational::to_exact)
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let out = GenOutput {
        schema: SCHEMA_VERSION,
        family: kind,
        n: a.family.n,
        k: a.family.k,
        x0: a.family.x0.clone(),
        specialized,
        constant_roots,
        text: poly.text(),
        terms: poly.terms(),
    };
    ok(match format {
        Format::Json => render::json(&out),
        Format::Csv => render::csv(
            &["x_power", "z_power", "coeff"],
            out.terms
                .iter()
                .map(|t| vec![t.x.to_string(), t.z.to_string(), t.coeff.clone()]),
        ),
        Format::Text => {
            let mut s = format!("{} n={} k={}\n", kind, out.n, out.k);
            if let Some(c) = &out.constant_roots {
                s.push_str(&format!("constant roots: [{}]\n", c.join(", ")));
            }
            s.push_str(&out.text);
            s.push('\n');
            s
        }
    })
}

#[derive(Serialize)]
struct RootView {
    index: usize,
    multiplicity: usize,
    enclosure: EnclosureView,
}

#[derive(Serialize)]
struct RootsOutput {
    schema: u32,
    family: FamilyKind,
    n: u32,
    k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    specialized: Option<Specialization>,
    poly: String,
    degree: usize,
    distinct_real: usize,
    real_with_multiplicity: usize,
    nonreal_deficit: usize,
    all_simple: bool,
    roots: Vec<RootView>,
}

fn cmd_roots(a: &RootsArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    let (kind, poly, specialized) = build(&a.family, &a.at_x, &a.at_z, allow_large)?;
    let Poly::Uni(p) = poly else {
        return Err(Error::Domain("roots needs --at-x or --at-z".into()));
    };
    let tol = parse_rational(&a.tol)?;
    if tol <= Rational::from_integer(0.into()) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let iso = isolate(&p)?.refined(&tol);
    let out = RootsOutput {
        schema: SCHEMA_VERSION,
        family: kind,
        n: a.family.n,
        k: a.family.k,
        specialized,
        poly: p.to_text(),
        degree: iso.degree,
        distinct_real: iso.real_count,
        real_with_multiplicity: iso.real_with_multiplicity(),
        nonreal_deficit: iso.nonreal_deficit,
        all_simple: iso.all_simple(),
        roots: iso
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| RootView {
                index: i + 1,
                multiplicity: r.multiplicity,
                enclosure: r.enclosure().view(),
            })
            .collect(),
    };
    ok(match format {
        Format::Json => render::json(&out),
        Format::Csv => render::csv(
            &["index", "multiplicity", "mid", "width", "lo", "hi"],
            out.roots.iter().map(|r| {
                vec![
                    r.index.to_string(),
                    r.multiplicity.to_string(),
                    r.enclosure.mid.clone(),
                    r.enclosure.width.clone(),
                    r.enclosure.lo.clone(),
                    r.enclosure.hi.clone(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!(
                "{}\ndegree {}, {} distinct real, nonreal deficit {}\n",
                out.poly, out.degree, out.distinct_real, out.nonreal_deficit
            );
            for r in &out.roots {
                s.push_str(&format!(
                    "  #{} {} ± {} (multiplicity {})\n",
                    r.index, r.enclosure.mid, r.enclosure.width, r.multiplicity
                ));
            }
            s
        }
    })
}

/// Whether `--grid` addresses the `x` grid (otherwise the `z` grid).
fn grid_is_x(theorem: &str) -> bool {
    matches!(
        theorem,
        ids::LAGUERRE_Z
            | ids::GEGENBAUER_Z
            | ids::GEGENBAUER_Z_MODIFIED
            | ids::DUAL_INTERLACING
            | ids::DUAL_INTERLACING_MODIFIED
            | ids::CHARLIER_ORTHOGONALITY
    )
}

pub fn theorem_request(a: &VerifyArgs, theorem: &str) -> Result<TheoremRequest> {
    let mut req = TheoremRequest::defaults(theorem, a.max_n)?;
    if let Some(n) = &a.n {
        req.ns = parse_range(n)?;
    }
    if let Some(m) = &a.m {
        req.ms = parse_range(m)?;
    }
    if let Some(z) = &a.z {
        req.zs = parse_grid(z)?;
    }
    if let Some(x) = &a.x0 {
        req.xs = parse_grid(x)?;
    }
    if let Some(g) = &a.grid {
        let g = parse_grid(g)?;
        if grid_is_x(theorem) {
            req.xs = g;
        } else {
            req.zs = g;
        }
    }
    if let Some(f) = &a.families {
        req.families = f
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_>>()?;
    }
    if let Some(t) = &a.tol {
        req.tol = parse_rational(t)?;
        if req.tol <= Rational::from_integer(0.into()) {
            return Err(Error::Domain("tolerance must be positive".into()));
        }
    }
    Ok(req)
}

fn cmd_verify(a: &VerifyArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    let report: Report = match (&a.suite, &a.theorem) {
        (Some(_), _) => {
            check_degree(a.max_n, allow_large)?;
            full_suite(a.max_n)?
        }
        (None, Some(id)) => {
            let req = theorem_request(a, id)?;
            for &n in req.ns.iter().chain(&req.ms) {
                check_degree(n, allow_large)?;
            }
            run_theorem(&req)?
        }
        (None, None) => return Err(Error::Domain("need --theorem or --suite".into())),
    };
    let body = match format {
        Format::Json => render::json(&report),
        Format::Csv => render::report_csv(&report),
        Format::Text => render::report_text(&report),
    };
    Ok(Outcome {
        code: exit_code(report.verdict),
        body,
    })
}

#[derive(Serialize)]
struct FirstDeficit {
    n: u32,
    x: String,
    nonreal_deficit: usize,
}

#[derive(Serialize)]
struct ScanOutput {
    schema: u32,
    family: FamilyKind,
    grid: Vec<String>,
    points: Vec<ScanPoint>,
    /// Smallest `n`, then smallest `x`, with a positive deficit.
    first_positive_deficit: Option<FirstDeficit>,
}

fn cmd_scan(a: &ScanArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    let kind: FamilyKind = a.family.parse()?;
    let ns = parse_range(&a.n)?;
    for &n in &ns {
        check_degree(n, allow_large)?;
    }
    let xs = parse_grid(&a.grid)?;
    let points: Vec<ScanPoint> = ns
        .par_iter()
        .map(|&n| nonreal_scan(FamilyId::new(kind, n), &xs))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let first = points
        .iter()
        .filter(|p| p.nonreal_deficit > 0)
        .min_by(|p, q| (p.n, &p.x).cmp(&(q.n, &q.x)))
        .map(|p| FirstDeficit {
            n: p.n,
            x: rational::to_exact(&p.x),
            nonreal_deficit: p.nonreal_deficit,
        });
    let out = ScanOutput {
        schema: SCHEMA_VERSION,
        family: kind,
        grid: xs.iter().map(rational::to_exact).collect(),
        points,
        first_positive_deficit: first,
    };
    let summary = match &out.first_positive_deficit {
        Some(f) => format!(
            "first positive deficit: n={}, x={} (deficit {})",
            f.n, f.x, f.nonreal_deficit
        ),
        None => "none found at this scale".to_string(),
    };
    ok(match format {
        Format::Json => render::json(&out),
        Format::Csv => render::csv(
            &["family", "n", "x", "degree", "distinct_real", "nonreal_deficit", "all_simple", "error"],
            out.points.iter().map(|p| {
                vec![
                    kind.name().to_string(),
                    p.n.to_string(),
                    rational::to_exact(&p.x),
                    p.degree.map_or(String::new(), |d| d.to_string()),
                    p.distinct_real.to_string(),
                    p.nonreal_deficit.to_string(),
                    p.all_simple.to_string(),
                    p.error.clone().unwrap_or_default(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = String::from("   n  x          degree  real  deficit\n");
            for p in &out.points {
                s.push_str(&format!(
                    "{:>4}  {:<10} {:>6}  {:>4}  {:>7}{}\n",
                    p.n,
                    rational::to_exact(&p.x),
                    p.degree.map_or("-".into(), |d| d.to_string()),
                    p.distinct_real,
                    p.nonreal_deficit,
                    p.error.as_ref().map_or(String::new(), |e| format!("  ({e})"))
                ));
            }
            s.push_str(&summary);
            s.push('\n');
            s
        }
    })
}

#[derive(Serialize)]
struct TraceRow {
    x: String,
    gamma: Vec<String>,
    residual: Vec<f64>,
    step: f64,
}

#[derive(Serialize)]
struct TraceOutput {
    schema: u32,
    n: u32,
    from: String,
    to: String,
    steps: u32,
    samples: Vec<TraceRow>,
}

fn cmd_trace(a: &TraceArgs, format: Format, allow_large: bool) -> Result<Outcome> {
    check_degree(a.n, allow_large)?;
    let cfg = TraceConfig {
        x_start: parse_rational(&a.from)?,
        ..TraceConfig::new(parse_rational(&a.to)?, a.steps)
    };
    let samples = trajectory::trace(a.n, &cfg)?;
    ok(match format {
        Format::Csv => render::csv(&trajectory::CSV_HEADER, trajectory::csv_rows(&samples).into_iter().map(Vec::from)),
        Format::Json => render::json(&TraceOutput {
            schema: SCHEMA_VERSION,
            n: a.n,
            from: rational::to_exact(&cfg.x_start),
            to: rational::to_exact(&cfg.x_end),
            steps: a.steps,
            samples: samples
                .iter()
                .map(|s| TraceRow {
                    x: rational::to_exact(&s.x),
                    gamma: s.gamma.iter().map(|g| rational::to_decimal(g, 30)).collect(),
                    residual: s.residual.clone(),
                    step: s.step,
                })
                .collect(),
        }),
        Format::Text => trajectory::csv_rows(&samples)
            .iter()
            .map(|r| format!("{:>24} {:>3} {:>32} {:>10} {:>13}\n", r[0], r[1], r[2], r[3], r[4]))
            .collect(),
    })
}
