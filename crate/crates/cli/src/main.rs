use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use citaylor::export::{
    dot_graph, latex_resolution, latex_taylor, text_resolution, text_taylor, Document,
};
use citaylor::homotopy::{verify_homotopy_system, FixedAssignments};
use citaylor::quotient::{check_exactness, check_exactness_native, ExactnessReport, GroebnerCaps};
use citaylor::shamash::Minimality;
use citaylor::{
    betti_bound, CompleteIntersectionData, Error, Field, Fp, HomotopySystem, LiftStrategy,
    MonomialIdeal, Parity, PolyRing, Rational, Report, ShamashResolution, TaylorComplex,
};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Largest accepted `--max-step`.
const MAX_STEP_LIMIT: usize = 64;

#[derive(Parser)]
#[command(
    name = "citaylor",
    version,
    about = "Taylor resolutions over complete intersections via higher homotopies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Taylor resolution of Q/I.
    Taylor(TaylorArgs),
    /// Build the resolution of R/I over R = Q/(ci) up to --max-step.
    Resolve(ResolveArgs),
    /// Check every identity the construction relies on.
    Verify(VerifyArgs),
    /// Tabulate upper bounds for the Betti numbers.
    Betti(BettiArgs),
    /// Draw the Taylor and homotopy maps as a directed graph.
    ExportDot(DotArgs),
    /// Compute homology of the resolution in a window of internal degrees.
    CheckExactness(ExactnessArgs),
}

#[derive(Args)]
struct RingArgs {
    /// Comma-separated variable names, largest first.
    #[arg(long)]
    vars: String,
    /// Characteristic: 0 or one of 2, 3, 5, 7, 11, 13, 101, 32003, 65521, 2147483647.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Comma-separated monomial generators of I.
    #[arg(long)]
    ideal: String,
}

#[derive(Args)]
struct CiArgs {
    #[command(flatten)]
    ring: RingArgs,
    /// Comma-separated homogeneous elements of I forming a regular sequence.
    #[arg(long)]
    ci: String,
    /// How to express each element in the generators: first, average or file:PATH.
    #[arg(long, default_value = "first")]
    lift: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tex,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TaylorArgs {
    #[command(flatten)]
    ring: RingArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ResolveArgs {
    #[command(flatten)]
    ci: CiArgs,
    /// Highest homological degree N to build.
    #[arg(long)]
    max_step: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    ci: CiArgs,
    #[arg(long, default_value_t = 6)]
    max_step: usize,
    /// Also check exactness at F_1..F_{N-1} in internal degrees up to this bound.
    #[arg(long)]
    max_degree: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ExactnessArgs {
    #[command(flatten)]
    ci: CiArgs,
    #[arg(long, default_value_t = 5)]
    max_step: usize,
    #[arg(long, default_value_t = 10)]
    max_degree: u32,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DotArgs {
    #[command(flatten)]
    ci: CiArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    /// Number r of generators of I.
    #[arg(long)]
    num_gens: usize,
    /// Codimension c.
    #[arg(long)]
    codim: usize,
    /// Tabulate beta_{2m} and beta_{2m+1} for m = 0..=max_m.
    #[arg(long, default_value_t = 4)]
    max_m: usize,
    #[command(flatten)]
    output: OutputArgs,
}

/// A failure that ends the process with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn from_error(flag: &str, e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded(_)) {
            EXIT_CAP
        } else {
            EXIT_INPUT
        };
        let message = if flag.is_empty() {
            e.to_string()
        } else {
            format!("{flag}: {e}")
        };
        Failure { code, message }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Output text plus whether every check passed.
struct Outcome {
    body: String,
    passed: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, passed: true }
    }
}

fn split_list(src: &str) -> Vec<String> {
    src.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

fn build_ring<F: Field>(args: &RingArgs) -> CliResult<PolyRing<F>> {
    PolyRing::new(&split_list(&args.vars)).map_err(|e| Failure::from_error("--vars", e))
}

fn build_ideal<F: Field>(ring: &PolyRing<F>, args: &RingArgs) -> CliResult<MonomialIdeal> {
    let ideal = MonomialIdeal::parse(ring, &split_list(&args.ideal))
        .map_err(|e| Failure::from_error("--ideal", e))?;
    for w in ideal.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(ideal)
}

fn parse_lift<F: Field>(ring: &PolyRing<F>, src: &str) -> CliResult<LiftStrategy> {
    match src {
        "first" => Ok(LiftStrategy::First),
        "average" => Ok(LiftStrategy::Average),
        other => match other.strip_prefix("file:") {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::input(format!("--lift: cannot read {path}: {e}")))?;
                FixedAssignments::from_json(ring, &text)
                    .map(LiftStrategy::Fixed)
                    .map_err(|e| Failure::from_error("--lift", e))
            }
            None => Err(Failure::input(format!(
                "--lift: expected first, average or file:PATH, got `{other}`"
            ))),
        },
    }
}

fn build_system<F: Field>(args: &CiArgs) -> CliResult<HomotopySystem<F>> {
    let ring = build_ring::<F>(&args.ring)?;
    let ideal = build_ideal(&ring, &args.ring)?;
    let sequence = split_list(&args.ci)
        .iter()
        .map(|s| ring.parse(s))
        .collect::<citaylor::Result<Vec<_>>>()
        .map_err(|e| Failure::from_error("--ci", e))?;
    let strategy = parse_lift(&ring, &args.lift)?;
    let ci = CompleteIntersectionData::new(ring, ideal, sequence)
        .map_err(|e| Failure::from_error("--ci", e))?;
    HomotopySystem::build(ci, &strategy).map_err(|e| {
        let flag = if matches!(e, Error::NotInIdeal { .. }) { "--ci" } else { "--lift" };
        Failure::from_error(flag, e)
    })
}

fn check_max_step(n: usize) -> CliResult<()> {
    if n > MAX_STEP_LIMIT {
        return Err(Failure::input(format!(
            "--max-step: {n} exceeds the limit {MAX_STEP_LIMIT}"
        )));
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn periodicity_value<F: Field>(res: &ShamashResolution<F>) -> Value {
    match res.tail_periodicity() {
        Ok(Some(n)) => json!({ "start": n }),
        Ok(None) => json!({ "start": null }),
        Err(_) => json!("not applicable"),
    }
}

fn minimality_text(m: &Minimality) -> String {
    if m.is_minimal() {
        return "minimality: minimal\n".into();
    }
    let mut out = format!("minimality: nonminimal ({} witnesses)\n", m.witnesses.len());
    for w in &m.witnesses {
        match w {
            citaylor::shamash::MinimalityWitness::TaylorUnit { k, row, col, value } => {
                writeln!(out, "  unit {value} in tau_{k} at row {row}, column {col}").unwrap()
            }
            citaylor::shamash::MinimalityWitness::LiftUnit {
                element,
                generator,
                constant,
            } => writeln!(
                out,
                "  lift coefficient f_{element},{generator} has constant term {constant}"
            )
            .unwrap(),
        }
    }
    out
}

fn periodicity_text<F: Field>(res: &ShamashResolution<F>) -> String {
    match res.tail_periodicity() {
        Ok(Some(n)) => format!("periodic tail: phi_(n+2) = phi_n for n >= {n}\n"),
        Ok(None) => format!("periodic tail: none found within N = {}\n", res.max_step()),
        Err(_) => "periodic tail: not applicable (codimension > 1)\n".into(),
    }
}

fn cmd_taylor<F: Field>(args: &TaylorArgs) -> CliResult<Outcome> {
    let ring = build_ring::<F>(&args.ring)?;
    let ideal = build_ideal(&ring, &args.ring)?;
    let taylor = TaylorComplex::<F>::new(ideal);
    let report = taylor.verify();
    let body = match args.output.format {
        Format::Text => text_taylor(&ring, &taylor),
        Format::Tex => latex_taylor(&ring, &taylor),
        Format::Json => {
            let mut reports = Map::new();
            reports.insert("taylor".into(), to_value(&report));
            Document::from_taylor(&ring, &taylor, reports).to_json() + "\n"
        }
        Format::Dot => {
            return Err(Failure::input(
                "--format: dot needs --ci; use the export-dot command",
            ))
        }
    };
    Ok(Outcome {
        body,
        passed: report.passed(),
    })
}

fn cmd_resolve<F: Field>(args: &ResolveArgs) -> CliResult<Outcome> {
    check_max_step(args.max_step)?;
    let system = build_system::<F>(&args.ci)?;
    let res = ShamashResolution::new(system, args.max_step);
    let body = match args.output.format {
        Format::Text => {
            let mut out = text_resolution(&res);
            out.push('\n');
            out.push_str(&minimality_text(res.minimality()));
            out.push_str(&periodicity_text(&res));
            out
        }
        Format::Tex => latex_resolution(&res),
        Format::Dot => dot_graph(res.system()),
        Format::Json => {
            let mut reports = Map::new();
            reports.insert("minimality".into(), to_value(res.minimality()));
            reports.insert("periodicity".into(), periodicity_value(&res));
            reports.insert("phi_squared".into(), to_value(&res.phi_squared_check()));
            Document::from_resolution(&res, reports).to_json() + "\n"
        }
    };
    Ok(Outcome::ok(body))
}

fn exactness_reports<F: Field>(
    res: &ShamashResolution<F>,
    max_degree: u32,
) -> CliResult<Vec<ExactnessReport>> {
    (1..res.max_step())
        .map(|n| {
            let caps = GroebnerCaps::default();
            let report = if F::characteristic() == 0 {
                // rational data is reduced into GF(32003) for speed
                check_exactness::<citaylor::Gf32003>(res, n, max_degree, caps)
            } else {
                check_exactness_native(res, n, max_degree, caps)
            };
            report.map_err(|e| Failure::from_error("", e))
        })
        .collect()
}

fn render_reports(reports: &[Report], format: Format) -> CliResult<String> {
    let passed = reports.iter().all(Report::passed);
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                writeln!(out, "{r}").unwrap();
            }
            out.push_str(if passed {
                "all checks passed\n"
            } else {
                "verification failed\n"
            });
            Ok(out)
        }
        Format::Json => Ok(serde_json::to_string_pretty(&json!({
            "passed": passed,
            "reports": reports,
        }))
        .expect("serializable")
            + "\n"),
        _ => Err(Failure::input("--format: reports are available as text or json")),
    }
}

fn cmd_verify<F: Field>(args: &VerifyArgs) -> CliResult<Outcome> {
    check_max_step(args.max_step)?;
    let system = build_system::<F>(&args.ci)?;
    let v = verify_homotopy_system(&system);
    let mut reports: Vec<Report> = v.reports().into_iter().cloned().collect();
    reports.push(system.homogeneity_report());
    let res = ShamashResolution::new(system, args.max_step);
    reports.push(res.phi_squared_check());
    reports.push(res.homogeneity_report());
    if let Some(d) = args.max_degree {
        reports.extend(exactness_reports(&res, d)?.into_iter().map(|e| e.report));
    }
    let passed = reports.iter().all(Report::passed);
    Ok(Outcome {
        body: render_reports(&reports, args.output.format)?,
        passed,
    })
}

fn cmd_check_exactness<F: Field>(args: &ExactnessArgs) -> CliResult<Outcome> {
    check_max_step(args.max_step)?;
    if args.max_step < 2 {
        return Err(Failure::input("--max-step: at least 2 is needed"));
    }
    let system = build_system::<F>(&args.ci)?;
    let res = ShamashResolution::new(system, args.max_step);
    let results = exactness_reports(&res, args.max_degree)?;
    let passed = results.iter().all(|r| r.report.passed());
    let body = match args.output.format {
        Format::Text => {
            let mut out = String::new();
            for r in &results {
                writeln!(out, "{} (characteristic {})", r.report, r.characteristic).unwrap();
                for d in r.degrees.iter().filter(|d| d.dim > 0) {
                    writeln!(
                        out,
                        "  degree {:>2}: dim {:>4}  rank out {:>4}  rank in {:>4}  homology {}",
                        d.degree, d.dim, d.rank_out, d.rank_in, d.homology
                    )
                    .unwrap();
                }
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(&results).expect("serializable") + "\n",
        _ => return Err(Failure::input("--format: exactness is available as text or json")),
    };
    Ok(Outcome { body, passed })
}

fn cmd_export_dot<F: Field>(args: &DotArgs) -> CliResult<Outcome> {
    let system = build_system::<F>(&args.ci)?;
    Ok(Outcome::ok(dot_graph(&system)))
}

fn cmd_betti(args: &BettiArgs) -> CliResult<Outcome> {
    if args.num_gens == 0 {
        return Err(Failure::input("--num-gens: must be at least 1"));
    }
    if args.codim == 0 {
        return Err(Failure::input("--codim: must be at least 1"));
    }
    if args.max_m > 1000 {
        return Err(Failure::input("--max-m: at most 1000"));
    }
    let rows: Vec<(usize, u128, u128)> = (0..=args.max_m)
        .map(|m| {
            (
                m,
                betti_bound(args.num_gens, args.codim, m, Parity::Even),
                betti_bound(args.num_gens, args.codim, m, Parity::Odd),
            )
        })
        .collect();
    let body = match args.output.format {
        Format::Text => {
            let mut out = format!("Betti bounds for r = {}, c = {}\n", args.num_gens, args.codim);
            for (m, even, odd) in &rows {
                writeln!(
                    out,
                    "beta_{} <= {even}, beta_{} <= {odd}",
                    2 * m,
                    2 * m + 1
                )
                .unwrap();
            }
            out
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(m, e, o)| {
                    json!({ "m": m, "even": e.to_string(), "odd": o.to_string() })
                })
                .collect();
            serde_json::to_string_pretty(&json!({
                "r": args.num_gens,
                "c": args.codim,
                "bounds": list,
            }))
            .expect("serializable")
                + "\n"
        }
        _ => return Err(Failure::input("--format: betti is available as text or json")),
    };
    Ok(Outcome::ok(body))
}

fn run_in<F: Field>(command: &Command) -> CliResult<Outcome> {
    match command {
        Command::Taylor(a) => cmd_taylor::<F>(a),
        Command::Resolve(a) => cmd_resolve::<F>(a),
        Command::Verify(a) => cmd_verify::<F>(a),
        Command::ExportDot(a) => cmd_export_dot::<F>(a),
        Command::CheckExactness(a) => cmd_check_exactness::<F>(a),
        Command::Betti(a) => cmd_betti(a),
    }
}

fn characteristic(command: &Command) -> u64 {
    match command {
        Command::Taylor(a) => a.ring.characteristic,
        Command::Resolve(a) => a.ci.ring.characteristic,
        Command::Verify(a) => a.ci.ring.characteristic,
        Command::ExportDot(a) => a.ci.ring.characteristic,
        Command::CheckExactness(a) => a.ci.ring.characteristic,
        Command::Betti(_) => 0,
    }
}

fn dispatch(command: &Command) -> CliResult<Outcome> {
    match characteristic(command) {
        0 => run_in::<Rational>(command),
        2 => run_in::<Fp<2>>(command),
        3 => run_in::<Fp<3>>(command),
        5 => run_in::<Fp<5>>(command),
        7 => run_in::<Fp<7>>(command),
        11 => run_in::<Fp<11>>(command),
        13 => run_in::<Fp<13>>(command),
        101 => run_in::<Fp<101>>(command),
        32003 => run_in::<Fp<32003>>(command),
        65521 => run_in::<Fp<65521>>(command),
        2147483647 => run_in::<Fp<2147483647>>(command),
        p => Err(Failure::input(format!(
            "--char: {p} is not supported; use 0, 2, 3, 5, 7, 11, 13, 101, 32003, 65521 or 2147483647"
        ))),
    }
}

fn output_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Taylor(a) => a.output.out.as_ref(),
        Command::Resolve(a) => a.output.out.as_ref(),
        Command::Verify(a) => a.output.out.as_ref(),
        Command::CheckExactness(a) => a.output.out.as_ref(),
        Command::Betti(a) => a.output.out.as_ref(),
        Command::ExportDot(a) => a.out.as_ref(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    match output_path(&cli.command) {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.body) {
                eprintln!("error: --out: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT);
            }
        }
        None => print!("{}", outcome.body),
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
