use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use skewratio::verify::{check_names, seed::sample_seed};
use skewratio::{
    check_desargues, cross_ratio, generate_desargues_config, geometric_add, geometric_mul,
    run_suite, solve_fourth_point, Construction, CrossRatioArgs, Error, ExtendedPoint, Field,
    PerspectiveMode, PlanePoint, VerificationReport,
};

mod svg;

/// Exact cross-ratios, fourth points, ruler constructions and Desargues
/// configurations over ℚ, GF(p) and the rational quaternions.
///
/// Exit codes: 0 ok, 1 a check failed, 2 parse or configuration error,
/// 3 precondition violated, 4 infinite solution, 5 I/O error.
#[derive(Parser, Debug)]
#[command(name = "skewratio", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// rational | gf:P | quaternion
    #[arg(long, global = true, default_value = "rational")]
    field: String,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cross-ratio c_r(A,B;C,D); one argument may be `inf`.
    Eval {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// The point D with c_r(A,B;C,D) = R.
    Solve {
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Run the verification suite.
    Verify,
    /// Trace the ruler construction of A+B or A·B.
    Construct(ConstructArgs),
    /// Generate and check Desargues configurations.
    Desargues(DesarguesArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Add,
    Mul,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    op: Op,
    #[arg(long = "O", allow_hyphen_values = true)]
    o: String,
    #[arg(long = "I", allow_hyphen_values = true)]
    i: String,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    aux: String,
    /// Also draw the construction (rational field only).
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Parallel,
    Concurrent,
    Alternating,
}

#[derive(Args, Debug)]
struct DesarguesArgs {
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, value_enum, default_value_t = Mode::Alternating)]
    mode: Mode,
    /// Negative control: move C' off its derived position before checking.
    #[arg(long = "flip-C'", alias = "flip-c-prime")]
    flip_c_prime: bool,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 5,
            Failure::Lib(e) => match e {
                Error::Parse { .. }
                | Error::UnknownField(_)
                | Error::NotPrime(_)
                | Error::UnknownCheck(_)
                | Error::FieldMismatch { .. } => 2,
                Error::InfiniteSolution => 4,
                _ => 3,
            },
        }
    }
}

/// Rendered output plus whether every check in it passed.
struct Output {
    body: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => match emit(&cli.global, &out.body) {
            Ok(()) => ExitCode::from(if out.ok { 0 } else { 1 }),
            Err(f) => report(f),
        },
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    let message = match &f {
        Failure::Lib(e) => e.to_string(),
        Failure::Io(e) => e.clone(),
    };
    eprintln!("error: {message}");
    ExitCode::from(f.code())
}

fn emit(global: &Global, body: &str) -> Result<(), Failure> {
    match &global.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    let field: Field = g.field.parse()?;
    match &cli.command {
        Command::Eval { a, b, c, d } => eval(field, g.format, [a, b, c, d]),
        Command::Solve { r, a, b, c } => solve(field, g.format, [r, a, b, c]),
        Command::Verify => Ok(verify(field, g)),
        Command::Construct(args) => construct(field, g.format, args),
        Command::Desargues(args) => desargues(field, g, args),
    }
}

fn single(format: Format, key: &str, value: &str) -> Output {
    let body = match format {
        Format::Text => format!("{value}\n"),
        Format::Json => format!("{}\n", json!({ key: value })),
    };
    Output { body, ok: true }
}

fn eval(field: Field, format: Format, literals: [&String; 4]) -> Result<Output, Failure> {
    let [a, b, c, d] = literals.map(|s| ExtendedPoint::parse(field, s));
    let args = CrossRatioArgs::new(a?, b?, c?, d?)?;
    Ok(single(format, "cross_ratio", &cross_ratio(&args)?.to_string()))
}

fn solve(field: Field, format: Format, literals: [&String; 4]) -> Result<Output, Failure> {
    let [r, a, b, c] = literals.map(|s| field.parse(s));
    let d = solve_fourth_point(&r?, &a?, &b?, &c?)?;
    Ok(single(format, "d", &d.to_string()))
}

fn verify(field: Field, g: &Global) -> Output {
    let report = run_suite(field, g.seed, g.samples as usize);
    let body = match g.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => verify_text(&report),
    };
    Output {
        body,
        ok: report.all_passed(),
    }
}

fn verify_text(report: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "field {} seed {} samples {}", report.field, report.seed, report.samples);
    let p6 = &report.p6_form;
    let _ = writeln!(
        s,
        "conjugation form: statement {}/{} proof {}/{} -> {:?}",
        p6.statement_matches, p6.samples, p6.proof_matches, p6.samples, p6.chosen
    );
    let mo = &report.mul_order;
    let _ = writeln!(
        s,
        "multiplication order: a*b {}/{} b*a {}/{} -> {:?}",
        mo.ab_matches, mo.samples, mo.ba_matches, mo.samples, mo.chosen
    );
    let width = check_names().iter().map(|n| n.len()).max().unwrap_or(0);
    for c in &report.checks {
        let status = if c.skipped {
            "skip"
        } else if c.passed {
            "pass"
        } else {
            "FAIL"
        };
        let mode = if c.exhaustive { " exhaustive" } else { "" };
        let _ = writeln!(
            s,
            "{status} {:width$} {} run, {} failed, {} redrawn{mode}",
            c.name, c.samples_run, c.failures, c.redraws
        );
        for w in c.witnesses.iter().take(1) {
            let _ = writeln!(s, "     inputs [{}]: {} vs {}", w.inputs.join(", "), w.lhs, w.rhs);
        }
    }
    let failed = report.failed().count();
    let _ = writeln!(s, "{} checks failed", failed);
    s
}

fn construct(field: Field, format: Format, args: &ConstructArgs) -> Result<Output, Failure> {
    let p = |s: &String| PlanePoint::parse(field, s);
    let (o, i, a, b, aux) = (p(&args.o)?, p(&args.i)?, p(&args.a)?, p(&args.b)?, p(&args.aux)?);
    if args.svg.is_some() && field != Field::Rational {
        return Err(Error::InvalidArgs("--svg needs the rational field".into()).into());
    }
    let c = match args.op {
        Op::Add => geometric_add(&o, &i, &a, &b, &aux)?,
        Op::Mul => geometric_mul(&o, &i, &a, &b, &aux)?,
    };
    if let Some(path) = &args.svg {
        let figure = svg::render(&c).expect("rational coordinates");
        std::fs::write(path, figure).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    let body = match format {
        Format::Text => {
            let mut s = c.steps().join("\n");
            let _ = write!(s, "\n{}\n", c.result);
            s
        }
        Format::Json => format!("{}\n", construction_json(&c)),
    };
    Ok(Output { body, ok: true })
}

fn construction_json(c: &Construction) -> Value {
    json!({
        "operation": c.operation,
        "O": c.o.to_string(),
        "I": c.i.to_string(),
        "A": c.a.to_string(),
        "B": c.b.to_string(),
        "B1": c.aux.to_string(),
        "P1": c.p1.to_string(),
        "lines": {
            "OI": c.base.to_string(),
            "first": c.first.to_string(),
            "second": c.second.to_string(),
            "reference": c.reference.to_string(),
            "last": c.last.to_string(),
        },
        "steps": c.steps(),
        "result": c.result.to_string(),
    })
}

fn desargues(field: Field, g: &Global, args: &DesarguesArgs) -> Result<Output, Failure> {
    let mut hasher = Sha256::new();
    let mut lines = Vec::new();
    let mut records = Vec::new();
    let mut passed = 0;
    for n in 0..args.count {
        let mode = match (args.mode, n % 2) {
            (Mode::Parallel, _) | (Mode::Alternating, 0) => PerspectiveMode::Parallel,
            _ => PerspectiveMode::Concurrent,
        };
        let seed = sample_seed(g.seed, "desargues", n);
        let (config, verdict) = match generate_desargues_config(field, seed, mode) {
            Err(e) => (None, format!("generation failed: {e}")),
            Ok(cfg) => {
                let cfg = if args.flip_c_prime { cfg.tamper_c_prime()? } else { cfg };
                hasher.update(cfg.to_string().as_bytes());
                hasher.update(b"\n");
                let verdict = match check_desargues(&cfg) {
                    Ok(true) => {
                        passed += 1;
                        "pass".to_string()
                    }
                    Ok(false) => "FAIL: AC not parallel to A'C'".to_string(),
                    Err(e) => format!("FAIL: {e}"),
                };
                (Some(cfg.to_string()), verdict)
            }
        };
        lines.push(format!("{}: {} {verdict}", n + 1, config.as_deref().unwrap_or("-")));
        records.push(json!({ "config": config, "result": verdict }));
    }
    let hash = hex::encode(hasher.finalize());
    let tally = format!("{passed}/{} pass", args.count);
    let body = match g.format {
        Format::Text => format!("{}\n{tally}\nconfig hash {hash}\n", lines.join("\n")),
        Format::Json => format!(
            "{}\n",
            json!({
                "field": field,
                "seed": g.seed,
                "count": args.count,
                "passed": passed,
                "hash": hash,
                "configs": records,
            })
        ),
    };
    Ok(Output {
        body,
        ok: passed == args.count,
    })
}
