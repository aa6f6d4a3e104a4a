use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nctrace::classify::{self, ClassReport};
use nctrace::free::{commutator_witness, cyc_class_sums, cyc_equiv};
use nctrace::generic::{self, GenericContext};
use nctrace::subspace::{
    canonical_subspace, check_lie_closure, classify_subspace, congruence_closure, lie_ideal_closure,
    skew_ideal_closure,
};
use nctrace::{corpus, CanonicalName, Error, Involution, Matrix, NcPolynomial, Scalar};
use serde_json::{json, Value};

const SCHEMA: u32 = 1;
const TRACE_WITNESS_TRIES: usize = 25;

/// Classify noncommutative (*-)polynomials by the span of their matrix values.
#[derive(Debug, Parser)]
#[command(name = "nctrace", version)]
struct Cli {
    /// Matrix size.
    #[arg(long, global = true, default_value_t = 2)]
    d: usize,

    /// Involution on M_d: none, transpose, symplectic or unitary.
    #[arg(long, global = true, default_value = "none", value_parser = parse_involution)]
    inv: Involution,

    /// Seed for span sampling and witness search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum number of sample tuples.
    #[arg(long, global = true, default_value_t = classify::DEFAULT_BUDGET)]
    budget: usize,

    /// Write the JSON report to this path ("-" for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide which canonical subspace is spanned by the values of f.
    Classify {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Decide whether f - g is a sum of commutators.
    CycEquiv {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Write f as an explicit sum of commutators, if possible.
    Witness {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Decide whether tr f vanishes on M_d.
    Trace {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Evaluate f on generic matrices, or on the given matrices.
    Eval {
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// One matrix per variable, e.g. "[[1,2],[3,4]]".
        #[arg(long = "at", value_name = "MATRIX")]
        at: Vec<String>,
    },
    /// Smallest closed subspace containing the given matrices.
    Closure {
        #[arg(long, value_enum)]
        kind: ClosureKind,
        #[arg(required = true, value_name = "MATRIX")]
        seeds: Vec<String>,
    },
    /// Print bases of the canonical subspaces.
    Subspace {
        /// One of 0, Z, K, [S,K], S, Z+K, [A,A], A; all when omitted.
        #[arg(long)]
        name: Option<String>,
    },
    /// Run the bundled regression fixtures.
    Corpus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClosureKind {
    SkewIdeal,
    LieIdeal,
    Congruence,
}

fn parse_involution(s: &str) -> Result<Involution, String> {
    s.parse::<Involution>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Inconsistent(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    summary: Vec<String>,
    report: Value,
    ok: bool,
}

fn poly(src: &str) -> Result<NcPolynomial, Failure> {
    src.parse::<NcPolynomial>()
        .map_err(|e| Failure::Usage(format!("in {src:?}: {e}")))
}

fn matrix(src: &str, d: usize) -> Result<Matrix<Scalar>, Failure> {
    let m = src
        .parse::<Matrix<Scalar>>()
        .map_err(|e| Failure::Usage(format!("in {src:?}: {e}")))?;
    if m.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: m.dim(),
        }
        .into());
    }
    Ok(m)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn envelope(command: &str, cli: &Cli, body: Value) -> Value {
    let mut out = json!({
        "schema": SCHEMA,
        "command": command,
        "d": cli.d,
        "involution": cli.inv.name(),
        "seed": cli.seed,
    });
    if let (Value::Object(out), Value::Object(body)) = (&mut out, body) {
        out.extend(body);
    }
    out
}

fn classify_summary(r: &ClassReport) -> Vec<String> {
    let mut lines = vec![format!(
        "{}: case {} ({}), span {} of dimension {}; sampled dimension {} in {} samples",
        r.polynomial,
        r.case,
        to_value(&r.verdict).as_str().unwrap_or_default(),
        r.span.name,
        r.span.dimension,
        r.sampled_dimension,
        r.samples_used
    )];
    lines.extend(r.warnings.iter().map(|w| format!("warning: {w}")));
    lines.extend(r.notes.iter().map(|n| format!("note: {n}")));
    lines
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if cli.d == 0 {
        return Err(Failure::Usage("--d must be at least 1".into()));
    }
    cli.inv.check_dimension(cli.d)?;
    let (d, inv) = (cli.d, cli.inv);
    Ok(match &cli.command {
        Command::Classify { f } => {
            let f = poly(f)?;
            let r = classify::classify(&f, d, inv, cli.seed, cli.budget)?;
            let mut report = to_value(&r);
            report["command"] = json!("classify");
            Output {
                summary: classify_summary(&r),
                report,
                ok: true,
            }
        }
        Command::CycEquiv { f, g } => {
            let (f, g) = (poly(f)?, poly(g)?);
            let equivalent = cyc_equiv(&f, &g);
            let residue: Vec<Value> = cyc_class_sums(&(&f - &g))
                .into_iter()
                .map(|(w, c)| json!({ "class": w.to_string(), "sum": c.to_string() }))
                .collect();
            Output {
                summary: vec![format!("{f} ~ {g}: {equivalent}")],
                report: envelope(
                    "cyc-equiv",
                    cli,
                    json!({ "f": f.to_string(), "g": g.to_string(), "equivalent": equivalent, "residue": residue }),
                ),
                ok: true,
            }
        }
        Command::Witness { f } => {
            let f = poly(f)?;
            let w = commutator_witness(&f);
            let summary = match &w {
                Some(w) if w.pairs.is_empty() => vec![format!("{f} = 0")],
                Some(w) => w.pairs.iter().map(|(a, b)| format!("[{a}, {b}]")).collect(),
                None => vec![format!("{f} is not a sum of commutators")],
            };
            Output {
                summary,
                report: envelope(
                    "witness",
                    cli,
                    json!({ "f": f.to_string(), "equivalent_to_zero": w.is_some(), "witness": w.map(|w| to_value(&w)) }),
                ),
                ok: true,
            }
        }
        Command::Trace { f } => {
            let f = poly(f)?;
            let ctx = GenericContext::for_poly(&f, d, inv)?;
            let cert = generic::trace_zero(&f, &ctx)?;
            let witness = if cert.verdict {
                None
            } else {
                generic::find_trace_witness(&f, d, inv, cli.seed, TRACE_WITNESS_TRIES)?
            };
            let mut summary = vec![format!("trace_zero = {}: {}", cert.verdict, cert.statement)];
            if let Some(w) = &witness {
                let value = generic::eval_numeric(&f, w, inv)?.trace();
                let mats: Vec<String> = w.iter().map(Matrix::to_string).collect();
                summary.push(format!("witness {} has trace {value}", mats.join(" ")));
            }
            summary.extend(cert.warnings.iter().map(|w| format!("warning: {w}")));
            Output {
                summary,
                report: envelope(
                    "trace",
                    cli,
                    json!({ "f": f.to_string(), "trace_zero": cert.verdict, "certificate": to_value(&cert), "witness": witness.map(|w| to_value(&w)) }),
                ),
                ok: true,
            }
        }
        Command::Eval { f, at } => {
            let f = poly(f)?;
            if at.is_empty() {
                let ctx = GenericContext::for_poly(&f, d, inv)?;
                let e = generic::eval_generic(&f, &ctx)?;
                Output {
                    summary: e
                        .rows()
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join("  |  ")
                        })
                        .collect(),
                    report: envelope(
                        "eval",
                        cli,
                        json!({ "f": f.to_string(), "generic": true, "value": to_value(&e) }),
                    ),
                    ok: true,
                }
            } else {
                let mats = at.iter().map(|m| matrix(m, d)).collect::<Result<Vec<_>, _>>()?;
                let v = generic::eval_numeric(&f, &mats, inv)?;
                Output {
                    summary: vec![v.to_string()],
                    report: envelope(
                        "eval",
                        cli,
                        json!({ "f": f.to_string(), "generic": false, "at": to_value(&mats), "value": to_value(&v) }),
                    ),
                    ok: true,
                }
            }
        }
        Command::Closure { kind, seeds } => {
            let mats = seeds
                .iter()
                .map(|m| matrix(m, d))
                .collect::<Result<Vec<_>, _>>()?;
            let (l, kind_name) = match kind {
                ClosureKind::SkewIdeal => (skew_ideal_closure(&mats, d, inv)?, "skew-ideal"),
                ClosureKind::LieIdeal => (lie_ideal_closure(&mats, d)?, "lie-ideal"),
                ClosureKind::Congruence => (congruence_closure(&mats, d)?, "congruence"),
            };
            let class_inv = match kind {
                ClosureKind::LieIdeal => Involution::None,
                ClosureKind::Congruence => Involution::Transpose,
                ClosureKind::SkewIdeal => inv,
            };
            let name = classify_subspace(&l, class_inv)?;
            let closed = check_lie_closure(&l, class_inv)?;
            Output {
                summary: vec![format!(
                    "{kind_name} closure: dimension {}, canonical name {name}",
                    l.dim()
                )],
                report: envelope(
                    "closure",
                    cli,
                    json!({ "kind": kind_name, "name": name, "lie_closed": closed, "span": to_value(&l) }),
                ),
                ok: true,
            }
        }
        Command::Subspace { name } => {
            let names: Vec<CanonicalName> = match name {
                Some(n) => vec![n.parse::<CanonicalName>().map_err(Failure::Usage)?],
                None => CanonicalName::candidates(inv).to_vec(),
            };
            let mut summary = Vec::new();
            let mut spaces = Vec::new();
            for n in names {
                let s = canonical_subspace(d, inv, n)?;
                summary.push(format!("{n}: dimension {}", s.dim()));
                summary.extend(s.basis().iter().map(|b| format!("  {b}")));
                spaces.push(json!({ "name": n, "span": to_value(&s) }));
            }
            Output {
                summary,
                report: envelope("subspace", cli, json!({ "subspaces": spaces })),
                ok: true,
            }
        }
        Command::Corpus => {
            let results = corpus::run_corpus(cli.seed)?;
            let ok = results.iter().all(|r| r.passed);
            let summary = results
                .iter()
                .map(|r| {
                    format!(
                        "{} {}: {}",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.name,
                        r.detail
                    )
                })
                .collect();
            Output {
                summary,
                report: envelope(
                    "corpus",
                    cli,
                    json!({ "passed": ok, "fixtures": to_value(&results) }),
                ),
                ok,
            }
        }
    })
}

fn emit(cli: &Cli, out: &Output) -> Result<(), String> {
    let text = serde_json::to_string_pretty(&out.report).map_err(|e| e.to_string())? + "\n";
    let mut stdout = io::stdout().lock();
    let printed = match &cli.json {
        Some(p) if p.as_os_str() == "-" => stdout.write_all(text.as_bytes()),
        Some(p) => {
            fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
            out.summary.iter().try_for_each(|l| writeln!(stdout, "{l}"))
        }
        None => out.summary.iter().try_for_each(|l| writeln!(stdout, "{l}")),
    };
    match printed {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.to_string()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconsistent(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
