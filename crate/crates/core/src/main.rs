use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyclohecke::colored::{self, ColoredMatrix};
use cyclohecke::expr::{self, EvalContext};
use cyclohecke::perm::Composition;
use cyclohecke::schur::{self, SchurContext, TableCache};
use cyclohecke::verify::{self, SuiteParams};
use cyclohecke::Error;

#[derive(Parser, Debug)]
#[command(name = "cyclo", version, about = "Exact computation in Ariki-Koike algebras and slim cyclotomic q-Schur algebras")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Opts {
    /// Number of cyclotomic parameters.
    #[arg(long, global = true, default_value_t = 2)]
    m: usize,
    /// Number of parts of the compositions.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Rank of the algebra.
    #[arg(long, global = true, default_value_t = 2)]
    r: usize,
    /// Row composition, e.g. `2,1`.
    #[arg(long, global = true, value_parser = parse_composition)]
    lambda: Option<Composition>,
    /// Column composition.
    #[arg(long, global = true, value_parser = parse_composition)]
    mu: Option<Composition>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random specializations per rank certificate.
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, env = "CYCLO_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Largest |Θ_m(n, r)| processed.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_GUARD)]
    guard: u128,
    /// Certify ranks by exact elimination as well.
    #[arg(long, global = true)]
    exact: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse, evaluate and print an expression.
    Element {
        expr: String,
        /// Evaluate in the affine algebra (X generators) instead.
        #[arg(long)]
        affine: bool,
    },
    /// List the 𝔟-basis of x_λℋ ∩ ℋx_μ, or of every block.
    Basis,
    /// Multiply two basis elements Φ_A Φ_B, given as JSON arrays of m-tuples.
    Mult { a: String, b: String },
    /// Emit the structure table, reusing the cache when one is configured.
    Tables,
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
    },
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("'{x}': {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Composition(parts))
}

/// Failures split into usage errors (exit 2) and everything else (exit 1).
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::Parse(_) | Error::Context(_) | Error::Range(_) | Error::Dimension(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let o = &cli.opts;
    match &cli.cmd {
        Cmd::Element { expr: src, affine } => {
            let ctx = if *affine { EvalContext::affine(o.m, o.r)? } else { EvalContext::cyclotomic(o.m, o.r)? };
            let v = expr::eval_str(src, &ctx)?;
            match o.format {
                Format::Json => print_json(&v.to_json()),
                Format::Text => println!("{v}"),
            }
            Ok(true)
        }
        Cmd::Basis => {
            let ctx = SchurContext::with_guard(o.m, o.n, o.r, o.guard)?;
            let comps = ctx.compositions();
            let ls = o.lambda.clone().map(|l| vec![l]).unwrap_or_else(|| comps.clone());
            let ms = o.mu.clone().map(|u| vec![u]).unwrap_or(comps);
            let mut items = Vec::new();
            for l in &ls {
                for u in &ms {
                    for &i in ctx.block(l, u) {
                        items.push((ctx.basis()[i].clone(), ctx.b(i)?.clone()));
                    }
                }
            }
            match o.format {
                Format::Json => print_json(&json!({
                    "m": o.m, "n": o.n, "r": o.r,
                    "basis": items.iter().map(|(a, b)| json!({ "matrix": a, "element": b.to_json() })).collect::<Vec<_>>(),
                })),
                Format::Text => {
                    for (a, b) in &items {
                        println!("{a:?}: {b}");
                    }
                }
            }
            Ok(true)
        }
        Cmd::Mult { a, b } => {
            let ctx = SchurContext::with_guard(o.m, o.n, o.r, o.guard)?;
            if let Some(dir) = &o.cache_dir {
                let table = TableCache::new(dir).table_for(&ctx)?;
                ctx.load_table(&table)?;
            }
            let parse = |s: &str| -> Result<ColoredMatrix, Failure> {
                let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Failure::Usage(format!("matrix '{s}': {e}")))?;
                serde_json::from_value(v).map_err(|e| Failure::Usage(format!("matrix '{s}': {e}")))
            };
            let (x, y) = (ctx.phi(&parse(a)?)?, ctx.phi(&parse(b)?)?);
            let z = ctx.multiply(&x, &y)?;
            match o.format {
                Format::Json => print_json(&z.to_json()),
                Format::Text => {
                    if z.is_zero() {
                        println!("0");
                    }
                    for (k, c) in z.coords() {
                        println!("({c}) Φ{k:?}");
                    }
                }
            }
            Ok(true)
        }
        Cmd::Tables => {
            let ctx = SchurContext::with_guard(o.m, o.n, o.r, o.guard)?;
            let table = match &o.cache_dir {
                Some(dir) => TableCache::new(dir).table_for(&ctx)?,
                None => ctx.structure_table()?,
            };
            let v = serde_json::to_value(&table).map_err(|e| Failure::Runtime(e.to_string()))?;
            match o.format {
                Format::Json => print_json(&v),
                Format::Text => {
                    println!("m={} n={} r={}: {} basis elements, {} nonzero products", o.m, o.n, o.r, table.basis.len(), table.structure.len());
                    println!("rank formula: {}", colored::colored_count(o.m, o.n, o.r));
                    for l in ctx.compositions() {
                        println!("P_{l:?}(q) = {}", schur::poincare(&l, o.m));
                    }
                }
            }
            Ok(true)
        }
        Cmd::Verify { suite } => {
            let p = SuiteParams {
                m: o.m,
                n: o.n,
                r: o.r,
                lambda: o.lambda.clone(),
                mu: o.mu.clone(),
                seed: o.seed,
                trials: o.trials,
                guard: o.guard,
                exact: o.exact,
                cache_dir: o.cache_dir.clone(),
            };
            let report = verify::run_suite(suite, &p)?;
            match o.format {
                Format::Json => print_json(&serde_json::to_value(&report).map_err(|e| Failure::Runtime(e.to_string()))?),
                Format::Text => {
                    for c in &report.checks {
                        let status = serde_json::to_value(&c.status).expect("status serializes");
                        println!("{:<16} {:<28} {} ({} ms)", status.as_str().unwrap_or("?"), c.check, c.params, c.millis);
                    }
                    println!("{}: {} ({} ms)", report.suite, if report.pass { "pass" } else { "FAIL" }, report.millis);
                }
            }
            Ok(report.pass)
        }
    }
}
