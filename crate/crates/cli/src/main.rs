mod render;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use divlab::catalog::{run_catalog, run_entry, Budget, Catalog, Status};
use divlab::criteria::{analyze, AnalyzeOptions, Checks};
use divlab::logder::{free_basis_at_origin, logarithmic_derivations};
use divlab::strata::{colon_partials, minor_ladder, stratification};
use divlab::{parse_polynomial, Error, Ideal, Limits, Point, Polynomial, Ring};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "divlab", version, about = "Euler-homogeneity and Saito-holonomicity of divisors V(f)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected checks on f.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Comma-separated subset of seh,sh,free,trace,colon,ljt.
        #[arg(long, value_parser = parse_checks)]
        checks: Option<Checks>,
        /// Decide strong Euler-homogeneity at c1,...,cn (repeatable).
        #[arg(long = "point", value_parser = parse_point)]
        points: Vec<Point>,
        /// Also compute the colon ideal of u*f for this unit u.
        #[arg(long)]
        unit: Option<String>,
    },
    /// A generating set of the logarithmic derivations of f.
    Derivations {
        #[command(flatten)]
        input: Input,
    },
    /// The minor ideals I_k, Itilde_k and the strata they cut out.
    Ladder {
        #[command(flatten)]
        input: Input,
    },
    /// The built-in catalog of divisors.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the entries.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Run one entry or all of them against their expected verdicts.
    Run {
        name: Option<String>,
        #[arg(long, value_enum, default_value = "default")]
        budget: BudgetArg,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BudgetArg {
    Default,
    High,
}

#[derive(Args)]
struct LimitArgs {
    /// Maximum critical pairs per Groebner basis.
    #[arg(long, env = Limits::ENV_MAX_PAIRS)]
    max_pairs: Option<usize>,
    /// Maximum total degree during reduction.
    #[arg(long, env = Limits::ENV_MAX_DEGREE)]
    max_degree: Option<u32>,
    /// Maximum bit length of a coefficient in a Groebner basis element.
    #[arg(long, env = Limits::ENV_MAX_COEFF_BITS)]
    max_coeff_bits: Option<u64>,
    /// Print timings to stderr.
    #[arg(short, long)]
    verbose: bool,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(p) = self.max_pairs {
            l.max_pairs = p;
        }
        if let Some(d) = self.max_degree {
            l.max_degree = d;
        }
        if let Some(b) = self.max_coeff_bits {
            l.max_coeff_bits = b;
        }
        l
    }
}

#[derive(Args)]
struct Input {
    /// Comma-separated variable names, e.g. x,y,z.
    #[arg(long)]
    vars: String,
    /// The polynomial f.
    poly: String,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    limits: LimitArgs,
}

impl Input {
    fn parse(&self) -> divlab::Result<(Ring, Polynomial)> {
        let ring = Ring::from_list(&self.vars)?;
        let f = parse_polynomial(&self.poly, &ring)?;
        Ok((ring, f))
    }
}

fn parse_checks(s: &str) -> Result<Checks, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_point(s: &str) -> Result<Point, String> {
    Point::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Lib(Error),
    Usage(String),
    CatalogFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Writes to stdout; a closed pipe (`divlab ... | head`) ends the process
/// quietly.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json value serializes")));
}

fn timed<T>(verbose: bool, what: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    if verbose {
        eprintln!("{what}: {:.3?}", start.elapsed());
    }
    out
}

fn run_analyze(input: &Input, checks: Option<Checks>, points: Vec<Point>, unit: Option<&str>) -> Result<(), Failure> {
    let (ring, f) = input.parse()?;
    let limits = input.limits.limits();
    let options = AnalyzeOptions {
        checks: checks.unwrap_or_default(),
        points,
        limits,
    };
    let report = timed(input.limits.verbose, "analyze", || analyze(&f, &options))?;
    let unit_colon = match unit {
        Some(u) => {
            let u = parse_polynomial(u, &ring)?;
            let colon_uf = colon_partials(&f, Some(&u), &limits)?;
            let colon_uf = Ideal::new(&ring, colon_uf.groebner_basis(&limits)?.polynomials().to_vec());
            let colon_f = colon_partials(&f, None, &limits)?;
            let same = colon_f.radical_equal(&colon_uf, &limits)?;
            Some((u, colon_uf, same))
        }
        None => None,
    };
    if input.json {
        let mut v = serde_json::to_value(&report).expect("report serializes");
        if let Some((u, colon, same)) = &unit_colon {
            v["unit_colon"] = json!({
                "unit": u.to_string(),
                "generators": gens(colon),
                "same_radical_as_colon_f": same,
            });
        }
        print_json(&v);
    } else {
        emit(&render::report(&report));
        if let Some((u, colon, same)) = &unit_colon {
            emit(&render::unit_colon(u, colon, *same));
        }
    }
    Ok(())
}

fn gens(i: &Ideal) -> Vec<String> {
    i.generators().iter().map(|g| g.to_string()).collect()
}

fn run_derivations(input: &Input) -> Result<(), Failure> {
    let (_, f) = input.parse()?;
    let limits = input.limits.limits();
    let sd = timed(input.limits.verbose, "derivations", || logarithmic_derivations(&f, &limits))?;
    let basis = free_basis_at_origin(&sd)?;
    if input.json {
        let ders: Vec<Value> = sd
            .derivations()
            .iter()
            .map(|d| {
                json!({
                    "coefficients": d.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "cofactor": d.cofactor().to_string(),
                })
            })
            .collect();
        let mut v = json!({ "poly": f.to_string(), "derivations": ders, "free": basis.is_free() });
        if let divlab::logder::FreeBasis::Basis { indices, .. } = &basis {
            v["basis"] = json!(indices);
        }
        print_json(&v);
    } else {
        emit(&render::derivations(&sd, &basis));
    }
    Ok(())
}

fn run_ladder(input: &Input) -> Result<(), Failure> {
    let (_, f) = input.parse()?;
    let limits = input.limits.limits();
    let (ladder, strata) = timed(input.limits.verbose, "ladder", || -> divlab::Result<_> {
        let sd = logarithmic_derivations(&f, &limits)?;
        let ladder = minor_ladder(&sd, &limits)?;
        let strata = stratification(&ladder, &limits)?;
        Ok((ladder, strata))
    })?;
    if input.json {
        let n = ladder.n();
        let levels: Vec<Value> = (1..=n)
            .map(|k| json!({ "k": k, "I": gens(ladder.minors(k)), "Itilde": gens(ladder.extended_minors(k)) }))
            .collect();
        let pieces: Vec<Value> = strata
            .pieces
            .iter()
            .map(|p| json!({ "name": render::piece_name(p), "empty": p.empty }))
            .collect();
        print_json(&json!({
            "poly": f.to_string(),
            "levels": levels,
            "colon": gens(ladder.colon()),
            "dims_D": ladder.dims_d(),
            "dims_D_ext": ladder.dims_d_ext(),
            "strata": pieces,
        }));
    } else {
        emit(&render::ladder(&ladder, &strata));
    }
    Ok(())
}

fn run_catalog_command(command: &CatalogCommand) -> Result<(), Failure> {
    let catalog = Catalog::builtin()?;
    match command {
        CatalogCommand::List { json } => {
            if *json {
                let entries: Vec<Value> = catalog
                    .entries()
                    .iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "vars": e.ring.names(),
                            "poly": e.poly_text,
                            "flags": e.flags(),
                            "expected": e.expected.len(),
                        })
                    })
                    .collect();
                print_json(&json!(entries));
            } else {
                emit(&render::catalog_list(&catalog));
            }
        }
        CatalogCommand::Run {
            name,
            budget,
            json,
            limits,
        } => {
            let budget = match budget {
                BudgetArg::Default => Budget::Default,
                BudgetArg::High => Budget::High,
            };
            let base = limits.limits();
            let outcomes = timed(limits.verbose, "catalog", || match name {
                Some(n) => match catalog.get(n) {
                    Some(e) => run_entry(e, budget, &base).map(|o| vec![o]).map_err(Failure::from),
                    None => Err(Failure::Usage(format!("no catalog entry named `{n}`"))),
                },
                None => run_catalog(&catalog, budget, &base).map_err(Failure::from),
            })?;
            if *json {
                let rows: Vec<Value> = outcomes
                    .iter()
                    .map(|o| {
                        json!({
                            "name": o.name,
                            "status": o.status.to_string(),
                            "mismatches": o.mismatches.iter().map(|m| json!({
                                "pointer": m.pointer,
                                "expected": m.expected,
                                "got": m.got,
                            })).collect::<Vec<_>>(),
                            "violations": o.violations,
                            "skipped": o.skipped,
                        })
                    })
                    .collect();
                print_json(&json!(rows));
            } else {
                emit(&render::catalog_run(&outcomes));
            }
            if outcomes.iter().any(|o| o.status == Status::Fail) {
                return Err(Failure::CatalogFailed);
            }
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) | Error::DivisionByZero => 3,
        Error::ResourceLimit(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze {
            input,
            checks,
            points,
            unit,
        } => run_analyze(input, *checks, points.clone(), unit.as_deref()),
        Command::Derivations { input } => run_derivations(input),
        Command::Ladder { input } => run_ladder(input),
        Command::Catalog { command } => run_catalog_command(command),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::CatalogFailed) => ExitCode::from(1),
    }
}
