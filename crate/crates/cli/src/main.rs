//! `rectlift`: classification, lifting, verification and dimension queries.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rectlift::dimension::{demazure_dim, polytope_count};
use rectlift::lift::{self, VerifyOptions};
use rectlift::parallel::{self, Exec};
use rectlift::perm::{self, EnumerationConfig, PermClass};
use rectlift::{Error, Permutation, RectCheck, Weight};
use serde_json::{json, Value};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "rectlift", version, about = "Rectangular permutations and their lift to double rank")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rectangular / triangular / irreducible classification of a permutation.
    Classify {
        #[arg(value_parser = parse_perm)]
        perm: Permutation,
    },
    /// Lift a rectangular permutation and dominant weight.
    Lift(PermWeight),
    /// Check every computable consequence of the lift, for one pair or a sweep.
    Verify(VerifyArgs),
    /// Count the class members in S_n.
    Count(ClassArgs),
    /// Demazure module dimension by one or both oracles.
    Dim {
        #[command(flatten)]
        input: PermWeight,
        #[arg(long, value_enum, default_value_t = Oracle::Both)]
        oracle: Oracle,
    },
    /// List the class members of S_n, one per line, lexicographically.
    Enumerate(ClassArgs),
}

#[derive(Args, Debug)]
struct PermWeight {
    /// One-line notation, e.g. 43251 or 4,3,2,5,1.
    #[arg(value_parser = parse_perm)]
    perm: Permutation,
    /// Fundamental-weight coefficients, e.g. 1,0,0,0.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    lambda: Weight,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = parse_perm, required_unless_present = "sweep")]
    perm: Option<Permutation>,
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true, required_unless_present = "sweep")]
    lambda: Option<Weight>,
    /// Verify every rectangular element of S_n with every bounded weight.
    #[arg(long, requires = "n", conflicts_with_all = ["perm", "lambda"])]
    sweep: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    max_coeff: i64,
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long)]
    n: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ClassArg {
    Rectangular,
    Triangular,
}

impl From<ClassArg> for PermClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Rectangular => PermClass::Rectangular,
            ClassArg::Triangular => PermClass::Triangular,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Oracle {
    Both,
    Demazure,
    Polytope,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit status and payload of a subcommand.
enum Outcome {
    Value(Value, bool),
    Lines(Vec<String>),
}

/// Usage-level failure: bad argument combinations and precondition errors.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn check_lambda(tau: &Permutation, lambda: &Weight) -> Result<(), UsageError> {
    if lambda.rank() != tau.rank() {
        return Err(UsageError(format!(
            "--lambda has {} coefficients, {tau} needs {}",
            lambda.rank(),
            tau.rank()
        )));
    }
    lambda.require_dominant()?;
    Ok(())
}

fn classify(tau: &Permutation) -> Value {
    let n = tau.inversion_set();
    let check = n.rectangular_check();
    let irreducible = match check {
        RectCheck::Rectangular => json!(n.is_irreducible().unwrap_or(false)),
        _ => Value::Null,
    };
    let mut v = json!({
        "schema": 1,
        "tau": tau,
        "length": n.len(),
        "inversion_set": n,
        "rectangular": check.is_rectangular(),
        "triangular": tau.is_triangular(),
        "irreducible": irreducible,
    });
    if let RectCheck::R1Violation(a, b) | RectCheck::R2Violation(a, b) = check {
        let axiom = if matches!(check, RectCheck::R1Violation(..)) { "R1" } else { "R2" };
        v["witness"] = json!({ "axiom": axiom, "pair": [a, b] });
    }
    v
}

fn lift_value(tau: &Permutation, lambda: &Weight) -> Result<(Value, bool), UsageError> {
    check_lambda(tau, lambda)?;
    if !tau.is_rectangular() {
        return Err(UsageError(format!("{tau} is not rectangular; the lift is only defined for rectangular elements")));
    }
    let comps = lift::lift_general(tau, lambda)?;
    let report = lift::verify_lift_with(tau, lambda, VerifyOptions { dimensions: false })?;
    let components: Vec<Value> = comps
        .iter()
        .map(|c| {
            json!({
                "interval": [c.interval.0, c.interval.1],
                "tau": c.tau_local,
                "lambda": c.lambda_local,
                "tau_tilde": c.result.tau_tilde,
                "lambda_tilde": c.result.lambda_tilde,
                "ideal": c.result.ideal,
                "mu": c.result.mu,
            })
        })
        .collect();
    let mut v = json!({
        "schema": 1,
        "tau": tau,
        "lambda": lambda,
        "components": components,
        "checks": report.checks,
    });
    if let [single] = comps.as_slice() {
        if single.interval == (1, tau.rank()) {
            v["tau_tilde"] = json!(single.result.tau_tilde);
            v["lambda_tilde"] = json!(single.result.lambda_tilde);
            v["ideal"] = json!(single.result.ideal);
            v["mu"] = json!(single.result.mu);
        }
    }
    if !report.failures.is_empty() {
        v["failures"] = json!(report.failures);
    }
    Ok((v, report.passed()))
}

fn verify_value(args: &VerifyArgs, exec: Exec) -> Result<(Value, bool), UsageError> {
    if args.sweep {
        let n = args.n.ok_or_else(|| UsageError("--sweep needs --n".into()))?;
        let reports = lift::sweep(n, args.max_coeff, exec)?;
        let failed: Vec<Value> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| json!({ "tau": r.tau, "lambda": r.lambda, "failures": r.failures }))
            .collect();
        let ok = failed.is_empty();
        let v = json!({
            "schema": 1,
            "n": n,
            "max_coeff": args.max_coeff,
            "total": reports.len(),
            "passed": reports.len() - failed.len(),
            "failed": failed,
        });
        return Ok((v, ok));
    }
    let (Some(tau), Some(lambda)) = (&args.perm, &args.lambda) else {
        return Err(UsageError("verify needs <PERM> and --lambda, or --sweep".into()));
    };
    check_lambda(tau, lambda)?;
    let report = lift::verify_lift(tau, lambda)?;
    let mut v = json!({
        "schema": 1,
        "tau": tau,
        "lambda": lambda,
        "checks": report.checks,
        "dimensions": report.dimensions,
        "passed": report.passed(),
    });
    if !report.failures.is_empty() {
        v["failures"] = json!(report.failures);
    }
    Ok((v, report.passed()))
}

fn dim_value(input: &PermWeight, oracle: Oracle) -> Result<(Value, bool), UsageError> {
    let (tau, lambda) = (&input.perm, &input.lambda);
    check_lambda(tau, lambda)?;
    let mut v = json!({ "schema": 1, "tau": tau, "lambda": lambda });
    let demazure = match oracle {
        Oracle::Both | Oracle::Demazure => Some(demazure_dim(tau, lambda)?),
        Oracle::Polytope => None,
    };
    let polytope = match oracle {
        Oracle::Both | Oracle::Polytope => Some(polytope_count(&tau.inversion_set(), lambda)?),
        Oracle::Demazure => None,
    };
    if let Some(d) = demazure {
        v["demazure"] = json!(d);
    }
    if let Some(p) = polytope {
        v["polytope"] = json!(p);
    }
    let mut ok = true;
    if let (Some(d), Some(p)) = (demazure, polytope) {
        ok = d == p;
        v["equal"] = json!(ok);
    }
    Ok((v, ok))
}

fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    let exec = Exec::Parallel;
    let config = EnumerationConfig { exec, ..EnumerationConfig::default() };
    Ok(match &cli.command {
        Command::Classify { perm } => Outcome::Value(classify(perm), true),
        Command::Lift(pw) => {
            let (v, ok) = lift_value(&pw.perm, &pw.lambda)?;
            Outcome::Value(v, ok)
        }
        Command::Verify(args) => {
            let (v, ok) = verify_value(args, exec)?;
            Outcome::Value(v, ok)
        }
        Command::Count(c) => {
            let count = perm::census_with(c.n, c.class.into(), &config)?;
            let class: PermClass = c.class.into();
            Outcome::Value(json!({ "schema": 1, "class": class.name(), "n": c.n, "count": count }), true)
        }
        Command::Dim { input, oracle } => {
            let (v, ok) = dim_value(input, *oracle)?;
            Outcome::Value(v, ok)
        }
        Command::Enumerate(c) => {
            let perms = perm::enumerate_with(c.n, c.class.into(), &config)?;
            Outcome::Lines(perms.iter().map(|p| p.to_string()).collect())
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    let result = parallel::with_jobs(cli.jobs.map(usize::from), || run(&cli));
    match result {
        Ok(Outcome::Value(v, ok)) => {
            print!("{}", output::render(&v, cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Lines(lines)) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::SUCCESS
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
