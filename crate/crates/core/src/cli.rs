//! The `steenrod3` command line.
//!
//! Exit codes: 0 when the verdict is true (or the suite passes), 1 when no
//! witness is found (or a check fails), 2 on usage errors. Reports go to the
//! output stream, diagnostics to the error stream.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::SpacePresentation;
use crate::checker::{check_condition, explain, search_witness, NO_WITNESS, RANGE_WARNING};
use crate::error::Error;
use crate::parse::parse_element;
use crate::report::ReportJson;
use crate::spaces::{poincare_series, standard};
use crate::steenrod::verify_axioms;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "steenrod3",
    version,
    about = "Exact mod-3 cohomology of products of circles and BZ/3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check or search for a witness of rho(a_1)...rho(a_{n-2}) beta Q1 zeta != 0.
    Check(CheckArgs),
    /// Print basis dimensions next to the Poincare series.
    Dims(DimsArgs),
    /// Run the operation axiom suite.
    Axioms(AxiomArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub circles: usize,
    #[arg(long)]
    pub bz3: usize,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated integral degree-1 classes, e.g. a1,a2,a3.
    #[arg(long, value_delimiter = ',', requires = "zeta")]
    pub alphas: Option<Vec<String>>,
    /// Degree-2 class, e.g. "x1*x2".
    #[arg(long, requires = "alphas", allow_hyphen_values = true)]
    pub zeta: Option<String>,
    /// Degree cap, defaults to n + 6.
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long)]
    pub circles: usize,
    #[arg(long)]
    pub bz3: usize,
    #[arg(long)]
    pub max_degree: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct AxiomArgs {
    #[arg(long, default_value_t = 3)]
    pub circles: usize,
    #[arg(long, default_value_t = 2)]
    pub bz3: usize,
    #[arg(long, default_value_t = 12)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Override a Bockstein image, e.g. --beta "x1=x1*x2" (repeatable).
    #[arg(long = "beta", value_name = "GEN=EXPR")]
    pub beta_overrides: Vec<String>,
}

#[derive(Serialize)]
struct DimsJson {
    bz3: usize,
    circles: usize,
    dims: Vec<usize>,
    max_degree: usize,
    series: Vec<u64>,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Check(args) => cmd_check(&args, out),
        Command::Dims(args) => cmd_dims(&args, out),
        Command::Axioms(args) => cmd_axioms(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

pub fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> CmdResult {
    let cap = args.max_degree.unwrap_or(args.n + 6);
    let space = standard(args.circles, args.bz3, cap)?;

    let report = match (&args.alphas, &args.zeta) {
        (Some(names), Some(expr)) => {
            let alphas = names
                .iter()
                .map(|name| {
                    space
                        .generator_by_name(name.trim())
                        .ok_or_else(|| Error::InvalidWitness(format!("unknown class {name:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let zeta = parse_element(&space, expr)?;
            Some(check_condition(&space, args.n, &alphas, &zeta)?)
        }
        _ => search_witness(&space, args.n)?,
    };

    if args.json {
        let json = match &report {
            Some(r) => ReportJson::from_report(&space, r)?,
            None => ReportJson::not_found(&space, args.n),
        };
        write!(out, "{}", json.to_json())?;
    } else {
        match &report {
            Some(r) => write!(out, "{}", explain(&space, r)?)?,
            None => write_not_found(&space, args.n, out)?,
        }
    }
    Ok(match report {
        Some(r) if r.verdict => EXIT_OK,
        _ => EXIT_NEGATIVE,
    })
}

fn write_not_found(
    space: &SpacePresentation,
    n: usize,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(
        out,
        "cohomological criterion for n = {n} in H^{}(X; Z/3)",
        n + 6
    )?;
    writeln!(out, "  space            : {space}")?;
    writeln!(
        out,
        "verdict: zero for every basis zeta and every alpha subset"
    )?;
    writeln!(out, "conclusion: {NO_WITNESS}")?;
    if !crate::checker::GEOMETRIC_RANGE.contains(&n) {
        writeln!(out, "warning: {RANGE_WARNING}")?;
    }
    Ok(())
}

pub fn cmd_dims(args: &DimsArgs, out: &mut dyn Write) -> CmdResult {
    let space = standard(args.circles, args.bz3, args.max_degree.max(2))?;
    let dims = (0..=args.max_degree)
        .map(|k| space.basis(k).map(<[_]>::len))
        .collect::<Result<Vec<_>, _>>()?;
    let series = poincare_series(
        space.exterior_generators().count(),
        space.polynomial_generators().count(),
        args.max_degree,
    );
    let agree = dims.iter().zip(&series).all(|(&d, &s)| d as u64 == s);

    if args.json {
        let json = DimsJson {
            bz3: args.bz3,
            circles: args.circles,
            dims,
            max_degree: args.max_degree,
            series,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
    } else {
        writeln!(out, "{:>6} {:>8} {:>8}", "degree", "basis", "series")?;
        for (k, (d, s)) in dims.iter().zip(&series).enumerate() {
            writeln!(out, "{k:>6} {d:>8} {s:>8}")?;
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_axioms(args: &AxiomArgs, out: &mut dyn Write) -> CmdResult {
    let cap = args.max_degree.max(2);
    let mut space = standard(args.circles, args.bz3, cap)?;
    if !args.beta_overrides.is_empty() {
        let mut generators = space.generators().to_vec();
        for entry in &args.beta_overrides {
            let (name, expr) = entry.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("expected GEN=EXPR, got {entry:?}"))
            })?;
            let id = space
                .generator_by_name(name.trim())
                .ok_or_else(|| Error::InvalidArgument(format!("unknown generator {name:?}")))?;
            generators[id.index()].beta_image = parse_element(&space, expr)?;
        }
        space = SpacePresentation::new(generators, cap, space.meta())?;
    }
    let report = verify_axioms(&space, args.max_degree, args.trials, args.seed);
    write!(out, "{}", report.render(&space))?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("steenrod3").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn dims_examples() {
        let (code, out, _) = run_str(&[
            "dims",
            "--circles",
            "0",
            "--bz3",
            "1",
            "--max-degree",
            "5",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dims"], serde_json::json!([1, 1, 1, 1, 1, 1]));
        assert_eq!(v["series"], v["dims"]);

        let (code, out, _) = run_str(&[
            "dims",
            "--circles",
            "2",
            "--bz3",
            "0",
            "--max-degree",
            "3",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dims"], serde_json::json!([1, 2, 1, 0]));

        let (code, out, _) =
            run_str(&["dims", "--circles", "3", "--bz3", "2", "--max-degree", "2"]);
        assert_eq!(code, 0);
        let rows: Vec<Vec<&str>> = out
            .lines()
            .skip(1)
            .map(|l| l.split_whitespace().collect())
            .collect();
        assert_eq!(rows, [["0", "1", "1"], ["1", "5", "5"], ["2", "12", "12"]]);
    }

    #[test]
    fn axioms_pass_and_fail() {
        let (code, out, _) = run_str(&[
            "axioms",
            "--circles",
            "1",
            "--bz3",
            "1",
            "--max-degree",
            "8",
            "--trials",
            "5",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS"));

        let (code, out, _) = run_str(&[
            "axioms",
            "--circles",
            "0",
            "--bz3",
            "2",
            "--max-degree",
            "6",
            "--trials",
            "2",
            "--beta",
            "x1=x1*x2",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL (beta o beta = 0)"));
        assert!(out.contains("witness: x1"));

        let (code, _, _) = run_str(&["axioms", "--max-degree", "0", "--trials", "3"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn axioms_reject_bad_overrides() {
        let (code, _, err) = run_str(&["axioms", "--beta", "x1"]);
        assert_eq!(code, 2);
        assert!(err.contains("GEN=EXPR"));
        // wrong degree for a Bockstein image
        let (code, _, err) = run_str(&["axioms", "--beta", "x1=x1"]);
        assert_eq!(code, 2);
        assert!(err.contains("invalid presentation"));
    }

    #[test]
    fn check_usage_errors() {
        let (code, _, err) = run_str(&[
            "check",
            "--circles",
            "3",
            "--bz3",
            "2",
            "--n",
            "5",
            "--alphas",
            "a1,a2,a3",
            "--zeta",
            "x1**x2",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("parse error at offset 3"), "{err}");

        let (code, _, _) = run_str(&[
            "check",
            "--circles",
            "3",
            "--bz3",
            "2",
            "--n",
            "5",
            "--zeta",
            "x1*x2",
        ]);
        assert_eq!(code, 2);

        let (code, _, err) = run_str(&[
            "check",
            "--circles",
            "3",
            "--bz3",
            "2",
            "--n",
            "5",
            "--max-degree",
            "9",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("too small"));

        let (code, _, err) = run_str(&[
            "check",
            "--circles",
            "3",
            "--bz3",
            "2",
            "--n",
            "5",
            "--alphas",
            "a1,a2,x1",
            "--zeta",
            "x1*x2",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("invalid witness"));

        let (code, _, _) = run_str(&["frobnicate"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("check"));
    }

    #[test]
    fn explicit_check() {
        let (code, out, _) = run_str(&[
            "check",
            "--circles",
            "3",
            "--bz3",
            "2",
            "--n",
            "5",
            "--alphas",
            "a1,a2,a3",
            "--zeta",
            "x1*x2",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], true);
        assert_eq!(v["zeta"], "x1*x2");

        let (code, out, _) = run_str(&[
            "check",
            "--circles",
            "3",
            "--bz3",
            "2",
            "--n",
            "5",
            "--alphas",
            "a1,a2,a3",
            "--zeta",
            "y1",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("vanishes here"));
    }
}
