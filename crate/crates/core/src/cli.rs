//! Command-line front end. All terminal I/O in the crate happens here.
//!
//! Exit codes: 0 success, 1 a verification failure (mismatch, failed
//! identity, inexact division), 2 usage or domain error.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bench::bench;
use crate::closed_form::{evaluate, Method, SumFamily, SumSpec};
use crate::error::Error;
use crate::identities::{eval_identity, IdentityId};
use crate::kernel::Index;
use crate::verify::{run_grid, GridSpec, IndexRange};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fibsum",
    version,
    about = "Exact fourth-power sums of Fibonacci and Lucas numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one sum.
    Eval(EvalArgs),
    /// Evaluate both sides of an identity.
    Identity(IdentityArgs),
    /// Sweep a grid comparing closed forms against direct summation.
    Verify(VerifyArgs),
    /// Time closed form against direct summation.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// fib4, lucas4, altfib4 or altlucas4
    #[arg(long)]
    family: SumFamily,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    /// closed or oracle
    #[arg(long, default_value = "closed")]
    method: Method,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct IdentityArgs {
    /// Identity name, e.g. fib-add-sub
    #[arg(long)]
    id: IdentityId,
    /// Comma-separated indices, e.g. 5,3
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    args: Vec<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = -6, allow_negative_numbers = true)]
    m_min: i64,
    #[arg(long, default_value_t = 6, allow_negative_numbers = true)]
    m_max: i64,
    #[arg(long, default_value_t = 12)]
    n_max: i64,
    /// Comma-separated families; all four by default.
    #[arg(long, value_delimiter = ',')]
    families: Vec<SumFamily>,
    #[arg(long)]
    with_identities: bool,
    /// Identity arguments range over [-R, R].
    #[arg(long, default_value_t = 30)]
    identity_range: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    family: SumFamily,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long)]
    n: i64,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long)]
    json: bool,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn cli_main<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(args) => run_eval(args, out),
        Command::Identity(args) => run_identity(args, out),
        Command::Verify(args) => run_verify(args, out),
        Command::Bench(args) => run_bench(args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                EXIT_MISMATCH
            } else {
                EXIT_USAGE
            }
        }
    }
}

type CmdResult = Result<i32, Error>;

fn write_line(out: &mut dyn Write, line: impl std::fmt::Display) -> Result<(), Error> {
    writeln!(out, "{line}").map_err(|e| Error::Parameter(format!("cannot write output: {e}")))
}

fn run_eval(args: EvalArgs, out: &mut dyn Write) -> CmdResult {
    let spec = SumSpec::new(args.family, Index::new(args.m)?, Index::new(args.n)?)?;
    let start = Instant::now();
    let result = evaluate(spec, args.method)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    if args.json {
        write_line(
            out,
            json!({
                "family": spec.family.name(),
                "m": spec.m.get(),
                "n": spec.n.get(),
                "value": result.value.to_string(),
                "method": result.method.name(),
                "elapsed_ms": elapsed_ms,
            }),
        )?;
    } else {
        write_line(out, &result.value)?;
    }
    Ok(EXIT_OK)
}

fn run_identity(args: IdentityArgs, out: &mut dyn Write) -> CmdResult {
    let indices = args
        .args
        .iter()
        .map(|&a| Index::new(a))
        .collect::<Result<Vec<_>, _>>()?;
    let start = Instant::now();
    let inst = eval_identity(args.id, &indices)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    if args.json {
        write_line(
            out,
            json!({
                "identity": inst.id.name(),
                "args": args.args,
                "lhs": inst.lhs.to_string(),
                "rhs": inst.rhs.to_string(),
                "holds": inst.holds(),
                "elapsed_ms": elapsed_ms,
            }),
        )?;
    } else {
        let verdict = if inst.holds() { "holds" } else { "FAILS" };
        write_line(out, format_args!("{} = {} ({verdict})", inst.lhs, inst.rhs))?;
    }
    Ok(if inst.holds() { EXIT_OK } else { EXIT_MISMATCH })
}

fn run_verify(args: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let families = if args.families.is_empty() {
        SumFamily::ALL.into_iter().collect()
    } else {
        args.families.into_iter().collect()
    };
    let spec = GridSpec {
        families,
        m_range: IndexRange::new(args.m_min, args.m_max),
        n_range: IndexRange::new(0, args.n_max),
        include_identities: args.with_identities,
        identity_arg_range: IndexRange::new(-args.identity_range, args.identity_range),
    };
    let report = run_grid(&spec)?;
    if args.json {
        let line = serde_json::to_string(&report)
            .map_err(|e| Error::Parameter(format!("cannot serialize report: {e}")))?;
        write_line(out, line)?;
    } else {
        for m in &report.mismatches {
            let args: Vec<String> = m.args.iter().map(i64::to_string).collect();
            write_line(
                out,
                format_args!("MISMATCH {} ({}): {} != {}", m.subject, args.join(", "), m.closed, m.oracle),
            )?;
        }
        for d in &report.divisibility_failures {
            let args: Vec<String> = d.args.iter().map(i64::to_string).collect();
            write_line(
                out,
                format_args!(
                    "INEXACT {} ({}): division by {} leaves remainder {}",
                    d.family,
                    args.join(", "),
                    d.site,
                    d.remainder
                ),
            )?;
        }
        write_line(
            out,
            format_args!(
                "{} cases, {} mismatches, {} divisibility failures, {:.1} ms",
                report.cases_run,
                report.mismatches.len(),
                report.divisibility_failures.len(),
                report.elapsed_ms
            ),
        )?;
    }
    Ok(if report.success() { EXIT_OK } else { EXIT_MISMATCH })
}

fn run_bench(args: BenchArgs, out: &mut dyn Write) -> CmdResult {
    let result = bench(args.family, Index::new(args.m)?, Index::new(args.n)?, args.reps)?;
    let closed_ms = result.closed_form_time.as_secs_f64() * 1e3;
    let oracle_ms = result.oracle_time.as_secs_f64() * 1e3;
    if args.json {
        write_line(
            out,
            json!({
                "family": result.family.name(),
                "m": result.m.get(),
                "n": result.n.get(),
                "closed_ms": closed_ms,
                "oracle_ms": oracle_ms,
                "speedup": result.speedup,
                "values_equal": result.values_equal,
            }),
        )?;
    } else {
        write_line(
            out,
            format_args!(
                "{} m={} n={}: closed {closed_ms:.3} ms, oracle {oracle_ms:.3} ms, speedup {:.1}x, values equal",
                result.family, result.m, result.n, result.speedup
            ),
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fibsum").chain(args.iter().copied());
        let code = cli_main(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_plain() {
        assert_eq!(run(&["eval", "--family", "fib4", "--m", "1", "--n", "3"]), (0, "18\n".into(), String::new()));
        assert_eq!(run(&["eval", "--family", "altlucas4", "--m", "1", "--n", "1"]).1, "-15\n");
        assert_eq!(run(&["eval", "--family", "altfib4", "--m", "-2", "--n", "2"]).1, "-80\n");
    }

    #[test]
    fn eval_zero_m() {
        let (code, out, err) = run(&["eval", "--family", "fib4", "--m", "0", "--n", "5"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("m != 0"), "{err}");
    }

    #[test]
    fn eval_methods_agree() {
        for family in ["fib4", "lucas4", "altfib4", "altlucas4"] {
            for m in ["-3", "2", "5"] {
                let closed = run(&["eval", "--family", family, "--m", m, "--n", "17"]);
                let oracle = run(&["eval", "--family", family, "--m", m, "--n", "17", "--method", "oracle"]);
                assert_eq!(closed.0, 0);
                assert_eq!(closed.1, oracle.1);
            }
        }
    }

    #[test]
    fn eval_json_record() {
        let (code, out, _) = run(&["eval", "--family", "lucas4", "--m", "1", "--n", "2", "--json", "--method", "oracle"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["family"], "lucas4");
        assert_eq!(v["m"], 1);
        assert_eq!(v["n"], 2);
        assert_eq!(v["value"], "82");
        assert_eq!(v["method"], "oracle");
        assert!(v["elapsed_ms"].is_f64());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&["eval", "--family", "fib9", "--m", "1", "--n", "1"]).0, 2);
        assert_eq!(run(&["eval", "--family", "fib4", "--m", "1"]).0, 2);
        assert_eq!(run(&["eval", "--family", "fib4", "--m", "1", "--n", "-1"]).0, 2);
        assert_eq!(run(&["identity", "--id", "fib-double", "--args", "1,2"]).0, 2);
        let (code, _, err) = run(&[]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn identity_command() {
        let (code, out, _) = run(&["identity", "--id", "fib-add-sub", "--args", "5,3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "22 = 22 (holds)\n");
        let (code, out, _) = run(&["identity", "--id", "lucas-add-add", "--args", "-4,-7", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["holds"], true);
        assert_eq!(v["args"], json!([-4, -7]));
    }

    #[test]
    fn verify_command() {
        let (code, out, _) = run(&["verify", "--m-min", "-2", "--m-max", "2", "--n-max", "4", "--families", "fib4,altlucas4"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("45 cases, 0 mismatches, 0 divisibility failures"), "{out}");
        let (code, out, _) = run(&["verify", "--m-min", "1", "--m-max", "1", "--n-max", "2", "--with-identities", "--identity-range", "2", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["cases_run"], 4 * 3 + 3 * 25 + 6 * 5);
        assert_eq!(v["mismatches"], json!([]));
    }

    #[test]
    fn bench_command() {
        let (code, out, _) = run(&["bench", "--family", "fib4", "--m", "1", "--n", "1", "--reps", "1", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["values_equal"], true);
        assert_eq!(run(&["bench", "--family", "fib4", "--m", "1", "--n", "0"]).0, 2);
    }
}
