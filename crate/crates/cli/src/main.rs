//! `invint`: exact invariant integrals and finite-group harmonic analysis.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use invint_core::cayley::{gl_integral, sl_integral, sl_invariant_dim, GlIntegralQuery};
use invint_core::harmonic::{
    builtin, builtin_names, convolution, fourier, isotypic_projection, parseval_pairing,
    poisson_check, regular_representation, IrrepTable,
};
use invint_core::json::{
    dual_to_json, function_for, function_from_json, function_to_json, group_from_json,
    irreps_from_json, parseval_to_json, poisson_to_json, poly_from_json, smat_to_json,
    tensor_from_json, tensor_to_json, to_pretty, weingarten_to_json, AnyIrrepTable, FunctionValues,
    ScalarJson,
};
use invint_core::selftest;
use invint_core::tensor::GroupKind;
use invint_core::weingarten::project_invariants;
use invint_core::weingarten::{weingarten_coefficients, WeingartenTable};

#[derive(Parser)]
#[command(
    name = "invint",
    version,
    about = "Exact invariant integrals on classical and finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant integral on Gl_n of p / det^s.
    GlIntegral {
        #[arg(long)]
        n: usize,
        /// Polynomial JSON file ("-" for stdin).
        #[arg(long)]
        poly: PathBuf,
        #[arg(long = "det-power")]
        det_power: u32,
    },
    /// Invariant integral on Sl_n of a polynomial.
    SlIntegral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Dimension of Sl_n invariants in the m-th tensor power of the standard n^2-tuple space.
    SlDim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
    /// Coefficient table of the O_n or Sp invariant integral.
    Weingarten {
        #[arg(long)]
        kind: GroupKind,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        out: OutArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Projects a tensor onto its O_n or Sp invariants.
    Project {
        #[arg(long)]
        kind: GroupKind,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        tensor: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Harmonic analysis on a finite group.
    Fg {
        #[command(subcommand)]
        op: FgOp,
    },
    /// Runs every exact identity check; exits 1 if any fails.
    Selftest {
        /// Only the numbered acceptance criteria.
        #[arg(long)]
        criteria_only: bool,
    },
}

#[derive(Args)]
struct OutArgs {
    /// Output file; "-" or omitted means stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct GroupArgs {
    /// Group multiplication-table JSON.
    #[arg(long, requires = "irreps", conflicts_with = "builtin")]
    group: Option<PathBuf>,
    /// Irrep table JSON for --group.
    #[arg(long, requires = "group")]
    irreps: Option<PathBuf>,
    /// Shipped group: s3, d4, c2, c2xc2, c3, c5, s3xc2, cN, trivial.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum FgOp {
    /// Fourier transform of a function.
    Fourier {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "fn")]
        function: PathBuf,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Convolution of two functions and its transform.
    Convolve {
        #[command(flatten)]
        group: GroupArgs,
        /// Two function files, given as --fn A --fn B.
        #[arg(long = "fn", num_args = 1, required = true)]
        functions: Vec<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Both sides of the Parseval identity for two functions.
    Parseval {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "fn", num_args = 1, required = true)]
        functions: Vec<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Both sides of Poisson summation for a normal subgroup.
    Poisson {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "fn")]
        function: PathBuf,
        /// Subgroup elements, by index or name.
        #[arg(long, num_args = 1.., required = true)]
        subgroup: Vec<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Isotypic projection for irrep INDEX: of a function if --fn is given,
    /// otherwise the projection matrix on the regular representation.
    Project {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        irrep: usize,
        #[arg(long = "fn")]
        function: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
}

type CliResult<T> = Result<T, String>;

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn with_file<T>(path: &Path, r: invint_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &OutArgs, text: &str) -> CliResult<()> {
    match out.out.as_deref() {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))
        }
        _ => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| format!("stdout: {e}"))
        }
    }
}

fn print_line(text: &str) -> CliResult<()> {
    emit(&OutArgs { out: None }, &format!("{text}\n"))
}

fn weingarten_csv(t: &WeingartenTable) -> CliResult<String> {
    let Value::Array(rows) = &weingarten_to_json(t)["coeffs"] else {
        unreachable!("coeffs is an array")
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "dim", "degree", "cycle_type", "coeff"])
        .map_err(|e| e.to_string())?;
    for row in rows {
        let parts: Vec<String> = row["cycle_type"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|v| v.to_string())
            .collect();
        let coeff = row["coeff"].as_str().unwrap_or_default();
        w.write_record([
            t.kind.to_string(),
            t.dim.to_string(),
            t.degree.to_string(),
            parts.join(" "),
            coeff.to_string(),
        ])
        .map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn load_table(args: &GroupArgs) -> CliResult<AnyIrrepTable> {
    match (&args.builtin, &args.group, &args.irreps) {
        (Some(name), None, None) => builtin(name)
            .map_err(|e| format!("{e}; known builtins: {}", builtin_names().join(", "))),
        (None, Some(g), Some(i)) => {
            let group = with_file(g, group_from_json(&read_input(g)?))?;
            with_file(i, irreps_from_json(&read_input(i)?, group))
        }
        _ => Err("give either --builtin NAME or both --group FILE and --irreps FILE".into()),
    }
}

fn load_fn(path: &Path) -> CliResult<FunctionValues> {
    with_file(path, function_from_json(&read_input(path)?))
}

fn two_fns(paths: &[PathBuf]) -> CliResult<(FunctionValues, FunctionValues)> {
    match paths {
        [a, b] => Ok((load_fn(a)?, load_fn(b)?)),
        _ => Err(format!(
            "expected exactly two --fn files, got {}",
            paths.len()
        )),
    }
}

fn resolve_subgroup<S: ScalarJson>(
    table: &IrrepTable<S>,
    items: &[String],
) -> CliResult<Vec<usize>> {
    let g = table.group();
    items
        .iter()
        .map(|item| {
            g.names()
                .iter()
                .position(|n| n == item)
                .or_else(|| item.parse::<usize>().ok().filter(|&i| i < g.order()))
                .ok_or_else(|| {
                    format!(
                        "subgroup element \"{item}\" is neither a name nor an index below {}",
                        g.order()
                    )
                })
        })
        .collect()
}

fn fg_generic<S: ScalarJson>(op: &FgOp, table: &IrrepTable<S>) -> CliResult<Value> {
    let g = table.group();
    let err = |e: invint_core::Error| e.to_string();
    match op {
        FgOp::Fourier { function, .. } => {
            let a = with_file(function, function_for(&load_fn(function)?, table))?;
            Ok(dual_to_json(&fourier(&a, table).map_err(err)?))
        }
        FgOp::Convolve { functions, .. } => {
            let (a, b) = two_fns(functions)?;
            let (a, b) = (
                function_for(&a, table).map_err(err)?,
                function_for(&b, table).map_err(err)?,
            );
            let c = convolution(&a, &b, g).map_err(err)?;
            let hat = fourier(&c, table).map_err(err)?;
            let product = fourier(&a, table)
                .map_err(err)?
                .mul(&fourier(&b, table).map_err(err)?);
            Ok(json!({
                "convolution": function_to_json(&c),
                "fourier": dual_to_json(&hat),
                "fourier_product_equal": hat.close(&product),
            }))
        }
        FgOp::Parseval { functions, .. } => {
            let (a, b) = two_fns(functions)?;
            let (a, b) = (
                function_for(&a, table).map_err(err)?,
                function_for(&b, table).map_err(err)?,
            );
            Ok(parseval_to_json(
                &parseval_pairing(&a, &b, table).map_err(err)?,
            ))
        }
        FgOp::Poisson {
            function, subgroup, ..
        } => {
            let a = with_file(function, function_for(&load_fn(function)?, table))?;
            let h = resolve_subgroup(table, subgroup)?;
            Ok(poisson_to_json(&poisson_check(&h, &a, table).map_err(err)?))
        }
        FgOp::Project {
            irrep, function, ..
        } => {
            let reg = regular_representation::<S>(g);
            let p = isotypic_projection(&reg, *irrep, table).map_err(err)?;
            match function {
                None => Ok(json!({"irrep": irrep, "projection": smat_to_json(&p)})),
                Some(path) => {
                    let a = with_file(path, function_for(&load_fn(path)?, table))?;
                    // the regular representation acts on coordinates indexed by group elements
                    let values = (0..g.order())
                        .map(|r| {
                            (0..g.order()).fold(S::zero(), |acc, c| {
                                acc + p.get(r, c).clone() * a.values[c].clone()
                            })
                        })
                        .collect();
                    Ok(
                        json!({"irrep": irrep, "values": function_to_json(&invint_core::harmonic::GroupFunction::new(values))["values"]}),
                    )
                }
            }
        }
    }
}

fn fg(op: &FgOp) -> CliResult<()> {
    let (group, out) = match op {
        FgOp::Fourier { group, out, .. }
        | FgOp::Convolve { group, out, .. }
        | FgOp::Parseval { group, out, .. }
        | FgOp::Poisson { group, out, .. }
        | FgOp::Project { group, out, .. } => (group, out),
    };
    let value = match load_table(group)? {
        AnyIrrepTable::Exact(t) => fg_generic(op, &t)?,
        AnyIrrepTable::Complex(t) => fg_generic(op, &t)?,
    };
    emit(out, &to_pretty(&value))
}

fn check_n(path: &Path, expected: usize, actual: usize) -> CliResult<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{}: polynomial has n = {actual} but --n {expected} was given",
            path.display()
        ))
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::GlIntegral { n, poly, det_power } => {
            let p = with_file(&poly, poly_from_json(&read_input(&poly)?))?;
            check_n(&poly, n, p.n())?;
            let v = gl_integral(&GlIntegralQuery::new(p, det_power)).map_err(|e| e.to_string())?;
            print_line(&v.to_string())?;
        }
        Command::SlIntegral { n, poly } => {
            let p = with_file(&poly, poly_from_json(&read_input(&poly)?))?;
            check_n(&poly, n, p.n())?;
            print_line(&sl_integral(&p, n).map_err(|e| e.to_string())?.to_string())?;
        }
        Command::SlDim { n, m } => {
            if n == 0 {
                return Err("--n must be positive".into());
            }
            print_line(&sl_invariant_dim(n, m).to_string())?;
        }
        Command::Weingarten {
            kind,
            dim,
            degree,
            out,
            format,
        } => {
            let t = weingarten_coefficients(degree, dim, kind).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Json => to_pretty(&weingarten_to_json(&t)),
                Format::Csv => weingarten_csv(&t)?,
            };
            emit(&out, &text)?;
        }
        Command::Project {
            kind,
            dim,
            tensor,
            out,
        } => {
            let v = with_file(&tensor, tensor_from_json(&read_input(&tensor)?))?;
            let p = project_invariants(&v, dim, kind).map_err(|e| e.to_string())?;
            emit(&out, &to_pretty(&tensor_to_json(&p)))?;
        }
        Command::Fg { op } => fg(&op)?,
        Command::Selftest { criteria_only } => {
            let checks = if criteria_only {
                selftest::run_criteria()
            } else {
                selftest::run_all()
            };
            let mut ok = true;
            for c in &checks {
                print_line(&c.line())?;
                ok &= c.passed;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            print_line(&format!(
                "{} passed, {failed} failed",
                checks.len() - failed
            ))?;
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
