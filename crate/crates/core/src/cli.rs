//! The `fracsuper` command line.
//!
//! Every command produces a [`Table`] plus a JSON summary. CSV output puts
//! `#` metadata lines above a header row and writes numbers with 17
//! significant digits, so identical configurations give byte-identical
//! files. With `--out` the summary goes to a `<out>.summary.json` sidecar.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::builtins::{parse_interp_function, remark45_solution, PgRhs};
use crate::error::{Error, Result};
use crate::fracderiv::{FracKind, FracSpec};
use crate::interp::frac_error_curve;
use crate::orthopoly::{gauss_jacobi_rule, interpolatory_weights, node_family_points, JacobiParam, NodeFamily, Side};
use crate::pgsolver::{
    galerkin_residuals, pg_error_curves, pg_error_curves_vs_reference, solve, value_superpoints, Anchoring,
    FivpProblem, PgErrorCurves,
};
use crate::superpoints::{interp_superpoints, pg_fracderiv_superpoints, SuperPointSet};
use crate::validate;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

const DEFAULT_ORDERS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

#[derive(Debug, Parser)]
#[command(
    name = "fracsuper",
    version,
    about = "Fractional superconvergence points and GJF Petrov-Galerkin experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Superconvergence points of an interpolation family or a Petrov-Galerkin scheme.
    Points(PointsArgs),
    /// Error curves of D^μ(u - u_N) for a collocation interpolant.
    InterpError(InterpArgs),
    /// Solve a fractional initial-value problem and report its error curves.
    PgSolve(PgArgs),
    /// Nodes and weights of a quadrature rule.
    Quad(QuadArgs),
    /// Run the self-check suites.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PointScheme {
    /// Gauss points, where D^s u_N superconverges.
    PgFrac,
    /// Zeros of the degree N+1 basis function, where u_N superconverges.
    PgValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuadScheme {
    GaussJacobi,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PointsArgs {
    #[arg(long, conflicts_with = "scheme")]
    pub family: Option<NodeFamily>,
    #[arg(long, value_enum)]
    pub scheme: Option<PointScheme>,
    #[arg(long = "n")]
    pub n: usize,
    /// Orders, comma separated.
    #[arg(long = "mu", alias = "s", value_delimiter = ',')]
    pub mu: Vec<f64>,
    #[arg(long, default_value = "rl")]
    pub kind: FracKind,
    /// Derivative side; defaults to left for families and right for schemes.
    #[arg(long)]
    pub side: Option<Side>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct InterpArgs {
    /// `builtin:ex31` or a sum of (1±x)^p terms.
    #[arg(long, default_value = "builtin:ex31")]
    pub rhs: String,
    #[arg(long, default_value = "legendre-gauss")]
    pub family: NodeFamily,
    #[arg(long = "n", default_value_t = 12)]
    pub n: usize,
    #[arg(long = "mu", alias = "s", value_delimiter = ',')]
    pub mu: Vec<f64>,
    #[arg(long, default_value = "rl")]
    pub kind: FracKind,
    #[arg(long, default_value = "left")]
    pub side: Side,
    #[arg(long, default_value_t = 2001)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PgArgs {
    /// ex41, ex42, ex43, remark45, or a sum of (1±x)^p and L<m> terms.
    #[arg(long, default_value = "ex41")]
    pub rhs: String,
    #[arg(long = "n", default_value_t = 9)]
    pub n: usize,
    #[arg(long = "s", alias = "mu", value_delimiter = ',')]
    pub s: Vec<f64>,
    /// Degree of the reference solution (unused for remark45, whose solution is known).
    #[arg(long = "ref-n", default_value_t = 41)]
    pub ref_n: usize,
    #[arg(long, default_value_t = 1001)]
    pub grid: usize,
    /// Side of the derivative: right means u(1) = 0.
    #[arg(long, default_value = "right")]
    pub side: Side,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct QuadArgs {
    #[arg(long, conflicts_with = "scheme")]
    pub family: Option<NodeFamily>,
    #[arg(long, value_enum)]
    pub scheme: Option<QuadScheme>,
    /// Polynomial degree for families, number of points for Gauss-Jacobi.
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(usize),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format!("{v:.16e}"),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => json!(v),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
        }
    }
}

/// Rows plus `key: value` metadata.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(s, "# {k}: {v}");
        }
        let _ = writeln!(s, "{}", self.header.join(","));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(s, "{}", line.join(","));
        }
        s
    }

    fn rows_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
                .collect(),
        )
    }
}

/// What a command produced.
#[derive(Debug, Clone)]
pub struct Output {
    pub table: Table,
    pub summary: Value,
}

impl Output {
    /// The full JSON document for `--format json`.
    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "summary": self.summary,
            "columns": self.table.header,
            "rows": self.table.rows_json(),
        })
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_CONFIG
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for a failed command: bad input is a configuration error,
/// anything else a computation failure.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) | Error::Domain(..) | Error::Unsupported(_) | Error::AnchorMismatch => EXIT_CONFIG,
        _ => EXIT_COMPUTE,
    }
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    let (output, opts) = match cmd {
        Command::Points(a) => (cmd_points(a)?, &a.output),
        Command::InterpError(a) => (cmd_interp_error(a)?, &a.output),
        Command::PgSolve(a) => (cmd_pg_solve(a)?, &a.output),
        Command::Quad(a) => (cmd_quad(a)?, &a.output),
        Command::Validate(a) => return cmd_validate(a, out),
    };
    emit(&output, opts, out)?;
    Ok(EXIT_OK)
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Config(format!("cannot write {}: {e}", path.display()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn emit(output: &Output, opts: &OutputArgs, out: &mut dyn Write) -> Result<()> {
    let body = match opts.format {
        Format::Csv => output.table.to_csv(),
        Format::Json => pretty(&output.to_json()),
    };
    match &opts.out {
        None => out
            .write_all(body.as_bytes())
            .map_err(|e| io_err(Path::new("<stdout>"), e)),
        Some(path) => {
            std::fs::write(path, body).map_err(|e| io_err(path, e))?;
            if opts.format == Format::Csv {
                let side = sidecar_path(path);
                std::fs::write(&side, pretty(&output.summary)).map_err(|e| io_err(&side, e))?;
            }
            Ok(())
        }
    }
}

/// `<out>.summary.json`.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".summary.json");
    PathBuf::from(s)
}

fn check_orders(orders: &[f64], what: &str) -> Result<()> {
    for &m in orders {
        if !(m > 0.0 && m < 1.0) {
            return Err(Error::Config(format!("{what} must lie in (0, 1), got {m}")));
        }
    }
    Ok(())
}

fn orders_or_default(orders: &[f64]) -> Vec<f64> {
    if orders.is_empty() {
        DEFAULT_ORDERS.to_vec()
    } else {
        orders.to_vec()
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Config(format!("--n must be at least {min}, got {n}")));
    }
    Ok(())
}

fn check_grid(grid: usize) -> Result<()> {
    if grid < 2 {
        return Err(Error::Config(format!("--grid must be at least 2, got {grid}")));
    }
    Ok(())
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, e| m.max(e.abs()))
}

fn point_rows(rows: &mut Vec<Vec<Cell>>, order: f64, set: &SuperPointSet) {
    for (i, &x) in set.points.iter().enumerate() {
        rows.push(vec![Cell::Num(order), Cell::Int(i), Cell::Num(x)]);
    }
}

fn set_summary(order: f64, set: &SuperPointSet) -> Value {
    json!({
        "order": order,
        "count": set.len(),
        "includes_anchor": set.includes_anchor,
        "points": set.points,
    })
}

pub fn cmd_points(a: &PointsArgs) -> Result<Output> {
    let mut table = Table {
        header: vec!["order".into(), "index".into(), "x".into()],
        ..Table::default()
    };
    let mut sets = Vec::new();
    let mut summary = json!({ "schema_version": SCHEMA_VERSION, "command": "points", "n": a.n });
    match (a.family, a.scheme) {
        (Some(family), None) => {
            check_n(a.n, 2)?;
            if a.mu.is_empty() {
                return Err(Error::Config("--mu is required with --family".into()));
            }
            check_orders(&a.mu, "--mu")?;
            let side = a.side.unwrap_or(Side::Left);
            table.meta = vec![
                ("source".into(), family.to_string()),
                ("n".into(), a.n.to_string()),
                ("kind".into(), a.kind.to_string()),
                ("side".into(), side.to_string()),
            ];
            for &mu in &a.mu {
                let set = interp_superpoints(family, a.n, FracSpec::new(mu, side, a.kind)?)?;
                point_rows(&mut table.rows, mu, &set);
                sets.push(set_summary(mu, &set));
            }
            summary["source"] = json!(family);
            summary["kind"] = json!(a.kind);
            summary["side"] = json!(side.to_string());
        }
        (None, Some(scheme)) => {
            check_n(a.n, 1)?;
            check_orders(&a.mu, "--s")?;
            let side = a.side.unwrap_or(Side::Right);
            let anchoring = anchoring(side);
            let name = match scheme {
                PointScheme::PgFrac => "pg-frac",
                PointScheme::PgValue => "pg-value",
            };
            table.meta = vec![
                ("source".into(), name.into()),
                ("n".into(), a.n.to_string()),
                ("side".into(), side.to_string()),
            ];
            match scheme {
                PointScheme::PgFrac => {
                    // independent of s; one block per requested order, or one block at order 0
                    let set = pg_fracderiv_superpoints(a.n)?;
                    let orders = if a.mu.is_empty() { vec![set.order] } else { a.mu.clone() };
                    for &s in &orders {
                        point_rows(&mut table.rows, s, &set);
                        sets.push(set_summary(s, &set));
                    }
                }
                PointScheme::PgValue => {
                    if a.mu.is_empty() {
                        return Err(Error::Config("--s is required with --scheme pg-value".into()));
                    }
                    table.meta.push(("trivial_endpoint".into(), anchor_label(side).into()));
                    for &s in &a.mu {
                        let set = value_superpoints(anchoring, s, a.n)?;
                        point_rows(&mut table.rows, s, &set);
                        sets.push(set_summary(s, &set));
                    }
                }
            }
            summary["source"] = json!(name);
            summary["side"] = json!(side.to_string());
        }
        _ => return Err(Error::Config("give exactly one of --family or --scheme".into())),
    }
    summary["sets"] = Value::Array(sets);
    Ok(Output { table, summary })
}

fn anchoring(side: Side) -> Anchoring {
    match side {
        Side::Right => Anchoring::RightAnchored,
        Side::Left => Anchoring::LeftAnchored,
    }
}

fn anchor_label(side: Side) -> &'static str {
    match side {
        Side::Right => "x=1",
        Side::Left => "x=-1",
    }
}

pub fn cmd_interp_error(a: &InterpArgs) -> Result<Output> {
    check_n(a.n, 2)?;
    check_grid(a.grid)?;
    let orders = orders_or_default(&a.mu);
    check_orders(&orders, "--mu")?;
    let u = parse_interp_function(&a.rhs)?;
    let mut columns = Vec::new();
    let mut per_order = Vec::new();
    let mut grid = Vec::new();
    for &mu in &orders {
        let spec = FracSpec::new(mu, a.side, a.kind)?;
        let du = u.frac_deriv(spec)?;
        let c = frac_error_curve(|x| u.eval(x), |x| du.eval(x), a.family, a.n, spec, a.grid)?;
        per_order.push(json!({
            "mu": mu,
            "global_max": c.global_max,
            "max_at_superpoints": c.max_at_superpoints,
            "gain_ratio": c.gain_ratio,
            "includes_anchor": c.superpoints.includes_anchor,
            "superpoints": c.superpoints.points,
            "errors_at_superpoints": c.errors_at_superpoints,
        }));
        grid = c.grid;
        columns.push(c.errors);
    }
    let mut header = vec!["x".to_string()];
    header.extend(orders.iter().map(|m| format!("err_mu{m}")));
    let rows = grid
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            std::iter::once(Cell::Num(x))
                .chain(columns.iter().map(|c| Cell::Num(c[i])))
                .collect()
        })
        .collect();
    let table = Table {
        meta: vec![
            ("function".into(), a.rhs.clone()),
            ("family".into(), a.family.to_string()),
            ("n".into(), a.n.to_string()),
            ("kind".into(), a.kind.to_string()),
            ("side".into(), a.side.to_string()),
            ("grid".into(), a.grid.to_string()),
        ],
        header,
        rows,
    };
    let summary = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "interp-error",
        "function": a.rhs,
        "family": a.family,
        "n": a.n,
        "kind": a.kind,
        "side": a.side.to_string(),
        "grid": a.grid,
        "orders": per_order,
    });
    Ok(Output { table, summary })
}

/// Solution and error curves for one order.
fn pg_run(rhs: &PgRhs, s: f64, a: &PgArgs) -> Result<(PgErrorCurves, Value)> {
    let f = rhs.function(s)?;
    let mut p = FivpProblem::new(f, s)?.anchored(anchoring(a.side));
    if rhs.has_reaction() {
        p = p.with_reaction();
    }
    let sol = solve(&p, a.n)?;
    let curves = if rhs.has_reaction() {
        let u = remark45_solution(s);
        let du = u.frac_deriv(p.spec())?;
        pg_error_curves(&sol, |x| Ok(u.eval(x)), |x| Ok(du.eval(x)), a.grid)?
    } else {
        pg_error_curves_vs_reference(&p, a.n, a.ref_n, a.grid)?
    };
    let residual = max_abs(&galerkin_residuals(&sol, &p.rhs, p.reaction)?);
    let gain = |global: f64, local: f64| crate::interp::gain_ratio(global, local);
    let summary = json!({
        "s": s,
        "value_global_max": curves.value_global_max,
        "value_max_at_points": curves.value_max_at_points,
        "value_ratio": curves.value_ratio(),
        "value_gain": gain(curves.value_global_max, curves.value_max_at_points),
        "deriv_global_max": curves.deriv_global_max,
        "deriv_max_at_points": curves.deriv_max_at_points,
        "deriv_ratio": curves.deriv_ratio(),
        "deriv_gain": gain(curves.deriv_global_max, curves.deriv_max_at_points),
        "value_points": curves.value_points.points,
        "value_errors_at_points": curves.value_errors_at_points,
        "deriv_points": curves.deriv_points.points,
        "deriv_errors_at_points": curves.deriv_errors_at_points,
        "galerkin_residual_max": residual,
        "condition": sol.condition,
        "coefficients": sol.coeffs,
    });
    Ok((curves, summary))
}

pub fn cmd_pg_solve(a: &PgArgs) -> Result<Output> {
    check_n(a.n, 1)?;
    check_grid(a.grid)?;
    let rhs: PgRhs = a.rhs.parse()?;
    let orders = if a.s.is_empty() {
        vec![0.1, 0.3, 0.55, 0.7, 0.9]
    } else {
        a.s.clone()
    };
    check_orders(&orders, "--s")?;
    if rhs.has_reaction() && a.side != Side::Right {
        return Err(Error::Config(
            "remark45 is posed with u(1) = 0; use --side right".into(),
        ));
    }
    if !rhs.has_reaction() && a.ref_n <= a.n {
        return Err(Error::Config(format!(
            "--ref-n ({}) must exceed --n ({})",
            a.ref_n, a.n
        )));
    }
    let mut grid = Vec::new();
    let mut columns = Vec::new();
    let mut per_order = Vec::new();
    for &s in &orders {
        let (c, summary) = pg_run(&rhs, s, a)?;
        per_order.push(summary);
        grid = c.grid;
        columns.push(c.value_errors);
        columns.push(c.deriv_errors);
    }
    let mut header = vec!["x".to_string()];
    for s in &orders {
        header.push(format!("value_err_s{s}"));
        header.push(format!("deriv_err_s{s}"));
    }
    let rows = grid
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            std::iter::once(Cell::Num(x))
                .chain(columns.iter().map(|c| Cell::Num(c[i])))
                .collect()
        })
        .collect();
    let reference = if rhs.has_reaction() {
        "exact".to_string()
    } else {
        format!("n={}", a.ref_n)
    };
    let table = Table {
        meta: vec![
            ("rhs".into(), rhs.name()),
            ("n".into(), a.n.to_string()),
            ("side".into(), a.side.to_string()),
            ("reaction".into(), rhs.has_reaction().to_string()),
            ("reference".into(), reference.clone()),
            ("grid".into(), a.grid.to_string()),
        ],
        header,
        rows,
    };
    let summary = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "pg-solve",
        "rhs": rhs.name(),
        "n": a.n,
        "side": a.side.to_string(),
        "reaction": rhs.has_reaction(),
        "reference": reference,
        "grid": a.grid,
        "orders": per_order,
    });
    Ok(Output { table, summary })
}

pub fn cmd_quad(a: &QuadArgs) -> Result<Output> {
    let (name, nodes, weights, params) = match (a.family, a.scheme) {
        (Some(family), None) => {
            check_n(a.n, 1)?;
            let nodes = node_family_points(family, a.n)?;
            let weights = interpolatory_weights(&nodes)?;
            (family.to_string(), nodes, weights, JacobiParam::LEGENDRE)
        }
        (None, Some(QuadScheme::GaussJacobi)) => {
            check_n(a.n, 1)?;
            let p = JacobiParam::new(a.alpha, a.beta)
                .check_quadrature()
                .map_err(|e| Error::Config(e.to_string()))?;
            let rule = gauss_jacobi_rule(p, a.n)?;
            ("gauss-jacobi".to_string(), rule.nodes, rule.weights, p)
        }
        _ => return Err(Error::Config("give exactly one of --family or --scheme".into())),
    };
    let weight_sum: f64 = weights.iter().sum();
    let table = Table {
        meta: vec![
            ("rule".into(), name.clone()),
            ("n".into(), a.n.to_string()),
            ("alpha".into(), params.alpha.to_string()),
            ("beta".into(), params.beta.to_string()),
        ],
        header: vec!["index".into(), "x".into(), "w".into()],
        rows: nodes
            .iter()
            .zip(&weights)
            .enumerate()
            .map(|(i, (&x, &w))| vec![Cell::Int(i), Cell::Num(x), Cell::Num(w)])
            .collect(),
    };
    let summary = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "quad",
        "rule": name,
        "n": a.n,
        "alpha": params.alpha,
        "beta": params.beta,
        "points": nodes.len(),
        "weight_sum": weight_sum,
    });
    Ok(Output { table, summary })
}

fn cmd_validate(a: &ValidateArgs, out: &mut dyn Write) -> Result<i32> {
    let report = validate::run_all();
    let body = match a.format {
        Format::Csv => {
            let mut s = String::new();
            for r in &report.results {
                let _ = writeln!(s, "{r}");
            }
            let passed = report.results.iter().filter(|r| r.passed).count();
            let _ = writeln!(s, "{passed}/{} suites passed", report.results.len());
            s
        }
        Format::Json => pretty(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "validate",
            "passed": report.all_passed(),
            "suites": report.results.iter().map(|r| json!({
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
            })).collect::<Vec<_>>(),
        })),
    };
    out.write_all(body.as_bytes())
        .map_err(|e| io_err(Path::new("<stdout>"), e))?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_VALIDATION })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["fracsuper"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn pg_frac_points_for_n1() {
        let (code, out, _) = run_str(&["points", "--scheme", "pg-frac", "--n", "1"]);
        assert_eq!(code, 0);
        let xs: Vec<f64> = out
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with("order"))
            .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
            .collect();
        let r = 1.0 / 3f64.sqrt();
        assert_eq!(xs.len(), 2);
        assert!((xs[0] + r).abs() < 1e-15 && (xs[1] - r).abs() < 1e-15);
    }

    #[test]
    fn config_errors_exit_2() {
        for args in [
            &["points", "--family", "legendre-gauss", "--n", "12", "--mu", "1.5"][..],
            &["points", "--family", "nope", "--n", "3", "--mu", "0.5"],
            &["points", "--n", "3"],
            &["interp-error", "--rhs", "builtin:ex99"],
            &["pg-solve", "--rhs", "ex41", "--n", "9", "--ref-n", "5"],
            &["pg-solve", "--s", "0"],
            &["quad", "--scheme", "gauss-jacobi", "--alpha", "-1.5", "--n", "4"],
            &["interp-error", "--grid", "1"],
            &["frobnicate"],
        ] {
            let (code, _, err) = run_str(args);
            assert_eq!(code, EXIT_CONFIG, "{args:?}: {err}");
            assert!(!err.is_empty());
        }
    }

    #[test]
    fn json_output_is_versioned() {
        let (code, out, _) = run_str(&["quad", "--family", "legendre-lobatto", "--n", "4", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert!((v["summary"]["weight_sum"].as_f64().unwrap() - 2.0).abs() < 1e-14);
        assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("pg-solve"));
    }
}
