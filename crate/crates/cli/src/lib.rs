//! Command-line front end: expression parsing, the coproduct and antipode of a
//! chosen quantization, and the check-suite runner.

pub mod expr;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eala_twist::scalars::render_rational;
use eala_twist::series::Series;
use eala_twist::twist::{parse_degree, parse_rational_pair, Case, ContextError, Oracle, TwistContext};
use eala_twist::uea::{Tensor, UElt};
use eala_twist::verify::{run_suite, Grid, Suite, Summary, Verdict};
use serde_json::{json, Value};

use crate::expr::parse_elt;

#[derive(Parser, Debug)]
#[command(name = "eala-twist", version, about = "Twisted Hopf structures on U(sl2(C_q) + C d1 + C d2)")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The commutator `[a, b]` in PBW normal form.
    Bracket { a: String, b: String },
    /// The PBW normal form of an expression.
    Nf { expr: String },
    /// The twisted coproduct of an expression, mod t^(N+1).
    Delta {
        #[command(flatten)]
        ctx: ContextArgs,
        expr: String,
    },
    /// The twisted antipode of an expression, mod t^(N+1).
    Antipode {
        #[command(flatten)]
        ctx: ContextArgs,
        expr: String,
    },
    /// The twist F and the element u = mu(Id⊗S0)F.
    Twist {
        #[command(flatten)]
        ctx: ContextArgs,
    },
    /// Runs check suites and prints a summary.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct ContextArgs {
    /// Which quantization: g, e, d, h, f or df.
    #[arg(long)]
    pub case: String,
    /// The degree n of E, as `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    pub n: String,
    /// The coefficients of T = x1 d1 + x2 d2, as `p,q`; defaults to the simplest solution of x.n = 1.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Truncation order N.
    #[arg(long, default_value_t = 3)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// `all` or a suite id; repeatable.
    #[arg(long, default_value = "all")]
    pub suite: Vec<String>,
    /// Truncation order N for the series checks.
    #[arg(long)]
    pub order: Option<usize>,
    /// Seed for the sampled generator pairs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Parameter grid.
    #[arg(long, value_enum, default_value_t = GridChoice::Default)]
    pub grid: GridChoice,
    /// List the suites and exit.
    #[arg(long)]
    pub list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GridChoice {
    Default,
    Quick,
}

/// What a command produced: the process exit code and both output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: 0, stdout, stderr: String::new() }
    }

    fn usage(stderr: String) -> Self {
        Output { code: 2, stdout: String::new(), stderr }
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Output::usage(text) } else { Output::ok(text) };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(message) => Output::usage(format!("error: {message}\n")),
    }
}

fn element(input: &str) -> Result<UElt, String> {
    parse_elt(input).map_err(|e| e.annotate(input))
}

fn context(args: &ContextArgs) -> Result<TwistContext, String> {
    let explain = |e: ContextError| format!("invalid context: {e}");
    let case: Case = args.case.parse().map_err(explain)?;
    let n = parse_degree(&args.n).map_err(explain)?;
    let x = args.x.as_deref().map(parse_rational_pair).transpose().map_err(explain)?;
    TwistContext::new(case, n, x, args.order).map_err(explain)
}

fn execute(cli: &Cli) -> Result<Output, String> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Bracket { a, b } => {
            let (x, y) = (element(a)?, element(b)?);
            let r = &(&x * &y) - &(&y * &x);
            Ok(Output::ok(if json {
                line(json!({ "command": "bracket", "input": [a, b], "result": elt_json(&r) }))
            } else {
                format!("{r}\n")
            }))
        }
        Command::Nf { expr } => {
            let x = element(expr)?;
            Ok(Output::ok(if json {
                line(json!({ "command": "nf", "input": expr, "result": elt_json(&x) }))
            } else {
                format!("{x}\n")
            }))
        }
        Command::Delta { ctx, expr } => {
            let ctx = context(ctx)?;
            let x = element(expr)?;
            let s = Oracle::new(&ctx).delta(&x);
            Ok(Output::ok(if json {
                line(json!({
                    "command": "delta",
                    "context": ctx_json(&ctx),
                    "input": expr,
                    "series": tensor_series_json(&s),
                }))
            } else {
                format!("{}\n", s.render_terms())
            }))
        }
        Command::Antipode { ctx, expr } => {
            let ctx = context(ctx)?;
            let x = element(expr)?;
            let s = Oracle::new(&ctx).antipode(&x);
            Ok(Output::ok(if json {
                line(json!({
                    "command": "antipode",
                    "context": ctx_json(&ctx),
                    "input": expr,
                    "series": elt_series_json(&s),
                }))
            } else {
                format!("{}\n", s.render_terms())
            }))
        }
        Command::Twist { ctx } => {
            let ctx = context(ctx)?;
            let oracle = Oracle::new(&ctx);
            Ok(Output::ok(if json {
                line(json!({
                    "command": "twist",
                    "context": ctx_json(&ctx),
                    "twist": tensor_series_json(oracle.twist()),
                    "u": elt_series_json(oracle.u()),
                }))
            } else {
                format!("F = {}\nu = {}\n", oracle.twist().render_terms(), oracle.u().render_terms())
            }))
        }
        Command::Check(args) => check(args, json),
    }
}

fn check(args: &CheckArgs, json: bool) -> Result<Output, String> {
    if args.list {
        let mut out = String::new();
        for s in Suite::ALL {
            let _ = writeln!(out, "{:<22} {}", s.id(), s.about());
        }
        return Ok(Output::ok(out));
    }
    let mut suites = Vec::new();
    for name in &args.suite {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(name.parse::<Suite>().map_err(|e| format!("{e}; see `check --list`"))?);
        }
    }
    let mut grid = match args.grid {
        GridChoice::Default => Grid::default(),
        GridChoice::Quick => Grid::quick(),
    }
    .with_seed(args.seed);
    if let Some(order) = args.order {
        grid = grid.with_order(order);
    }
    let summary = Summary::new(suites.iter().flat_map(|&s| run_suite(s, &grid)).collect());
    let mut out = String::new();
    if json {
        for r in &summary.results {
            out.push_str(&r.to_json_line());
            out.push('\n');
        }
        out.push_str(&line(json!({
            "summary": {
                "pass": summary.count(Verdict::Pass),
                "fail": summary.count(Verdict::Fail),
                "paper-discrepancy": summary.count(Verdict::PaperDiscrepancy),
            }
        })));
    } else {
        out.push_str(&summary.table());
        let found: Vec<_> = summary.discrepancies().collect();
        if !found.is_empty() {
            let _ = writeln!(out, "\n{} printed-formula discrepancies; first few:", found.len());
            for r in found.iter().take(5) {
                let _ = writeln!(out, "  {} {}: {}", r.suite, r.item, r.detail.as_deref().unwrap_or(""));
            }
        }
        for r in summary.failures() {
            let _ = writeln!(out, "FAIL {} {}: {}", r.suite, r.item, r.detail.as_deref().unwrap_or(""));
        }
    }
    let code = if summary.all_green() { 0 } else { 1 };
    Ok(Output { code, stdout: out, stderr: String::new() })
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn ctx_json(ctx: &TwistContext) -> Value {
    let n = ctx.n();
    json!({
        "case": ctx.case().tag(),
        "n": [n.0, n.1],
        "x": ctx.x().map(|(a, b)| json!([render_rational(a), render_rational(b)])),
        "order": ctx.order(),
    })
}

fn elt_json(x: &UElt) -> Value {
    let terms: Vec<Value> = x.terms().map(|(m, c)| json!({ "coeff": c.to_string(), "mono": m.to_string() })).collect();
    json!({ "text": x.to_string(), "terms": terms })
}

fn tensor_json(x: &Tensor) -> Value {
    let terms: Vec<Value> = x
        .display_terms()
        .into_iter()
        .map(|(legs, c)| json!({ "coeff": c.to_string(), "legs": legs.iter().map(|m| m.to_string()).collect::<Vec<_>>() }))
        .collect();
    json!({ "text": x.to_string(), "tensor": terms })
}

fn tensor_series_json(s: &Series<Tensor>) -> Value {
    let coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mut v = tensor_json(c);
            v["power"] = json!(k);
            v
        })
        .collect();
    json!({ "order": s.order(), "text": s.render_terms(), "coefficients": coeffs })
}

fn elt_series_json(s: &Series<UElt>) -> Value {
    let coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mut v = elt_json(c);
            v["power"] = json!(k);
            v
        })
        .collect();
    json!({ "order": s.order(), "text": s.render_terms(), "coefficients": coeffs })
}
