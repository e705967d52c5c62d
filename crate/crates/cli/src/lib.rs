//! Command-line front end for `sharp-core`.
//!
//! Exit codes: 0 success / member / positive, 1 not-member / not-positive /
//! suite failures, 2 unknown, 3 usage or input error.

pub mod compile;
pub mod dsl;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sharp_core::genfun::{default_domain, lpdo_apply, IntervalDomain};
use sharp_core::order::{abs, order_compare, proot, scalar_ball_member, sharp_dist, sharp_norm};
use sharp_core::rational::{fmt_rat, parse_rat};
use sharp_core::sampled::{
    estimate_valuation, falsify_order, oracle_ball_member, oscillating_preset, Direction, EstimateVerdict,
    Falsification, OracleVerdict,
};
use sharp_core::topology::{converges_genfun, converges_scalar, dnp, lpdo_sequence, vnp};
use sharp_core::{
    axiom_check, Axiom, Basis, BallSpec, Comparison, ExactNet, GridConfig, Iota, Membership, Rational, Root,
};

use compile::{compile, compile_in, CompileError, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sharp", version, about = "Exact generalized numbers and their sharp topologies")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Deepest grid index J (ε = 2^-J)
    #[arg(long, global = true, default_value_t = 200)]
    pub grid_depth: u32,
    /// Number of grid points in the tail window
    #[arg(long, global = true, default_value_t = 64)]
    pub tail_window: usize,
    /// Null-probe exponent B: sampled values with |v| <= ε^B count as zero
    #[arg(long, global = true, default_value = "50", value_parser = rational_arg)]
    pub tolerance: Rational,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Open interval for generalized functions, e.g. "-2,2" or "0,inf"
    #[arg(long, global = true, default_value = "-2,2", value_parser = domain_arg, allow_hyphen_values = true)]
    pub domain: IntervalDomain,
    /// Comma-separated ι schedule for sampled full nets, e.g. "3/pi,1/2"
    #[arg(long, global = true, value_parser = iota_list_arg, allow_hyphen_values = true)]
    pub iota: Option<IotaSchedule>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            grid_depth: 200,
            tail_window: 64,
            tolerance: Rational::from_integer(50.into()),
            seed: 7,
            samples: 200,
            format: Format::Text,
            domain: default_domain(),
            iota: None,
        }
    }
}

impl Config {
    fn grid(&self) -> GridConfig {
        GridConfig {
            j_max: self.grid_depth,
            tail: self.tail_window,
            null_exp: self.tolerance.clone(),
            ..GridConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Geq0,
    Leq0,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Valuation (exact, or estimated for sampled nets)
    Valuation {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Sharp norm e^{-v(x)}
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Sharp distance e^{-v(x - y)}
    Dist {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Order comparison of x against y
    Compare {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Absolute value
    Abs {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// p-th root of a nonnegative number
    Root {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        p: u32,
    },
    /// Membership in V_r, or in W^beta_{l,r} when beta and l are given
    Member {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true, value_parser = rational_arg)]
        r: Rational,
        beta: Option<usize>,
        l: Option<u64>,
    },
    /// Leading data of the seminorm ‖∂^beta f‖ on the l-th compact
    Seminorm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        beta: usize,
        l: u64,
    },
    /// Integral over [m1, m2]
    Integrate {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true, value_parser = rational_arg)]
        m1: Rational,
        #[arg(allow_hyphen_values = true, value_parser = rational_arg)]
        m2: Rational,
    },
    /// beta-th derivative
    Derive {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        beta: usize,
    },
    /// Σ_k a_k ∂^k f for coefficients a_0, a_1, ...
    Lpdo {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Least valuation of ∂^σ f, σ <= p, on the n-th compact
    Vnp {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        n: u64,
        p: usize,
    },
    /// Pseudometric d_np(f, g)
    Dnp {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        n: u64,
        p: usize,
    },
    /// Filter-basis axiom suite
    AxiomSuite {
        /// B, B_s, B_Omega or B_sOmega; all four when omitted
        #[arg(long, value_parser = basis_arg)]
        basis: Vec<Basis>,
        /// GA'_I, GA'_II, AV'_I, AV'_II, MV'_I, MV'_II, MV'_III
        #[arg(long, value_parser = axiom_arg)]
        axiom: Vec<Axiom>,
        /// Also run the MV' axioms
        #[arg(long)]
        mv: bool,
    },
    /// Convergence of α_n·x to 0, or of (x∂ + 1)(α_n·g) for functions
    Converge {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 20)]
        upto: usize,
    },
    /// Search the grid for witnesses against x >= 0 and x <= 0
    Falsify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value_t = DirectionArg::Both)]
        direction: DirectionArg,
    },
    /// Run newline-separated commands from a file ('#' starts a comment)
    Script { file: PathBuf },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rat(s).ok_or_else(|| format!("'{s}' is not a rational"))
}

fn basis_arg(s: &str) -> Result<Basis, String> {
    Basis::parse(s).ok_or_else(|| format!("unknown basis '{s}'"))
}

fn axiom_arg(s: &str) -> Result<Axiom, String> {
    Axiom::parse(s).ok_or_else(|| format!("unknown axiom '{s}'"))
}

fn domain_arg(s: &str) -> Result<IntervalDomain, String> {
    let (a, b) = s.split_once(',').ok_or("expected 'lo,hi'")?;
    let end = |t: &str, inf: &str| -> Result<Option<Rational>, String> {
        let t = t.trim();
        if t == inf {
            Ok(None)
        } else {
            rational_arg(t).map(Some)
        }
    };
    IntervalDomain::new(end(a, "-inf")?, end(b, "inf")?).map_err(|e| e.to_string())
}

fn iota_arg(s: &str) -> Result<Iota, String> {
    let s = s.trim();
    if let Some(q) = s.strip_suffix("/pi") {
        let q = q.trim().trim_start_matches('(').trim_end_matches(')');
        return rational_arg(q).map(Iota::OverPi);
    }
    rational_arg(s).map(Iota::Value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IotaSchedule(pub Vec<Iota>);

fn iota_list_arg(s: &str) -> Result<IotaSchedule, String> {
    s.split(',').map(iota_arg).collect::<Result<_, _>>().map(IotaSchedule)
}

/// Output of one command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<(String, Vec<String>)>,
    /// Preformatted output that bypasses `render` (script transcripts).
    verbatim: Option<String>,
    pub code: i32,
}

impl Report {
    fn new(code: i32) -> Self {
        Report {
            lines: Vec::new(),
            verbatim: None,
            code,
        }
    }

    fn line(mut self, key: &str, fields: impl IntoIterator<Item = String>) -> Self {
        self.lines.push((key.to_string(), fields.into_iter().collect()));
        self
    }

    fn single(code: i32, key: &str, value: impl ToString) -> Self {
        Report::new(code).line(key, [value.to_string()])
    }

    /// Single-line reports and unkeyed lines print only their fields in
    /// text form.
    pub fn render(&self, format: Format) -> String {
        if let Some(v) = &self.verbatim {
            return v.clone();
        }
        let mut out = String::new();
        for (key, fields) in &self.lines {
            match format {
                Format::Text if self.lines.len() == 1 || key.is_empty() => writeln!(out, "{}", fields.join(" ")),
                Format::Text => writeln!(out, "{key}: {}", fields.join(" ")),
                Format::Tsv if key.is_empty() => writeln!(out, "{}", fields.join("\t")),
                Format::Tsv => writeln!(out, "{key}\t{}", fields.join("\t")),
            }
            .expect("write to string");
        }
        out
    }
}

#[derive(Debug)]
pub struct Failure(pub String);

impl From<CompileError> for Failure {
    fn from(e: CompileError) -> Self {
        Failure(e.0)
    }
}

impl From<sharp_core::Error> for Failure {
    fn from(e: sharp_core::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<dsl::ParseError> for Failure {
    fn from(e: dsl::ParseError) -> Self {
        Failure(format!("parse error at {e}"))
    }
}

fn value(s: &str, config: &Config) -> Result<Value, Failure> {
    Ok(compile(&dsl::parse(s)?, &config.domain)?)
}

fn exact(s: &str, config: &Config) -> Result<ExactNet, Failure> {
    Ok(value(s, config)?.exact()?.clone())
}

/// Two operands in a common model: either one mentioning `i` puts both in
/// the full model.
fn values(a: &str, b: &str, config: &Config) -> Result<(Value, Value), Failure> {
    let (a, b) = (dsl::parse(a)?, dsl::parse(b)?);
    let full = a.has_iota() || b.has_iota();
    Ok((compile_in(&a, &config.domain, full)?, compile_in(&b, &config.domain, full)?))
}

fn exact_pair(a: &str, b: &str, config: &Config) -> Result<(ExactNet, ExactNet), Failure> {
    let (a, b) = values(a, b, config)?;
    Ok((a.exact()?.clone(), b.exact()?.clone()))
}

fn membership_code(m: Membership) -> i32 {
    match m {
        Membership::Member => EXIT_OK,
        Membership::NotMember => EXIT_NO,
        Membership::Unknown => EXIT_UNKNOWN,
    }
}

fn schedule(config: &Config, net_is_full: bool) -> Vec<Iota> {
    match &config.iota {
        Some(s) => s.0.clone(),
        None if net_is_full => oscillating_preset().1,
        None => Vec::new(),
    }
}

pub fn run(command: &Command, config: &Config) -> Result<Report, Failure> {
    let grid = config.grid();
    Ok(match command {
        Command::Valuation { expr } => match value(expr, config)? {
            Value::Exact(x) => Report::single(EXIT_OK, "valuation", x.valuation()),
            Value::Fun(g) => Report::single(EXIT_OK, "valuation", g.valuation()),
            Value::Sampled(s) => {
                let iota = config.iota.as_ref().and_then(|v| v.0.first());
                let est = estimate_valuation(&s, &grid, iota);
                let shown = match est.verdict {
                    EstimateVerdict::Finite(v) => format!("~{v:.6} +-{:.1e}", est.half_width),
                    EstimateVerdict::PlausiblyInfinite => "inf?".to_string(),
                };
                Report::single(EXIT_OK, "valuation", shown)
            }
        },
        Command::Norm { expr } => match value(expr, config)? {
            Value::Exact(x) => Report::single(EXIT_OK, "norm", sharp_norm(&x)?),
            Value::Sampled(s) => match estimate_valuation(&s, &grid, None).verdict {
                EstimateVerdict::Finite(v) => Report::single(EXIT_OK, "norm", format!("~{}", (-v).exp())),
                EstimateVerdict::PlausiblyInfinite => Report::single(EXIT_OK, "norm", "0?"),
            },
            Value::Fun(_) => return Err(Failure("norm expects a generalized number".into())),
        },
        Command::Dist { x, y } => {
            let (x, y) = exact_pair(x, y, config)?;
            Report::single(EXIT_OK, "dist", sharp_dist(&x, &y)?)
        }
        Command::Compare { x, y } => {
            let (x, y) = exact_pair(x, y, config)?;
            let c = order_compare(&x, &y)?;
            let code = match c {
                Comparison::Leq | Comparison::Geq | Comparison::Eq => EXIT_OK,
                Comparison::Incomparable => EXIT_NO,
                Comparison::Unknown => EXIT_UNKNOWN,
            };
            Report::single(code, "compare", c)
        }
        Command::Abs { expr } => match abs(&exact(expr, config)?) {
            sharp_core::NetOrSampled::Exact(n) => Report::single(EXIT_OK, "abs", n),
            sharp_core::NetOrSampled::Sampled(s) => Report::single(EXIT_OK, "abs", format!("sampled {}", s.label())),
        },
        Command::Root { expr, p } => match proot(&exact(expr, config)?, *p)? {
            Root::Exact { net, exact_coeff } => Report::new(EXIT_OK)
                .line("root", [net.to_string()])
                .line("exact-coeff", [exact_coeff.to_string()]),
            Root::Sampled(s) => {
                let mut r = Report::new(EXIT_OK).line("root", [format!("sampled {}", s.label())]);
                if let Some(l) = s.lead() {
                    r = r.line(
                        "lead",
                        [fmt_rat(&l.coeff), format!("e^({})", fmt_rat(&l.eps_exp)), format!("i^({})", fmt_rat(&l.iota_exp))],
                    );
                }
                r
            }
        },
        Command::Member { expr, r, beta, l } => member(expr, r, *beta, *l, config)?,
        Command::Seminorm { expr, beta, l } => {
            let g = value(expr, config)?.genfun(&config.domain)?;
            let d = g.seminorm(*beta, *l);
            let mut rep = Report::new(EXIT_OK)
                .line("lead_exp", [d.lead_exp.to_string()])
                .line("compact", [format!("[{}, {}]", fmt_rat(&d.compact.0), fmt_rat(&d.compact.1))]);
            if let Some(s) = &d.lead_sup {
                rep = rep.line("lead_sup", [format!("{:.15}", s.mid_f64()), format!("[{}, {}]", fmt_rat(&s.lo), fmt_rat(&s.hi))]);
            }
            rep
        }
        Command::Integrate { expr, m1, m2 } => {
            let g = value(expr, config)?.genfun(&config.domain)?;
            Report::single(EXIT_OK, "integral", g.integrate(m1, m2)?)
        }
        Command::Derive { expr, beta } => {
            let g = value(expr, config)?.genfun(&config.domain)?;
            Report::single(EXIT_OK, "derivative", g.derive(*beta))
        }
        Command::Lpdo { expr, coeffs } => {
            let f = value(expr, config)?.genfun(&config.domain)?;
            let cs = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| Ok((value(c, config)?.genfun(&config.domain)?, k)))
                .collect::<Result<Vec<_>, Failure>>()?;
            Report::single(EXIT_OK, "lpdo", lpdo_apply(&cs, &f)?)
        }
        Command::Vnp { expr, n, p } => {
            let g = value(expr, config)?.genfun(&config.domain)?;
            Report::single(EXIT_OK, "vnp", vnp(&g, *n, *p))
        }
        Command::Dnp { f, g, n, p } => {
            let (f, g) = values(f, g, config)?;
            let (f, g) = (f.genfun(&config.domain)?, g.genfun(&config.domain)?);
            Report::single(EXIT_OK, "dnp", dnp(&f, &g, *n, *p)?)
        }
        Command::AxiomSuite { basis, axiom, mv } => axiom_suite(basis, axiom, *mv, config),
        Command::Converge { expr, upto } => {
            let cert = match value(expr, config)? {
                Value::Exact(x) => {
                    let zero = ExactNet::zero(x.model());
                    converges_scalar(|n| ExactNet::alpha(Rational::from_integer(n.into()), x.model()) * x.clone(), &zero, *upto)?
                }
                Value::Fun(g) => {
                    let zero = sharp_core::genfun::GenFun::zero(g.model(), g.domain().clone());
                    let seq = (0..=*upto).map(|n| lpdo_sequence(&g, n)).collect::<Result<Vec<_>, _>>()?;
                    converges_genfun(|n| seq[n].clone(), &zero, &[(1, 0), (1, 1), (2, 1)], *upto)?
                }
                Value::Sampled(_) => return Err(Failure("converge expects an exact expression".into())),
            };
            let mut rep = Report::new(if cert.converges { EXIT_OK } else { EXIT_NO });
            for (n, v) in &cert.table {
                rep = rep.line("n", [n.to_string(), v.to_string()]);
            }
            rep.line("verdict", [if cert.converges { "converges" } else { "not-certified" }.to_string()])
        }
        Command::Falsify { expr, direction } => falsify(expr, *direction, config)?,
        Command::Script { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure(format!("{}: {e}", file.display())))?;
            let (out, code) = run_script(&text, config);
            Report {
                verbatim: Some(out),
                ..Report::new(code)
            }
        }
    })
}

fn member(expr: &str, r: &Rational, beta: Option<usize>, l: Option<u64>, config: &Config) -> Result<Report, Failure> {
    let v = value(expr, config)?;
    let rep = match (&v, beta) {
        (Value::Exact(x), None) => {
            let m = scalar_ball_member(x, &BallSpec::new(x.model(), r.clone()))?;
            Report::single(membership_code(m), "member", m)
        }
        (Value::Sampled(s), None) => {
            let grid = config.grid();
            match oracle_ball_member(s, r, &grid.b_list, &schedule(config, s.is_full()), &grid) {
                OracleVerdict::Consistent => Report::single(EXIT_UNKNOWN, "member", "unknown (no witness on the grid)"),
                OracleVerdict::Refuted(w) => Report::new(EXIT_NO)
                    .line("member", ["not-member".to_string()])
                    .line("witness", [w.to_string()]),
            }
        }
        (Value::Sampled(_), Some(_)) => return Err(Failure("function balls need an exact expression".into())),
        _ => {
            let g = v.genfun(&config.domain)?;
            let m = g.ball_member(beta.unwrap_or(0), l.unwrap_or(1), r);
            Report::single(membership_code(m), "member", m)
        }
    };
    Ok(rep)
}

fn axiom_suite(basis: &[Basis], axiom: &[Axiom], mv: bool, config: &Config) -> Report {
    let bases: Vec<Basis> = if basis.is_empty() { Basis::ALL.to_vec() } else { basis.to_vec() };
    let axioms: Vec<Axiom> = match (axiom.is_empty(), mv) {
        (false, _) => axiom.to_vec(),
        (true, false) => Axiom::DEFAULT.to_vec(),
        (true, true) => Axiom::ALL.to_vec(),
    };
    let mut rep = Report::new(EXIT_OK);
    let (mut failures, mut unknowns) = (0, 0);
    for b in &bases {
        for a in &axioms {
            let r = axiom_check(*b, *a, config.samples, config.seed);
            failures += r.failures.len();
            unknowns += r.unknowns.len();
            rep = rep.line("", r.line().split(' ').map(str::to_string).collect::<Vec<_>>());
            for f in &r.failures {
                rep = rep.line("failure", [format!("sample {}: {}", f.index, f.detail)]);
            }
        }
    }
    rep.code = if failures > 0 { EXIT_NO } else { EXIT_OK };
    rep.line("", [format!("{failures} failures")]).line("", [format!("{unknowns} unknowns")])
}

fn falsify(expr: &str, direction: DirectionArg, config: &Config) -> Result<Report, Failure> {
    let s = value(expr, config)?.sampled()?;
    let grid = config.grid();
    let sched = schedule(config, s.is_full());
    let dirs = match direction {
        DirectionArg::Geq0 => vec![Direction::Geq0],
        DirectionArg::Leq0 => vec![Direction::Leq0],
        DirectionArg::Both => vec![Direction::Geq0, Direction::Leq0],
    };
    let mut rep = Report::new(EXIT_UNKNOWN);
    for d in dirs {
        match falsify_order(&s, d, &grid.b_list, &sched, &grid) {
            Falsification::Falsified(w) => {
                rep.code = EXIT_NO;
                rep = rep.line(&d.to_string(), ["falsified".to_string(), w.to_string()]);
            }
            Falsification::NotFalsified => rep = rep.line(&d.to_string(), ["not-falsified".to_string()]),
        }
    }
    Ok(rep)
}

/// Runs each nonblank, non-comment line as a command; the transcript echoes
/// every command after `> `. The exit code is the largest of the line codes.
pub fn run_script(text: &str, config: &Config) -> (String, i32) {
    let mut out = String::new();
    let mut code = EXIT_OK;
    for raw in text.lines() {
        let line = raw.split_once('#').map_or(raw, |(a, _)| a).trim();
        if line.is_empty() {
            continue;
        }
        writeln!(out, "> {line}").expect("write to string");
        let (text, c) = match shlex::split(line) {
            None => ("error: unbalanced quotes\n".to_string(), EXIT_USAGE),
            Some(words) => run_words(std::iter::once("sharp".to_string()).chain(words), Some(config)),
        };
        out.push_str(&text);
        code = code.max(c);
    }
    (out, code)
}

/// Result of one invocation, split by destination stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses argv-style words and runs the command; flags given in `words`
/// override `base` (used by scripts, whose lines inherit the outer flags).
pub fn execute(words: impl IntoIterator<Item = String>, base: Option<&Config>) -> Execution {
    let words: Vec<String> = words.into_iter().collect();
    let done = |stdout: String, stderr: String, code| Execution { stdout, stderr, code };
    let cli = match Cli::try_parse_from(inherit(&words, base)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    done(text, String::new(), EXIT_OK)
                }
                _ => done(String::new(), text, EXIT_USAGE),
            };
        }
    };
    match run(&cli.command, &cli.config) {
        Ok(rep) => done(rep.render(cli.config.format), String::new(), rep.code),
        Err(Failure(msg)) => done(String::new(), format!("error: {msg}\n"), EXIT_USAGE),
    }
}

/// [`execute`] with both streams concatenated.
pub fn run_words(words: impl IntoIterator<Item = String>, base: Option<&Config>) -> (String, i32) {
    let e = execute(words, base);
    (e.stdout + &e.stderr, e.code)
}

/// Prepends the outer configuration as explicit flags; later flags win.
fn inherit(words: &[String], base: Option<&Config>) -> Vec<String> {
    let Some(c) = base else {
        return words.to_vec();
    };
    let mut out = vec![words[0].clone()];
    let format = match c.format {
        Format::Text => "text",
        Format::Tsv => "tsv",
    };
    let lo = c.domain.lower().map_or("-inf".to_string(), fmt_rat);
    let hi = c.domain.upper().map_or("inf".to_string(), fmt_rat);
    out.extend([
        format!("--grid-depth={}", c.grid_depth),
        format!("--tail-window={}", c.tail_window),
        format!("--tolerance={}", fmt_rat(&c.tolerance)),
        format!("--seed={}", c.seed),
        format!("--samples={}", c.samples),
        format!("--format={format}"),
        format!("--domain={lo},{hi}"),
    ]);
    if let Some(sched) = &c.iota {
        out.push(format!("--iota={}", sched.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")));
    }
    out.extend(words[1..].iter().cloned());
    out
}
