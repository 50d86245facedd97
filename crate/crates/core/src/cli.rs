//! Command-line surface: reproducible certificate runs with text or JSON output.
//!
//! Exit codes: 0 all certificates pass, 1 some certificate failed, 2 usage or
//! parse error, 3 inadmissible parameters, 4 eigenvalue without operator at the
//! requested order, 5 unsupported singular `A`.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance::{self, k2_samples, DEFAULT_SEED};
use crate::certificate::Certificate;
use crate::darboux::{orthogonality_check, tau_minus_one_closed_form, SystemSpec};
use crate::eigen::{
    algebra_basis, algebra_membership, bhat_closed_form_k1, bhat_linear_solve, eigen_verify, k1_generators,
    EigenOperator, SolveOutcome,
};
use crate::error::Error;
use crate::exact::rat::{as_i64, parse_rat, parse_rat_list, rat_to_string, Rat};
use crate::exact::NPoly;
use crate::genericity::{
    abar_probe, closed_form_k1, closed_form_k2, genericity_report, resultant_symbolic, squared_resultant_check,
    ProbeFilter, ProbeReport,
};
use crate::laguerre::{
    laguerre_derivative_relation_check, laguerre_diffeq_check, laguerre_norm_check, laguerre_recurrence_check,
    LaguerreFamily,
};
use crate::sobolev::{
    params_from_a, pentadiagonal_factorization_check, sobolev_orthogonality_check, SobolevInnerProduct,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "krall", version, about = "Exact certificates for Krall-Laguerre systems")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomized property suites; constructions ignore it.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Upper index for certificate checks (per-command default otherwise).
    #[arg(long = "verify-n", global = true)]
    pub verify_n: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classical Laguerre identities and norms.
    Classical {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 12)]
        n: i64,
    },
    /// Darboux-transformed system: tau, admissibility, Jacobi rows, weights.
    System {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated rationals `b0,b1,...`.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = 12)]
        n: i64,
    },
    /// Differential operator with a prescribed eigenvalue.
    Operator {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Index of the algebra generator.
        #[arg(long, conflicts_with = "h")]
        generator: Option<usize>,
        /// Eigenvalue coefficients, constant term first.
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
        /// Maximal operator order (default `2 deg h`).
        #[arg(long)]
        order_cap: Option<usize>,
        /// Print only the operator in this form.
        #[arg(long, value_enum)]
        emit: Option<Format>,
    },
    /// Resultant, genericity and the eigenvalue probe.
    Genericity {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Resultant as a polynomial in the parameters (`k <= 2`).
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        max_deg: Option<usize>,
        /// Probe every candidate instead of the divisibility-filtered ones.
        #[arg(long)]
        unfiltered: bool,
        #[arg(long)]
        no_probe: bool,
    },
    /// Sobolev inner product with boundary matrix `A = [[u0, u1], [u1, v0]]`.
    Sobolev {
        #[arg(long)]
        alpha: u32,
        /// `u0,u1,v0`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 12)]
        n: i64,
        #[arg(long)]
        no_probe: bool,
    },
    /// All acceptance criteria.
    Selftest {
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
    NoOperator(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::NoOperator(_) => 4,
            CliError::Lib(e) => match e {
                Error::Inadmissible { .. } => 3,
                Error::UnsupportedSingularA => 5,
                Error::NegativeMoment | Error::UndefinedResultant | Error::UParametersNotDetermined => 1,
                Error::OrderMismatch { .. } => 1,
                Error::Parse(_) | Error::InvalidSpec(_) | Error::PhiUndefined { .. } => 2,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::NoOperator(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Human-readable lines, structured data and the certificates of one run.
#[derive(Debug, Default)]
pub struct Report {
    pub command: &'static str,
    pub lines: Vec<String>,
    pub data: serde_json::Map<String, Value>,
    pub certificates: Vec<Certificate>,
    /// Replaces the whole output when set (`operator --emit`).
    pub raw: Option<String>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report { command, ..Default::default() }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn put(&mut self, key: &str, v: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(v).expect("report data serializes"));
    }

    pub fn pass(&self) -> bool {
        Certificate::all(&self.certificates)
    }

    pub fn render(&self, format: Format) -> String {
        if let Some(raw) = &self.raw {
            return format!("{raw}\n");
        }
        match format {
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "pass": self.pass(),
                    "data": self.data,
                    "certificates": self.certificates,
                });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            }
            Format::Text => {
                let mut out = String::new();
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                for c in &self.certificates {
                    out.push_str(&format!("{c}\n"));
                }
                let verdict = if self.pass() { "PASS" } else { "FAIL" };
                out.push_str(&format!("overall: {verdict}\n"));
                out
            }
        }
    }
}

/// Exit code and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(report) => Outcome {
            code: if report.pass() { 0 } else { 1 },
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err(e) => {
            let code = e.exit_code();
            let stderr = match cli.format {
                Format::Json => format!("{}\n", json!({ "error": e.to_string(), "exit_code": code })),
                Format::Text => format!("error: {e}\n"),
            };
            Outcome { code, stdout: String::new(), stderr }
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Classical { alpha, n } => cmd_classical(alpha, cli.verify_n.unwrap_or(*n)),
        Command::System { alpha, k, beta, n } => cmd_system(*alpha, *k, beta, *n, cli.verify_n.unwrap_or(*n)),
        Command::Operator { alpha, k, beta, generator, h, order_cap, emit } => {
            let spec = build_system(*alpha, *k, beta)?;
            let source = match (generator, h) {
                (Some(j), None) => HSource::Generator(*j),
                (None, Some(h)) => HSource::Explicit(parse_rat_list(h)?),
                _ => return Err(CliError::Usage("give exactly one of --generator or --h".into())),
            };
            cmd_operator(&spec, source, *order_cap, *emit, cli.verify_n.unwrap_or(40))
        }
        Command::Genericity { alpha, k, beta, symbolic, max_deg, unfiltered, no_probe } => {
            if *symbolic {
                let k = k.ok_or_else(|| CliError::Usage("--symbolic needs --k".into()))?;
                return cmd_genericity_symbolic(*alpha, k);
            }
            let beta = beta.as_deref().ok_or_else(|| CliError::Usage("give --beta or --symbolic".into()))?;
            let spec = build_system(*alpha, *k, beta)?;
            let filter = if *unfiltered { ProbeFilter::Unfiltered } else { ProbeFilter::Divisibility };
            cmd_genericity(&spec, (!no_probe).then_some((*max_deg, filter)))
        }
        Command::Sobolev { alpha, a, n, no_probe } => {
            cmd_sobolev(*alpha, a, cli.verify_n.unwrap_or(*n), !no_probe)
        }
        Command::Selftest { criterion } => cmd_selftest(*criterion, cli.seed),
    }
}

fn build_system(alpha: u32, k: Option<usize>, beta: &str) -> CliResult<SystemSpec> {
    let beta = parse_rat_list(beta)?;
    if let Some(k) = k {
        if k != beta.len() {
            return Err(CliError::Usage(format!("--k {k} but {} beta values given", beta.len())));
        }
    }
    Ok(SystemSpec::new(alpha, beta)?)
}

fn require_admissible(spec: &SystemSpec) -> CliResult<()> {
    Ok(spec.basis().require_admissible()?)
}

pub fn cmd_classical(alpha: &str, n: i64) -> CliResult<Report> {
    let alpha = parse_rat(alpha)?;
    let fam = LaguerreFamily::new(alpha.clone())?;
    let mut r = Report::new("classical");
    r.line(format!("alpha = {}", rat_to_string(&alpha)));
    r.put("alpha", rat_to_string(&alpha));
    for m in 0..=3 {
        r.line(format!("L_{m}(x) = {}", fam.poly(m)));
    }
    r.put("polys", (0..=3).map(|m| fam.poly(m)).collect::<Vec<_>>());
    r.line(format!("B = {}", fam.operator()));
    if alpha.is_zero() {
        r.line("alpha = 0: classical identities only, no Darboux step is available");
    }
    r.certificates.push(laguerre_recurrence_check(&alpha, n));
    r.certificates.push(laguerre_diffeq_check(&alpha, n));
    r.certificates.push(laguerre_derivative_relation_check(&alpha, n));
    match as_i64(&alpha).and_then(|a| u32::try_from(a).ok()) {
        Some(a) => r.certificates.push(laguerre_norm_check(a, n)),
        None => r.line("norm check skipped: alpha is not a nonnegative integer"),
    }
    Ok(r)
}

pub fn cmd_system(alpha: u32, k: Option<usize>, beta: &str, rows: i64, n: i64) -> CliResult<Report> {
    let spec = build_system(alpha, k, beta)?;
    let mut r = Report::new("system");
    r.line(format!("alpha = {alpha}, k = {}", spec.k()));
    r.line(format!("tau(n) = {}", spec.tau()));
    r.put("alpha", alpha);
    r.put("beta", spec.beta.iter().map(rat_to_string).collect::<Vec<_>>());
    r.put("tau", spec.tau());
    let adm = spec.admissibility();
    r.put("admissibility", &adm);
    require_admissible(&spec)?;
    r.line("admissible: tau(n) != 0 for every n >= -1");
    if spec.k() > 0 {
        let closed = tau_minus_one_closed_form(alpha, spec.k() as u32, &spec.beta[0]);
        r.line(format!("tau(-1) = {}", rat_to_string(&closed)));
        let mut c = Certificate::new("tau(-1) closed form", -1, -1);
        c.check(closed == spec.tau().eval_int(-1), || "closed form differs".into());
        r.certificates.push(c);
    }
    let jrows: Vec<_> = (0..=rows).map(|m| spec.jacobi_row(m)).collect();
    for row in &jrows {
        r.line(format!(
            "row {}: a = {}, b = {}, c = {}",
            row.n,
            rat_to_string(&row.a_hat),
            rat_to_string(&row.b_hat),
            rat_to_string(&row.c_hat)
        ));
    }
    r.put("jacobi_rows", &jrows);
    let m = spec.moment_functional()?;
    let u: Vec<String> = m.u.iter().map(rat_to_string).collect();
    r.line(format!("weight: gamma parameter {}, u = [{}]", m.alpha_eff, u.join(", ")));
    r.put("moment_functional", &m);
    r.certificates.push(spec.recurrence_check(n));
    r.certificates.push(orthogonality_check(spec.basis(), &m, n));
    Ok(r)
}

pub enum HSource {
    Generator(usize),
    Explicit(Vec<Rat>),
}

fn generator(spec: &SystemSpec, j: usize) -> CliResult<NPoly> {
    if spec.k() == 1 {
        let gens = k1_generators(spec.alpha, &spec.beta[0])?;
        return gens
            .get(j)
            .map(|g| g.h.clone())
            .ok_or_else(|| CliError::Usage(format!("generator index {j} exceeds alpha = {}", spec.alpha)));
    }
    let deg = spec.tau().degree().unwrap_or(0) + 1 + j;
    Ok(algebra_basis(spec.basis(), deg).swap_remove(j + 1).h)
}

pub fn cmd_operator(
    spec: &SystemSpec,
    source: HSource,
    order_cap: Option<usize>,
    emit: Option<Format>,
    n: i64,
) -> CliResult<Report> {
    require_admissible(spec)?;
    let h = match source {
        HSource::Generator(j) => generator(spec, j)?,
        HSource::Explicit(c) => NPoly::new(c),
    };
    let member = algebra_membership(&h, spec.basis()).ok();
    let op: EigenOperator = match (&member, spec.k(), order_cap) {
        (Some(m), 1, None) => bhat_closed_form_k1(m, spec.basis())?,
        _ => match bhat_linear_solve(&h, spec.basis(), order_cap)? {
            SolveOutcome::Found(op) => op,
            SolveOutcome::NoOperator { order_cap, failed_at } => {
                return Err(CliError::NoOperator(format!(
                    "h(n) = {h} is not in Abar at this order: no operator of order <= {order_cap} (equations fail at n = {failed_at})"
                )))
            }
        },
    };
    let mut r = Report::new("operator");
    if let Some(fmt) = emit {
        r.raw = Some(match fmt {
            Format::Json => serde_json::to_string(&op.op).expect("operator serializes"),
            Format::Text => op.op.to_string(),
        });
        return Ok(r);
    }
    r.line(format!("h(n) = {h}"));
    r.line(format!("in the explicit algebra: {}", member.is_some()));
    r.line(format!("construction: {:?}", op.construction));
    r.line(format!("order: {:?}", op.order()));
    r.line(format!("B = {}", op.op));
    r.put("operator", &op);
    r.put("in_algebra", member.is_some());
    r.certificates.push(eigen_verify(&op.op, &h, spec.basis(), n));
    let expected = 2 * h.degree().unwrap_or(0);
    let mut law = Certificate::new("order equals twice the eigenvalue degree", 0, 0);
    law.check(op.order().unwrap_or(0) == expected, || format!("order {:?}, expected {expected}", op.order()));
    r.certificates.push(law);
    Ok(r)
}

fn describe_probe(r: &mut Report, report: &ProbeReport, generic: bool) {
    let cap = report.degrees.last().map(|d| d.degree).unwrap_or(0);
    r.line(format!("probe divisor: {}", report.divisor));
    for d in &report.degrees {
        let abar = d.abar_dim.map(|a| a.to_string()).unwrap_or_else(|| "not probed".into());
        r.line(format!("  degree {}: candidates {}, Abar {abar}, A {}", d.degree, d.candidate_dim, d.a_dim));
        if let Some(w) = &d.witness {
            r.line(format!("  eigenvalue outside A at degree {}: h(n) = {w}", d.degree));
        }
    }
    if report.strictly_larger() {
        r.line("A is strictly smaller than Abar");
    } else if generic {
        r.line(format!("A = Abar (verified to degree cap {cap})"));
    } else {
        r.line(format!("no eigenvalue outside A up to degree {cap}"));
    }
    r.put("probe", report);
}

pub fn cmd_genericity(spec: &SystemSpec, probe: Option<(Option<usize>, ProbeFilter)>) -> CliResult<Report> {
    let rep = genericity_report(spec)?;
    if !rep.admissible {
        require_admissible(spec)?;
    }
    let mut r = Report::new("genericity");
    r.line(format!("tau(n) = {}", spec.tau()));
    r.line(format!("resultant = {}", rat_to_string(&rep.resultant)));
    r.line(format!("generic: {}", rep.generic));
    if let Some(m) = rep.closed_form_match {
        r.line(format!("closed form agrees: {m}"));
        let mut c = Certificate::new("resultant equals its closed form", 0, 0);
        c.check(m, || "closed form differs".into());
        r.certificates.push(c);
    }
    r.certificates.push(squared_resultant_check(spec.basis()));
    if let Some((max_deg, filter)) = probe {
        let report = abar_probe(spec.basis(), max_deg, filter);
        describe_probe(&mut r, &report, rep.generic);
    }
    r.put("report", &rep);
    Ok(r)
}

pub fn cmd_genericity_symbolic(alpha: u32, k: usize) -> CliResult<Report> {
    if k == 0 || k > 2 {
        return Err(CliError::Usage(format!("symbolic resultant needs k in {{1, 2}}, got {k}")));
    }
    let sym = resultant_symbolic(alpha, k)?;
    let names = ["b0", "b1"];
    let mut r = Report::new("genericity");
    r.line(format!("resultant(b) = {}", sym.display_with(&names)));
    r.put("symbolic", sym.display_with(&names));
    let samples: Vec<(Rat, Rat)> = if k == 1 {
        k2_samples().into_iter().map(|(b0, _)| (b0, Rat::zero())).collect()
    } else {
        k2_samples()
    };
    let mut c = Certificate::new("symbolic resultant matches its closed form", 0, samples.len() as i64 - 1);
    for (i, (b0, b1)) in samples.iter().enumerate() {
        let (v, cf) = if k == 1 {
            (sym.eval(std::slice::from_ref(b0)), closed_form_k1(alpha, b0))
        } else {
            (sym.eval(&[b0.clone(), b1.clone()]), closed_form_k2(alpha, b0, b1))
        };
        c.check(v == cf, || format!("sample {i}: {} vs {}", rat_to_string(&v), rat_to_string(&cf)));
    }
    r.certificates.push(c);
    Ok(r)
}

pub fn cmd_sobolev(alpha: u32, a: &str, n: i64, probe: bool) -> CliResult<Report> {
    let entries = parse_rat_list(a)?;
    let [u0, u1, v0]: [Rat; 3] = entries
        .try_into()
        .map_err(|_| CliError::Usage("--a takes exactly three values u0,u1,v0".into()))?;
    let ip = SobolevInnerProduct::new(alpha, u0, u1, v0);
    let spec = params_from_a(&ip)?;
    spec.basis().require_admissible()?;
    let mut r = Report::new("sobolev");
    r.line(format!("parameters: {}", spec.params));
    r.line(format!("tau(n) = {}", spec.basis().tau()));
    r.put("params", &spec.params);
    r.put("inner_product", &ip);
    r.put("tau", spec.basis().tau());
    r.certificates.push(sobolev_orthogonality_check(&spec, &ip, n));
    r.certificates.push(pentadiagonal_factorization_check(spec.basis(), n));
    let tau_deg = spec.basis().tau().degree().unwrap_or(0);
    r.line(format!("explicit algebra starts at degree {}, order {}", tau_deg + 1, 2 * tau_deg + 2));
    if probe {
        let report = abar_probe(spec.basis(), None, ProbeFilter::Divisibility);
        match report.min_abar_degree() {
            Some(d) => r.line(format!("minimal operator order: {}", 2 * d)),
            None => r.line(format!("no operator up to order {}", 2 * report.degrees.len())),
        }
        r.put("min_order", report.min_abar_degree().map(|d| 2 * d));
        r.put("probe", &report);
    }
    Ok(r)
}

pub fn cmd_selftest(criterion: Option<usize>, seed: u64) -> CliResult<Report> {
    let results = match criterion {
        Some(id) => vec![acceptance::run_criterion(id, seed)
            .ok_or_else(|| CliError::Usage(format!("no criterion {id}; valid are 1..={}", acceptance::CRITERIA)))?],
        None => acceptance::run_all(seed),
    };
    let mut r = Report::new("selftest");
    for c in &results {
        r.line(c.to_string());
        r.certificates.extend(c.certificates.iter().cloned());
    }
    r.put("seed", seed);
    r.put("criteria", &results);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_args(std::iter::once("krall").chain(args.iter().copied()))
    }

    #[test]
    fn classical_ok_and_bad_rational() {
        let o = run(&["classical", "--alpha", "2", "--n", "12"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert!(o.stdout.contains("overall: PASS"));
        assert_eq!(run(&["classical", "--alpha", "0"]).code, 0);
        assert_eq!(run(&["classical", "--alpha", "1.5"]).code, 2);
        assert_eq!(run(&["classical", "--alpha", "-3"]).code, 2);
    }

    #[test]
    fn system_exit_codes() {
        assert_eq!(run(&["system", "--alpha", "1", "--k", "1", "--beta", "1"]).code, 0);
        let neg = run(&["system", "--alpha", "1", "--k", "1", "--beta", "-1"]);
        assert_eq!(neg.code, 3);
        assert!(neg.stderr.contains("tau(0) = 0"), "{}", neg.stderr);
        let zero = run(&["system", "--alpha", "1", "--k", "1", "--beta", "0"]);
        assert_eq!(zero.code, 3);
        assert!(zero.stderr.contains("tau(-1) = 0"));
        assert_eq!(run(&["system", "--alpha", "1", "--k", "2", "--beta", "1"]).code, 2);
    }

    #[test]
    fn operator_paths() {
        let o = run(&["operator", "--alpha", "2", "--beta", "1", "--generator", "0"]);
        assert_eq!(o.code, 0, "{}{}", o.stdout, o.stderr);
        assert!(o.stdout.contains("order: Some(6)"));
        assert_eq!(run(&["operator", "--alpha", "2", "--beta", "1", "--h", "0,1"]).code, 4);
        let j = run(&["operator", "--alpha", "1", "--beta", "1", "--generator", "1", "--emit", "json"]);
        let op: crate::exact::DiffOp = serde_json::from_str(j.stdout.trim()).unwrap();
        assert_eq!(op.order(), Some(6));
    }

    #[test]
    fn genericity_paths() {
        let o = run(&["genericity", "--alpha", "3", "--k", "1", "--symbolic"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert_eq!(run(&["genericity", "--alpha", "3", "--k", "3", "--symbolic"]).code, 2);
        let ng = run(&["genericity", "--alpha", "2", "--k", "2", "--beta", "1/8,0", "--max-deg", "4"]);
        assert_eq!(ng.code, 0);
        assert!(ng.stdout.contains("generic: false"));
        assert!(ng.stdout.contains("eigenvalue outside A at degree 4: h(n) = n^4 + 2*n^3 + 5/2*n^2 + 3/2*n"));
    }

    #[test]
    fn sobolev_paths() {
        assert_eq!(run(&["sobolev", "--alpha", "3", "--a", "1,1,2", "--no-probe"]).code, 0);
        assert_eq!(run(&["sobolev", "--alpha", "2", "--a", "1,0,0"]).code, 5);
        let s = run(&["sobolev", "--alpha", "2", "--a", "0,0,1", "--format", "json"]);
        assert_eq!(s.code, 0);
        let v: Value = serde_json::from_str(&s.stdout).unwrap();
        assert_eq!(v["data"]["min_order"], json!(8));
    }

    #[test]
    fn json_errors() {
        let o = run(&["system", "--alpha", "1", "--beta", "-1", "--format", "json"]);
        let v: Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(v["exit_code"], json!(3));
    }
}
