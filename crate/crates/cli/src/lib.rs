//! Command-line front end for the `eva_inject` decision procedures.
//!
//! [`run`] parses the arguments, dispatches to the engine and returns the
//! exit code together with what should go to stdout and stderr, so that the
//! binary is a thin wrapper and tests can drive the CLI in-process.

pub mod parse;
pub mod report;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eva_inject::engine::{
    brute_force_matrix, brute_force_scalar, matrix_injectivity, multivariate_injectivity,
    permutation_check, rationals_up_to_height, repeated_root_witness, scalar_injectivity,
    search_matrix_collisions, search_rational_collisions, search_tuple_collisions,
    simple_roots_condition, verify_witness, Bounds, Point, PolyRef, Reason, Status, Verdict,
    DEFAULT_HEIGHT, DEFAULT_MATRIX_CAP, DEFAULT_SCALAR_CAP,
};
use eva_inject::poly::{factor_profile_with_seed, FactorProfile, UniPoly, DEFAULT_SEED};
use eva_inject::{Error, Field};
use serde_json::{json, Map, Value};

use parse::{parse_field, parse_point, parse_poly, ParseError, ParsedPoly};
use report::{point_json, Inputs};

/// Exit code for malformed arguments or inputs.
pub const EXIT_USAGE: i32 = 64;
/// Exit code for a broken internal invariant.
pub const EXIT_INTERNAL: i32 = 70;
/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "EVA_INJECT_SEED";

/// Input grammar, printed after usage errors.
pub const GRAMMAR: &str = "\
input grammar:
  field   Q | F<q> | F<q>:modulus=<poly in x over F_p> | ACF | RCF | R
          e.g. F7, F9, F9:modulus=x^2+1
  poly    sums of terms with + - * / ^ and parentheses; coefficients are
          integers or fractions such as 3/4; variables x, or x1..xm (also
          y = x2, z = x3) for several variables; 'a' is the generator of an
          extension field, e.g. x^4+2*x+7, (a+1)*x^2+a, x1*x2+x1
  point   a scalar such as -3/2, a JSON tuple [\"1\",\"2\"], or a JSON
          matrix [[\"0\",\"1/2\"],[\"1\",\"-1\"]] (row-major)
  seed    decimal or 0x-prefixed hex; falls back to $EVA_INJECT_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "eva-inject",
    version,
    about = "Decide injectivity of polynomial evaluation maps with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Injectivity of x -> f(x) on the field, or of F^m -> F for m >= 2 variables
    Analyze(Common),
    /// Injectivity of A -> f(A) on n x n matrices
    Matrix(Common),
    /// Permutation-polynomial test over a finite field
    Permcheck(Common),
    /// Whether every f - lambda has only simple roots in the field
    Simpleroots(Common),
    /// Exhaustive oracle over a finite field or its matrices
    Bruteforce(Common),
    /// Bounded rational collision search
    Search(Common),
    /// Check a supplied pair of inputs with equal images
    Verify(Common),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Polynomial, e.g. "x^4+2*x"
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Field: Q, F<q>, F<q>:modulus=<poly>, ACF, RCF or R
    #[arg(long, default_value = "Q")]
    field: String,
    /// Matrix dimension
    #[arg(long)]
    n: Option<usize>,
    /// Number of variables of a multivariate polynomial
    #[arg(long)]
    vars: Option<usize>,
    /// Largest height max(|num|, den) in rational searches
    #[arg(long, default_value_t = DEFAULT_HEIGHT)]
    height: u64,
    /// Largest field order enumerated by scalar checks
    #[arg(long, default_value_t = DEFAULT_SCALAR_CAP)]
    scalar_cap: u64,
    /// Largest number of matrices or tuples enumerated
    #[arg(long, default_value_t = DEFAULT_MATRIX_CAP)]
    matrix_cap: u64,
    /// Seed for randomized factorization (decimal or 0x hex)
    #[arg(long, value_parser = parse_seed)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// First input, for verify
    #[arg(long, allow_hyphen_values = true)]
    lhs: Option<String>,
    /// Second input, for verify
    #[arg(long, allow_hyphen_values = true)]
    rhs: Option<String>,
    /// For matrix: when the theorem leaves the case open, also run the
    /// exhaustive oracle (finite fields) or a bounded search (Q)
    #[arg(long)]
    augment: bool,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

/// What a CLI invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n\n{GRAMMAR}\n"),
        }
    }
}

/// Failure before a verdict exists.
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Step<T> = std::result::Result<T, Failure>;

/// Runs the CLI on `argv` (including the program name), reading the seed
/// fallback from the environment.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_env(argv, std::env::var(SEED_ENV).ok())
}

/// [`run`] with an explicit value for the seed environment variable.
pub fn run_with_env<I, T>(argv: I, env_seed: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("{}\n{GRAMMAR}\n", e.render()),
                },
            };
        }
    };
    let (name, args) = match &cli.verb {
        Verb::Analyze(a) => ("analyze", a),
        Verb::Matrix(a) => ("matrix", a),
        Verb::Permcheck(a) => ("permcheck", a),
        Verb::Simpleroots(a) => ("simpleroots", a),
        Verb::Bruteforce(a) => ("bruteforce", a),
        Verb::Search(a) => ("search", a),
        Verb::Verify(a) => ("verify", a),
    };
    let seed = match (args.seed, env_seed) {
        (Some(s), _) => s,
        (None, Some(v)) => match parse_seed(&v) {
            Ok(s) => s,
            Err(e) => return Outcome::usage(format!("{SEED_ENV}: {e}")),
        },
        (None, None) => DEFAULT_SEED,
    };
    let bounds = Bounds {
        height: args.height,
        scalar_cap: args.scalar_cap,
        matrix_cap: args.matrix_cap,
        seed,
    };
    let start = Instant::now();
    match execute(name, args, &bounds) {
        Ok((inputs, verdict, extra)) => {
            let ms = start.elapsed().as_secs_f64() * 1000.0;
            let rep = report::build(name, &inputs, &bounds, &verdict, extra, ms);
            let stdout = match args.output {
                Output::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&rep).expect("serializable")
                ),
                Output::Text => report::render_text(&rep),
            };
            Outcome {
                code: verdict.exit_code(),
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Outcome::usage(msg),
        Err(Failure::Core(e)) if e.is_internal() => Outcome {
            code: EXIT_INTERNAL,
            stdout: String::new(),
            stderr: format!("internal error: {e}\n"),
        },
        Err(Failure::Core(e)) => Outcome::usage(e),
    }
}

/// Everything a verb needs after parsing.
struct Job {
    spec: Field,
    poly: ParsedPoly,
    inputs: Inputs,
}

fn prepare(args: &Common) -> Step<Job> {
    let spec = parse_field(&args.field)?;
    let poly = parse_poly(&args.poly, &spec, args.vars)?;
    let vars = match &poly {
        ParsedPoly::Multi(m) => Some(m.nvars()),
        ParsedPoly::Uni(_) => args.vars,
    };
    let inputs = Inputs {
        poly: Some(poly.to_string()),
        field: Some(spec.to_string()),
        n: args.n,
        vars,
        lhs: None,
        rhs: None,
    };
    Ok(Job { spec, poly, inputs })
}

fn univariate<'a>(job: &'a Job, verb: &str) -> Step<&'a UniPoly> {
    match &job.poly {
        ParsedPoly::Uni(f) => Ok(f),
        ParsedPoly::Multi(_) => Err(Failure::Usage(format!(
            "{verb} takes a univariate polynomial in x"
        ))),
    }
}

fn require_n(args: &Common, verb: &str) -> Step<usize> {
    match args.n {
        Some(0) => Err(Failure::Usage("--n must be at least 1".into())),
        Some(n) => Ok(n),
        None => Err(Failure::Usage(format!("{verb} requires --n"))),
    }
}

type Produced = (Inputs, Verdict, Map<String, Value>);

fn execute(verb: &str, args: &Common, bounds: &Bounds) -> Step<Produced> {
    let mut job = prepare(args)?;
    let mut extra = Map::new();
    let verdict = match verb {
        "analyze" => analyze(&job, bounds, &mut extra)?,
        "matrix" => matrix(&job, args, bounds, &mut extra)?,
        "permcheck" => permcheck(&job, bounds, &mut extra)?,
        "simpleroots" => simpleroots(&job, args, &mut extra)?,
        "bruteforce" => bruteforce(&job, args, bounds)?,
        "search" => search(&job, args, bounds)?,
        "verify" => verify(&mut job, args, &mut extra)?,
        other => unreachable!("unknown verb {other}"),
    };
    Ok((job.inputs, verdict, extra))
}

fn profile_json(p: &FactorProfile) -> Value {
    let factors: Vec<Value> = p
        .factors
        .iter()
        .map(|(q, e)| json!({"factor": q.to_string(), "multiplicity": e}))
        .collect();
    json!({
        "c": p.c.to_string(),
        "m": p.m_mult,
        "h": p.h.to_string(),
        "unit": p.unit.to_string(),
        "factors": factors,
        "d": p.d,
        "chosen_q": p.chosen_q.as_ref().map(ToString::to_string),
    })
}

fn insert_profile(f: &UniPoly, bounds: &Bounds, extra: &mut Map<String, Value>) {
    if f.is_constant() {
        return;
    }
    match factor_profile_with_seed(f, bounds.seed) {
        Ok(p) => extra.insert("profile".into(), profile_json(&p)),
        Err(e) => extra.insert("profile_error".into(), json!(e.to_string())),
    };
}

fn simple_roots_json(f: &UniPoly, spec: &Field) -> Step<Value> {
    let r = simple_roots_condition(f, spec)?;
    Ok(json!({
        "holds": r.holds,
        "violating_b": r.violating_b.as_ref().map(ToString::to_string),
        "lambda": r.lambda.as_ref().map(ToString::to_string),
        "multiplicity_k": r.multiplicity_k,
        "char_p_degenerate": r.char_p_degenerate,
    }))
}

fn analyze(job: &Job, bounds: &Bounds, extra: &mut Map<String, Value>) -> Step<Verdict> {
    match &job.poly {
        ParsedPoly::Uni(f) => {
            let v = scalar_injectivity(f, &job.spec, bounds)?;
            if !f.is_constant() {
                extra.insert("simple_roots".into(), simple_roots_json(f, &job.spec)?);
            }
            insert_profile(f, bounds, extra);
            Ok(v)
        }
        ParsedPoly::Multi(f) => {
            extra.insert("total_degree".into(), json!(f.total_degree()));
            Ok(multivariate_injectivity(f, &job.spec, bounds)?)
        }
    }
}

/// Largest height `h <= height` whose `n x n` rational matrices fit in `cap`.
fn affordable_height(n: usize, height: u64, cap: u64) -> Option<u64> {
    let mut best = None;
    for h in 1..=height {
        let count = rationals_up_to_height(h).len() as u128;
        match count.checked_pow((n * n) as u32) {
            Some(c) if c <= u128::from(cap) => best = Some(h),
            _ => break,
        }
    }
    best
}

fn matrix(
    job: &Job,
    args: &Common,
    bounds: &Bounds,
    extra: &mut Map<String, Value>,
) -> Step<Verdict> {
    let f = univariate(job, "matrix")?;
    let n = require_n(args, "matrix")?;
    let verdict = matrix_injectivity(f, n, &job.spec, bounds)?;
    insert_profile(f, bounds, extra);
    if !args.augment || verdict.status() != Status::Undecided || n < 2 {
        return Ok(verdict);
    }
    if job.spec.is_finite() {
        return Ok(match brute_force_matrix(f, n, bounds.matrix_cap) {
            Ok(oracle) => {
                extra.insert(
                    "augment".into(),
                    json!({"method": "exhaustive", "status": oracle.status().as_str()}),
                );
                oracle
            }
            Err(e @ Error::EnumerationCapExceeded { .. }) => {
                extra.insert(
                    "augment".into(),
                    json!({"method": "exhaustive", "skipped": e.to_string()}),
                );
                verdict
            }
            Err(e) => return Err(e.into()),
        });
    }
    let Some(h) = affordable_height(n, bounds.height, bounds.matrix_cap) else {
        extra.insert(
            "augment".into(),
            json!({"method": "search", "skipped": "no height fits the matrix cap"}),
        );
        return Ok(verdict);
    };
    let found = search_matrix_collisions(f, n, h, bounds.matrix_cap)?;
    extra.insert(
        "augment".into(),
        json!({"method": "search", "height": h, "found": found.is_some()}),
    );
    Ok(match found {
        Some(w) => Verdict::not_injective(
            Reason::BoundedSearchCollision,
            w,
            format!(
                "the matrix theorem leaves n = {n} < d open; a bounded search among rational matrices of \
                 height <= {h} found a collision"
            ),
        ),
        None => verdict,
    })
}

fn permcheck(job: &Job, bounds: &Bounds, extra: &mut Map<String, Value>) -> Step<Verdict> {
    let f = univariate(job, "permcheck")?;
    if !job.spec.is_finite() {
        return Err(Failure::Usage(format!(
            "permcheck needs a finite field, got {}",
            job.spec
        )));
    }
    if f.is_constant() {
        return Ok(scalar_injectivity(f, &job.spec, bounds)?);
    }
    let check = permutation_check(f, bounds.scalar_cap)?;
    extra.insert(
        "permutation".into(),
        json!({"is_permutation": check.is_permutation, "hermite": check.hermite, "exhaustive": check.exhaustive}),
    );
    Ok(scalar_injectivity(f, &job.spec, bounds)?)
}

fn simpleroots(job: &Job, args: &Common, extra: &mut Map<String, Value>) -> Step<Verdict> {
    let f = univariate(job, "simpleroots")?;
    if f.is_constant() {
        return Err(Failure::Usage(
            "simpleroots needs a nonconstant polynomial".into(),
        ));
    }
    let n = args.n.unwrap_or(2);
    if n < 2 {
        return Err(Failure::Usage(
            "simpleroots builds matrix witnesses and needs --n >= 2".into(),
        ));
    }
    let r = simple_roots_condition(f, &job.spec)?;
    extra.insert("simple_roots".into(), simple_roots_json(f, &job.spec)?);
    if r.holds {
        return Ok(Verdict::undecided(
            Reason::SimpleRootsHold,
            "f' has no root in the field, so every f - lambda has only simple roots; this is necessary, not sufficient, for injectivity on matrices",
        ));
    }
    Ok(match &r.violating_b {
        Some(b) => {
            let w = repeated_root_witness(f, b, n)?;
            let reason = if r.char_p_degenerate {
                Reason::CharPDegenerate
            } else {
                Reason::RepeatedRootWitness
            };
            Verdict::not_injective(
                reason,
                w,
                format!(
                    "f - lambda with lambda = {} has the root b = {b} of multiplicity {}, so f(bI + N) = f(b) I on M_{n}",
                    r.lambda.as_ref().map(ToString::to_string).unwrap_or_default(),
                    r.multiplicity_k.unwrap_or(2),
                ),
            )
        }
        None => Verdict::necessary_condition_fails(
            Reason::RootsOutsideComputableField,
            "f' has a root in the field, but none in Q, so no exact witness is produced",
        ),
    })
}

fn bruteforce(job: &Job, args: &Common, bounds: &Bounds) -> Step<Verdict> {
    if !job.spec.is_finite() {
        return Err(Failure::Usage(format!(
            "bruteforce needs a finite field, got {}",
            job.spec
        )));
    }
    match &job.poly {
        ParsedPoly::Uni(f) => match args.n.unwrap_or(1) {
            0 => Err(Failure::Usage("--n must be at least 1".into())),
            1 => Ok(brute_force_scalar(
                f,
                bounds.scalar_cap.max(bounds.matrix_cap),
            )?),
            n => Ok(brute_force_matrix(f, n, bounds.matrix_cap)?),
        },
        ParsedPoly::Multi(f) => Ok(multivariate_injectivity(f, &job.spec, bounds)?),
    }
}

fn search(job: &Job, args: &Common, bounds: &Bounds) -> Step<Verdict> {
    if job.spec.is_finite() {
        return Err(Failure::Usage(
            "search runs over Q; use bruteforce for finite fields".into(),
        ));
    }
    let h = bounds.height;
    match &job.poly {
        ParsedPoly::Uni(f) => {
            let (found, what) = match args.n.unwrap_or(1) {
                0 => return Err(Failure::Usage("--n must be at least 1".into())),
                1 => (search_rational_collisions(f, h)?, "rationals".to_string()),
                n => (
                    search_matrix_collisions(f, n, h, bounds.matrix_cap)?,
                    format!("{n}x{n} rational matrices"),
                ),
            };
            Ok(found_or_exhausted(found, h, &what))
        }
        ParsedPoly::Multi(f) => {
            let (found, reached) = search_tuple_collisions(f, h, bounds.matrix_cap)?;
            Ok(found_or_exhausted(
                found,
                reached,
                &format!("points of Q^{}", f.nvars()),
            ))
        }
    }
}

fn found_or_exhausted(found: Option<eva_inject::engine::Witness>, h: u64, what: &str) -> Verdict {
    match found {
        Some(w) => Verdict::not_injective(
            Reason::BoundedSearchCollision,
            w,
            format!("first collision among {what} of height <= {h}"),
        ),
        None => Verdict::undecided(
            Reason::SearchExhausted(h),
            format!("no collision among {what} of height <= {h}"),
        ),
    }
}

fn echo_point(p: &Point) -> String {
    match point_json(p) {
        Value::String(s) => s,
        other => other.to_string(),
    }
}

fn verify(job: &mut Job, args: &Common, extra: &mut Map<String, Value>) -> Step<Verdict> {
    let (Some(lhs), Some(rhs)) = (&args.lhs, &args.rhs) else {
        return Err(Failure::Usage("verify requires --lhs and --rhs".into()));
    };
    let lhs = parse_point(lhs, &job.spec)?;
    let rhs = parse_point(rhs, &job.spec)?;
    job.inputs.lhs = Some(echo_point(&lhs));
    job.inputs.rhs = Some(echo_point(&rhs));
    let f: PolyRef<'_> = match &job.poly {
        ParsedPoly::Uni(f) => f.into(),
        ParsedPoly::Multi(f) => f.into(),
    };
    extra.insert("lhs_image".into(), point_json(&f.evaluate(&lhs)?));
    extra.insert("rhs_image".into(), point_json(&f.evaluate(&rhs)?));
    match verify_witness(f, lhs, rhs) {
        Ok(w) => Ok(Verdict::not_injective(
            Reason::SuppliedWitness,
            w,
            "the supplied inputs are distinct and have the same image",
        )),
        Err(Error::NotAWitness(why)) => Ok(Verdict::undecided(
            Reason::WitnessRejected,
            format!("not a witness: {why}"),
        )),
        Err(e) => Err(e.into()),
    }
}
