use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use srcodes::effield::{BasePlace, Curve, CurvePlace, PlaceSpec};
use srcodes::srcodes::{code_construct1, code_construct2, det_epsilon, CodeSpec, Operator};
use srcodes::srmetric::{
    check_bounds, enumerate_generator, sample_distribution, BoundsReport, WeightDistribution,
};
use srcodes::verify::{self, SuiteReport};
use srcodes::{Error, Field, Poly, RationalFunction};

mod examples;

const EXIT_PARAMETER: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "srcodes",
    version,
    about = "2x2 sum-rank metric codes from elliptic function fields"
)]
struct Cli {
    /// Worker threads for enumeration (default: one per core)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and emit its JSON description
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight distribution, minimum distance and bound checks
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        /// Maximum number of enumerated messages (overrides SRCODES_LIMIT)
        #[arg(long)]
        limit: Option<u64>,
        /// Estimate from this many random messages instead of enumerating
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant suites on a curve
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random cases per randomized suite
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Random messages per configuration too large to enumerate
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Enumeration cap for the exhaustive suites
        #[arg(long)]
        limit: Option<u64>,
        /// Replace a formula with a wrong one to exercise the suites
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce a worked example and compare against the published values
    Example {
        #[arg(value_enum)]
        name: examples::Name,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    Det,
}

#[derive(Args)]
struct CurveArgs {
    /// Field order, "p" or "p^m"
    #[arg(long, default_value = "7")]
    q: String,
    /// Modulus coefficients c0,..,cm for extension fields
    #[arg(long = "mod")]
    modulus: Option<String>,
    /// Cubic f(x) in y^2 = f(x)
    #[arg(long, default_value = "x^3+3")]
    curve: String,
    /// Full curve spec "q=<field>;f=<poly>", overriding --q/--mod/--curve
    #[arg(long)]
    curve_spec: Option<String>,
}

impl CurveArgs {
    fn build(&self) -> Result<Curve, Error> {
        if let Some(spec) = &self.curve_spec {
            return spec.parse();
        }
        let field: Field = match &self.modulus {
            Some(m) => format!("{};mod={m}", self.q).parse()?,
            None => self.q.parse()?,
        };
        let f = Poly::parse(&field, &self.curve)?;
        Curve::new(field, f)
    }
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Read the code from a JSON file produced by `construct`
    #[arg(long)]
    code: Option<PathBuf>,
    /// Construction: 1 (pole at infinity) or 2 (split pole place)
    #[arg(long, default_value_t = 1)]
    cons: u8,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k1: Option<i64>,
    /// Split base place x0 (element index) for construction 2
    #[arg(long)]
    split_x: Option<u32>,
    /// Pole place: "inf", "x=<v>" or "pt=(<x>,<y>)"
    #[arg(long)]
    pole: Option<String>,
    /// Exchange the roles of the two places over the split base place
    #[arg(long)]
    swap_labels: bool,
    /// Evaluation places: comma-separated element indices, "all" or "all-but-inf"
    /// (the keywords skip the pole's base place)
    #[arg(long, default_value = "all-but-inf")]
    places: String,
}

impl CodeArgs {
    fn build(&self) -> Result<CodeSpec, Error> {
        if let Some(path) = &self.code {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            return CodeSpec::from_json(&text);
        }
        let c = self.curve.build()?;
        let missing = |flag: &str| Error::ParameterViolation(format!("{flag} is required"));
        let k = self.k.ok_or_else(|| missing("--k"))?;
        let k1 = self.k1.ok_or_else(|| missing("--k1"))?;
        let places = parse_places(&c, &self.places)?;
        let pole = self
            .pole
            .as_deref()
            .map(str::parse::<PlaceSpec>)
            .transpose()?;
        match self.cons {
            1 => {
                if pole.is_some_and(|p| p != PlaceSpec::Infinity) {
                    return Err(Error::ParameterViolation(
                        "construction 1 has its pole at inf".into(),
                    ));
                }
                code_construct1(&c, k, k1, &places)
            }
            2 => {
                let (x0, swap) = match (pole, self.split_x) {
                    (Some(PlaceSpec::Infinity), _) => {
                        return Err(Error::ParameterViolation(
                            "construction 2 needs a finite split pole place".into(),
                        ))
                    }
                    (Some(spec), _) => {
                        let place = c.resolve_place(spec)?;
                        let CurvePlace::Affine { x, .. } = place else {
                            unreachable!()
                        };
                        let first = c.places_over(x).first() == Some(&place);
                        (x, first == self.swap_labels)
                    }
                    (None, Some(v)) => (c.field().from_index(v)?, self.swap_labels),
                    (None, None) => return Err(missing("--split-x or --pole")),
                };
                let keyword = matches!(self.places.trim(), "all" | "all-but-inf");
                let places: Vec<BasePlace> = places
                    .into_iter()
                    .filter(|p| !keyword || *p != BasePlace::Finite(x0))
                    .collect();
                code_construct2(&c, k, k1, x0, &places, swap)
            }
            t => Err(Error::ParameterViolation(format!(
                "construction must be 1 or 2, got {t}"
            ))),
        }
    }
}

fn parse_places(c: &Curve, spec: &str) -> Result<Vec<BasePlace>, Error> {
    match spec.trim() {
        "all" => Ok(c.base_places()),
        "all-but-inf" => Ok(c
            .base_places()
            .into_iter()
            .filter(|p| *p != BasePlace::Infinity)
            .collect()),
        list => list
            .split(',')
            .map(|t| match t.trim() {
                "inf" => Ok(BasePlace::Infinity),
                v => {
                    let idx = v
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad place `{v}`")))?;
                    Ok(BasePlace::Finite(c.field().from_index(idx)?))
                }
            })
            .collect(),
    }
}

fn resolve_limit(flag: Option<u64>) -> u64 {
    flag.or_else(|| std::env::var("SRCODES_LIMIT").ok()?.parse().ok())
        .unwrap_or(srcodes::srmetric::DEFAULT_LIMIT)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Parameter(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", text.trim_end()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(Failure::Parameter(e.to_string()))
                }
                _ => Ok(()),
            }
        }
    }
}

enum Failure {
    Parameter(String),
    Resource(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::TooLarge { .. } => Failure::Resource(e.to_string()),
            e => Failure::Parameter(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct CodeSummary {
    construction: u8,
    length: usize,
    dimension: usize,
    s: usize,
    k: usize,
    k1: usize,
    theorem_bound: i64,
}

#[derive(Serialize)]
struct AnalyzeReport {
    code: CodeSummary,
    mode: &'static str,
    distribution: WeightDistribution,
    /// Exact for exhaustive runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    d_min: Option<usize>,
    /// Smallest sampled positive weight, an upper bound on the distance.
    #[serde(skip_serializing_if = "Option::is_none")]
    d_upper_estimate: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsReport>,
    wall_time_s: f64,
}

#[allow(clippy::too_many_arguments)]
fn analyze(
    code: &CodeArgs,
    limit: Option<u64>,
    sample: Option<u64>,
    seed: u64,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<(), Failure> {
    let code = code.build()?;
    let start = Instant::now();
    let gen = code.generator();
    let dist = match sample {
        Some(n) => sample_distribution(&gen, n, seed),
        None => enumerate_generator(&gen, resolve_limit(limit), None)?,
    };
    let wall_time_s = start.elapsed().as_secs_f64();
    let exhaustive = dist.is_exhaustive();
    let d = dist.min_positive();
    let bounds = if exhaustive {
        d.map(|d| check_bounds(&code, d))
    } else {
        None
    };
    let failed = bounds
        .as_ref()
        .is_some_and(|b| !b.theorem_ok || !b.singleton_ok);
    let text = if format == Format::Csv {
        dist.to_csv()
    } else {
        let report = AnalyzeReport {
            code: CodeSummary {
                construction: code.construction().tag(),
                length: code.length(),
                dimension: code.dimension(),
                s: code.s(),
                k: code.k(),
                k1: code.k1(),
                theorem_bound: code.theorem_bound(),
            },
            mode: if exhaustive { "exhaustive" } else { "sampled" },
            distribution: dist,
            d_min: d.filter(|_| exhaustive),
            d_upper_estimate: d.filter(|_| !exhaustive),
            bounds,
            wall_time_s,
        };
        serde_json::to_string_pretty(&report).unwrap()
    };
    emit(out, &text)?;
    if failed {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn wrong_det(c: &Curve, l: &Operator) -> RationalFunction {
    det_epsilon(c, l).add(c.field(), &RationalFunction::from_poly(c.poly().clone()))
}

fn run_verify(
    curve: &CurveArgs,
    seed: u64,
    cases: usize,
    samples: u64,
    limit: Option<u64>,
    fault: Option<Fault>,
    format: Format,
) -> Result<(), Failure> {
    let c = curve.build()?;
    let det: verify::DetFn = match fault {
        Some(Fault::Det) => wrong_det,
        None => det_epsilon,
    };
    let reports = verify::run_all(&c, cases, samples, seed, det, resolve_limit(limit));
    let all_passed = reports.iter().all(SuiteReport::passed);
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        for r in &reports {
            let tag = if r.passed() { "PASS" } else { "FAIL" };
            println!("{tag} {} ({} cases, {} failed)", r.name, r.cases, r.failed);
            for f in &r.failures {
                println!("    counterexample: {f}");
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Parameter(e.to_string()))?;
    }
    match cli.command {
        Command::Construct { code, out } => {
            let spec = code.build()?;
            emit(out.as_ref(), &spec.to_json())
        }
        Command::Analyze {
            code,
            limit,
            sample,
            seed,
            format,
            out,
        } => analyze(&code, limit, sample, seed, format, out.as_ref()),
        Command::Verify {
            curve,
            seed,
            cases,
            samples,
            limit,
            inject_fault,
            format,
        } => run_verify(&curve, seed, cases, samples, limit, inject_fault, format),
        Command::Example { name } => {
            if examples::run(name)? {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parameter(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARAMETER)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY),
    }
}
