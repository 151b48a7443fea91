//! `fid`: batch front end for free FI_d-module computations.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 no stabilization or no
//! exact fit, 4 internal invariant breach (including a failed oracle check).

use std::io::Read;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fid_core::free_module::{
    decompose_at, dim_at, stabilized_padded_multiplicity, StabilizationConfig, DEFAULT_HORIZON,
};
use fid_core::oracle::{oracle_sweep, oracle_sweep_with, ORACLE_LIMIT};
use fid_core::pieri::pieri_product;
use fid_core::stability::{
    default_multiplicity_window, fit_exponential_polynomial, fit_polynomial, multiplicity_series,
    verify_theorem_a, ModuleSource, MultiplicitySeries, Series, SeriesJson,
};
use fid_core::{Error, Execution, FreeModuleSpec, IrreducibleDecomposition, Partition};

#[derive(Parser)]
#[command(
    name = "fid",
    version,
    about = "Exact computations with free FI_d-modules"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(clap::Args)]
struct ModuleArgs {
    /// Number of colors.
    #[arg(long = "d")]
    colors: usize,
    /// Generator: `M(k)` for the regular generator of S_k, `[a,b,...]` for S^λ.
    #[arg(long = "gen")]
    generator: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FitMode {
    Dims,
    Mult,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of M(W)_n over an inclusive degree range `a..b`.
    Dim {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        range: String,
    },
    /// Irreducible decomposition of M(W)_n.
    Decompose {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        n: usize,
    },
    /// Stable value and onset of c_{λ, n₁+l, …, n_d+l}.
    Stabilize {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        lambda: String,
        /// Comma-separated, weakly decreasing pads.
        #[arg(long)]
        pads: String,
        /// Largest shift examined (default 50, or FID_MAX_HORIZON).
        #[arg(long)]
        horizon: Option<usize>,
        /// Also check injectivity and generation over this degree range.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Exact fit of a dimension or multiplicity series.
    Fit {
        #[arg(long, value_enum)]
        mode: FitMode,
        #[arg(long = "d")]
        colors: usize,
        #[arg(long = "gen")]
        generator: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        degree_bound: Option<usize>,
        #[arg(long)]
        window: Option<String>,
        /// Read `{"series": {"n": "value", ...}}` from stdin instead of a generator.
        #[arg(long)]
        stdin: bool,
    },
    /// Compare Pieri products with the character-table oracle.
    OracleCheck {
        #[arg(long)]
        max: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

enum Failure {
    Usage(String),
    NoResult(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoStabilization { .. } | Error::NoExactFit { .. } => {
                Failure::NoResult(e.to_string())
            }
            Error::InvariantBreach(_) => Failure::Invariant(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NoResult(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Dim { module, range } => cmd_dim(cli.format, module, range),
        Command::Decompose { module, n } => cmd_decompose(cli.format, module, *n),
        Command::Stabilize {
            module,
            lambda,
            pads,
            horizon,
            degrees,
        } => cmd_stabilize(
            cli.format,
            module,
            lambda,
            pads,
            *horizon,
            degrees.as_deref(),
        ),
        Command::Fit {
            mode,
            colors,
            generator,
            lambda,
            degree_bound,
            window,
            stdin,
        } => {
            let spec = match (generator, stdin) {
                (Some(g), false) => Some(parse_generator(*colors, g)?),
                (None, true) => None,
                _ => {
                    return Err(Failure::Usage(
                        "give exactly one of --gen and --stdin".into(),
                    ))
                }
            };
            let window = window.as_deref().map(parse_range).transpose()?;
            let lambda = lambda.as_deref().map(parse_partition).transpose()?;
            cmd_fit(
                cli.format,
                *mode,
                *colors,
                spec,
                lambda,
                *degree_bound,
                window,
            )
        }
        Command::OracleCheck { max, inject_fault } => cmd_oracle(cli.format, *max, *inject_fault),
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn parse_generator(colors: usize, s: &str) -> Result<FreeModuleSpec, Failure> {
    let s = s.trim();
    let spec = if let Some(k) = s.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
        let k = k
            .trim()
            .parse::<usize>()
            .map_err(|e| Failure::Usage(format!("generator {s:?}: {e}")))?;
        FreeModuleSpec::regular(colors, k)
    } else {
        FreeModuleSpec::irreducible(colors, parse_partition(s)?)
    };
    Ok(spec?)
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Failure::Usage(format!("expected a..b, got {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| Failure::Usage(format!("range {s:?}: {e}")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(Failure::Usage(format!("empty range {s:?}")));
    }
    Ok(a..=b)
}

fn parse_pads(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Failure::Usage(format!("pads {s:?}: {e}")))
        })
        .collect()
}

fn horizon_from_env() -> Result<usize, Failure> {
    match std::env::var("FID_MAX_HORIZON") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| Failure::Usage(format!("FID_MAX_HORIZON={v:?}: {e}"))),
        Err(_) => Ok(DEFAULT_HORIZON),
    }
}

fn render(format: Format, value: Value, tsv: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json values serialize"),
        Format::Tsv => tsv(),
    }
}

fn cmd_dim(format: Format, module: &ModuleArgs, range: &str) -> CmdResult {
    let spec = parse_generator(module.colors, &module.generator)?;
    let rows: Vec<(usize, String)> = parse_range(range)?
        .map(|n| (n, dim_at(&spec, n).to_string()))
        .collect();
    let value = json!({
        "d": module.colors,
        "generator": module.generator,
        "rows": rows.iter().map(|(n, d)| json!({"n": n, "dim": d})).collect::<Vec<_>>(),
    });
    Ok(render(format, value, || {
        let mut out = String::from("n\tdim");
        for (n, d) in &rows {
            out.push_str(&format!("\n{n}\t{d}"));
        }
        out
    }))
}

fn decomposition_tsv(d: &IrreducibleDecomposition) -> String {
    let mut out = String::from("partition\tmultiplicity");
    for (lambda, mult) in d.terms() {
        out.push_str(&format!("\n{lambda}\t{mult}"));
    }
    out
}

fn cmd_decompose(format: Format, module: &ModuleArgs, n: usize) -> CmdResult {
    let spec = parse_generator(module.colors, &module.generator)?;
    let d = decompose_at(&spec, n);
    let total = d.total_dimension();
    if total != dim_at(&spec, n) {
        return Err(Failure::Invariant(format!(
            "decomposition dimension {total} differs from dim M(W)_{n}"
        )));
    }
    let value = serde_json::to_value(d.to_json()).expect("decomposition serializes");
    Ok(render(format, value, || decomposition_tsv(&d)))
}

fn cmd_stabilize(
    format: Format,
    module: &ModuleArgs,
    lambda: &str,
    pads: &str,
    horizon: Option<usize>,
    degrees: Option<&str>,
) -> CmdResult {
    let spec = parse_generator(module.colors, &module.generator)?;
    let lambda = parse_partition(lambda)?;
    let pads = parse_pads(pads)?;
    if pads.len() != module.colors {
        return Err(Error::WrongPadCount {
            expected: module.colors,
            got: pads.len(),
        }
        .into());
    }
    let config = StabilizationConfig {
        horizon: match horizon {
            Some(h) => h,
            None => horizon_from_env()?,
        },
        ..Default::default()
    };
    let s = stabilized_padded_multiplicity(&spec, &lambda, &pads, &config)?;
    if s.within_bound() == Some(false) {
        return Err(Failure::Invariant(format!(
            "onset {} exceeds the chain bound {:?}",
            s.onset, s.bound
        )));
    }
    let report = match degrees {
        Some(r) => {
            let range = parse_range(r)?;
            let report = verify_theorem_a(
                &ModuleSource::Free(spec.clone()),
                &[(lambda.clone(), pads.clone())],
                range,
                &config,
            )?;
            Some(report)
        }
        None => None,
    };
    let mut value = json!({
        "lambda": lambda,
        "pads": pads,
        "value": s.value.to_string(),
        "onset": s.onset,
        "bound": s.bound,
        "horizon": config.horizon,
        "values": s.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    if let Some(r) = &report {
        value["report"] = serde_json::to_value(r).expect("report serializes");
    }
    Ok(render(format, value, || {
        let mut out = format!(
            "value\t{}\nonset\t{}\nbound\t{}",
            s.value,
            s.onset,
            s.bound.map_or("-".to_string(), |b| b.to_string())
        );
        if let Some(r) = &report {
            out.push_str(&format!(
                "\ninjectivity\t{}\ngeneration\t{}\nplateaus\t{}",
                r.injectivity_holds(),
                r.generation_holds(),
                r.plateaus_hold()
            ));
        }
        out
    }))
}

fn read_stdin_series() -> Result<Series, Failure> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
    let parsed: SeriesJson =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("stdin series: {e}")))?;
    Ok(parsed.to_series()?)
}

fn full_range(series: &Series) -> Result<RangeInclusive<usize>, Failure> {
    match (series.keys().next(), series.keys().next_back()) {
        (Some(&a), Some(&b)) => Ok(a..=b),
        _ => Err(Failure::Usage("empty series".into())),
    }
}

fn cmd_fit(
    format: Format,
    mode: FitMode,
    colors: usize,
    spec: Option<FreeModuleSpec>,
    lambda: Option<Partition>,
    degree_bound: Option<usize>,
    window: Option<RangeInclusive<usize>>,
) -> CmdResult {
    if colors == 0 {
        return Err(Failure::Usage("--d must be at least 1".into()));
    }
    let report = match mode {
        FitMode::Dims => {
            let bound = match (degree_bound, &spec) {
                (Some(b), _) => b,
                (None, Some(s)) => s.generator_degree(),
                (None, None) => {
                    return Err(Failure::Usage(
                        "--degree-bound is required with --stdin".into(),
                    ))
                }
            };
            let (series, window) = match &spec {
                Some(s) => {
                    let m = s.generator_degree();
                    let window = window.unwrap_or(m..=m + 3 * colors * (bound + 1));
                    let series = window.clone().map(|n| (n, dim_at(s, n))).collect();
                    (series, window)
                }
                None => {
                    let series = read_stdin_series()?;
                    let window = match window {
                        Some(w) => w,
                        None => full_range(&series)?,
                    };
                    (series, window)
                }
            };
            fit_exponential_polynomial(&series, colors, bound, window)?.to_json(bound)
        }
        FitMode::Mult => {
            let bound = degree_bound.unwrap_or(colors - 1);
            let lambda = lambda.unwrap_or_default();
            let (series, window) = match &spec {
                Some(s) => {
                    let window =
                        window.unwrap_or_else(|| default_multiplicity_window(s, &lambda, 5));
                    let series =
                        multiplicity_series(s, &lambda, window.clone(), Execution::default());
                    (series, window)
                }
                None => {
                    let values = read_stdin_series()?;
                    let window = match window {
                        Some(w) => w,
                        None => full_range(&values)?,
                    };
                    (
                        MultiplicitySeries {
                            lambda: lambda.clone(),
                            values,
                        },
                        window,
                    )
                }
            };
            fit_polynomial(&series, bound, window)?.to_json(bound)
        }
    };
    let value = serde_json::to_value(&report).expect("fit report serializes");
    Ok(render(format, value, || {
        let mut out = String::from("base\tcoefficients");
        for (i, p) in report.polynomials.iter().enumerate() {
            out.push_str(&format!("\n{}\t{}", i + 1, p.join(",")));
        }
        out.push_str(&format!(
            "\nvalidated\t{}..{}",
            report.validated_range[0], report.validated_range[1]
        ));
        out
    }))
}

fn cmd_oracle(format: Format, max: usize, inject_fault: bool) -> CmdResult {
    if max > ORACLE_LIMIT {
        return Err(Failure::Usage(format!(
            "--max {max} exceeds the oracle limit {ORACLE_LIMIT}"
        )));
    }
    let summary = if inject_fault {
        oracle_sweep_with(max, Execution::default(), |mu, a| {
            let mut d = pieri_product(mu, a);
            if d.degree() >= 2 {
                d.add(Partition::column(d.degree()), 1u32.into());
            }
            d
        })
    } else {
        oracle_sweep(max, Execution::default())
    };
    match &summary.first_failure {
        None => {
            let value = json!({"result": "PASS", "max": max, "cases": summary.cases});
            Ok(render(format, value, || {
                format!("PASS\t{} cases", summary.cases)
            }))
        }
        Some(w) => {
            let oracle = w
                .oracle
                .as_ref()
                .map(|d| serde_json::to_value(d.to_json()).unwrap());
            let value = json!({
                "result": "FAIL",
                "max": max,
                "mu": w.mu,
                "a": w.a.entries(),
                "pieri": w.pieri.to_json(),
                "oracle": oracle,
            });
            let text = render(format, value, || {
                format!("FAIL\tmu={}\ta={:?}", w.mu, w.a.entries())
            });
            println!("{text}");
            Err(Failure::Invariant(format!(
                "Pieri product disagrees with the character oracle at mu={} a={:?}",
                w.mu,
                w.a.entries()
            )))
        }
    }
}
