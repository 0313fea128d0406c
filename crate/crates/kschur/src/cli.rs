//! Command-line front end.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use kschur_core::kschur::{
    h_expansion_of, klr_coefficient, klr_product_table, kschur_element, kschur_solve,
};
use kschur_core::nilcoxeter::h_gen;
use kschur_core::{
    BoundedPartition, Core, DownMethod, ExpansionMethod, HExpansion, KSchur, NilCoxeterElement,
    Rank, Word,
};
use serde::Serialize;

use crate::cache::ExpansionCache;
use crate::error::{Error, Result};
use crate::json::{element_from_json, element_to_json, h_expansion_to_json, ElementJson};
use crate::memo::SharedCache;
use crate::verify::{run_all, run_suite, VerifyReport, SUITES};

#[derive(Debug, Parser)]
#[command(
    name = "kschur",
    version,
    about = "Affine nilCoxeter algebra, down operators and k-Schur functions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Directory for cached k-Schur expansions (overrides KSCHUR_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Ignore any cache directory.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Solve,
    Rectangle,
    NearRectangle,
}

impl From<MethodArg> for ExpansionMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => ExpansionMethod::Auto,
            MethodArg::Solve => ExpansionMethod::Solve,
            MethodArg::Rectangle => ExpansionMethod::Rectangle,
            MethodArg::NearRectangle => ExpansionMethod::NearRectangle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DownArg {
    Combinatorial,
    Root,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the generator h_i.
    H {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
    },
    /// Expand the k-Schur function of a k-bounded partition.
    Kschur {
        #[arg(long)]
        k: usize,
        /// Comma-separated parts; `0` is the empty partition.
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Apply the down operator D_{Λ_j} to an element read as JSON (`-` for stdin).
    Down {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value_t = DownArg::Combinatorial)]
        method: DownArg,
        #[arg(long)]
        input: PathBuf,
    },
    /// Maps between cores, bounded partitions and Grassmannian elements.
    Core(CoreArgs),
    /// A k-Littlewood–Richardson coefficient.
    Klr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Also compute the coefficient from the product of two k-Schur functions.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        max_length: usize,
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("map").required(true).args(["to_core", "to_bounded", "grassmannian", "apply_word"])))]
pub struct CoreArgs {
    #[arg(long)]
    k: usize,
    /// Core of a k-bounded partition.
    #[arg(long)]
    to_core: Option<String>,
    /// k-bounded partition of a core.
    #[arg(long)]
    to_bounded: Option<String>,
    /// Canonical word of the Grassmannian element of a k-bounded partition.
    #[arg(long)]
    grassmannian: Option<String>,
    /// Comma-separated letters applied to `--start`, rightmost first.
    #[arg(long, requires = "start", allow_hyphen_values = true)]
    apply_word: Option<String>,
    /// Starting core for `--apply-word`.
    #[arg(long)]
    start: Option<String>,
}

/// Parses `3,2,1`; `0` (or an empty string) is the empty partition.
pub fn parse_partition(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Vec::new());
    }
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("bad partition {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Usage(format!(
            "{s:?} is not a weakly decreasing list of positive parts"
        )));
    }
    Ok(parts)
}

pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("bad word {s:?}")))
        })
        .collect()
}

fn rank(k: usize) -> Result<Rank> {
    Ok(Rank::new(k)?)
}

fn bounded(k: usize, s: &str) -> Result<BoundedPartition> {
    Ok(BoundedPartition::new(rank(k)?, parse_partition(s)?)?)
}

fn join(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn element_text(a: &NilCoxeterElement) -> String {
    if a.is_zero() {
        return "0\n".into();
    }
    a.canonical_terms()
        .iter()
        .map(|(w, c)| format!("{c} {w}\n"))
        .collect()
}

fn h_expansion_text(h: &HExpansion) -> String {
    h.coeffs()
        .iter()
        .map(|(mu, c)| format!("{c} h({})\n", join(mu.rows())))
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Serialize)]
struct KSchurOut {
    k: usize,
    lambda: Vec<usize>,
    element: ElementJson,
    h_expansion: crate::json::HExpansionJson,
}

#[derive(Serialize)]
struct KlrOut {
    k: usize,
    lambda: Vec<usize>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    coefficient: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
}

#[derive(Serialize)]
struct CoreOut {
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    core: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounded: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<Vec<usize>>,
}

struct Context {
    format: Format,
    cache: Option<ExpansionCache>,
    memo: SharedCache,
}

impl Context {
    fn kschur(&self, lambda: &BoundedPartition, method: ExpansionMethod) -> Result<KSchur> {
        let compute = || -> Result<KSchur> {
            if method == ExpansionMethod::Solve {
                return Ok(kschur_solve(lambda, &self.memo)?);
            }
            let element = kschur_element(lambda, method, &self.memo)?;
            let h_expansion = h_expansion_of(&element, lambda.size(), &self.memo)?;
            Ok(KSchur {
                lambda: lambda.clone(),
                h_expansion,
                element,
            })
        };
        match &self.cache {
            Some(cache) => Ok(cache.get_or_compute(lambda, &self.memo, compute)?.0),
            None => compute(),
        }
    }
}

/// Output text and whether the run counts as a success.
fn execute(cli: &Cli) -> Result<(String, bool)> {
    let cache = if cli.no_cache {
        None
    } else {
        cli.cache_dir
            .clone()
            .map(ExpansionCache::new)
            .or_else(ExpansionCache::from_env)
    };
    let ctx = Context {
        format: cli.format,
        cache,
        memo: SharedCache::new(),
    };
    let text = ctx.format == Format::Text;
    match &cli.command {
        Command::H { k, i } => {
            let h = h_gen(rank(*k)?, *i)?;
            Ok((
                if text {
                    element_text(&h)
                } else {
                    to_json(&element_to_json(&h))?
                },
                true,
            ))
        }
        Command::Kschur { k, lambda, method } => {
            let lam = bounded(*k, lambda)?;
            let s = ctx.kschur(&lam, (*method).into())?;
            let out = if text {
                format!(
                    "{}--\n{}",
                    element_text(&s.element),
                    h_expansion_text(&s.h_expansion)
                )
            } else {
                to_json(&KSchurOut {
                    k: *k,
                    lambda: lam.rows().to_vec(),
                    element: element_to_json(&s.element),
                    h_expansion: h_expansion_to_json(&s.h_expansion),
                })?
            };
            Ok((out, true))
        }
        Command::Down {
            k,
            j,
            method,
            input,
        } => {
            let raw = read_input(input)?;
            let json: ElementJson =
                serde_json::from_str(&raw).map_err(|e| Error::Format(e.to_string()))?;
            if json.k != *k {
                return Err(Error::Usage(format!(
                    "input has k = {}, expected {k}",
                    json.k
                )));
            }
            let a = element_from_json(&json)?;
            let method = match method {
                DownArg::Combinatorial => DownMethod::Combinatorial,
                DownArg::Root => DownMethod::Root,
            };
            let image = kschur_core::down_operator::down(&a, *j, method)?;
            Ok((
                if text {
                    element_text(&image)
                } else {
                    to_json(&element_to_json(&image))?
                },
                true,
            ))
        }
        Command::Core(args) => core_command(args, text).map(|s| (s, true)),
        Command::Klr {
            k,
            lambda,
            mu,
            nu,
            oracle,
            method,
        } => {
            let (lam, mu, nu) = (bounded(*k, lambda)?, bounded(*k, mu)?, bounded(*k, nu)?);
            let coefficient = klr_coefficient(&lam, &mu, &nu, (*method).into(), &ctx.memo)?;
            let oracle = if *oracle {
                Some(
                    klr_product_table(&lam, &mu, &ctx.memo)?
                        .get(&nu)
                        .cloned()
                        .unwrap_or_default(),
                )
            } else {
                None
            };
            let agrees = oracle.as_ref().is_none_or(|o| *o == coefficient);
            let out = if text {
                match &oracle {
                    Some(o) => format!("{coefficient}\noracle {o}\n"),
                    None => format!("{coefficient}\n"),
                }
            } else {
                to_json(&KlrOut {
                    k: *k,
                    lambda: lam.rows().to_vec(),
                    mu: mu.rows().to_vec(),
                    nu: nu.rows().to_vec(),
                    coefficient: coefficient.to_string(),
                    oracle: oracle.map(|o| o.to_string()),
                })?
            };
            Ok((out, agrees))
        }
        Command::Verify {
            k,
            max_length,
            suite,
        } => {
            let r = rank(*k)?;
            let reports: Vec<VerifyReport> = if suite == "all" {
                run_all(r, *max_length)
            } else {
                vec![run_suite(suite, r, *max_length).ok_or_else(|| {
                    Error::Usage(format!(
                        "unknown suite {suite:?}; expected one of {} or all",
                        SUITES.join(", ")
                    ))
                })?]
            };
            let ok = reports.iter().all(VerifyReport::passed);
            let out = if text {
                reports.iter().map(report_text).collect()
            } else if reports.len() == 1 {
                to_json(&reports[0])?
            } else {
                to_json(&reports)?
            };
            Ok((out, ok))
        }
    }
}

fn report_text(r: &VerifyReport) -> String {
    let mut out = format!(
        "{} {} k={} bound={} checks={} failures={}\n",
        if r.passed() { "PASS" } else { "FAIL" },
        r.suite,
        r.k,
        r.bound,
        r.checks_run,
        r.failures.len()
    );
    for f in &r.failures {
        out += &format!("  {}: {}\n", f.identity, f.witness);
    }
    out
}

fn core_command(args: &CoreArgs, text: bool) -> Result<String> {
    let r = rank(args.k)?;
    let mut out = CoreOut {
        k: args.k,
        core: None,
        bounded: None,
        word: None,
    };
    if let Some(p) = &args.to_core {
        out.core = Some(bounded(args.k, p)?.to_core()?.rows().to_vec());
    } else if let Some(p) = &args.to_bounded {
        out.bounded = Some(
            Core::new(r, parse_partition(p)?)?
                .to_bounded()
                .rows()
                .to_vec(),
        );
    } else if let Some(p) = &args.grassmannian {
        let w = bounded(args.k, p)?.grassmannian_element()?;
        out.word = Some(w.canonical_reduced_word().letters().to_vec());
    } else if let Some(w) = &args.apply_word {
        let start = args
            .start
            .as_deref()
            .ok_or_else(|| Error::Usage("--apply-word needs --start".into()))?;
        let core = Core::new(r, parse_partition(start)?)?;
        let result = core.apply_word(&Word::new(r, parse_word(w)?)?)?;
        out.bounded = Some(result.to_bounded().rows().to_vec());
        out.core = Some(result.rows().to_vec());
    }
    if !text {
        return to_json(&out);
    }
    let mut s = String::new();
    if let Some(c) = &out.core {
        s += &format!("core {}\n", join(c));
    }
    if let Some(b) = &out.bounded {
        s += &format!("bounded {}\n", join(b));
    }
    if let Some(w) = &out.word {
        s += &format!(
            "word [{}]\n",
            w.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
    }
    Ok(s)
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })
}

/// Exit statuses: 0 success, 1 verification failure, 2 usage error,
/// 3 domain error, 4 malformed input, 5 IO error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((out, ok)) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return 5;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
