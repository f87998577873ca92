//! The `bench` command line.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gobench_core::calculus::{self, DEFAULT_PROBE_SAMPLES, DEFAULT_PROBE_TOLERANCE};
use gobench_core::optimize::run_suite;
use gobench_core::registry::{self, Criteria, DimensionQuery};
use gobench_core::verify::{self, AuditReport, DEFAULT_TOLERANCE};
use gobench_core::{functions, Error as CoreError, EvalContext};

use crate::{audit, catalog, grid, runs, text};

#[derive(Debug, Parser)]
#[command(
    name = "bench",
    version,
    about = "Global optimization test functions: catalog, evaluation, audit and runs"
)]
pub struct Cli {
    /// Audit cache written by `check` and read by `info`.
    #[arg(long, global = true, value_name = "PATH", default_value = audit::CACHE_FILE)]
    pub cache: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Noise {
    Sample,
    Suppress,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog entries matching every given attribute.
    List(ListArgs),
    /// Describe one function.
    Info { function: String },
    /// Evaluate a function at a point.
    Eval {
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Noise::Suppress)]
        noise: Noise,
    },
    /// Write a landscape grid over two coordinates as CSV.
    Grid {
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        x1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x2: Option<String>,
        #[arg(long)]
        resolution: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Audit printed optima.
    Check(CheckArgs),
    /// Test additive separability empirically.
    Probe {
        function: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_PROBE_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PROBE_TOLERANCE)]
        tol: f64,
    },
    /// Run an optimizer manifest.
    Run {
        #[arg(long)]
        manifest: PathBuf,
        /// Results file; `.csv` selects CSV, anything else JSON. Defaults to JSON on stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the whole catalog.
    Catalog {
        #[arg(long, value_enum)]
        format: DataFormat,
    },
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[arg(long)]
    modality: Option<registry::Modality>,
    #[arg(long)]
    separability: Option<registry::Separability>,
    #[arg(long)]
    continuity: Option<registry::Continuity>,
    #[arg(long)]
    differentiability: Option<registry::Differentiability>,
    #[arg(long)]
    scalability: Option<registry::Scalability>,
    /// Keep functions defined in this dimension.
    #[arg(long)]
    dimension: Option<usize>,
    #[arg(long, value_enum, default_value_t = ListFormat::Table)]
    format: ListFormat,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Function to audit; all functions when omitted.
    #[arg(conflicts_with = "all")]
    function: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = DataFormat::Json)]
    format: DataFormat,
    /// JSON array of `{fn, reason}`; the exit code then reports whether the
    /// Discrepant set matches it.
    #[arg(long, value_name = "PATH")]
    expected_errata: Option<PathBuf>,
    /// Also write the errata ledger as JSON.
    #[arg(long, value_name = "PATH")]
    ledger: Option<PathBuf>,
}

/// Expected failures exit with 1, internal ones with 2.
enum Exit {
    Ok,
    Fail,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            return match sink.write_all(rendered.as_bytes()) {
                Ok(()) => code,
                Err(_) => 2,
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(Exit::Ok) => 0,
        Ok(Exit::Fail) => 1,
        Err(e) => {
            let internal = e.downcast_ref::<OutputError>().is_some();
            let _ = writeln!(err, "error: {e:#}");
            if internal {
                2
            } else {
                1
            }
        }
    }
}

/// Failure writing to stdout or stderr; exits with 2.
#[derive(Debug)]
struct OutputError(std::io::Error);

impl std::fmt::Display for OutputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "writing output: {}", self.0)
    }
}

impl std::error::Error for OutputError {}

fn emit(w: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    w.write_all(bytes)
        .and_then(|_| w.flush())
        .map_err(|e| OutputError(e).into())
}

/// Renders into memory first so stream failures are told apart from data errors.
fn render(f: impl FnOnce(&mut Vec<u8>) -> Result<()>) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    Ok(buf)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut w =
        BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
    w.write_all(bytes)
        .and_then(|_| w.flush())
        .with_context(|| format!("writing {}", path.display()))
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Exit> {
    match &cli.command {
        Command::List(a) => {
            let criteria = Criteria {
                continuity: a.continuity,
                differentiability: a.differentiability,
                separability: a.separability,
                scalability: a.scalability,
                modality: a.modality,
                dimension: a.dimension.map(DimensionQuery::Accepts),
            };
            let entries = catalog::entries(registry::filter(&criteria));
            let bytes = render(|b| match a.format {
                ListFormat::Json => catalog::write_json(b, &entries),
                ListFormat::Csv => catalog::write_csv(b, &entries),
                ListFormat::Table => catalog::write_table(b, &entries),
            })?;
            emit(out, &bytes)?;
        }
        Command::Info { function } => {
            let spec = registry::lookup(function.as_str())?;
            let mut text = catalog::describe(spec);
            match audit::load_cache(&cli.cache) {
                Ok(cache) => {
                    if let Some(entry) = cache.get(spec.slug()) {
                        text += &format!("audit: {}\n", entry.status);
                        for r in &entry.records {
                            if !r.note.is_empty() {
                                text += &format!("  {}: {}\n", r.status, r.note);
                            }
                        }
                    }
                }
                Err(e) => emit(
                    err,
                    format!("warning: ignoring audit cache: {e:#}\n").as_bytes(),
                )?,
            }
            emit(out, text.as_bytes())?;
        }
        Command::Eval {
            function,
            point,
            seed,
            noise,
        } => {
            let x = text::parse_point(point)?;
            let ctx = match noise {
                Noise::Sample => EvalContext::sampled(*seed),
                Noise::Suppress => EvalContext {
                    seed: *seed,
                    ..EvalContext::suppressed()
                },
            };
            let v = functions::evaluate(function.as_str(), &x, &ctx)?;
            emit(out, format!("{}\n", text::num(v)).as_bytes())?;
        }
        Command::Grid {
            function,
            x1,
            x2,
            resolution,
            out: path,
        } => {
            let req = grid::GridRequest {
                function: function.clone(),
                x1: x1.as_deref().map(text::parse_range).transpose()?,
                x2: x2.as_deref().map(text::parse_range).transpose()?,
                resolution: *resolution,
            };
            let bytes = render(|b| grid::export(&req, b))?;
            write_file(path, &bytes)?;
        }
        Command::Check(a) => return check(cli, a, out, err),
        Command::Probe {
            function,
            dim,
            samples,
            seed,
            tol,
        } => {
            let spec = registry::lookup(function.as_str())?;
            let n = dim.unwrap_or_else(|| spec.default_dimension().max(2));
            let v = calculus::separability_probe(spec, n, *samples, *seed, *tol)?;
            let line = format!(
                "{} evidence={} samples={} failures={}\n",
                v.verdict.as_str(),
                text::num(v.evidence),
                v.samples,
                v.failures
            );
            emit(out, line.as_bytes())?;
        }
        Command::Run {
            manifest,
            out: path,
        } => {
            let raw = std::fs::read_to_string(manifest)
                .with_context(|| format!("reading {}", manifest.display()))?;
            let file: runs::ManifestFile = serde_json::from_str(&raw)
                .with_context(|| format!("parsing {}", manifest.display()))?;
            let m = runs::to_manifest(&file)
                .map_err(|errs| anyhow!(CoreError::InvalidManifest(errs)))?;
            let report = run_suite(&m)?;
            let rows = runs::rows(&report);
            emit(err, runs::summary_table(&report).as_bytes())?;
            match path {
                Some(p) if p.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) => {
                    write_file(p, &render(|b| runs::write_csv(b, &rows))?)?
                }
                Some(p) => write_file(p, &render(|b| runs::write_json(b, &rows))?)?,
                None => emit(out, &render(|b| runs::write_json(b, &rows))?)?,
            }
        }
        Command::Catalog { format } => {
            let entries = catalog::full();
            let bytes = render(|b| match format {
                DataFormat::Json => catalog::write_json(b, &entries),
                DataFormat::Csv => catalog::write_csv(b, &entries),
            })?;
            emit(out, &bytes)?;
        }
    }
    Ok(Exit::Ok)
}

fn check(cli: &Cli, a: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Exit> {
    if !(a.tol > 0.0 && a.tol.is_finite()) {
        bail!("--tol must be a positive number");
    }
    let expected = a
        .expected_errata
        .as_deref()
        .map(audit::load_expected)
        .transpose()?;
    let report = match &a.function {
        Some(f) if !a.all => AuditReport::from_records(verify::check_minimum(f.as_str(), a.tol)?),
        _ => verify::audit_all(a.tol)?,
    };
    let rows = audit::rows(&report);
    let bytes = render(|b| match a.format {
        DataFormat::Json => audit::write_json(b, &rows),
        DataFormat::Csv => audit::write_csv(b, &rows),
    })?;
    emit(out, &bytes)?;
    audit::update_cache(&cli.cache, &report)?;
    if let Some(p) = &a.ledger {
        let ledger = audit::ledger(&report);
        let mut text = serde_json::to_string_pretty(&ledger)?;
        text.push('\n');
        write_file(p, text.as_bytes())?;
    }
    let mut diag = audit::summary_text(&report) + "\n";
    let ok = match expected {
        Some(set) => {
            let diff = audit::compare(&report, &set);
            for i in &diff.unexpected {
                diag += &format!("unexpected Discrepant: f{i}\n");
            }
            for i in &diff.missing {
                diag += &format!("expected Discrepant but not flagged: f{i}\n");
            }
            diff.is_clean()
        }
        None => {
            for id in report.discrepant() {
                diag += &format!("Discrepant: f{} {}\n", id.index, id.slug);
            }
            report.summary.discrepant == 0
        }
    };
    emit(err, diag.as_bytes())?;
    Ok(if ok { Exit::Ok } else { Exit::Fail })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("bench").chain(args.iter().copied()),
            &mut o,
            &mut e,
        );
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn eval_sphere() {
        assert_eq!(
            call(&["eval", "sphere", "--point", "0,0"]),
            (0, "0\n".into(), String::new())
        );
        let v: f64 = call(&["eval", "f71", "--point", "1,1"])
            .1
            .trim()
            .parse()
            .unwrap();
        assert!((v - 0.04).abs() < 1e-15);
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, out, err) = call(&["frobnicate"]);
        assert_eq!((code, out.is_empty()), (1, true));
        assert!(err.contains("Usage"));
        assert_eq!(call(&["list", "--modality", "bimodal"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn expected_failures_exit_one() {
        assert_eq!(call(&["eval", "nope", "--point", "0"]).0, 1);
        assert_eq!(call(&["eval", "sphere", "--point", "a,b"]).0, 1);
    }

    #[test]
    fn negative_points_parse() {
        assert_eq!(call(&["eval", "sphere", "--point", "-1,-2"]).1, "5\n");
    }
}
