//! Command-line front end: parse, assess, lint, report.
//!
//! Requested output goes to stdout; diagnostics go to stderr, one per line
//! as `severity code line:col message`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};

use crate::analysis::{assess, what_if, WhatIfOverride};
use crate::catalog::{limitations_for, standards_for};
use crate::diag::{has_errors, Diagnostic};
use crate::dsl::{parse_with_spans, render_canonical, ParsedModel};
use crate::model::{ControllabilityClass, ExposureClass, Limitation, QualLevel, SeverityClass};
use crate::report::{render_table, ReportFormat, TableKind};
use crate::tables::{
    default_risk_matrix, determine_asil, determine_risk, parse_matrix, validate_matrix, RiskMatrix,
};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitStatus {
    /// Success, no Error diagnostics.
    Success = 0,
    /// Lint or validation Errors present.
    Findings = 1,
    /// The model or matrix file did not parse.
    ParseFailure = 2,
    /// Bad command line, or a file could not be read or written.
    Usage = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(name = "haratara", version, about = "Combined HARA/TARA risk models: check, rate and report")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and assess models, printing all diagnostics.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Render one assessment table.
    Report {
        file: PathBuf,
        #[arg(long)]
        table: TableKind,
        #[arg(long)]
        format: ReportFormat,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Render even if the model has Error diagnostics.
        #[arg(long)]
        force: bool,
    },
    /// Print the ASIL for a severity/exposure/controllability triple.
    Asil {
        #[arg(long)]
        severity: SeverityClass,
        #[arg(long)]
        exposure: ExposureClass,
        #[arg(long)]
        controllability: ControllabilityClass,
    },
    /// Print the risk level for an impact/feasibility pair.
    Risk {
        #[arg(long)]
        impact: QualLevel,
        #[arg(long)]
        feasibility: QualLevel,
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Show which ratings change under hypothetical inputs.
    WhatIf {
        file: PathBuf,
        /// `<id>.<field>=<value>`, repeatable.
        #[arg(long = "set", value_name = "ID.FIELD=VALUE")]
        set: Vec<WhatIfOverride>,
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Query the standards coverage catalog.
    #[command(group(ArgGroup::new("query").required(true).args(["limitation", "id"])))]
    Standards {
        #[arg(long)]
        limitation: Option<Limitation>,
        #[arg(long)]
        id: Option<String>,
    },
    /// Print or rewrite a model in canonical form.
    Fmt {
        file: PathBuf,
        #[arg(long)]
        write: bool,
    },
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams. `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    ExitStatus::Success
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    ExitStatus::Usage
                }
            };
        }
    };

    let result = match cli.command {
        Command::Check { files, matrix } => check(&files, matrix.as_deref(), err),
        Command::Report {
            file,
            table,
            format,
            matrix,
            output,
            force,
        } => report(&file, table, format, matrix.as_deref(), output.as_deref(), force, out, err),
        Command::Asil {
            severity,
            exposure,
            controllability,
        } => {
            let _ = writeln!(out, "{}", determine_asil(severity, exposure, controllability));
            Ok(ExitStatus::Success)
        }
        Command::Risk {
            impact,
            feasibility,
            matrix,
        } => load_matrix(matrix.as_deref(), err).map(|m| {
            let _ = writeln!(out, "{}", determine_risk(impact, feasibility, &m));
            ExitStatus::Success
        }),
        Command::WhatIf { file, set, matrix } => what_if_cmd(&file, &set, matrix.as_deref(), out, err),
        Command::Standards { limitation, id } => Ok(standards(limitation, id.as_deref(), out, err)),
        Command::Fmt { file, write } => fmt_cmd(&file, write, out, err),
    };
    result.unwrap_or_else(|status| status)
}

/// Early exit carrying the status to return.
type CmdResult = Result<ExitStatus, ExitStatus>;

fn read(path: &Path, err: &mut dyn Write) -> Result<String, ExitStatus> {
    fs::read_to_string(path).map_err(|e| {
        let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
        ExitStatus::Usage
    })
}

fn print_diagnostics(diags: &[Diagnostic], prefix: Option<&Path>, err: &mut dyn Write) {
    for d in diags {
        let _ = match prefix {
            Some(p) => writeln!(err, "{}: {d}", p.display()),
            None => writeln!(err, "{d}"),
        };
    }
}

fn status_of(diags: &[Diagnostic]) -> ExitStatus {
    if has_errors(diags) {
        ExitStatus::Findings
    } else {
        ExitStatus::Success
    }
}

fn load_matrix(path: Option<&Path>, err: &mut dyn Write) -> Result<RiskMatrix, ExitStatus> {
    let Some(path) = path else {
        return Ok(default_risk_matrix());
    };
    let text = read(path, err)?;
    let matrix = match parse_matrix(&text) {
        Ok(m) => m,
        Err(diags) => {
            print_diagnostics(&diags, Some(path), err);
            return Err(ExitStatus::ParseFailure);
        }
    };
    let problems = validate_matrix(&matrix);
    if !problems.is_empty() {
        print_diagnostics(&problems, Some(path), err);
        return Err(ExitStatus::Findings);
    }
    Ok(matrix)
}

fn load_model(path: &Path, err: &mut dyn Write) -> Result<ParsedModel, ExitStatus> {
    let text = read(path, err)?;
    parse_with_spans(&text).map_err(|diags| {
        print_diagnostics(&diags, None, err);
        ExitStatus::ParseFailure
    })
}

/// Parses and assesses one file, returning its diagnostics with spans.
fn check_one(text: &str, matrix: &RiskMatrix) -> (Vec<Diagnostic>, ExitStatus) {
    match parse_with_spans(text) {
        Err(diags) => (diags, ExitStatus::ParseFailure),
        Ok(parsed) => {
            let mut diags = assess(&parsed.model, matrix).diagnostics;
            parsed.source_map.locate(&mut diags);
            let status = status_of(&diags);
            (diags, status)
        }
    }
}

fn check(files: &[PathBuf], matrix: Option<&Path>, err: &mut dyn Write) -> CmdResult {
    let matrix = load_matrix(matrix, err)?;
    let texts: Vec<Result<String, String>> = files
        .iter()
        .map(|p| fs::read_to_string(p).map_err(|e| e.to_string()))
        .collect();

    // Files are independent; assess them in parallel and report in order.
    let results: Vec<Option<(Vec<Diagnostic>, ExitStatus)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = texts
            .iter()
            .map(|t| {
                let matrix = &matrix;
                scope.spawn(move || t.as_ref().ok().map(|text| check_one(text, matrix)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check worker panicked"))
            .collect()
    });

    let mut worst = ExitStatus::Success;
    let prefix_paths = files.len() > 1;
    for ((path, text), result) in files.iter().zip(&texts).zip(results) {
        match (text, result) {
            (Err(e), _) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                worst = worst.max(ExitStatus::Usage);
            }
            (Ok(_), Some((diags, status))) => {
                print_diagnostics(&diags, prefix_paths.then_some(path.as_path()), err);
                worst = worst.max(status);
            }
            (Ok(_), None) => unreachable!("readable file always produces a result"),
        }
    }
    Ok(worst)
}

#[allow(clippy::too_many_arguments)]
fn report(
    file: &Path,
    table: TableKind,
    format: ReportFormat,
    matrix: Option<&Path>,
    output: Option<&Path>,
    force: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let matrix = load_matrix(matrix, err)?;
    let parsed = load_model(file, err)?;
    let mut assessment = assess(&parsed.model, &matrix);
    parsed.source_map.locate(&mut assessment.diagnostics);
    print_diagnostics(&assessment.diagnostics, None, err);
    let status = status_of(&assessment.diagnostics);
    if status != ExitStatus::Success && !force {
        let _ = writeln!(
            err,
            "error: refusing to render a report for a model with errors (use --force to override)"
        );
        return Ok(status);
    }

    let doc = render_table(table, &parsed.model, &assessment, format);
    match output {
        Some(path) => {
            if let Err(e) = fs::write(path, doc) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return Err(ExitStatus::Usage);
            }
        }
        None => {
            let _ = out.write_all(doc.as_bytes());
        }
    }
    Ok(status)
}

fn what_if_cmd(
    file: &Path,
    set: &[WhatIfOverride],
    matrix: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let matrix = load_matrix(matrix, err)?;
    let parsed = load_model(file, err)?;
    match what_if(&parsed.model, &matrix, set) {
        Ok(deltas) => {
            for d in deltas {
                let _ = writeln!(out, "{d}");
            }
            Ok(ExitStatus::Success)
        }
        Err(diags) => {
            print_diagnostics(&diags, None, err);
            Ok(ExitStatus::Usage)
        }
    }
}

fn standards(
    limitation: Option<Limitation>,
    id: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> ExitStatus {
    if let Some(l) = limitation {
        for s in standards_for(l) {
            let _ = writeln!(out, "{}", s.id);
        }
        return ExitStatus::Success;
    }
    let id = id.unwrap_or_default();
    match limitations_for(id) {
        Ok(set) => {
            for l in set {
                let _ = writeln!(out, "{l}");
            }
            ExitStatus::Success
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_diagnostic());
            ExitStatus::Usage
        }
    }
}

fn fmt_cmd(file: &Path, write: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let parsed = load_model(file, err)?;
    let text = render_canonical(&parsed.model);
    if write {
        if let Err(e) = fs::write(file, text) {
            let _ = writeln!(err, "error: cannot write {}: {e}", file.display());
            return Err(ExitStatus::Usage);
        }
    } else {
        let _ = out.write_all(text.as_bytes());
    }
    Ok(ExitStatus::Success)
}
