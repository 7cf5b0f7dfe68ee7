//! Command-line front end: parses arguments, runs the claim checks, prints a
//! table and optionally writes a JSON or CSV report.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 for
//! configuration, input or I/O errors. Argument errors use clap's code.

pub mod args;
pub mod checks;
pub mod config;

use std::ffi::OsString;
use std::io::Write;

use serde::Serialize;

use densitycheck::experiment::{ExperimentConfig, ExperimentReport};
use densitycheck::report::ClaimReport;

use args::{parse_args, Cli, Command, Format};
use config::{apply_config, resolution_from_panels};

pub const EXIT_FAILED_CHECKS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Everything one invocation produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Document {
    pub command: String,
    pub passed: bool,
    pub checks: ClaimReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub experiment: Option<ExperimentReport>,
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn to_csv(&self) -> String {
        match (&self.experiment, self.command.as_str()) {
            (Some(report), "orthogonality") => report.to_csv(),
            _ => self.checks.to_csv(),
        }
    }
}

/// Experiment parameters from defaults, then the config file, then flags.
pub fn experiment_config(cli: &Cli) -> Result<ExperimentConfig, String> {
    let mut config = ExperimentConfig::default();
    if let Some(path) = &cli.options.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        config = apply_config(&text, config).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(d) = cli.command.distances() {
        config.distances = d.to_vec();
    }
    if let Some(n) = cli.options.resolution {
        config.resolution = resolution_from_panels(n);
    }
    if cli.options.refine {
        config.resolution = config.resolution.refined();
    }
    Ok(config)
}

fn section(name: &str, report: densitycheck::Result<ClaimReport>) -> Result<Sections, String> {
    report
        .map(|r| vec![(name.to_string(), r)])
        .map_err(|e| format!("{name}: {e}"))
}

/// Checks grouped under the subcommand that produced them.
pub type Sections = Vec<(String, ClaimReport)>;

/// Runs the checks of `cli`.
pub fn run(cli: &Cli) -> Result<(Sections, Option<ExperimentReport>), String> {
    let needs_experiment = matches!(
        cli.command,
        Command::Orthogonality { .. } | Command::All { .. }
    );
    let config = if needs_experiment {
        Some(experiment_config(cli)?)
    } else {
        None
    };
    let experiment = |config: &ExperimentConfig| {
        checks::orthogonality(config).map_err(|e| format!("orthogonality: {e}"))
    };
    Ok(match &cli.command {
        Command::Dimensions => (section("dimensions", checks::dimensions())?, None),
        Command::Derive => (section("derive", checks::derive())?, None),
        Command::Symmetry => (section("symmetry", checks::symmetry())?, None),
        Command::Continuity => (section("continuity", checks::continuity())?, None),
        Command::DiracConsistency => (
            section("dirac-consistency", checks::dirac_consistency())?,
            None,
        ),
        Command::Orthogonality { .. } => {
            let (claims, report) = experiment(config.as_ref().expect("config built"))?;
            (vec![("orthogonality".to_string(), claims)], Some(report))
        }
        Command::All { .. } => {
            let mut sections = Vec::new();
            sections.extend(section("dimensions", checks::dimensions())?);
            sections.extend(section("derive", checks::derive())?);
            sections.extend(section("symmetry", checks::symmetry())?);
            sections.extend(section("continuity", checks::continuity())?);
            sections.extend(section("dirac-consistency", checks::dirac_consistency())?);
            let (claims, report) = experiment(config.as_ref().expect("config built"))?;
            sections.push(("orthogonality".to_string(), claims));
            (sections, Some(report))
        }
    })
}

fn interaction_table(report: &ExperimentReport) -> String {
    let mut out = format!(
        "I01 = {:.11e} {:+.11e}i  (error {:.3e})\n{:>12}  {:>19}  {:>19}  {:>10}\n",
        report.i01.value.re, report.i01.value.im, report.i01.error, "d", "Re U", "Im U", "error"
    );
    for p in &report.interaction {
        out.push_str(&format!(
            "{:>12.6}  {:>19.11e}  {:>19.11e}  {:>10.3e}\n",
            p.d, p.normalized.value.re, p.normalized.value.im, p.normalized.error
        ));
    }
    out
}

/// Entry point with injectable argv and streams; returns the exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let (sections, experiment) = match run(&cli) {
        Ok(result) => result,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_ERROR;
        }
    };

    for (name, report) in &sections {
        let _ = writeln!(out, "== {name} ==");
        let _ = write!(out, "{}", report.to_table());
        if name == "orthogonality" {
            if let Some(report) = &experiment {
                let _ = write!(out, "{}", interaction_table(report));
            }
        }
    }

    let mut checks = ClaimReport::default();
    for (_, report) in sections {
        checks.extend(report);
    }
    let document = Document {
        command: cli.command.name().to_string(),
        passed: checks.passed(),
        checks,
        experiment,
    };

    if let Some(path) = &cli.options.out {
        let body = match cli.options.format {
            Format::Json => document.to_json() + "\n",
            Format::Csv => document.to_csv(),
        };
        if let Err(e) = std::fs::write(path, body) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_ERROR;
        }
    }

    if document.passed {
        0
    } else {
        let failed: Vec<&str> = document
            .checks
            .failures()
            .map(|c| c.name.as_str())
            .collect();
        let _ = writeln!(err, "failed claims: {}", failed.join(", "));
        EXIT_FAILED_CHECKS
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
