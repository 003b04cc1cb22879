//! Command-line front-end for [`tripartite`]: the α scan, the density
//! campaigns, single-geodesic inspection and the invariant suites.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod verify;

pub use config::{Cli, Command, RunConfig};
pub use error::CliError;
pub use output::{Format, Table};

/// Executes one invocation and writes its output.
pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let out = config.output.as_deref();
    let table = match config.command {
        Command::ScanAlpha { .. } => commands::cmd_scan_alpha(config)?,
        Command::Pdf => commands::cmd_pdf(config)?,
        Command::Evolve { .. } => commands::cmd_evolve(config)?,
        Command::Verify => {
            let report = verify::run_suites(config)?;
            output::emit(out, &report.render(config.format))?;
            return match report.suite_failures() {
                None => Ok(()),
                Some(names) => Err(CliError::Verify(names)),
            };
        }
    };
    output::emit(out, &table.render(config.format))
}
