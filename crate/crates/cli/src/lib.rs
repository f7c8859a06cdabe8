//! Command-line front end: scenario files, report and sample output, SVG rendering.

// `!(x > 0)` is used on purpose: it rejects NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod error;
pub mod output;
pub mod pipeline;
pub mod render;
pub mod scenario;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{cmd_degree, cmd_extend, cmd_fixed_points, cmd_render, require_fixed_point};
use crate::error::{CliResult, EXIT_INVALID, EXIT_OK};
use crate::output::format_fixed_points;
use crate::render::{RenderSpec, DEFAULT_DENSITY, DEFAULT_SVG_SIZE};
use crate::scenario::{Overrides, Scenario};

#[derive(Debug, Parser)]
#[command(name = "fpfree", version, about = "Fixed-point-free extensions of boundary maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the degree of the boundary map.
    Degree(Common),
    /// Print the fixed points of the boundary map.
    FixedPoints(Common),
    /// Build the extension and write report.json and samples.csv.
    Extend {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Draw the domain and the displacement field as SVG.
    Render {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SVG_SIZE)]
        svg_size: u32,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: usize,
    },
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long)]
    scenario: PathBuf,
    /// rotation, collapse0 or witness
    #[arg(long)]
    strategy: Option<String>,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
}

impl Common {
    fn load(&self) -> CliResult<Scenario> {
        Scenario::load(&self.scenario)?.apply(&Overrides {
            strategy: self.strategy.clone(),
            grid_n: self.grid,
            tol: self.tol,
            seed: self.seed,
        })
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> CliResult<()> {
    let print = |out: &mut dyn Write, line: String| {
        // a closed stdout is not worth a failure exit
        let _ = writeln!(out, "{line}");
    };
    match cmd {
        Command::Degree(c) => print(out, cmd_degree(&c.load()?).to_string()),
        Command::FixedPoints(c) => {
            let set = cmd_fixed_points(&c.load()?)?;
            print(out, format_fixed_points(&set));
            require_fixed_point(&set)?;
        }
        Command::Extend { common, out: dir } => {
            let done = cmd_extend(&common.load()?, &dir)?;
            print(out, done.report_path.display().to_string());
            print(out, done.samples_path.display().to_string());
        }
        Command::Render {
            common,
            out: dir,
            svg_size,
            density,
        } => {
            let spec = RenderSpec::new(svg_size, density)?;
            print(out, cmd_render(&common.load()?, &dir, &spec)?.display().to_string());
        }
    }
    Ok(())
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
