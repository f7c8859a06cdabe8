//! Subcommand implementations, independent of argument parsing.

use std::path::{Path, PathBuf};

use fpfree_core::circlemap::{fixed_points, FixedPointSet};
use fpfree_core::verify::VerificationReport;
use fpfree_core::{CircleMap, Scalar};

use crate::error::{CliError, CliResult};
use crate::output::{samples_csv, write_atomic};
use crate::pipeline::Pipeline;
use crate::render::{render_svg, RenderSpec};
use crate::scenario::Scenario;

pub const REPORT_FILE: &str = "report.json";
pub const SAMPLES_FILE: &str = "samples.csv";
pub const SVG_FILE: &str = "render.svg";

pub fn cmd_degree(s: &Scenario) -> i64 {
    s.map.degree()
}

pub fn cmd_fixed_points(s: &Scenario) -> CliResult<FixedPointSet<f64>> {
    Ok(fixed_points(&s.map, f64::tolerances().fixed_point)?)
}

#[derive(Debug, Clone)]
pub struct ExtendOutput {
    pub report: VerificationReport,
    pub report_path: PathBuf,
    pub samples_path: PathBuf,
}

/// Builds the extension, runs the checks and writes `report.json` and `samples.csv`.
pub fn cmd_extend(s: &Scenario, out_dir: &Path) -> CliResult<ExtendOutput> {
    let pipeline = Pipeline::build(s)?;
    let eval = pipeline.evaluate(s)?;
    let report_path = out_dir.join(REPORT_FILE);
    let samples_path = out_dir.join(SAMPLES_FILE);
    write_atomic(&report_path, eval.report.to_json().as_bytes())?;
    write_atomic(&samples_path, samples_csv(&eval.samples, eval.dimension).as_bytes())?;
    Ok(ExtendOutput {
        report: eval.report,
        report_path,
        samples_path,
    })
}

pub fn cmd_render(s: &Scenario, out_dir: &Path, spec: &RenderSpec) -> CliResult<PathBuf> {
    let pipeline = Pipeline::build(s)?;
    let svg = render_svg(&pipeline, spec)?;
    let path = out_dir.join(SVG_FILE);
    write_atomic(&path, svg.as_bytes())?;
    Ok(path)
}

/// Maps an empty fixed-point set to the corresponding error.
pub fn require_fixed_point(set: &FixedPointSet<f64>) -> CliResult<()> {
    if set.is_empty() {
        Err(CliError::Core(fpfree_core::Error::NoFixedPoint))
    } else {
        Ok(())
    }
}
