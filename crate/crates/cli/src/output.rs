//! Deterministic file output: atomic writes, sample CSV, fixed-point lists.

use std::fs;
use std::io::Write;
use std::path::Path;

use fpfree_core::circlemap::FixedPointSet;
use fpfree_core::verify::report::format_float;
use tempfile::NamedTempFile;

use crate::error::{CliError, CliResult};
use crate::pipeline::SampleRow;

/// Writes `contents` to a temporary file next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> CliResult<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(contents).map_err(|e| CliError::io(path, e))?;
    tmp.as_file().sync_all().map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// `x,y[,z],Fx,Fy[,Fz]` with one row per sample.
pub fn samples_csv(rows: &[SampleRow], dimension: usize) -> String {
    let header = if dimension == 3 { "x,y,z,Fx,Fy,Fz" } else { "x,y,Fx,Fy" };
    let mut out = String::with_capacity(rows.len() * 24 * 2 * dimension + header.len() + 1);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.point.iter().chain(&row.image).map(|&x| format_float(x)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// JSON list of fixed angles, or `"all-fixed"`.
pub fn format_fixed_points(set: &FixedPointSet<f64>) -> String {
    match set {
        FixedPointSet::AllFixed => "\"all-fixed\"".to_string(),
        FixedPointSet::Empty => "[]".to_string(),
        FixedPointSet::Discrete(angles) => {
            let items: Vec<String> = angles.iter().map(|a| format_float(a.radians())).collect();
            format!("[{}]", items.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpfree_core::Angle;

    #[test]
    fn csv_layout() {
        let rows = vec![SampleRow {
            point: vec![0.5, 0.0],
            image: vec![1.0, -0.25],
        }];
        assert_eq!(
            samples_csv(&rows, 2),
            "x,y,Fx,Fy\n5.0000000000000000e-1,0.0000000000000000e0,1.0000000000000000e0,-2.5000000000000000e-1\n"
        );
        assert!(samples_csv(&[], 3).starts_with("x,y,z,Fx,Fy,Fz\n"));
    }

    #[test]
    fn fixed_point_lists() {
        let set = FixedPointSet::Discrete(vec![Angle::zero(), Angle::new(std::f64::consts::PI)]);
        assert_eq!(
            format_fixed_points(&set),
            "[0.0000000000000000e0, 3.1415926535897931e0]"
        );
        assert_eq!(format_fixed_points(&FixedPointSet::Empty), "[]");
        assert_eq!(format_fixed_points(&FixedPointSet::AllFixed), "\"all-fixed\"");
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("sub/report.json");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(fs::read_dir(p.parent().unwrap()).unwrap().count(), 1);
    }
}
