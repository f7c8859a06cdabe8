//! SVG figure of an extension: the domain boundary, the surrounding circle
//! and displacement arrows `q -> F(q)` on a regular grid.
//!
//! Surfaces are drawn in the tangent plane at the pole.

use std::fmt::Write;

use fpfree_core::geom2d::Shape;
use fpfree_core::PlanarPoint;

use crate::error::{CliError, CliResult};
use crate::pipeline::{boundary_polyline, Pipeline};

pub const DEFAULT_SVG_SIZE: u32 = 640;
pub const DEFAULT_DENSITY: usize = 16;
pub const MIN_DENSITY: usize = 4;
/// Boundary samples for curved boundaries.
const CURVE_SAMPLES: usize = 720;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub size: u32,
    /// Arrows per axis.
    pub density: usize,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            size: DEFAULT_SVG_SIZE,
            density: DEFAULT_DENSITY,
        }
    }
}

impl RenderSpec {
    pub fn new(size: u32, density: usize) -> CliResult<Self> {
        if density < MIN_DENSITY {
            return Err(CliError::Invalid(format!(
                "arrow density must be at least {MIN_DENSITY}, got {density}"
            )));
        }
        if size < 16 {
            return Err(CliError::Invalid(format!(
                "SVG size must be at least 16 px, got {size}"
            )));
        }
        Ok(RenderSpec { size, density })
    }
}

struct View {
    center: PlanarPoint,
    scale: f64,
    half: f64,
}

impl View {
    fn px(&self, p: PlanarPoint) -> (f64, f64) {
        (
            self.half + (p.x - self.center.x) * self.scale,
            self.half - (p.y - self.center.y) * self.scale,
        )
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn render_svg(pipeline: &Pipeline, spec: &RenderSpec) -> CliResult<String> {
    let circle = pipeline.circle();
    let domain = pipeline.planar_domain();
    let size = f64::from(spec.size);
    let view = View {
        center: circle.center,
        scale: size / (2.2 * circle.radius),
        half: size / 2.0,
    };

    let mut svg = String::new();
    let s = spec.size;
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#
    )
    .unwrap();
    svg.push_str(concat!(
        "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">",
        "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#b03a2e\"/></marker></defs>\n"
    ));
    writeln!(svg, r#"<rect width="{s}" height="{s}" fill="white"/>"#).unwrap();

    let (cx, cy) = view.px(circle.center);
    writeln!(
        svg,
        r##"<circle id="circumscribed" cx="{}" cy="{}" r="{}" fill="none" stroke="#7f8c8d" stroke-dasharray="6 4"/>"##,
        num(cx),
        num(cy),
        num(circle.radius * view.scale)
    )
    .unwrap();

    let outline = match domain.shape() {
        Shape::Polygon(v) => v.clone(),
        _ => boundary_polyline(domain, CURVE_SAMPLES)?,
    };
    let mut d = String::new();
    for (k, p) in outline.iter().enumerate() {
        let (x, y) = view.px(*p);
        write!(d, "{}{} {}", if k == 0 { "M" } else { " L" }, num(x), num(y)).unwrap();
    }
    d.push_str(" Z");
    writeln!(
        svg,
        r##"<path id="boundary" d="{d}" fill="#eaf1f8" stroke="#1f4e79" stroke-width="1.5"/>"##
    )
    .unwrap();

    svg.push_str("<g id=\"arrows\" stroke=\"#b03a2e\" stroke-width=\"1\">\n");
    let n = spec.density;
    for i in 0..n {
        for j in 0..n {
            let u = -1.0 + (2 * j + 1) as f64 / n as f64;
            let v = 1.0 - (2 * i + 1) as f64 / n as f64;
            let q = circle.center + PlanarPoint::new(u, v) * circle.radius;
            if !domain.contains(q)? {
                continue;
            }
            let (x1, y1) = view.px(q);
            let (x2, y2) = view.px(pipeline.eval_planar(q)?);
            writeln!(
                svg,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" marker-end="url(#head)"/>"#,
                num(x1),
                num(y1),
                num(x2),
                num(y2)
            )
            .unwrap();
        }
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
