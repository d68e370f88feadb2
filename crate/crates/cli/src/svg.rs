//! Minimal write-only SVG figures: the body with its Auerbach structure, and
//! CDF plots. Output is deterministic.

use mbk_core::angles::TAU;
use mbk_core::{AuerbachSet, PlanarBody, SegmentSet};
use std::fmt::Write;

const W: f64 = 640.0;
const H: f64 = 640.0;

fn map_point(p: [f64; 2], scale: f64) -> (f64, f64) {
    (W / 2.0 + p[0] * scale, H / 2.0 - p[1] * scale)
}

/// Unit circle of the body with Auerbach components (outer red arcs) and
/// boundary segments (inner blue arcs) highlighted.
pub fn body_svg(body: &PlanarBody, auerbach: &AuerbachSet, segments: &SegmentSet) -> String {
    let scale = 0.4 * W;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(s, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");

    let polyline = |s: &mut String, start: f64, end: f64, radial: f64, color: &str, width: f64| {
        let n = ((end - start) / TAU * 720.0).ceil().max(2.0) as usize;
        let mut d = String::new();
        for i in 0..=n {
            let t = start + (end - start) * i as f64 / n as f64;
            let bp = body.boundary_point(t);
            let (x, y) = map_point([bp.point[0] * radial, bp.point[1] * radial], scale);
            let _ = write!(d, "{}{x:.2},{y:.2} ", if i == 0 { "M" } else { "L" });
        }
        let _ = writeln!(
            s,
            "<path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"/>",
            d.trim_end()
        );
    };

    polyline(&mut s, 0.0, TAU, 1.0, "#333333", 1.5);
    for c in &auerbach.components {
        if c.width() <= auerbach.resolution {
            let bp = body.boundary_point(c.midpoint());
            let (x, y) = map_point([bp.point[0] * 1.05, bp.point[1] * 1.05], scale);
            let _ = writeln!(s, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#cc2222\"/>");
        } else {
            polyline(&mut s, c.start, c.end, 1.05, "#cc2222", 3.0);
        }
    }
    for seg in &segments.segments {
        polyline(&mut s, seg.arc.start(), seg.arc.end(), 0.95, "#2244cc", 2.0);
    }
    let _ = writeln!(
        s,
        "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"12\">auerbach components: {} (red), segments: {} (blue)</text>",
        auerbach.components.len(),
        segments.segments.len()
    );
    s.push_str("</svg>\n");
    s
}

/// Line plot of a CDF-like function on `[lo, hi]`.
pub fn cdf_svg<F: Fn(f64) -> f64>(
    x_label: &str,
    y_label: &str,
    lo: f64,
    hi: f64,
    n: usize,
    f: F,
) -> String {
    let width = 640.0;
    let height = 480.0;
    let margin = 48.0;
    let ys: Vec<f64> = (0..=n).map(|i| f(lo + (hi - lo) * i as f64 / n as f64)).collect();
    let (ymin, ymax) = ys.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
        (a.min(v), b.max(v))
    });
    let yspan = (ymax - ymin).max(1e-12);

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(s, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<line x1=\"{margin}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888\"/>",
        height - margin,
        width - margin,
        height - margin
    );
    let _ = writeln!(
        s,
        "<line x1=\"{margin}\" y1=\"{margin}\" x2=\"{margin}\" y2=\"{}\" stroke=\"#888\"/>",
        height - margin
    );
    let mut d = String::new();
    for (i, &y) in ys.iter().enumerate() {
        let px = margin + (width - 2.0 * margin) * i as f64 / n as f64;
        let py = height - margin - (height - 2.0 * margin) * (y - ymin) / yspan;
        let _ = write!(d, "{}{px:.2},{py:.2} ", if i == 0 { "M" } else { "L" });
    }
    let _ = writeln!(
        s,
        "<path d=\"{}\" fill=\"none\" stroke=\"#2244cc\" stroke-width=\"1.5\"/>",
        d.trim_end()
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\">{x_label}</text>",
        width / 2.0,
        height - 12.0
    );
    let _ = writeln!(
        s,
        "<text x=\"8\" y=\"{}\" font-family=\"monospace\" font-size=\"12\">{y_label}</text>",
        height / 2.0
    );
    s.push_str("</svg>\n");
    s
}
