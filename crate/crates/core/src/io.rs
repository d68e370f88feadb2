//! JSON descriptors and CSV import/export.
//!
//! Bodies and perfect sets travel as small tagged JSON documents; tabular
//! data uses plain two-to-four column CSV with 17 significant digits so that
//! doubles round-trip exactly.

use crate::auerbach::{AuerbachSet, SegmentSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io::Write;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BodyDescriptor {
    Disk,
    Lp { p: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
    CantorBump { depth: u32, epsilon: f64 },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SetDescriptor {
    Cantor { depth: u32 },
    Gaps { gaps: Vec<[f64; 2]> },
}

impl SetDescriptor {
    pub fn build(&self) -> Result<crate::staircase::PerfectSet> {
        match self {
            SetDescriptor::Cantor { depth } => {
                if *depth > crate::staircase::MAX_CANTOR_DEPTH {
                    return Err(Error::InvalidDescriptor(format!(
                        "cantor depth {depth} exceeds the supported maximum {}",
                        crate::staircase::MAX_CANTOR_DEPTH
                    )));
                }
                Ok(crate::staircase::PerfectSet::cantor(*depth))
            }
            SetDescriptor::Gaps { gaps } => {
                crate::staircase::PerfectSet::new(gaps.iter().map(|g| (g[0], g[1])).collect())
            }
        }
    }
}

pub fn parse_body_descriptor(json: &str) -> Result<BodyDescriptor> {
    serde_json::from_str(json).map_err(|e| Error::InvalidDescriptor(e.to_string()))
}

pub fn parse_set_descriptor(json: &str) -> Result<SetDescriptor> {
    serde_json::from_str(json).map_err(|e| Error::InvalidDescriptor(e.to_string()))
}

/// Stable hex digest of a descriptor, for stamping output files.
pub fn body_hash(desc: &BodyDescriptor) -> String {
    let canonical = serde_json::to_string(desc).expect("descriptor serializes");
    let mut h = Sha256::new();
    h.update(canonical.as_bytes());
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// 17 significant digits: lossless for f64.
pub fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_auerbach_csv<W: Write>(mut w: W, set: &AuerbachSet) -> std::io::Result<()> {
    writeln!(w, "component_start_theta,component_end_theta,is_isolated")?;
    for c in &set.components {
        writeln!(w, "{},{},{}", fmt_g17(c.start), fmt_g17(c.end), c.isolated)?;
    }
    Ok(())
}

pub fn write_segments_csv<W: Write>(mut w: W, set: &SegmentSet) -> std::io::Result<()> {
    writeln!(w, "start_theta,end_theta,dir_x,dir_y")?;
    for s in &set.segments {
        writeln!(
            w,
            "{},{},{},{}",
            fmt_g17(s.arc.start()),
            fmt_g17(s.arc.end()),
            fmt_g17(s.direction[0]),
            fmt_g17(s.direction[1])
        )?;
    }
    Ok(())
}

/// Writes a CDF sampled on a uniform grid as `x,value` rows.
pub fn write_cdf_csv<W: Write, F: Fn(f64) -> f64>(
    mut w: W,
    x_label: &str,
    y_label: &str,
    lo: f64,
    hi: f64,
    n: usize,
    f: F,
) -> std::io::Result<()> {
    writeln!(w, "{x_label},{y_label}")?;
    for k in 0..=n {
        let x = lo + (hi - lo) * (k as f64) / (n as f64);
        writeln!(w, "{},{}", fmt_g17(x), fmt_g17(f(x)))?;
    }
    Ok(())
}

/// Parses a two-column CSV with a header row into point pairs.
pub fn read_two_column_csv(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 || line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split(',');
        let x = parts
            .next()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .ok_or_else(|| Error::InvalidDescriptor(format!("bad csv row {i}: {line}")))?;
        let y = parts
            .next()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .ok_or_else(|| Error::InvalidDescriptor(format!("bad csv row {i}: {line}")))?;
        out.push((x, y));
    }
    Ok(out)
}

/// Everything needed to rebuild a constructed angular measure exactly:
/// the body, the base pair `(a, b)`, the support frame, the source measure
/// on `[0, 1]` (a gap list for staircase measures, a sampled CDF otherwise),
/// and the sampled partner map.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MeasureSidecar {
    pub body: BodyDescriptor,
    pub body_hash: String,
    pub a: f64,
    pub b: f64,
    pub frame_lo: f64,
    pub frame_hi: f64,
    pub nu_kind: String,
    pub gaps01: Vec<[f64; 2]>,
    #[serde(default)]
    pub nu_grid: Option<Vec<[f64; 2]>>,
    pub phi_xs: Vec<f64>,
    pub phi_ys: Vec<f64>,
    pub grid_size: usize,
    pub normalization: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_round_trip() {
        let d = BodyDescriptor::CantorBump { depth: 6, epsilon: 0.01 };
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains("cantor_bump"));
        assert_eq!(parse_body_descriptor(&s).unwrap(), d);
        assert!(parse_body_descriptor("{\"kind\":\"nope\"}").is_err());

        let g = parse_set_descriptor("{\"kind\":\"gaps\",\"gaps\":[[0.25,0.5]]}").unwrap();
        assert_eq!(g, SetDescriptor::Gaps { gaps: vec![[0.25, 0.5]] });
    }

    #[test]
    fn g17_round_trips() {
        for &x in &[std::f64::consts::PI, 1.0 / 3.0, 2.0_f64.powi(-40), 0.1 + 0.2] {
            assert_eq!(fmt_g17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn csv_round_trip() {
        let mut buf = Vec::new();
        write_cdf_csv(&mut buf, "x", "f", 0.0, 1.0, 4, |x| x * x).unwrap();
        let rows = read_two_column_csv(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[2], (0.5, 0.25));
    }
}
