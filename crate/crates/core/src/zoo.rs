//! Constructors for the test bodies: disk, `l_p` balls, symmetric polygons,
//! and the Cantor-bump body — a unit disk dented by one smooth bump per gap of
//! a middle-thirds Cantor construction on the arc `[-π/4, π/4]` (repeated
//! antipodally). The un-dented part of that arc, the gap midpoints and their
//! quarter-turn images are exactly the points admitting a mutual orthogonality
//! partner, which makes this body the key nontrivial input for the angular
//! measure construction.

use crate::angles::PI;
use crate::body::{BumpGap, PlanarBody, Polygon, Radial};
use crate::error::{Error, Result};
use crate::io::BodyDescriptor;

/// Smooth bump `exp(-1/(1-x²))` on `(-1, 1)`, zero outside. All derivatives
/// vanish at ±1; the only interior critical point is the maximum at 0.
pub fn bump(x: f64) -> f64 {
    if x.abs() >= 1.0 {
        0.0
    } else {
        (-1.0 / (1.0 - x * x)).exp()
    }
}

/// Derivative of [`bump`].
pub fn bump_deriv(x: f64) -> f64 {
    if x.abs() >= 1.0 {
        0.0
    } else {
        let d = 1.0 - x * x;
        bump(x) * (-2.0 * x / (d * d))
    }
}

/// Parameters of the Cantor-bump body.
///
/// `depth` is the number of generations of the middle-thirds construction that
/// receive bumps; `epsilon` is the amplitude of the bump on the largest
/// (first-generation) gap. Smaller gaps get amplitude `epsilon * (w/w₁)²`,
/// the fastest scaling that keeps the curvature bounded away from zero
/// uniformly in depth. Validity is still enforced by a sampled curvature
/// check at construction.
#[derive(Clone, Copy, Debug)]
pub struct CantorBumpSpec {
    pub depth: u32,
    pub epsilon: f64,
}

impl CantorBumpSpec {
    pub fn new(depth: u32, epsilon: f64) -> Result<Self> {
        if !(1..=14).contains(&depth) {
            return Err(Error::InvalidBody(format!(
                "cantor bump depth must be in 1..=14, got {depth}"
            )));
        }
        if epsilon.is_nan() || epsilon <= 0.0 {
            return Err(Error::InvalidBody("epsilon must be positive".into()));
        }
        Ok(CantorBumpSpec { depth, epsilon })
    }

    /// Base arc of the construction (before the antipodal copy).
    pub fn base_arc() -> (f64, f64) {
        (-PI / 4.0, PI / 4.0)
    }

    /// Open gaps removed by generations `1..=depth`, as angles in the base
    /// arc, sorted by position.
    pub fn gap_angles(&self) -> Vec<(f64, f64)> {
        let (lo, hi) = Self::base_arc();
        crate::staircase::middle_thirds_gaps(self.depth)
            .into_iter()
            .map(|(a, b)| (lo + (hi - lo) * a, lo + (hi - lo) * b))
            .collect()
    }

    /// Closed intervals of the base arc retained at this depth (the depth-d
    /// approximation of the Cantor set), sorted by position.
    pub fn retained_angles(&self) -> Vec<(f64, f64)> {
        let (lo, hi) = Self::base_arc();
        let mut cur = vec![(lo, hi)];
        for _ in 0..self.depth {
            let mut next = Vec::with_capacity(cur.len() * 2);
            for (a, b) in cur {
                let w = (b - a) / 3.0;
                next.push((a, a + w));
                next.push((b - w, b));
            }
            cur = next;
        }
        cur
    }

    /// Retained intervals widened into each adjacent gap up to the angle
    /// where the bump and its derivative drop below f64 resolution. The
    /// represented boundary is exactly circular on the widened set, so any
    /// numerical detector will report it as part of the flat structure.
    pub fn numerically_retained_angles(&self) -> Vec<(f64, f64)> {
        let w1 = (PI / 2.0) / 3.0;
        let flat_reach = |gap_lo: f64, gap_hi: f64| -> f64 {
            let w = gap_hi - gap_lo;
            let amp = self.epsilon * (w / w1) * (w / w1);
            let dev = |s: f64| {
                let u = 1.0 - s;
                amp * (bump(u) + bump_deriv(u).abs() * (2.0 / w))
            };
            let (mut lo, mut hi) = (0.0f64, 0.5f64);
            if dev(hi) < 1e-15 {
                return hi * w / 2.0;
            }
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if dev(mid) < 1e-15 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            lo * w / 2.0
        };
        let gaps = self.gap_angles();
        let reach: Vec<f64> = gaps.iter().map(|&(a, b)| flat_reach(a, b)).collect();
        self.retained_angles()
            .into_iter()
            .map(|(a, b)| {
                // Gaps adjacent to this interval: the one ending at `a` and
                // the one starting at `b`, when they exist.
                let left = gaps
                    .iter()
                    .position(|g| (g.1 - a).abs() < 1e-12)
                    .map_or(0.0, |i| reach[i]);
                let right = gaps
                    .iter()
                    .position(|g| (g.0 - b).abs() < 1e-12)
                    .map_or(0.0, |i| reach[i]);
                (a - left, b + right)
            })
            .collect()
    }
}

/// Builds the Cantor-bump body and verifies strict convexity of the result.
pub fn make_cantor_bump(spec: CantorBumpSpec) -> Result<PlanarBody> {
    let w1 = (PI / 2.0) / 3.0;
    let gaps: Vec<BumpGap> = spec
        .gap_angles()
        .into_iter()
        .map(|(lo, hi)| {
            let w = hi - lo;
            BumpGap { lo, hi, amplitude: spec.epsilon * (w / w1) * (w / w1) }
        })
        .collect();
    let body = PlanarBody::from_radial(Radial::CantorBump { gaps });
    body.check_radial_convexity(100_000)?;
    Ok(body)
}

/// Builds a body from a JSON descriptor, validating its invariants.
///
/// `lp` accepts any `p >= 1`; note that at `p = 1` the ball is a polygon
/// (a diamond) whose corners the radial derivative cannot express — use the
/// `polygon` kind when corner support cones matter.
pub fn make_body(desc: &BodyDescriptor) -> Result<PlanarBody> {
    match desc {
        BodyDescriptor::Disk => Ok(PlanarBody::from_radial(Radial::Disk)),
        BodyDescriptor::Lp { p } => {
            if p.is_nan() || *p < 1.0 {
                return Err(Error::InvalidBody(format!("lp ball requires p >= 1, got {p}")));
            }
            Ok(PlanarBody::from_radial(Radial::Lp { p: *p }))
        }
        BodyDescriptor::Polygon { vertices } => {
            Ok(PlanarBody::from_polygon(Polygon::new(vertices.clone())?))
        }
        BodyDescriptor::CantorBump { depth, epsilon } => {
            make_cantor_bump(CantorBumpSpec::new(*depth, *epsilon)?)
        }
    }
}

/// Regular hexagon with vertices on the unit circle at angles `kπ/3`.
pub fn hexagon_vertices() -> Vec<[f64; 2]> {
    (0..6)
        .map(|k| {
            let t = PI / 3.0 * k as f64;
            [t.cos(), t.sin()]
        })
        .collect()
}

/// Axis-aligned square with vertices `(±1, ±1)`.
pub fn square_vertices() -> Vec<[f64; 2]> {
    vec![[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::TAU;

    #[test]
    fn bump_values() {
        assert!((bump(0.0) - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(bump(1.0), 0.0);
        assert_eq!(bump(-1.0), 0.0);
        assert_eq!(bump(2.0), 0.0);
        assert!(bump(0.5) > 0.0);
    }

    #[test]
    fn bump_deriv_zero_only_at_center() {
        assert_eq!(bump_deriv(0.0), 0.0);
        for i in 1..100 {
            let x = i as f64 / 101.0;
            assert!(bump_deriv(x) < 0.0);
            assert!(bump_deriv(-x) > 0.0);
        }
    }

    #[test]
    fn make_body_rejects_bad_params() {
        assert!(make_body(&BodyDescriptor::Lp { p: 0.5 }).is_err());
        assert!(make_body(&BodyDescriptor::Polygon {
            vertices: vec![[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]]
        })
        .is_err());
    }

    #[test]
    fn cantor_bump_radius_examples() {
        // Depth 1: a single gap per arc, centered at 0, carrying the full
        // amplitude; the dent bottom sits at 1 - ε e^{-1}.
        let body = make_cantor_bump(CantorBumpSpec::new(1, 0.01).unwrap()).unwrap();
        let expect = 1.0 - 0.01 * (-1.0f64).exp();
        assert!((body.radius(0.0) - expect).abs() < 1e-15);
        // Cantor endpoints stay on the unit circle at every depth.
        for depth in [1u32, 2, 4, 6] {
            let b = make_cantor_bump(CantorBumpSpec::new(depth, 0.01).unwrap()).unwrap();
            assert_eq!(b.radius(PI / 4.0), 1.0);
            assert_eq!(b.radius(-PI / 4.0), 1.0);
            assert_eq!(b.radius(PI / 2.0), 1.0);
        }
    }

    #[test]
    fn cantor_bump_depth2_structure() {
        let spec = CantorBumpSpec::new(2, 0.01).unwrap();
        let gaps = spec.gap_angles();
        assert_eq!(gaps.len(), 3);
        let retained = spec.retained_angles();
        assert_eq!(retained.len(), 4);
        let body = make_cantor_bump(spec).unwrap();
        for (a, b) in retained {
            let mid = 0.5 * (a + b);
            assert_eq!(body.radius(mid), 1.0);
        }
        for (a, b) in gaps {
            let mid = 0.5 * (a + b);
            assert!(body.radius(mid) < 1.0);
        }
    }

    #[test]
    fn cantor_bump_is_antipodally_symmetric() {
        let body = make_cantor_bump(CantorBumpSpec::new(4, 0.01).unwrap()).unwrap();
        for k in 0..977 {
            let t = TAU * k as f64 / 977.0;
            assert!((body.radius(t) - body.radius(t + PI)).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_epsilon_breaking_convexity() {
        // Large amplitude dents destroy convexity; the curvature check fires.
        assert!(make_cantor_bump(CantorBumpSpec::new(3, 2.0).unwrap()).is_err());
    }
}
