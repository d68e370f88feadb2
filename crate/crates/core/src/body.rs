//! Planar origin-symmetric convex bodies and their gauge.
//!
//! A body is described either by a closed-form radial function `r(θ)` with its
//! derivative, or by a counterclockwise list of polygon vertices with the
//! antipodal pairing `v[i+n] = -v[i]`. The boundary is parametrized by the
//! polar angle throughout.

use crate::angles::{self, wrap, PI, TAU};
use crate::error::{Error, Result};

/// Tangent directions differing by more than this are treated as a corner.
pub const CORNER_ANGLE_TOL: f64 = 1e-5;

/// A point of the unit circle of a body, carrying both its polar angle and
/// Cartesian coordinates. `gauge(point) = 1` up to floating error.
#[derive(Clone, Copy, Debug)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub point: [f64; 2],
}

/// One indentation of the Cantor-bump body: an open angular gap carrying a
/// smooth bump of the given amplitude.
#[derive(Clone, Copy, Debug)]
pub struct BumpGap {
    pub lo: f64,
    pub hi: f64,
    pub amplitude: f64,
}

#[derive(Clone, Debug)]
pub enum Radial {
    Disk,
    Lp { p: f64 },
    /// Unit circle dented by smooth bumps on the gaps of a Cantor construction
    /// over the arc `[-π/4, π/4]`, repeated antipodally. Elsewhere the radius
    /// is exactly 1.
    CantorBump { gaps: Vec<BumpGap> },
}

#[derive(Clone, Debug)]
pub struct Polygon {
    vertices: Vec<[f64; 2]>,
    vertex_angles: Vec<f64>,
    edge_dirs: Vec<f64>,
    normals: Vec<[f64; 2]>,
    supports: Vec<f64>,
}

#[derive(Clone, Debug)]
pub enum Shape {
    Radial(Radial),
    Polygon(Polygon),
}

/// An origin-symmetric convex body on the plane.
#[derive(Clone, Debug)]
pub struct PlanarBody {
    shape: Shape,
}

fn norm2(v: [f64; 2]) -> f64 {
    v[0].hypot(v[1])
}

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// |x|^q * sign(x)
fn signed_pow(x: f64, q: f64) -> f64 {
    x.abs().powf(q) * x.signum()
}

impl Polygon {
    /// Validates and indexes a counterclockwise, origin-symmetric vertex list.
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<Self> {
        let n = vertices.len();
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::InvalidBody(format!(
                "polygon needs an even number >= 4 of vertices, got {n}"
            )));
        }
        let half = n / 2;
        let scale = vertices.iter().map(|v| norm2(*v)).fold(0.0, f64::max);
        if scale == 0.0 {
            return Err(Error::InvalidBody("degenerate polygon".into()));
        }
        for i in 0..half {
            let a = vertices[i];
            let b = vertices[i + half];
            if (a[0] + b[0]).abs() > 1e-9 * scale || (a[1] + b[1]).abs() > 1e-9 * scale {
                return Err(Error::InvalidBody(format!(
                    "vertex {i} has no antipodal partner: {:?} vs {:?}",
                    a, b
                )));
            }
        }
        // Convexity: consecutive edges turn left; this also forces the origin
        // inside, given the antipodal symmetry.
        for i in 0..n {
            let p0 = vertices[i];
            let p1 = vertices[(i + 1) % n];
            let p2 = vertices[(i + 2) % n];
            let e0 = [p1[0] - p0[0], p1[1] - p0[1]];
            let e1 = [p2[0] - p1[0], p2[1] - p1[1]];
            if cross(e0, e1) <= 0.0 {
                return Err(Error::InvalidBody(format!(
                    "vertices are not in strictly convex counterclockwise order near index {i}"
                )));
            }
        }
        // Rotate so vertex polar angles increase from index 0.
        let angles: Vec<f64> = vertices.iter().map(|v| wrap(v[1].atan2(v[0]))).collect();
        let first = angles
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap();
        let mut verts = Vec::with_capacity(n);
        verts.extend_from_slice(&vertices[first..]);
        verts.extend_from_slice(&vertices[..first]);

        let vertex_angles: Vec<f64> = verts.iter().map(|v| wrap(v[1].atan2(v[0]))).collect();
        for i in 1..n {
            if vertex_angles[i] <= vertex_angles[i - 1] {
                return Err(Error::InvalidBody(
                    "vertex angles are not cyclically increasing".into(),
                ));
            }
        }

        let mut edge_dirs = Vec::with_capacity(n);
        let mut normals = Vec::with_capacity(n);
        let mut supports = Vec::with_capacity(n);
        for i in 0..n {
            let a = verts[i];
            let b = verts[(i + 1) % n];
            let e = [b[0] - a[0], b[1] - a[1]];
            edge_dirs.push(wrap(e[1].atan2(e[0])));
            // Outward normal for a counterclockwise edge.
            let nvec = [e[1], -e[0]];
            let h = nvec[0] * a[0] + nvec[1] * a[1];
            if h <= 0.0 {
                return Err(Error::InvalidBody("origin outside the polygon".into()));
            }
            normals.push(nvec);
            supports.push(h);
        }
        Ok(Polygon { vertices: verts, vertex_angles, edge_dirs, normals, supports })
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn vertex_angles(&self) -> &[f64] {
        &self.vertex_angles
    }

    pub fn edge_dirs(&self) -> &[f64] {
        &self.edge_dirs
    }

    fn gauge(&self, x: [f64; 2]) -> f64 {
        let mut g: f64 = 0.0;
        for (nvec, h) in self.normals.iter().zip(&self.supports) {
            g = g.max((nvec[0] * x[0] + nvec[1] * x[1]) / h);
        }
        g
    }

    /// Index of the boundary feature at polar angle `theta`: either a vertex
    /// (within tolerance) or the open edge containing it.
    fn locate(&self, theta: f64) -> PolyFeature {
        let t = wrap(theta);
        let n = self.vertex_angles.len();
        // Edge i spans [vertex_angles[i], vertex_angles[i+1]) cyclically.
        let idx = match self.vertex_angles.binary_search_by(|a| a.total_cmp(&t)) {
            Ok(i) => return PolyFeature::Vertex(i),
            Err(i) => {
                if i == 0 {
                    n - 1
                } else {
                    i - 1
                }
            }
        };
        let next = (idx + 1) % n;
        if angles::signed_delta(t, self.vertex_angles[idx]).abs() <= 1e-12 {
            PolyFeature::Vertex(idx)
        } else if angles::signed_delta(t, self.vertex_angles[next]).abs() <= 1e-12 {
            PolyFeature::Vertex(next)
        } else {
            PolyFeature::Edge(idx)
        }
    }
}

enum PolyFeature {
    Vertex(usize),
    Edge(usize),
}

impl Radial {
    /// Radius and its derivative with respect to the polar angle.
    pub fn radius_deriv(&self, theta: f64) -> (f64, f64) {
        match self {
            Radial::Disk => (1.0, 0.0),
            Radial::Lp { p } => {
                let (mut s, mut c) = theta.sin_cos();
                // Sub-epsilon trig residue at the axes blows up under the
                // fractional power |c|^(p-1) for p < 2 (6e-17 -> ~6e-4 at
                // p = 1.2), poisoning the derivative exactly where the body
                // has its distinguished points; snap to the exact zero.
                if c.abs() < 1e-15 {
                    c = 0.0;
                }
                if s.abs() < 1e-15 {
                    s = 0.0;
                }
                let sum = c.abs().powf(*p) + s.abs().powf(*p);
                let r = sum.powf(-1.0 / p);
                let dsum = p * (-s * signed_pow(c, p - 1.0) + c * signed_pow(s, p - 1.0));
                let dr = -(1.0 / p) * sum.powf(-1.0 / p - 1.0) * dsum;
                (r, dr)
            }
            Radial::CantorBump { gaps } => cantor_bump_radius(gaps, theta),
        }
    }
}

/// Folds `theta` into the base arc `[-π/4, π/4]` when it lies on one of the
/// two deformed arcs; returns `None` on the untouched circular side arcs.
fn fold_to_base(theta: f64) -> Option<f64> {
    let mut t = wrap(theta);
    if t > PI {
        t -= TAU; // (-π, π]
    }
    if t.abs() <= PI / 4.0 {
        Some(t)
    } else if t >= 3.0 * PI / 4.0 {
        Some(t - PI)
    } else if t <= -3.0 * PI / 4.0 {
        Some(t + PI)
    } else {
        None
    }
}

fn cantor_bump_radius(gaps: &[BumpGap], theta: f64) -> (f64, f64) {
    let t = match fold_to_base(theta) {
        Some(t) => t,
        None => return (1.0, 0.0),
    };
    // Gaps are sorted by lo; find the one containing t, if any.
    let idx = gaps.partition_point(|g| g.hi <= t);
    if idx < gaps.len() {
        let g = &gaps[idx];
        if t > g.lo && t < g.hi {
            let w = g.hi - g.lo;
            let u = (2.0 / w) * (t - 0.5 * (g.lo + g.hi));
            let r = 1.0 - g.amplitude * crate::zoo::bump(u);
            let dr = -g.amplitude * crate::zoo::bump_deriv(u) * (2.0 / w);
            return (r, dr);
        }
    }
    (1.0, 0.0)
}

impl PlanarBody {
    pub fn from_radial(r: Radial) -> Self {
        PlanarBody { shape: Shape::Radial(r) }
    }

    pub fn from_polygon(p: Polygon) -> Self {
        PlanarBody { shape: Shape::Polygon(p) }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn as_polygon(&self) -> Option<&Polygon> {
        match &self.shape {
            Shape::Polygon(p) => Some(p),
            _ => None,
        }
    }

    /// Minkowski gauge of `x`: the factor by which the body must be scaled to
    /// put `x` on its boundary. Positively homogeneous; `gauge(0) = 0`.
    pub fn gauge(&self, x: [f64; 2]) -> f64 {
        match &self.shape {
            Shape::Radial(Radial::Disk) => norm2(x),
            Shape::Radial(Radial::Lp { p }) => {
                if x[0] == 0.0 && x[1] == 0.0 {
                    return 0.0;
                }
                (x[0].abs().powf(*p) + x[1].abs().powf(*p)).powf(1.0 / p)
            }
            Shape::Radial(r) => {
                let len = norm2(x);
                if len == 0.0 {
                    return 0.0;
                }
                let theta = x[1].atan2(x[0]);
                len / r.radius_deriv(theta).0
            }
            Shape::Polygon(p) => p.gauge(x),
        }
    }

    /// Radius of the unit circle at polar angle `theta`.
    pub fn radius(&self, theta: f64) -> f64 {
        match &self.shape {
            Shape::Radial(r) => r.radius_deriv(theta).0,
            Shape::Polygon(_) => {
                let (s, c) = theta.sin_cos();
                1.0 / self.gauge([c, s])
            }
        }
    }

    pub fn boundary_point(&self, theta: f64) -> BoundaryPoint {
        let t = wrap(theta);
        let r = self.radius(t);
        let (s, c) = t.sin_cos();
        BoundaryPoint { theta: t, point: [r * c, r * s] }
    }

    /// Support directions at the boundary point with polar angle `theta`, as
    /// tangent-angle offsets from `theta`, each in `(0, π)`. Smooth points
    /// return a degenerate pair; corners return the closed cone from the
    /// incoming to the outgoing edge direction. Working in offsets avoids the
    /// rounding that absolute lifted angles would pick up.
    pub fn tangent_offsets(&self, theta: f64) -> (f64, f64) {
        let t = wrap(theta);
        match &self.shape {
            Shape::Radial(rad) => {
                // Tangent of θ ↦ r(θ)(cos θ, sin θ) in the (radial, angular)
                // frame has components (r', r); r > 0 keeps the offset inside
                // (0, π).
                let (r, dr) = rad.radius_deriv(t);
                let b = r.atan2(dr);
                (b, b)
            }
            Shape::Polygon(p) => match p.locate(t) {
                PolyFeature::Edge(i) => {
                    let b = direction_offset(p.edge_dirs[i], t);
                    (b, b)
                }
                PolyFeature::Vertex(i) => {
                    let n = p.edge_dirs.len();
                    let incoming = p.edge_dirs[(i + n - 1) % n];
                    let outgoing = p.edge_dirs[i];
                    let lo = direction_offset(incoming, t);
                    let hi = direction_offset(outgoing, t);
                    debug_assert!(hi >= lo - 1e-12);
                    (lo, hi.max(lo))
                }
            },
        }
    }

    /// Support directions as tangent angles lifted into `(theta, theta + π)`.
    pub fn tangent_range(&self, theta: f64) -> (f64, f64) {
        let (lo, hi) = self.tangent_offsets(theta);
        (theta + lo, theta + hi)
    }

    /// True when the support cone at `theta` is wider than [`CORNER_ANGLE_TOL`].
    pub fn is_corner(&self, theta: f64) -> bool {
        let (lo, hi) = self.tangent_range(theta);
        hi - lo > CORNER_ANGLE_TOL
    }

    /// Verifies `r > 0`, antipodal symmetry of the radius and positivity of
    /// the polar curvature numerator `r² + 2r'² - r·r''` on a sampled grid.
    pub fn check_radial_convexity(&self, samples: usize) -> Result<()> {
        let rad = match &self.shape {
            Shape::Radial(r) => r,
            Shape::Polygon(_) => return Ok(()),
        };
        let h = 1e-6;
        for i in 0..samples {
            let t = TAU * (i as f64) / (samples as f64);
            let (r, dr) = rad.radius_deriv(t);
            if r.is_nan() || r <= 0.0 {
                return Err(Error::InvalidBody(format!("radius not positive at theta={t}")));
            }
            let r_pi = rad.radius_deriv(t + PI).0;
            if (r - r_pi).abs() > 1e-9 * r {
                return Err(Error::InvalidBody(format!(
                    "radius is not π-periodic at theta={t}"
                )));
            }
            let ddr = (rad.radius_deriv(t + h).1 - rad.radius_deriv(t - h).1) / (2.0 * h);
            let curv = r * r + 2.0 * dr * dr - r * ddr;
            if curv <= 0.0 {
                return Err(Error::InvalidBody(format!(
                    "curvature numerator {curv} <= 0 at theta={t}; the boundary is not convex"
                )));
            }
        }
        Ok(())
    }
}

/// Offset in `(0, π)` of a direction (angle mod π) from `theta`.
fn direction_offset(dir: f64, theta: f64) -> f64 {
    let mut m = (dir - theta).rem_euclid(PI);
    if m == 0.0 {
        // A chord through the boundary point is never radial for a body with
        // the origin in its interior; guard against rounding anyway.
        m = PI;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PlanarBody {
        PlanarBody::from_polygon(
            Polygon::new(vec![[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]]).unwrap(),
        )
    }

    #[test]
    fn gauge_examples() {
        let disk = PlanarBody::from_radial(Radial::Disk);
        assert!((disk.gauge([3.0, 4.0]) - 5.0).abs() < 1e-12);

        let sq = square();
        assert!((sq.gauge([2.0, 1.0]) - 2.0).abs() < 1e-12);

        let l4 = PlanarBody::from_radial(Radial::Lp { p: 4.0 });
        assert!((l4.gauge([1.0, 1.0]) - 2.0_f64.powf(0.25)).abs() < 1e-12);
    }

    #[test]
    fn gauge_zero_and_homogeneity() {
        let l4 = PlanarBody::from_radial(Radial::Lp { p: 4.0 });
        assert_eq!(l4.gauge([0.0, 0.0]), 0.0);
        let x = [0.3, -1.7];
        assert!((l4.gauge([2.5 * x[0], 2.5 * x[1]]) - 2.5 * l4.gauge(x)).abs() < 1e-12);
        assert!((l4.gauge([-x[0], -x[1]]) - l4.gauge(x)).abs() < 1e-15);
    }

    #[test]
    fn boundary_point_has_unit_gauge() {
        let sq = square();
        for k in 0..64 {
            let t = TAU * (k as f64) / 64.0;
            let bp = sq.boundary_point(t);
            assert!((sq.gauge(bp.point) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn disk_tangent_is_quarter_turn() {
        let disk = PlanarBody::from_radial(Radial::Disk);
        let (lo, hi) = disk.tangent_range(0.7);
        assert_eq!(lo, hi);
        assert!((lo - (0.7 + PI / 2.0)).abs() < 1e-15);
    }

    #[test]
    fn square_corner_cone() {
        let sq = square();
        let (lo, hi) = sq.tangent_range(PI / 4.0);
        assert!((lo - PI / 2.0).abs() < 1e-12);
        assert!((hi - PI).abs() < 1e-12);
        assert!(sq.is_corner(PI / 4.0));
        assert!(!sq.is_corner(0.3));
        // Edge interior: vertical support direction only.
        let (lo, hi) = sq.tangent_range(0.3);
        assert_eq!(lo, hi);
        assert!((lo - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn polygon_rejects_asymmetric_and_odd() {
        assert!(Polygon::new(vec![[1.0, 0.0], [0.0, 1.0], [-1.0, -0.5]]).is_err());
        assert!(Polygon::new(vec![[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [0.5, -1.0]]).is_err());
    }
}
