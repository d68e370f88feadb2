//! Birkhoff orthogonality.
//!
//! `x` is Birkhoff orthogonal to `y` when `gauge(x) <= gauge(x + t y)` for all
//! real `t`; the map `t -> gauge(x + t y)` is convex, so the decision reduces
//! to a one-dimensional convex minimization. For unit vectors the minimum lies
//! in `[-2, 2]` (`gauge(x + t y) >= |t| - 1`), so a fixed bracket suffices.

use crate::angles::Arc;
use crate::body::{BoundaryPoint, PlanarBody};
use crate::error::{Error, Result};

/// Accept boundary points whose gauge differs from 1 by at most this much.
const UNIT_GAUGE_TOL: f64 = 1e-3;

const BRACKET: f64 = 4.0;
const GOLDEN_ITERS: usize = 200;

/// Golden-section minimization of a convex (more generally, unimodal)
/// function on `[a, b]`. Returns `(argmin, min)`.
pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if b - a < 1e-15 {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Minimum of `t -> gauge(x + t y)` over the standard bracket.
pub fn min_gauge_on_line(body: &PlanarBody, x: [f64; 2], y: [f64; 2]) -> f64 {
    let f = |t: f64| body.gauge([x[0] + t * y[0], x[1] + t * y[1]]);
    let (_, m) = golden_section_min(f, -BRACKET, BRACKET, GOLDEN_ITERS);
    m.min(f(0.0))
}

fn check_unit(body: &PlanarBody, p: &BoundaryPoint) -> Result<()> {
    let g = body.gauge(p.point);
    if (g - 1.0).abs() > UNIT_GAUGE_TOL {
        return Err(Error::NotOnBoundary { gauge: g });
    }
    Ok(())
}

/// Decides `x ⊣ y`: true when the line through `x` in direction `y` does not
/// enter the interior of the unit ball by more than `tol` in gauge.
pub fn is_birkhoff_orthogonal(
    body: &PlanarBody,
    x: &BoundaryPoint,
    y: &BoundaryPoint,
    tol: f64,
) -> Result<bool> {
    check_unit(body, x)?;
    check_unit(body, y)?;
    let m = min_gauge_on_line(body, x.point, y.point);
    Ok(m >= body.gauge(x.point) - tol)
}

/// All partner directions of `x`: the angles ψ with `x ⊣ y(ψ)`, returned as
/// one or two antipodal closed angular intervals. Smooth points give a single
/// direction and its antipode (degenerate arcs); corners give the closed cone
/// between the adjacent edge directions.
pub fn birkhoff_partners(body: &PlanarBody, x: &BoundaryPoint) -> Vec<Arc> {
    let (lo, hi) = body.tangent_range(x.theta);
    let width = hi - lo;
    let first = Arc::new(lo, width);
    let second = first.antipode();
    vec![first, second]
}

/// Counts violations of orthogonality symmetry (`x ⊣ y` vs `y ⊣ x`) over the
/// given boundary angle pairs; zero for a Radon norm.
pub fn symmetry_violations(body: &PlanarBody, pairs: &[(f64, f64)], tol: f64) -> usize {
    let mut bad = 0;
    for &(t1, t2) in pairs {
        let x = body.boundary_point(t1);
        let y = body.boundary_point(t2);
        let xy = is_birkhoff_orthogonal(body, &x, &y, tol).unwrap_or(false);
        let yx = is_birkhoff_orthogonal(body, &y, &x, tol).unwrap_or(false);
        if xy != yx {
            bad += 1;
        }
    }
    bad
}
