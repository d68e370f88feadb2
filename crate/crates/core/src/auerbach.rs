//! Auerbach points and boundary segments.
//!
//! A boundary point `x(θ)` is an Auerbach point when some `y` satisfies both
//! `x ⊣ y` and `y ⊣ x`. Writing the support cone at angle `ψ` as tangent
//! offsets in `(0, π)`, `x(θ) ⊣ y(ψ)` holds iff `ψ` lies in the support cone
//! of `θ`, and `y(ψ) ⊣ x(θ)` iff the direction `θ + π` lies in the cone at
//! `ψ`. Since the tangent angle of a convex curve is nondecreasing, the
//! residual of the second condition is monotone along the partner cone, so
//! mutual partners are found by root bracketing and the distance-to-mutuality
//! defect is cheap to evaluate. The defect is computed in offset coordinates,
//! which makes it *exactly* zero on circular arcs paired with circular arcs —
//! important for bodies whose Auerbach set has fine structure.

use crate::angles::{wrap, Arc, PI, TAU};
use crate::body::{PlanarBody, Shape};
use crate::error::{Error, Result};
use crate::ortho;

/// Default angular tolerance for mutual-orthogonality defects.
pub const DEFAULT_ANGULAR_TOL: f64 = 1e-8;

/// Residual of the mutual-orthogonality condition for the partner at offset
/// `q` from `theta` (`q` in `(0, π)`): zero iff the support cone at
/// `theta + q` contains the direction of `theta`; positive while the cone
/// still lags behind that direction, negative once it has passed it.
/// Nonincreasing in `q`.
pub fn partner_residual(body: &PlanarBody, theta: f64, q: f64) -> f64 {
    let (blo, bhi) = body.tangent_offsets(theta + q);
    let target = PI - q;
    if target < blo {
        target - blo
    } else if target > bhi {
        target - bhi
    } else {
        0.0
    }
}

/// Angular distance from mutuality: zero exactly on Auerbach points.
pub fn auerbach_defect(body: &PlanarBody, theta: f64) -> f64 {
    let (blo, bhi) = body.tangent_offsets(theta);
    let s_lo = partner_residual(body, theta, blo);
    if s_lo < 0.0 {
        return -s_lo;
    }
    if bhi > blo {
        let s_hi = partner_residual(body, theta, bhi);
        if s_hi > 0.0 {
            return s_hi;
        }
        0.0
    } else {
        s_lo
    }
}

/// First mutual-orthogonality partner in the positive direction from `theta`:
/// the smallest `ψ > θ` within a half-turn with `x(θ) ⊣ y(ψ)` and
/// `y(ψ) ⊣ x(θ)`. Ties across a whole cone of partners resolve to the
/// smallest angle. Fails when no partner exists at the given tolerance.
pub fn partner_angle(body: &PlanarBody, theta: f64, tol: f64) -> Result<f64> {
    let (blo, bhi) = body.tangent_offsets(theta);
    let s_lo = partner_residual(body, theta, blo);
    if s_lo <= 0.0 {
        if s_lo >= -tol {
            return Ok(wrap(theta + blo));
        }
        return Err(Error::NoPartner { theta });
    }
    if bhi <= blo {
        // Smooth point: the unique support direction is the only candidate.
        if s_lo <= tol {
            return Ok(wrap(theta + blo));
        }
        return Err(Error::NoPartner { theta });
    }
    let s_hi = partner_residual(body, theta, bhi);
    if s_hi > tol {
        return Err(Error::NoPartner { theta });
    }
    // Leftmost offset with nonpositive residual.
    let (mut lo, mut hi) = (blo, bhi);
    for _ in 0..200 {
        if hi - lo <= 1e-15 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if partner_residual(body, theta, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(wrap(theta + hi))
}

/// Decides whether `x(θ)` is an Auerbach point at the given angular
/// tolerance, confirming the located partner through the gauge decision.
pub fn is_auerbach(body: &PlanarBody, theta: f64, tol: f64) -> bool {
    if auerbach_defect(body, theta) > tol {
        return false;
    }
    match partner_angle(body, theta, tol.max(1e-12)) {
        Ok(psi) => {
            let x = body.boundary_point(theta);
            let y = body.boundary_point(psi);
            ortho::is_birkhoff_orthogonal(body, &x, &y, tol).unwrap_or(false)
                && ortho::is_birkhoff_orthogonal(body, &y, &x, tol).unwrap_or(false)
        }
        Err(_) => false,
    }
}

/// A connected component of the Auerbach set: an isolated angle (degenerate)
/// or a closed angular interval, in unwrapped coordinates.
#[derive(Clone, Copy, Debug)]
pub struct AuerbachComponent {
    pub start: f64,
    pub end: f64,
    pub isolated: bool,
}

impl AuerbachComponent {
    pub fn width(&self) -> f64 {
        self.end - self.start
    }

    pub fn midpoint(&self) -> f64 {
        wrap(0.5 * (self.start + self.end))
    }
}

/// Detected Auerbach set together with the scan parameters it is valid for.
#[derive(Clone, Debug)]
pub struct AuerbachSet {
    pub components: Vec<AuerbachComponent>,
    pub full_circle: bool,
    pub resolution: f64,
    pub tol: f64,
}

fn bisect_edge<P: Fn(f64) -> bool>(pred: P, mut falsy: f64, mut truthy: f64) -> f64 {
    for _ in 0..80 {
        if (truthy - falsy).abs() <= 1e-14 {
            break;
        }
        let mid = 0.5 * (falsy + truthy);
        if pred(mid) {
            truthy = mid;
        } else {
            falsy = mid;
        }
    }
    truthy
}

/// Scans the boundary at the given angular resolution, refines component
/// boundaries by bisection, recovers isolated points from local minima of the
/// defect, and merges components closer than twice the resolution. Fails when
/// nothing is found (Auerbach points exist for every norm, so an empty result
/// signals inconsistent tolerances).
pub fn auerbach_set(body: &PlanarBody, resolution: f64, tol: f64) -> Result<AuerbachSet> {
    assert!(resolution > 0.0 && tol > 0.0);
    let n = ((TAU / resolution).ceil() as usize).max(64);
    let step = TAU / n as f64;
    let defect: Vec<f64> = (0..n).map(|i| auerbach_defect(body, i as f64 * step)).collect();
    let zero: Vec<bool> = defect.iter().map(|&d| d <= tol).collect();

    if zero.iter().all(|&z| z) {
        return Ok(AuerbachSet {
            components: vec![AuerbachComponent { start: 0.0, end: TAU, isolated: false }],
            full_circle: true,
            resolution,
            tol,
        });
    }

    let at = |i: isize| -> f64 { i as f64 * step };
    let mut raw: Vec<(f64, f64)> = Vec::new();

    // Maximal cyclic runs of in-tolerance grid points.
    for i in 0..n {
        let prev = (i + n - 1) % n;
        if !(zero[i] && !zero[prev]) {
            continue;
        }
        let mut len = 1usize;
        while zero[(i + len) % n] {
            len += 1;
        }
        let i = i as isize;
        let len = len as isize;
        let left = bisect_edge(|t| auerbach_defect(body, t) <= tol, at(i - 1), at(i));
        let right = bisect_edge(|t| auerbach_defect(body, t) <= tol, at(i + len), at(i + len - 1));
        raw.push((left, right.max(left)));
    }

    // Isolated zeros between grid points show up as local minima of the
    // defect; refine them and keep those that reach the tolerance.
    for i in 0..n {
        let prev = (i + n - 1) % n;
        let next = (i + 1) % n;
        if zero[i] || zero[prev] || zero[next] {
            continue;
        }
        if defect[i] > defect[prev] || defect[i] > defect[next] {
            continue;
        }
        let i = i as isize;
        let (t_star, v) = ortho::golden_section_min(
            |t| auerbach_defect(body, t),
            at(i - 1),
            at(i + 1),
            160,
        );
        if v <= tol {
            let left = bisect_edge(|t| auerbach_defect(body, t) <= tol, at(i - 1), t_star);
            let right = bisect_edge(|t| auerbach_defect(body, t) <= tol, at(i + 1), t_star);
            raw.push((left, right.max(left)));
        }
    }

    // Corners are jump discontinuities of the defect (the support cone opens
    // only at the exact vertex angle), so vertex angles are tested directly.
    if let Shape::Polygon(p) = body.shape() {
        for &v in p.vertex_angles() {
            if auerbach_defect(body, v) <= tol {
                raw.push((v, v));
            }
        }
    }

    if raw.is_empty() {
        return Err(Error::NoAuerbachPoints);
    }

    // Components whose interior defect vanishes exactly (circular arcs paired
    // with circular arcs) get their edges re-snapped against the exact-zero
    // predicate; tolerance-level tails of flat features collapse to the part
    // that is genuinely flat at f64 precision.
    for comp in raw.iter_mut() {
        let mid = 0.5 * (comp.0 + comp.1);
        if comp.1 > comp.0 && auerbach_defect(body, mid) == 0.0 {
            if auerbach_defect(body, comp.0) != 0.0 {
                comp.0 = bisect_edge(|t| auerbach_defect(body, t) == 0.0, comp.0, mid);
            }
            if auerbach_defect(body, comp.1) != 0.0 {
                comp.1 = bisect_edge(|t| auerbach_defect(body, t) == 0.0, comp.1, mid);
            }
        }
    }

    // Normalize starts into [0, 2π), sort, and merge anything closer than
    // twice the grid resolution.
    let mut comps: Vec<(f64, f64)> = raw
        .into_iter()
        .map(|(s, e)| {
            let w = (e - s).max(0.0);
            let s = wrap(s);
            (s, s + w)
        })
        .collect();
    comps.sort_by(|a, b| a.0.total_cmp(&b.0));
    let merge_gap = 2.0 * resolution;
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(comps.len());
    for c in comps {
        if let Some(last) = merged.last_mut() {
            if c.0 - last.1 < merge_gap {
                last.1 = last.1.max(c.1);
                continue;
            }
        }
        merged.push(c);
    }
    // Wrap-around merge between the last and first component: the merged
    // component spans last.0 .. first.1 + 2π, renormalized.
    if merged.len() > 1 {
        let first = merged[0];
        let last = *merged.last().unwrap();
        if first.0 + TAU - last.1 < merge_gap {
            merged.pop();
            let s = wrap(last.0);
            merged[0] = (s, s + (first.1 + TAU - last.0));
        }
    }

    let covered: f64 = merged.iter().map(|c| c.1 - c.0).sum();
    if covered >= TAU - merge_gap {
        return Ok(AuerbachSet {
            components: vec![AuerbachComponent { start: 0.0, end: TAU, isolated: false }],
            full_circle: true,
            resolution,
            tol,
        });
    }

    let components = merged
        .into_iter()
        .map(|(s, e)| AuerbachComponent { start: s, end: e, isolated: e - s <= resolution })
        .collect();
    Ok(AuerbachSet { components, full_circle: false, resolution, tol })
}

/// A maximal open line segment of the boundary.
#[derive(Clone, Copy, Debug)]
pub struct BoundarySegment {
    pub arc: Arc,
    pub direction: [f64; 2],
}

/// Union of the maximal open non-degenerate line segments of the boundary.
#[derive(Clone, Debug)]
pub struct SegmentSet {
    pub segments: Vec<BoundarySegment>,
}

/// For polygons these are exactly the open edges; for radial descriptors the
/// boundary is scanned for maximal runs of collinear sample points (empty for
/// strictly convex bodies).
pub fn segment_set(body: &PlanarBody, tol: f64) -> SegmentSet {
    match body.shape() {
        Shape::Polygon(p) => {
            let angles = p.vertex_angles();
            let n = angles.len();
            let mut segments = Vec::with_capacity(n);
            for i in 0..n {
                let a = angles[i];
                let b = angles[(i + 1) % n];
                let width = wrap(b - a);
                let d = p.edge_dirs()[i];
                segments.push(BoundarySegment {
                    arc: Arc::new(a, width),
                    direction: [d.cos(), d.sin()],
                });
            }
            SegmentSet { segments }
        }
        Shape::Radial(_) => {
            let n = 8192usize;
            let pts: Vec<[f64; 2]> =
                (0..n).map(|i| body.boundary_point(TAU * i as f64 / n as f64).point).collect();
            let flat: Vec<bool> = (0..n)
                .map(|i| {
                    let a = pts[(i + n - 1) % n];
                    let b = pts[i];
                    let c = pts[(i + 1) % n];
                    let u = [b[0] - a[0], b[1] - a[1]];
                    let v = [c[0] - b[0], c[1] - b[1]];
                    let cr = u[0] * v[1] - u[1] * v[0];
                    let nu = u[0].hypot(u[1]);
                    let nv = v[0].hypot(v[1]);
                    cr.abs() <= tol * nu * nv
                })
                .collect();
            let mut segments = Vec::new();
            for i in 0..n {
                let prev = (i + n - 1) % n;
                if !(flat[i] && !flat[prev]) {
                    continue;
                }
                let mut len = 1usize;
                while len < n && flat[(i + len) % n] {
                    len += 1;
                }
                if len < 2 {
                    continue;
                }
                let start = TAU * (i as f64 - 1.0) / n as f64;
                let width = TAU * (len as f64 + 1.0) / n as f64;
                let p0 = pts[(i + n - 1) % n];
                let p1 = pts[(i + len) % n];
                let d = [p1[0] - p0[0], p1[1] - p0[1]];
                let nd = d[0].hypot(d[1]);
                segments.push(BoundarySegment {
                    arc: Arc::new(start, width.min(TAU)),
                    direction: [d[0] / nd, d[1] / nd],
                });
            }
            SegmentSet { segments }
        }
    }
}

/// `A(K) \ E(K)`: removes the open segment arcs from the Auerbach components.
/// Segment endpoints survive as degenerate components.
pub fn auerbach_minus_segments(
    auerbach: &AuerbachSet,
    segments: &SegmentSet,
) -> Vec<AuerbachComponent> {
    let comps: Vec<(f64, f64)> = if auerbach.full_circle {
        vec![(0.0, TAU)]
    } else {
        auerbach.components.iter().map(|c| (c.start, c.end)).collect()
    };

    let mut pieces: Vec<(f64, f64)> = Vec::new();
    for (s, e) in comps {
        let mut remaining = vec![(s, e)];
        for seg in &segments.segments {
            let u = seg.arc.start();
            let width = seg.arc.width();
            // Lift the cut relative to the component; the copy one turn down
            // catches cuts straddling the component start. Cuts are shrunk by
            // a hair so that endpoints located with refinement jitter survive.
            let u_lift = s + wrap(u - s);
            for cs in [u_lift, u_lift - TAU] {
                let cs = cs + 1e-12;
                let ce = cs + width - 2e-12;
                let mut next = Vec::with_capacity(remaining.len() + 1);
                for (rs, re) in remaining {
                    if ce <= rs || cs >= re {
                        next.push((rs, re));
                        continue;
                    }
                    // Closed pieces minus an open cut: boundary points stay,
                    // so degenerate remainders are kept.
                    if cs >= rs {
                        next.push((rs, cs));
                    }
                    if ce <= re {
                        next.push((ce, re));
                    }
                }
                remaining = next;
            }
        }
        pieces.extend(remaining);
    }

    // Normalize, dedupe seam duplicates (θ = 0 and θ = 2π are one point) and
    // rejoin pieces that touch across the seam.
    let mut pieces: Vec<(f64, f64)> = pieces
        .into_iter()
        .map(|(s, e)| {
            let w = e - s;
            let s = wrap(s);
            (s, s + w)
        })
        .collect();
    pieces.sort_by(|a, b| a.0.total_cmp(&b.0));
    pieces.dedup_by(|b, a| (a.0 - b.0).abs() <= 1e-12 && (a.1 - b.1).abs() <= 1e-12);
    if pieces.len() > 1 {
        let last = *pieces.last().unwrap();
        let first = pieces[0];
        if (last.1 - (first.0 + TAU)).abs() <= 1e-12 {
            pieces[0] = (last.0, first.1 + TAU);
            pieces.pop();
            let c = pieces[0];
            let w = c.1 - c.0;
            let s = wrap(c.0);
            pieces[0] = (s, s + w);
            pieces.sort_by(|a, b| a.0.total_cmp(&b.0));
        }
    }

    pieces
        .into_iter()
        .map(|(s, e)| AuerbachComponent {
            start: s,
            end: e,
            isolated: e - s <= auerbach.resolution,
        })
        .collect()
}
