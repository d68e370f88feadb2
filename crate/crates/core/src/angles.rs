//! Angle arithmetic on the boundary circle.
//!
//! The boundary of a body is parametrized by the polar angle `theta` in
//! `[0, 2π)`. Arcs are stored *unwrapped*: `start` is normalized to `[0, 2π)`
//! and `end >= start` may exceed `2π`, so an arc through zero keeps a single
//! contiguous coordinate range.

use crate::error::{Error, Result};

pub use std::f64::consts::PI;
pub const TAU: f64 = std::f64::consts::TAU;

/// Endpoints closer than this to a half-turn apart count as antipodal.
pub const ANTIPODAL_TOL: f64 = 1e-9;

/// Normalizes an angle into `[0, 2π)`.
pub fn wrap(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t == TAU {
        0.0
    } else {
        t
    }
}

/// Signed circular difference `b - a`, folded into `(-π, π]`.
pub fn signed_delta(a: f64, b: f64) -> f64 {
    let d = wrap(b - a);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

/// Distance between two directions modulo π (lines, not rays).
pub fn dir_dist(a: f64, b: f64) -> f64 {
    let d = (b - a).rem_euclid(PI);
    d.min(PI - d)
}

/// A closed arc on the boundary circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    start: f64,
    end: f64,
}

impl Arc {
    /// Arc starting at `start` (normalized) with the given nonnegative width.
    pub fn new(start: f64, width: f64) -> Self {
        assert!((0.0..=TAU).contains(&width), "arc width out of range");
        let s = wrap(start);
        Arc { start: s, end: s + width }
    }

    pub fn full_circle() -> Self {
        Arc { start: 0.0, end: TAU }
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    /// Unwrapped end; `end() >= start()` always.
    pub fn end(&self) -> f64 {
        self.end
    }

    pub fn width(&self) -> f64 {
        self.end - self.start
    }

    pub fn midpoint(&self) -> f64 {
        wrap(0.5 * (self.start + self.end))
    }

    pub fn contains(&self, theta: f64) -> bool {
        let t = wrap(theta);
        let lifted = if t < self.start { t + TAU } else { t };
        lifted <= self.end
    }

    /// The arc rotated by a half-turn.
    pub fn antipode(&self) -> Arc {
        Arc::new(self.start + PI, self.width())
    }
}

/// The closed arc from `a` to `b` that contains no pair of opposite points,
/// i.e. the one of angular width strictly less than π. Errors when the
/// endpoints are antipodal within [`ANTIPODAL_TOL`].
pub fn arc_between(a: f64, b: f64) -> Result<Arc> {
    let fwd = wrap(b - a);
    if (fwd - PI).abs() <= ANTIPODAL_TOL {
        return Err(Error::AntipodalArc);
    }
    if fwd < PI {
        Ok(Arc::new(a, fwd))
    } else {
        Ok(Arc::new(b, TAU - fwd))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_between_simple() {
        let c = arc_between(0.0, PI / 2.0).unwrap();
        assert_eq!(c.start(), 0.0);
        assert!((c.width() - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn arc_between_wraps() {
        // 3π/2 to 0.1 goes forward through zero.
        let c = arc_between(3.0 * PI / 2.0, 0.1).unwrap();
        assert!((c.start() - 3.0 * PI / 2.0).abs() < 1e-15);
        assert!((c.end() - (TAU + 0.1)).abs() < 1e-12);
        assert!(c.contains(0.0));
        assert!(c.contains(0.05));
        assert!(!c.contains(1.0));
    }

    #[test]
    fn arc_between_rejects_antipodal() {
        assert!(matches!(arc_between(0.0, PI), Err(Error::AntipodalArc)));
    }

    #[test]
    fn wrap_and_delta() {
        assert_eq!(wrap(TAU), 0.0);
        assert!((signed_delta(0.1, TAU - 0.1) + 0.2).abs() < 1e-15);
        assert!((dir_dist(0.05, PI + 0.05)).abs() < 1e-15);
    }
}
