//! Shared oracles for the integration suites. Everything here recomputes
//! expected values through routes independent of the code paths under test:
//! dense grid minimization for orthogonality, base-3 digit arithmetic for the
//! Cantor function, and difference quotients of the gauge for mutuality.

#![allow(dead_code)]

use mbk_core::angles::TAU;
use mbk_core::body::{PlanarBody, Polygon, Radial};
use mbk_core::zoo;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn disk() -> PlanarBody {
    PlanarBody::from_radial(Radial::Disk)
}

pub fn l4() -> PlanarBody {
    PlanarBody::from_radial(Radial::Lp { p: 4.0 })
}

pub fn square() -> PlanarBody {
    PlanarBody::from_polygon(Polygon::new(zoo::square_vertices()).unwrap())
}

pub fn hexagon() -> PlanarBody {
    PlanarBody::from_polygon(Polygon::new(zoo::hexagon_vertices()).unwrap())
}

pub fn random_angle(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.0..TAU)
}

/// Minimum of `t -> gauge(x + t y)` over the full fine grid on
/// `[-range, range]` with the given step. A coarse pass brackets the convex
/// minimum and the fine pass is evaluated inside the bracket only, which by
/// convexity yields exactly the full-grid minimum.
pub fn grid_min_gauge(body: &PlanarBody, x: [f64; 2], y: [f64; 2], range: f64, step: f64) -> f64 {
    let g = |t: f64| body.gauge([x[0] + t * y[0], x[1] + t * y[1]]);
    let coarse_step = (step * 100.0).min(range / 4.0);
    let n_coarse = (2.0 * range / coarse_step).round() as usize;
    let mut best = f64::INFINITY;
    let mut best_t = 0.0;
    for i in 0..=n_coarse {
        let t = -range + coarse_step * i as f64;
        let v = g(t);
        if v < best {
            best = v;
            best_t = t;
        }
    }
    let lo = (best_t - coarse_step).max(-range);
    let hi = (best_t + coarse_step).min(range);
    let k0 = ((lo + range) / step).floor() as usize;
    let k1 = ((hi + range) / step).ceil() as usize;
    for k in k0..=k1 {
        let t = -range + step * k as f64;
        if t > range {
            break;
        }
        best = best.min(g(t));
    }
    best
}

/// Brute-force Birkhoff decision: dense minimization of the gauge along the
/// line, compared at the same tolerance as the implementation.
pub fn brute_force_birkhoff(
    body: &PlanarBody,
    x: [f64; 2],
    y: [f64; 2],
    range: f64,
    step: f64,
    tol: f64,
) -> bool {
    grid_min_gauge(body, x, y, range, step) >= body.gauge(x) - tol
}

/// Classical Cantor function via base-3 digit extraction: scan ternary
/// digits, emitting binary digit d/2 until the first 1, which contributes the
/// final bit. Exact for points whose expansion decides within ~50 digits.
pub fn cantor_function_digits(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let mut frac = x;
    let mut value = 0.0f64;
    let mut bit = 0.5f64;
    for _ in 0..80 {
        frac *= 3.0;
        let digit = frac.floor();
        frac -= digit;
        if digit >= 2.0 {
            value += bit;
        } else if digit >= 1.0 {
            value += bit;
            break;
        }
        bit *= 0.5;
        if frac == 0.0 {
            break;
        }
    }
    value
}

/// Independent mutual-orthogonality detector built on central difference
/// quotients of the gauge: x(θ) and y(ψ) are mutually orthogonal when both
/// directional quotients vanish. The partner angle is located by scanning a
/// ψ grid and polishing the best candidate with a ternary search.
pub fn mutual_scan_quotient(body: &PlanarBody, theta: f64, quot_tol: f64) -> bool {
    let h = 1e-7;
    let x = body.boundary_point(theta).point;
    let quot = |p: [f64; 2], d: [f64; 2]| -> f64 {
        (body.gauge([p[0] + h * d[0], p[1] + h * d[1]])
            - body.gauge([p[0] - h * d[0], p[1] - h * d[1]]))
            / (2.0 * h)
    };
    let d1_at = |psi: f64| {
        let y = body.boundary_point(psi).point;
        quot(x, y).abs()
    };
    // Coarse scan for candidate partner directions.
    let n = 4096;
    let mut candidates: Vec<f64> = Vec::new();
    let mut prev = d1_at(theta + 1e-3);
    for i in 1..n {
        let psi = theta + 1e-3 + (std::f64::consts::PI - 2e-3) * i as f64 / n as f64;
        let cur = d1_at(psi);
        if cur <= prev && cur < 0.05 {
            candidates.push(psi);
        }
        prev = cur;
    }
    candidates.push(theta + std::f64::consts::PI / 2.0);
    for c in candidates {
        // Ternary polish of |d1| around the candidate.
        let (mut lo, mut hi) = (c - 2e-3, c + 2e-3);
        for _ in 0..120 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if d1_at(m1) <= d1_at(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        let psi = 0.5 * (lo + hi);
        if d1_at(psi) > quot_tol {
            continue;
        }
        let y = body.boundary_point(psi).point;
        if quot(y, x).abs() <= quot_tol {
            return true;
        }
    }
    false
}
