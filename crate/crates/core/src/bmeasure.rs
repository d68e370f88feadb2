//! Angular measures on the boundary circle and the quarter-turn arc property.
//!
//! An angular measure has total mass `2π`, is antipodally symmetric and has
//! no atoms. The measure built here additionally assigns `π/2` to every
//! closed arc, free of opposite points, whose endpoints `x, y` satisfy
//! `x ⊣ y`. The construction transports a continuous probability measure ν
//! supported on a perfect subset of a base arc `[a, b]` with `b` the partner
//! of `a`: for a Borel set `A`,
//!
//! ```text
//! μ(A) = (π/2) · [ ν(A) + ν(-A) + ν(φ⁻¹(A)) + ν(φ⁻¹(-A)) ]
//! ```
//!
//! where `φ` maps a boundary point to its first mutual-orthogonality partner
//! in the positive direction. Such a measure exists precisely when the
//! Auerbach set minus the boundary segments is uncountable; numerically the
//! gate reports resolution-bounded structural evidence for that.

use crate::angles::{arc_between, wrap, Arc, PI, TAU};
use crate::auerbach::{
    auerbach_minus_segments, auerbach_set, partner_angle, segment_set, AuerbachComponent,
};
use crate::body::{BoundaryPoint, PlanarBody};
use crate::error::{Error, Result};
use crate::staircase::{build_measure, PerfectSet, SupportedMeasure};
use serde::{Deserialize, Serialize};

/// The closed arc between two boundary points containing no opposite pair.
pub fn arc(a: &BoundaryPoint, b: &BoundaryPoint) -> Result<Arc> {
    arc_between(a.theta, b.theta)
}

/// A probability CDF on `[0, 1]`: either a staircase-backed measure or an
/// externally supplied sampled CDF.
#[derive(Clone, Debug)]
pub enum UnitCdf {
    Staircase(SupportedMeasure),
    /// Piecewise-linear CDF through `(xs, vals)`, `xs[0] = 0`, `vals` ending
    /// at 1. Validated for monotonicity and absence of grid-scale jumps.
    Grid { xs: Vec<f64>, vals: Vec<f64> },
}

impl UnitCdf {
    pub fn from_grid(xs: Vec<f64>, vals: Vec<f64>, atom_tol: f64) -> Result<Self> {
        if xs.len() < 2 || xs.len() != vals.len() {
            return Err(Error::InvalidMeasure("cdf grid needs at least two rows".into()));
        }
        if (xs[0]).abs() > 1e-9 || (xs[xs.len() - 1] - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidMeasure("cdf grid must span [0, 1]".into()));
        }
        if (vals[0]).abs() > 1e-9 || (vals[vals.len() - 1] - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidMeasure("cdf values must run from 0 to 1".into()));
        }
        for i in 1..xs.len() {
            if xs[i] <= xs[i - 1] {
                return Err(Error::InvalidMeasure("cdf grid is not increasing".into()));
            }
            let inc = vals[i] - vals[i - 1];
            if inc < -1e-12 {
                return Err(Error::InvalidMeasure("cdf is not monotone".into()));
            }
            if inc > atom_tol {
                return Err(Error::InvalidMeasure(format!(
                    "cdf jumps by {inc} across one grid cell; atoms above {atom_tol} rejected"
                )));
            }
        }
        Ok(UnitCdf::Grid { xs, vals })
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            UnitCdf::Staircase(m) => m.cdf(x),
            UnitCdf::Grid { xs, vals } => {
                let x = x.clamp(0.0, 1.0);
                let i = xs.partition_point(|&v| v <= x);
                if i == 0 {
                    return vals[0];
                }
                if i >= xs.len() {
                    return vals[vals.len() - 1];
                }
                let t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
                vals[i - 1] + (vals[i] - vals[i - 1]) * t
            }
        }
    }
}

/// A continuous probability measure placed on the angular frame
/// `[frame_lo, frame_hi]` (width below π) through the affine rescaling of a
/// unit-interval CDF.
#[derive(Clone, Debug)]
pub struct NuOnArc {
    frame_lo: f64,
    frame_hi: f64,
    cdf: UnitCdf,
}

impl NuOnArc {
    pub fn new(frame_lo: f64, frame_hi: f64, cdf: UnitCdf) -> Result<Self> {
        let w = frame_hi - frame_lo;
        if !(w > 0.0 && w < PI) {
            return Err(Error::InvalidMeasure(format!(
                "support frame width {w} must lie in (0, π)"
            )));
        }
        Ok(NuOnArc { frame_lo, frame_hi, cdf })
    }

    pub fn frame(&self) -> (f64, f64) {
        (self.frame_lo, self.frame_hi)
    }

    pub fn unit_cdf(&self) -> &UnitCdf {
        &self.cdf
    }

    /// Cumulative ν-mass along the lifted angle axis; increases by 1 per turn.
    pub fn lifted_cdf(&self, t: f64) -> f64 {
        let s = t - self.frame_lo;
        let k = (s / TAU).floor();
        let rem = s - TAU * k;
        let w = self.frame_hi - self.frame_lo;
        k + self.cdf.cdf((rem / w).min(1.0))
    }

    /// ν-mass of the lifted angle interval `[lo, hi]`.
    pub fn mass_between(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        self.lifted_cdf(hi) - self.lifted_cdf(lo)
    }
}

/// Monotone sampled partner map on a sub-arc of the boundary, with linear
/// interpolation between samples. Inputs and values are lifted angles.
#[derive(Clone, Debug)]
pub struct PartnerMap {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl PartnerMap {
    pub fn from_samples(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::InvalidMeasure("partner map needs at least two samples".into()));
        }
        let mut ys = ys;
        for i in 1..xs.len() {
            if xs[i] <= xs[i - 1] {
                return Err(Error::InvalidMeasure("partner map abscissae must increase".into()));
            }
            if ys[i] < ys[i - 1] {
                if ys[i - 1] - ys[i] > 1e-9 {
                    return Err(Error::InvalidMeasure(
                        "partner map is not monotone along the boundary".into(),
                    ));
                }
                ys[i] = ys[i - 1];
            }
        }
        Ok(PartnerMap { xs, ys })
    }

    pub fn samples(&self) -> (&[f64], &[f64]) {
        (&self.xs, &self.ys)
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], self.xs[self.xs.len() - 1])
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.ys[0];
        }
        if x >= self.xs[n - 1] {
            return self.ys[n - 1];
        }
        let i = self.xs.partition_point(|&v| v <= x);
        let t = (x - self.xs[i - 1]) / (self.xs[i] - self.xs[i - 1]);
        self.ys[i - 1] + (self.ys[i] - self.ys[i - 1]) * t
    }

    /// `sup { x : φ(x) <= y }`, clamped to the domain. A plateau at value `y`
    /// contributes its full preimage interval.
    pub fn inv_sup(&self, y: f64) -> f64 {
        let n = self.xs.len();
        if y < self.ys[0] {
            return self.xs[0];
        }
        if y >= self.ys[n - 1] {
            return self.xs[n - 1];
        }
        // Last sample with value <= y; the crossing lies on the next segment.
        let i = self.ys.partition_point(|&v| v <= y) - 1;
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let t = (y - y0) / (y1 - y0);
        self.xs[i] + (self.xs[i + 1] - self.xs[i]) * t
    }
}

/// Builds the partner map by sampling `φ` over the kept components of the
/// base arc (lifted coordinates). Component endpoints are always sampled.
pub fn sample_partner_map(
    body: &PlanarBody,
    kept: &[(f64, f64)],
    per_component: usize,
    tol: f64,
) -> Result<PartnerMap> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &(s, e) in kept {
        let m = per_component.max(2);
        for j in 0..m {
            let x = s + (e - s) * (j as f64) / ((m - 1) as f64);
            if xs.last().is_some_and(|&last: &f64| x <= last + 1e-13) {
                continue;
            }
            let psi = partner_angle(body, wrap(x), tol)?;
            let offset = wrap(psi - wrap(x));
            debug_assert!(offset > 0.0 && offset < PI + 1e-9);
            xs.push(x);
            ys.push(x + offset);
        }
    }
    PartnerMap::from_samples(xs, ys)
}

#[derive(Clone, Debug)]
pub enum MeasureCdf {
    /// The four-term transported measure.
    FourTerm { nu: NuOnArc, phi: PartnerMap },
    /// Piecewise-linear CDF through `(thetas, values)` covering `[0, 2π]`.
    Grid { thetas: Vec<f64>, values: Vec<f64> },
    /// Boundary arc length, normalized to total mass 2π.
    ArcLength { prefix: Vec<f64> },
    /// A base measure plus point masses (used to exercise the verifier).
    WithAtoms { base: Box<MeasureCdf>, atoms: Vec<(f64, f64)> },
}

/// A measure on the boundary circle represented through its CDF over the
/// polar angle.
#[derive(Clone, Debug)]
pub struct AngularMeasure {
    cdf: MeasureCdf,
}

impl AngularMeasure {
    /// The uniform angular measure `G(θ) = θ`.
    pub fn uniform() -> Self {
        AngularMeasure {
            cdf: MeasureCdf::Grid { thetas: vec![0.0, TAU], values: vec![0.0, TAU] },
        }
    }

    /// Boundary arc length of the body, normalized to total mass 2π.
    pub fn arc_length(body: &PlanarBody) -> Self {
        let n = 16384usize;
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0.0);
        let mut prev = body.boundary_point(0.0).point;
        let mut acc = 0.0;
        for i in 1..=n {
            let p = body.boundary_point(TAU * i as f64 / n as f64).point;
            acc += (p[0] - prev[0]).hypot(p[1] - prev[1]);
            prefix.push(acc);
            prev = p;
        }
        AngularMeasure { cdf: MeasureCdf::ArcLength { prefix } }
    }

    /// Piecewise-linear CDF from sampled `(theta, value)` pairs spanning
    /// `[0, 2π]`; values are rescaled to total mass 2π.
    pub fn from_grid(thetas: Vec<f64>, mut values: Vec<f64>) -> Result<Self> {
        if thetas.len() != values.len() || thetas.len() < 2 {
            return Err(Error::InvalidMeasure("angular cdf needs at least two rows".into()));
        }
        if thetas[0].abs() > 1e-9 || (thetas[thetas.len() - 1] - TAU).abs() > 1e-6 {
            return Err(Error::InvalidMeasure("angular cdf must span [0, 2π]".into()));
        }
        for i in 1..thetas.len() {
            if thetas[i] <= thetas[i - 1] || values[i] < values[i - 1] - 1e-12 {
                return Err(Error::InvalidMeasure("angular cdf must be increasing".into()));
            }
        }
        let base = values[0];
        let total = values[values.len() - 1] - base;
        if total <= 0.0 {
            return Err(Error::InvalidMeasure("angular cdf has no mass".into()));
        }
        let scale = TAU / total;
        for v in values.iter_mut() {
            *v = (*v - base) * scale;
        }
        Ok(AngularMeasure { cdf: MeasureCdf::Grid { thetas, values } })
    }

    /// Uniform measure scaled down to make room for the given atoms; total
    /// mass stays 2π. Exists to hand the verifier a measure that fails only
    /// continuity.
    pub fn uniform_with_atoms(atoms: Vec<(f64, f64)>) -> Self {
        let total_atom: f64 = atoms.iter().map(|a| a.1).sum();
        let base = MeasureCdf::Grid { thetas: vec![0.0, TAU], values: vec![0.0, TAU - total_atom] };
        AngularMeasure {
            cdf: MeasureCdf::WithAtoms {
                base: Box::new(base),
                atoms: atoms.into_iter().map(|(t, m)| (wrap(t), m)).collect(),
            },
        }
    }

    fn cdf_inner(cdf: &MeasureCdf, theta: f64) -> f64 {
        match cdf {
            MeasureCdf::FourTerm { nu, phi } => {
                let t1 = nu.mass_between(0.0, theta);
                let t2 = nu.mass_between(PI, PI + theta);
                let t3 = preimage_mass(nu, phi, 0.0, theta);
                let t4 = preimage_mass(nu, phi, PI, PI + theta);
                (PI / 2.0) * (t1 + t2 + t3 + t4)
            }
            MeasureCdf::Grid { thetas, values } => {
                let x = theta.clamp(0.0, TAU);
                let i = thetas.partition_point(|&v| v <= x);
                if i == 0 {
                    return values[0];
                }
                if i >= thetas.len() {
                    return values[values.len() - 1];
                }
                let t = (x - thetas[i - 1]) / (thetas[i] - thetas[i - 1]);
                values[i - 1] + (values[i] - values[i - 1]) * t
            }
            MeasureCdf::ArcLength { prefix } => {
                let n = (prefix.len() - 1) as f64;
                let total = prefix[prefix.len() - 1];
                let pos = (theta.clamp(0.0, TAU) / TAU) * n;
                let i = (pos.floor() as usize).min(prefix.len() - 2);
                let frac = pos - i as f64;
                let raw = prefix[i] + (prefix[i + 1] - prefix[i]) * frac;
                raw * TAU / total
            }
            MeasureCdf::WithAtoms { base, atoms } => {
                let mut g = Self::cdf_inner(base, theta);
                for &(pos, mass) in atoms {
                    if theta > pos {
                        g += mass;
                    }
                }
                g
            }
        }
    }

    /// CDF over `[0, 2π]`.
    pub fn cdf(&self, theta: f64) -> f64 {
        Self::cdf_inner(&self.cdf, theta)
    }

    pub fn total_mass(&self) -> f64 {
        self.cdf(TAU)
    }

    /// Periodic extension of the CDF to the lifted angle axis.
    pub fn lifted_cdf(&self, t: f64) -> f64 {
        let k = (t / TAU).floor();
        let rem = t - TAU * k;
        k * self.total_mass() + self.cdf(rem)
    }

    /// Mass of the lifted angle interval `[lo, hi]`.
    pub fn mass_between(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        self.lifted_cdf(hi) - self.lifted_cdf(lo)
    }

    pub fn mass_of_arc(&self, arc: &Arc) -> f64 {
        self.mass_between(arc.start(), arc.end())
    }

    pub fn repr(&self) -> &MeasureCdf {
        &self.cdf
    }
}

/// ν-mass of `φ⁻¹([c_lo, c_hi])` for lifted target angles, summing over the
/// turns of the target interval that meet the partner map's range. Uses the
/// `sup`-inversion consistently so that adjacent target intervals telescope
/// exactly.
fn preimage_mass(nu: &NuOnArc, phi: &PartnerMap, c_lo: f64, c_hi: f64) -> f64 {
    if c_hi <= c_lo {
        return 0.0;
    }
    let (ys0, ysn) = (phi.ys[0], phi.ys[phi.ys.len() - 1]);
    let k_min = ((ys0 - c_hi) / TAU).floor() as i64;
    let k_max = ((ysn - c_lo) / TAU).ceil() as i64;
    let mut total = 0.0;
    for k in k_min..=k_max {
        let lo = c_lo + TAU * k as f64;
        let hi = c_hi + TAU * k as f64;
        if hi < ys0 || lo > ysn {
            continue;
        }
        let x_hi = phi.inv_sup(hi);
        let x_lo = phi.inv_sup(lo);
        total += nu.mass_between(x_lo, x_hi);
    }
    total
}

/// Validates the inputs and assembles the four-term measure. The partner map
/// must cover the support frame of ν.
pub fn build_b_measure(nu: NuOnArc, phi: PartnerMap) -> Result<AngularMeasure> {
    let (flo, fhi) = nu.frame();
    let (dlo, dhi) = phi.domain();
    if dlo > flo + 1e-9 || dhi < fhi - 1e-9 {
        return Err(Error::InvalidMeasure(format!(
            "partner map domain [{dlo}, {dhi}] does not cover the support frame [{flo}, {fhi}]"
        )));
    }
    Ok(AngularMeasure { cdf: MeasureCdf::FourTerm { nu, phi } })
}

/// Structural classification of `A(K) \ E(K)` at a fixed resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GateClass {
    /// Only resolution-bounded isolated points.
    Finite,
    /// Contains a component of positive angular width.
    PositiveWidth,
    /// Isolated-point counts grow geometrically under dyadic refinement.
    CantorLike,
}

/// Outcome of the existence gate. The classification is resolution-bounded
/// evidence about the structure of `A(K) \ E(K)`, not a proof.
#[derive(Clone, Debug)]
pub struct GateReport {
    pub exists: bool,
    pub class: GateClass,
    pub components: Vec<AuerbachComponent>,
    pub n_positive_width: usize,
    pub refinement_counts: Vec<usize>,
    pub resolution: f64,
    pub tol: f64,
    pub note: String,
}

/// True when the counts keep growing by at least ×1.4 per refinement.
pub fn counts_grow_geometrically(counts: &[usize]) -> bool {
    counts.len() >= 2
        && counts.windows(2).all(|w| w[1] as f64 >= 1.4 * w[0] as f64 && w[1] > w[0])
}

/// Detects `A(K) \ E(K)` and classifies it: a measure with the quarter-turn
/// arc property exists iff this set is uncountable, which at fixed resolution
/// is evidenced by positive-width components or geometric growth of the point
/// count under refinement.
pub fn existence_gate(body: &PlanarBody, resolution: f64, tol: f64) -> Result<GateReport> {
    let a = auerbach_set(body, resolution, tol)?;
    let e = segment_set(body, 1e-9);
    let components = auerbach_minus_segments(&a, &e);
    let n_positive_width = components.iter().filter(|c| c.width() > resolution).count();

    let (class, refinement_counts) = if n_positive_width > 0 {
        (GateClass::PositiveWidth, Vec::new())
    } else {
        let mut counts = vec![components.len()];
        for div in [2.0, 4.0] {
            let finer = auerbach_set(body, resolution / div, tol)?;
            counts.push(auerbach_minus_segments(&finer, &e).len());
        }
        if counts_grow_geometrically(&counts) {
            (GateClass::CantorLike, counts)
        } else {
            (GateClass::Finite, counts)
        }
    };

    let exists = class != GateClass::Finite;
    let note = format!(
        "classification is resolution-bounded evidence at resolution {resolution}, not a proof \
         of uncountability"
    );
    Ok(GateReport {
        exists,
        class,
        components,
        n_positive_width,
        refinement_counts,
        resolution,
        tol,
        note,
    })
}

/// A base arc `[a, b]` with `b` the partner of `a`, together with the
/// detected perfect-like subset of `A(K) \ E(K)` inside it, rescaled to
/// `[0, 1]` over the support frame (the hull of the kept components).
#[derive(Clone, Debug)]
pub struct BaseArc {
    pub a: f64,
    pub b: f64,
    pub frame_lo: f64,
    pub frame_hi: f64,
    /// Kept positive-width components, lifted into `[a, b]`.
    pub kept: Vec<(f64, f64)>,
    pub set: PerfectSet,
    pub dropped_isolated: usize,
}

impl BaseArc {
    pub fn nu(&self) -> Result<NuOnArc> {
        NuOnArc::new(self.frame_lo, self.frame_hi, UnitCdf::Staircase(build_measure(&self.set)))
    }
}

/// Chooses a base arc: starting from each component start `a` in turn, takes
/// `b` as the partner of `a` and keeps the positive-width components of
/// `A(K) \ E(K)` inside the arc. Isolated points (the countable part visible
/// at this resolution) are dropped so that the rescaled set is perfect-like.
/// Fails when every candidate arc contains only isolated points.
pub fn choose_base_arc(body: &PlanarBody, gate: &GateReport, tol: f64) -> Result<BaseArc> {
    if gate.components.is_empty() {
        return Err(Error::GateFailed("no components in A(K) \\ E(K)".into()));
    }
    let min_width = 2.0 * gate.resolution;
    let full_circle = gate.components.len() == 1 && gate.components[0].width() >= TAU - 1e-9;
    let partner_tol = tol.max(1e-9);

    for cand in &gate.components {
        let a = wrap(cand.start);
        let b = match partner_angle(body, a, partner_tol) {
            Ok(b) => b,
            Err(_) => continue,
        };
        let arc_w = wrap(b - a);
        if !(arc_w > 0.0 && arc_w < PI) {
            continue;
        }

        let mut kept: Vec<(f64, f64)> = Vec::new();
        if full_circle {
            kept.push((a, a + arc_w));
        } else {
            for c in &gate.components {
                // Lift the component into [a, a + 2π) and also consider the
                // copy shifted one turn down, to catch components straddling a.
                let s = a + wrap(c.start - a);
                for s_lift in [s, s - TAU] {
                    let e_lift = s_lift + c.width();
                    let lo = s_lift.max(a);
                    let hi = e_lift.min(a + arc_w);
                    if hi > lo {
                        kept.push((lo, hi));
                    }
                }
            }
        }
        kept.sort_by(|p, q| p.0.total_cmp(&q.0));
        let before = kept.len();
        kept.retain(|c| c.1 - c.0 > min_width);
        let dropped_isolated = before - kept.len();
        if kept.is_empty() {
            continue;
        }

        let frame_lo = kept[0].0;
        let frame_hi = kept[kept.len() - 1].1;
        let span = frame_hi - frame_lo;
        let mut gaps01 = Vec::with_capacity(kept.len().saturating_sub(1));
        for w in kept.windows(2) {
            gaps01.push(((w[0].1 - frame_lo) / span, (w[1].0 - frame_lo) / span));
        }
        let set = PerfectSet::new(gaps01)?;
        return Ok(BaseArc { a, b, frame_lo, frame_hi, kept, set, dropped_isolated });
    }
    Err(Error::GateFailed(
        "every candidate base arc is finite at this resolution".into(),
    ))
}

/// Verification parameters. `tol` is the pass threshold applied to every
/// residual; sampling is deterministic (equally spaced plus the component
/// endpoints) with optional extra angles appended by the caller.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_samples: usize,
    pub tol: f64,
    pub resolution: f64,
    pub angular_tol: f64,
    pub atom_grid_log2: u32,
    pub support_dilation: f64,
    pub extra_samples: Vec<f64>,
}

impl VerifyConfig {
    pub fn new(n_samples: usize, tol: f64) -> Self {
        VerifyConfig {
            n_samples,
            tol,
            resolution: 1e-3,
            angular_tol: 1e-8,
            atom_grid_log2: 16,
            support_dilation: tol,
            extra_samples: Vec::new(),
        }
    }
}

/// Verification outcome; `pass` requires every residual at or below `tol`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_pi_half_deviation: f64,
    pub worst_pair: (f64, f64),
    pub total_mass_residual: f64,
    pub symmetry_residual: f64,
    pub atom_estimate: f64,
    pub support_leak: f64,
    pub n_pairs: usize,
    pub tol: f64,
    pub pass: bool,
}

pub fn verify_b_measure(
    body: &PlanarBody,
    measure: &AngularMeasure,
    n_samples: usize,
    tol: f64,
) -> Result<VerifyReport> {
    verify_b_measure_with(body, measure, &VerifyConfig::new(n_samples, tol))
}

/// Checks the angular-measure axioms (mass 2π, antipodal symmetry, no atoms),
/// the quarter-turn property over deterministic boundary samples plus the
/// stress points at component and segment endpoints, and the support
/// constraint: the measure of the complement of a dilated neighbourhood of
/// `A(K) \ E(K)` must vanish.
pub fn verify_b_measure_with(
    body: &PlanarBody,
    measure: &AngularMeasure,
    config: &VerifyConfig,
) -> Result<VerifyReport> {
    let a_set = auerbach_set(body, config.resolution, config.angular_tol)?;
    let e_set = segment_set(body, 1e-9);
    let comps = auerbach_minus_segments(&a_set, &e_set);

    // Equally spaced angles plus the stress points: component endpoints of
    // the Auerbach set and of the segment set (discontinuity candidates).
    let mut thetas: Vec<f64> = (0..config.n_samples)
        .map(|i| TAU * i as f64 / config.n_samples as f64)
        .collect();
    for c in &a_set.components {
        thetas.push(wrap(c.start));
        thetas.push(wrap(c.end));
    }
    for c in &comps {
        thetas.push(wrap(c.start));
        thetas.push(wrap(c.end));
    }
    for s in &e_set.segments {
        thetas.push(wrap(s.arc.start()));
        thetas.push(wrap(s.arc.end()));
    }
    thetas.extend(config.extra_samples.iter().map(|&t| wrap(t)));

    // Quarter-turn property over all sampled points and both cone extremes.
    let mut max_dev = 0.0f64;
    let mut worst_pair = (0.0, 0.0);
    let mut n_pairs = 0usize;
    for &t in &thetas {
        let (qlo, qhi) = body.tangent_offsets(t);
        let offsets: &[f64] = if qhi - qlo > 1e-12 { &[qlo, qhi] } else { &[qlo] };
        for &q in offsets {
            let psi = t + q;
            let dev = (measure.mass_between(t, psi) - PI / 2.0).abs();
            n_pairs += 1;
            if dev > max_dev {
                max_dev = dev;
                worst_pair = (t, wrap(psi));
            }
        }
    }

    let total_mass_residual = (measure.total_mass() - TAU).abs();

    let sym_n = config.n_samples.clamp(64, 4096);
    let g_pi = measure.cdf(PI);
    let mut symmetry_residual = 0.0f64;
    for i in 0..=sym_n {
        let t = TAU * i as f64 / sym_n as f64;
        let r = ((measure.lifted_cdf(t + PI) - g_pi) - measure.cdf(t)).abs();
        symmetry_residual = symmetry_residual.max(r);
    }

    let atom_estimate = atom_estimate(measure, config.atom_grid_log2);

    // Fraction of the measure's mass escaping a dilated neighbourhood of
    // A(K) \ E(K).
    let support_leak = if comps.is_empty() {
        1.0
    } else if comps.len() == 1 && comps[0].width() >= TAU - 1e-9 {
        0.0
    } else {
        let d = config.support_dilation;
        let mut dilated: Vec<(f64, f64)> =
            comps.iter().map(|c| (c.start - d, c.end + d)).collect();
        dilated.sort_by(|p, q| p.0.total_cmp(&q.0));
        let mut merged: Vec<(f64, f64)> = Vec::new();
        for c in dilated {
            if let Some(last) = merged.last_mut() {
                if c.0 <= last.1 {
                    last.1 = last.1.max(c.1);
                    continue;
                }
            }
            merged.push(c);
        }
        let mut leak = 0.0;
        for w in merged.windows(2) {
            leak += measure.mass_between(w[0].1, w[1].0);
        }
        // Gap between the last component and the first one, next turn.
        let first = merged[0];
        let last = merged[merged.len() - 1];
        let wrap_gap_lo = last.1;
        let wrap_gap_hi = first.0 + TAU;
        if wrap_gap_hi > wrap_gap_lo {
            leak += measure.mass_between(wrap_gap_lo, wrap_gap_hi);
        }
        leak / measure.total_mass()
    };

    let tol = config.tol;
    let pass = max_dev <= tol
        && total_mass_residual <= tol
        && symmetry_residual <= tol
        && atom_estimate <= tol
        && support_leak <= tol;

    Ok(VerifyReport {
        max_pi_half_deviation: max_dev,
        worst_pair,
        total_mass_residual,
        symmetry_residual,
        atom_estimate,
        support_leak,
        n_pairs,
        tol,
        pass,
    })
}

/// Estimates the largest atom: the heaviest coarse cells are shrunk by
/// repeatedly keeping the heavier half until the window is a few ulps wide.
/// Mass that survives the shrinking is a jump of the CDF; steep continuous
/// mass collapses with the window. Resolution-bounded: an atom hiding below
/// the coarse cell masses of a very steep continuous part can be missed.
fn atom_estimate(measure: &AngularMeasure, grid_log2: u32) -> f64 {
    let n = 1usize << grid_log2;
    let mut prev = measure.cdf(0.0);
    let mut incs = Vec::with_capacity(n);
    for i in 1..=n {
        let g = measure.cdf(TAU * i as f64 / n as f64);
        incs.push((g - prev, i - 1));
        prev = g;
    }
    incs.sort_by(|a, b| b.0.total_cmp(&a.0));

    let step = TAU / n as f64;
    let mut worst = 0.0f64;
    for &(_, cell) in incs.iter().take(32) {
        let mut lo = cell as f64 * step;
        let mut hi = lo + step;
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            let left = measure.mass_between(lo, mid);
            let right = measure.mass_between(mid, hi);
            if left >= right {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        worst = worst.max(measure.mass_between(lo, hi));
    }
    worst
}

/// Rebuilds the exact four-term measure recorded in a sidecar document.
pub fn measure_from_sidecar(sc: &crate::io::MeasureSidecar) -> Result<AngularMeasure> {
    let unit = match &sc.nu_grid {
        Some(rows) => UnitCdf::from_grid(
            rows.iter().map(|r| r[0]).collect(),
            rows.iter().map(|r| r[1]).collect(),
            0.05,
        )?,
        None => {
            let set = PerfectSet::new(sc.gaps01.iter().map(|g| (g[0], g[1])).collect())?;
            UnitCdf::Staircase(build_measure(&set))
        }
    };
    let nu = NuOnArc::new(sc.frame_lo, sc.frame_hi, unit)?;
    let phi = PartnerMap::from_samples(sc.phi_xs.clone(), sc.phi_ys.clone())?;
    build_b_measure(nu, phi)
}
