//! Staircase functions and continuous measures supported on a closed subset
//! of `[0, 1]` represented by its complementary gaps.
//!
//! A [`PerfectSet`] stores the bounded open gaps of the complement (a finite
//! truncation of a possibly infinite family). Each gap receives a level by
//! averaging the levels of its nearest previously-enumerated neighbours, with
//! the two unbounded rays fixed at 0 and 1; the resulting monotone
//! [`StaircaseFunction`] is constant on gaps and interpolates linearly across
//! the retained closed intervals. Adding the Lebesgue measure restricted to
//! the set and renormalizing yields a continuous probability measure whose
//! support is exactly the represented set.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Largest middle-thirds depth the gap representation supports (2^d - 1 gaps).
pub const MAX_CANTOR_DEPTH: u32 = 20;

/// A closed subset of `[0, 1]` containing 0 and 1, given by finitely many
/// disjoint open gaps in `(0, 1)`. Gaps may not overlap or touch: a touching
/// pair would leave an isolated point, which this representation rejects
/// (perfectness, at the stored resolution).
#[derive(Clone, Debug)]
pub struct PerfectSet {
    gaps: Vec<(f64, f64)>,
}

impl PerfectSet {
    /// The whole interval `[0, 1]` (no gaps).
    pub fn full_interval() -> Self {
        PerfectSet { gaps: Vec::new() }
    }

    pub fn new(mut gaps: Vec<(f64, f64)>) -> Result<Self> {
        gaps.sort_by(|a, b| a.0.total_cmp(&b.0));
        for &(lo, hi) in &gaps {
            if !(lo > 0.0 && hi < 1.0 && lo < hi) {
                return Err(Error::InvalidPerfectSet(format!(
                    "gap ({lo}, {hi}) is not an open subinterval of (0, 1)"
                )));
            }
        }
        for w in gaps.windows(2) {
            if w[1].0 <= w[0].1 {
                return Err(Error::InvalidPerfectSet(format!(
                    "gaps ({}, {}) and ({}, {}) overlap or touch",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(PerfectSet { gaps })
    }

    /// Middle-thirds Cantor set truncated after `depth` generations
    /// (`depth <= MAX_CANTOR_DEPTH`).
    pub fn cantor(depth: u32) -> Self {
        assert!(depth <= MAX_CANTOR_DEPTH, "cantor depth {depth} too large");
        PerfectSet { gaps: middle_thirds_gaps(depth) }
    }

    pub fn gaps(&self) -> &[(f64, f64)] {
        &self.gaps
    }

    /// Maximal closed intervals of the set, in order. All have positive
    /// length because gaps may not touch.
    pub fn components(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.gaps.len() + 1);
        let mut cur = 0.0;
        for &(lo, hi) in &self.gaps {
            out.push((cur, lo));
            cur = hi;
        }
        out.push((cur, 1.0));
        out
    }

    /// Total Lebesgue measure of the represented set.
    pub fn lebesgue(&self) -> f64 {
        1.0 - self.gaps.iter().map(|g| g.1 - g.0).sum::<f64>()
    }

    pub fn contains(&self, x: f64) -> bool {
        if !(0.0..=1.0).contains(&x) {
            return false;
        }
        let i = self.gaps.partition_point(|g| g.1 <= x);
        !(i < self.gaps.len() && x > self.gaps[i].0 && x < self.gaps[i].1)
    }
}

/// Gaps of the depth-`d` middle-thirds construction on `[0, 1]`, sorted by
/// position (generations `1..=d`).
pub fn middle_thirds_gaps(depth: u32) -> Vec<(f64, f64)> {
    let mut gaps = Vec::with_capacity((1usize << depth) - 1);
    let mut intervals = vec![(0.0f64, 1.0f64)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(intervals.len() * 2);
        for (a, b) in intervals {
            let w = (b - a) / 3.0;
            gaps.push((a + w, b - w));
            next.push((a, a + w));
            next.push((b - w, b));
        }
        intervals = next;
    }
    gaps.sort_by(|a, b| a.0.total_cmp(&b.0));
    gaps
}

#[derive(Clone, Copy, Debug)]
struct Gap {
    lo: f64,
    hi: f64,
    level: f64,
}

/// The monotone function that is constant on each gap of a [`PerfectSet`]
/// and linear on its closed components, with `f(0) = 0`, `f(1) = 1`.
#[derive(Clone, Debug)]
pub struct StaircaseFunction {
    gaps: Vec<Gap>,
}

/// Assigns a level to every gap: enumerate gaps by decreasing length with
/// ties broken left to right, and give each gap the average of the levels of
/// the nearest already-enumerated gaps below and above it (the unbounded rays
/// below 0 and above 1 carry levels 0 and 1). On the middle-thirds set this
/// reproduces the classical Cantor function.
pub fn assign_levels(set: &PerfectSet) -> StaircaseFunction {
    let gaps = set.gaps();
    let mut order: Vec<usize> = (0..gaps.len()).collect();
    order.sort_by(|&i, &j| {
        let li = gaps[i].1 - gaps[i].0;
        let lj = gaps[j].1 - gaps[j].0;
        lj.total_cmp(&li).then(gaps[i].0.total_cmp(&gaps[j].0))
    });

    // Position index -> level, for the gaps assigned so far.
    let mut assigned: BTreeMap<usize, f64> = BTreeMap::new();
    let mut levels = vec![0.0f64; gaps.len()];
    for &idx in &order {
        let below = assigned.range(..idx).next_back().map(|(_, &v)| v).unwrap_or(0.0);
        let above = assigned.range(idx + 1..).next().map(|(_, &v)| v).unwrap_or(1.0);
        let level = 0.5 * (below + above);
        levels[idx] = level;
        assigned.insert(idx, level);
    }

    StaircaseFunction {
        gaps: gaps
            .iter()
            .zip(levels)
            .map(|(&(lo, hi), level)| Gap { lo, hi, level })
            .collect(),
    }
}

impl StaircaseFunction {
    pub fn levels(&self) -> impl Iterator<Item = f64> + '_ {
        self.gaps.iter().map(|g| g.level)
    }

    pub fn gap_level(&self, i: usize) -> f64 {
        self.gaps[i].level
    }

    /// Evaluates the staircase at `x` in `[0, 1]`: points of a gap get the
    /// gap level; points of the set get the linear interpolation between the
    /// surrounding gap levels (0 below the first gap, 1 above the last).
    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(0.0, 1.0);
        let i = self.gaps.partition_point(|g| g.hi <= x);
        if i < self.gaps.len() {
            let g = &self.gaps[i];
            if x > g.lo && x < g.hi {
                return g.level;
            }
        }
        // x is in the set: interpolate between the nearest gap below (its
        // right endpoint) and above (its left endpoint).
        let (a, fa) = if i == 0 { (0.0, 0.0) } else { (self.gaps[i - 1].hi, self.gaps[i - 1].level) };
        let (b, fb) = if i < self.gaps.len() {
            (self.gaps[i].lo, self.gaps[i].level)
        } else {
            (1.0, 1.0)
        };
        if b <= a {
            return fa;
        }
        let t = ((x - a) / (b - a)).clamp(0.0, 1.0);
        fa + (fb - fa) * t
    }
}

/// Evaluates a staircase function; see [`StaircaseFunction::eval`].
pub fn eval_staircase(f: &StaircaseFunction, x: f64) -> f64 {
    f.eval(x)
}

/// A continuous probability measure on `[0, 1]` whose support is the
/// represented set: the Lebesgue–Stieltjes measure of the staircase plus the
/// Lebesgue measure restricted to the set, normalized to total mass 1.
#[derive(Clone, Debug)]
pub struct SupportedMeasure {
    f: StaircaseFunction,
    /// Cumulative gap length strictly before gap i.
    gap_prefix: Vec<f64>,
    lambda_h: f64,
}

/// Builds the supported measure of a perfect set. Its CDF is
/// `(f(x) + λ([0, x] ∩ H)) / (1 + λ(H))`.
pub fn build_measure(set: &PerfectSet) -> SupportedMeasure {
    let f = assign_levels(set);
    let mut gap_prefix = Vec::with_capacity(f.gaps.len() + 1);
    let mut acc = 0.0;
    for g in &f.gaps {
        gap_prefix.push(acc);
        acc += g.hi - g.lo;
    }
    gap_prefix.push(acc);
    SupportedMeasure { f, gap_prefix, lambda_h: 1.0 - acc }
}

impl SupportedMeasure {
    pub fn staircase(&self) -> &StaircaseFunction {
        &self.f
    }

    pub fn lambda_h(&self) -> f64 {
        self.lambda_h
    }

    /// Lebesgue measure of `[0, x]` intersected with the set.
    fn lebesgue_below(&self, x: f64) -> f64 {
        let x = x.clamp(0.0, 1.0);
        let i = self.f.gaps.partition_point(|g| g.hi <= x);
        let mut covered = self.gap_prefix[i];
        if i < self.f.gaps.len() {
            let g = &self.f.gaps[i];
            if x > g.lo {
                covered += x - g.lo;
            }
        }
        x - covered
    }

    /// Cumulative distribution function on `[0, 1]`.
    pub fn cdf(&self, x: f64) -> f64 {
        (self.f.eval(x) + self.lebesgue_below(x)) / (1.0 + self.lambda_h)
    }

    /// Measure of the closed interval `[u, v]`.
    pub fn measure_of(&self, u: f64, v: f64) -> Result<f64> {
        if u.is_nan() || v.is_nan() || u > v || u < -1e-12 || v > 1.0 + 1e-12 {
            return Err(Error::InvalidInterval { lo: u, hi: v });
        }
        Ok(self.cdf(v) - self.cdf(u))
    }

    /// Largest CDF increment over a uniform grid with `n` cells; an upper
    /// bound proxy for the largest atom at that resolution.
    pub fn max_increment(&self, n: usize) -> f64 {
        let mut prev = self.cdf(0.0);
        let mut worst = 0.0f64;
        for k in 1..=n {
            let cur = self.cdf(k as f64 / n as f64);
            worst = worst.max(cur - prev);
            prev = cur;
        }
        worst
    }
}
