//! Seeded trial execution, probability estimates and threshold localization.
//!
//! Trial `i` always draws its points from `trial_seed(master_seed, i)` and
//! results are collected in trial order, so every output is independent of
//! the size of the rayon pool it runs in.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detectors::{count_crossings, evaluate, Direction, Outcome, Property};
use crate::error::{Error, Result};
use crate::geometry::{Metric, TORUS_MAX_SEGMENT};
use crate::graph::{generate, GraphConfig, RggGraph};
use crate::rng::trial_seed;

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959963984540054;

/// Largest tolerated share of Unknown verdicts in a sweep or threshold probe.
pub const MAX_UNKNOWN_RATE: f64 = 0.10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub r: f64,
    pub metric: Metric,
    pub property: Property,
    pub trials: usize,
    pub successes: usize,
    pub p_hat: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub unknown_count: usize,
    pub master_seed: u64,
}

impl SweepRow {
    fn from_outcomes(
        n: usize,
        r: f64,
        metric: Metric,
        property: Property,
        master_seed: u64,
        outcomes: &[Outcome],
    ) -> Self {
        let successes = outcomes.iter().filter(|&&o| o == Outcome::Yes).count();
        let unknown_count = outcomes.iter().filter(|&&o| o == Outcome::Unknown).count();
        let decided = outcomes.len() - unknown_count;
        let (p_hat, ci_lo, ci_hi) = wilson_interval(successes, decided, Z_95);
        SweepRow {
            n,
            r,
            metric,
            property,
            trials: outcomes.len(),
            successes,
            p_hat,
            ci_lo,
            ci_hi,
            unknown_count,
            master_seed,
        }
    }

    pub fn failures(&self) -> usize {
        self.trials - self.successes - self.unknown_count
    }

    pub fn unknown_rate(&self) -> f64 {
        self.unknown_count as f64 / self.trials.max(1) as f64
    }
}

/// `(p_hat, lo, hi)` of the Wilson score interval. With no trials the
/// estimate is 0 and the interval is `[0, 1]`.
pub fn wilson_interval(successes: usize, trials: usize, z: f64) -> (f64, f64, f64) {
    if trials == 0 {
        return (0.0, 0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let lo = (center - half).clamp(0.0, p);
    let hi = (center + half).clamp(p, 1.0);
    (p, lo, hi)
}

fn validate_trials(n: usize, trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::InvalidConfig("n must be at least 1".into()));
    }
    Ok(())
}

/// Runs `f` on `trials` independent graphs, results in trial order.
pub fn run_trials<T, F>(n: usize, r: f64, metric: Metric, trials: usize, master_seed: u64, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&RggGraph, usize) -> Result<T> + Sync,
{
    validate_trials(n, trials)?;
    GraphConfig::new(n, r, metric, 0).validate()?;
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let g = generate(&GraphConfig::new(n, r, metric, trial_seed(master_seed, i as u64)))?;
            f(&g, i)
        })
        .collect()
}

/// Empirical probability of `property` at radius `r`.
pub fn estimate(
    n: usize,
    r: f64,
    metric: Metric,
    property: Property,
    trials: usize,
    master_seed: u64,
) -> Result<SweepRow> {
    let outcomes = run_trials(n, r, metric, trials, master_seed, |g, _| {
        Ok(evaluate(g, property)?.outcome())
    })?;
    Ok(SweepRow::from_outcomes(n, r, metric, property, master_seed, &outcomes))
}

/// One row per radius. Each trial's point set is shared by all radii.
pub fn sweep(
    n: usize,
    metric: Metric,
    property: Property,
    r_grid: &[f64],
    trials: usize,
    master_seed: u64,
) -> Result<Vec<SweepRow>> {
    if r_grid.is_empty() {
        return Ok(Vec::new());
    }
    validate_trials(n, trials)?;
    for &r in r_grid {
        GraphConfig::new(n, r, metric, 0).validate()?;
    }
    let per_trial: Vec<Vec<Outcome>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let g = generate(&GraphConfig::new(
                n,
                r_grid[0],
                metric,
                trial_seed(master_seed, i as u64),
            ))?;
            r_grid
                .iter()
                .map(|&r| Ok(evaluate(&g.with_radius(r)?, property)?.outcome()))
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(r_grid.len());
    for (j, &r) in r_grid.iter().enumerate() {
        let outcomes: Vec<Outcome> = per_trial.iter().map(|t| t[j]).collect();
        let row = SweepRow::from_outcomes(n, r, metric, property, master_seed, &outcomes);
        check_unknown_rate(&row)?;
        rows.push(row);
    }
    Ok(rows)
}

fn check_unknown_rate(row: &SweepRow) -> Result<()> {
    if row.unknown_rate() > MAX_UNKNOWN_RATE {
        return Err(Error::UnknownRateExceeded {
            r: row.r,
            rate: row.unknown_rate(),
        });
    }
    Ok(())
}

/// `count` radii evenly spaced in `ln r`, from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let mut grid: Vec<f64> = (0..count)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (count.max(2) - 1) as f64).exp())
        .collect();
    if let Some(first) = grid.first_mut() {
        *first = lo;
    }
    if count > 1 {
        grid[count - 1] = hi;
    }
    grid
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdQuery {
    pub n: usize,
    pub metric: Metric,
    pub property: Property,
    pub target_p: f64,
    pub trials_per_probe: usize,
    /// Stop once `r_hi - r_lo <= tolerance * r_star`.
    pub tolerance: f64,
    pub master_seed: u64,
    /// Initial bracket; defaults to [`default_bracket`].
    pub bracket: Option<(f64, f64)>,
}

impl ThresholdQuery {
    pub fn new(n: usize, metric: Metric, property: Property, trials_per_probe: usize, master_seed: u64) -> Self {
        ThresholdQuery {
            n,
            metric,
            property,
            target_p: 0.5,
            trials_per_probe,
            tolerance: 0.02,
            master_seed,
            bracket: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Probe {
    pub r: f64,
    pub p_hat: f64,
    pub successes: usize,
    pub unknown: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdEstimate {
    pub n: usize,
    pub property: Property,
    pub r_star: f64,
    pub bracket: (f64, f64),
    pub trials_per_probe: usize,
    pub metric: Metric,
    pub target_p: f64,
    pub tolerance: f64,
    pub master_seed: u64,
    pub probes: Vec<Probe>,
}

/// Largest radius accepted for `metric`.
pub fn max_radius(metric: Metric) -> f64 {
    match metric {
        Metric::Square => std::f64::consts::SQRT_2,
        Metric::Torus => TORUS_MAX_SEGMENT * (1.0 - 1e-9),
    }
}

/// A factor-10 band around the predicted threshold scale `n^e`; for
/// independent sets, around the scale `1/sqrt(k)`.
pub fn default_bracket(n: usize, metric: Metric, property: Property) -> (f64, f64) {
    let center = match (property.predicted_exponent(), property) {
        (Some(e), _) => (n as f64).powf(e),
        (None, Property::IndependentK(k)) => 1.0 / (k as f64).sqrt(),
        (None, _) => 1.0 / (n as f64).sqrt(),
    };
    let cap = max_radius(metric);
    ((center / 10.0).min(cap / 2.0), (center * 10.0).min(cap))
}

/// Bisection on `ln r` for the radius where the success probability crosses
/// `target_p`.
pub fn locate_threshold(q: &ThresholdQuery) -> Result<ThresholdEstimate> {
    let direction = q.property.direction().ok_or(Error::NonMonotoneProperty(q.property))?;
    if !(q.target_p > 0.0 && q.target_p < 1.0 && q.tolerance > 0.0) {
        return Err(Error::InvalidConfig(
            "target_p must be in (0,1) and tolerance > 0".into(),
        ));
    }
    let (mut lo, mut hi) = q.bracket.unwrap_or_else(|| default_bracket(q.n, q.metric, q.property));
    if !(lo > 0.0 && lo < hi) {
        return Err(Error::InvalidConfig(format!("invalid bracket [{lo}, {hi}]")));
    }
    let mut probes = Vec::new();
    let mut probe = |r: f64| -> Result<f64> {
        let row = estimate(q.n, r, q.metric, q.property, q.trials_per_probe, q.master_seed)?;
        check_unknown_rate(&row)?;
        probes.push(Probe {
            r,
            p_hat: row.p_hat,
            successes: row.successes,
            unknown: row.unknown_count,
        });
        Ok(row.p_hat)
    };
    // Oriented so that "reached" is the large-r side for both directions.
    let reached = |p: f64| match direction {
        Direction::Increasing => p >= q.target_p,
        Direction::Decreasing => p < q.target_p,
    };
    let (p_lo, p_hi) = (probe(lo)?, probe(hi)?);
    if reached(p_lo) || !reached(p_hi) {
        return Err(Error::BracketNotFound {
            r_lo: lo,
            r_hi: hi,
            p_lo,
            p_hi,
            target: q.target_p,
        });
    }
    for _ in 0..200 {
        if hi - lo <= q.tolerance * (lo * hi).sqrt() {
            break;
        }
        let mid = (lo * hi).sqrt();
        if reached(probe(mid)?) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(ThresholdEstimate {
        n: q.n,
        property: q.property,
        r_star: (lo * hi).sqrt(),
        bracket: (lo, hi),
        trials_per_probe: q.trials_per_probe,
        metric: q.metric,
        target_p: q.target_p,
        tolerance: q.tolerance,
        master_seed: q.master_seed,
        probes,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentFit {
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    pub stderr_slope: f64,
}

/// Least squares of `ln r_star` on `ln n`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Result<ExponentFit> {
    if points
        .iter()
        .any(|&(n, r)| !(n > 0.0 && r > 0.0 && n.is_finite() && r.is_finite()))
    {
        return Err(Error::InvalidConfig(
            "fit points need positive finite n and r_star".into(),
        ));
    }
    let mut ns: Vec<f64> = points.iter().map(|p| p.0).collect();
    ns.sort_by(f64::total_cmp);
    ns.dedup();
    if ns.len() < 3 {
        return Err(Error::InsufficientPoints { got: ns.len() });
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let k = points.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ssr: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum();
    let stderr_slope = (ssr / (k - 2.0) / sxx).sqrt();
    Ok(ExponentFit {
        points: points.to_vec(),
        slope,
        intercept,
        stderr_slope,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingMoments {
    pub mean: f64,
    /// Sample variance (divisor `trials - 1`; 0 for a single trial).
    pub variance: f64,
}

pub fn crossing_moments(n: usize, r: f64, metric: Metric, trials: usize, master_seed: u64) -> Result<CrossingMoments> {
    let counts = run_trials(n, r, metric, trials, master_seed, |g, _| Ok(count_crossings(g) as f64))?;
    let k = counts.len() as f64;
    let mean = counts.iter().sum::<f64>() / k;
    let variance = if counts.len() > 1 {
        counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (k - 1.0)
    } else {
        0.0
    };
    Ok(CrossingMoments { mean, variance })
}
