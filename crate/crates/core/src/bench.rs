//! Success-rate experiments over a grid of polygon sizes and point counts.

use std::fmt::Write as _;
use std::time::Instant;

use crate::generators::{generate_instance, trial_seed, GenConfig};
use crate::pipeline::embed_cycle;

pub const CSV_HEADER: &str = "m,n,trials,successes,ratio,mean_ms,seed";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentGrid {
    pub side_counts: Vec<usize>,
    pub point_counts: Vec<usize>,
    /// Polygons generated per (m, n) cell.
    pub cells: usize,
    pub seed: u64,
}

impl ExperimentGrid {
    /// Fixed n = 20, growing m.
    pub fn sides_sweep(seed: u64) -> ExperimentGrid {
        ExperimentGrid { side_counts: vec![5, 10, 15, 20, 25], point_counts: vec![20], cells: 25, seed }
    }

    /// Fixed 20-gon, growing n.
    pub fn points_sweep(seed: u64) -> ExperimentGrid {
        ExperimentGrid { side_counts: vec![20], point_counts: vec![5, 10, 15, 20, 25, 30], cells: 25, seed }
    }

    pub fn run(&self) -> Vec<CellResult> {
        let mut out = Vec::new();
        for &m in &self.side_counts {
            for &n in &self.point_counts {
                out.push(run_cell(m, n, self.cells, self.seed));
            }
        }
        out
    }
}

/// One instance of a cell.
#[derive(Clone, Debug, PartialEq)]
pub struct Trial {
    pub m: usize,
    pub n: usize,
    pub reflex: usize,
    pub success: bool,
    pub millis: f64,
}

impl Trial {
    /// The `r (n² m + n³)` cost model, with `r` floored at 1.
    pub fn cost_model(&self) -> f64 {
        let (m, n, r) = (self.m as f64, self.n as f64, self.reflex.max(1) as f64);
        r * (n * n * m + n * n * n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CellResult {
    pub m: usize,
    pub n: usize,
    /// Instances that were generated and embedded.
    pub trials: usize,
    pub successes: usize,
    /// Trials whose instance could not be generated.
    pub generation_failures: usize,
    pub seed: u64,
    pub runs: Vec<Trial>,
}

impl CellResult {
    pub fn ratio(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }

    pub fn mean_ms(&self) -> f64 {
        if self.runs.is_empty() {
            0.0
        } else {
            self.runs.iter().map(|t| t.millis).sum::<f64>() / self.runs.len() as f64
        }
    }
}

pub fn run_trial(m: usize, n: usize, seed: u64) -> Option<Trial> {
    let cfg = GenConfig::new(m, n, seed);
    let inst = match generate_instance(&cfg) {
        Ok(inst) => inst,
        Err(e) => {
            log::warn!("m={m} n={n} seed={seed}: {e}");
            return None;
        }
    };
    let reflex = inst.polygon.reflex_vertices().len();
    let start = Instant::now();
    let result = embed_cycle(&inst);
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let success = match result {
        Ok(r) => r.is_success(),
        Err(e) => {
            log::warn!("m={m} n={n} seed={seed}: {e}");
            false
        }
    };
    Some(Trial { m, n, reflex, success, millis })
}

pub fn run_cell(m: usize, n: usize, cells: usize, seed: u64) -> CellResult {
    let mut runs = Vec::with_capacity(cells);
    let mut generation_failures = 0;
    for t in 0..cells {
        match run_trial(m, n, trial_seed(seed, m, n, t)) {
            Some(trial) => runs.push(trial),
            None => generation_failures += 1,
        }
    }
    let successes = runs.iter().filter(|t| t.success).count();
    CellResult { m, n, trials: runs.len(), successes, generation_failures, seed, runs }
}

/// CSV with the fixed header. Wall-clock timing is the only
/// non-reproducible column; `timing = false` writes `NA` there.
pub fn to_csv(results: &[CellResult], timing: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_HEADER}");
    for c in results {
        let ms = if timing { format!("{:.3}", c.mean_ms()) } else { "NA".to_string() };
        let _ = writeln!(
            out,
            "{},{},{},{},{:.4},{},{}",
            c.m,
            c.n,
            c.trials,
            c.successes,
            c.ratio(),
            ms,
            c.seed
        );
    }
    out
}

/// Least-squares slope of `ln y` against `ln x` over positive pairs.
pub fn loglog_slope(samples: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Counts adjacent pairs that break a non-increasing (or, with
/// `increasing`, non-decreasing) trend, and the largest such break.
pub fn trend_inversions(ratios: &[f64], increasing: bool) -> (usize, f64) {
    let mut count = 0;
    let mut worst = 0.0f64;
    for w in ratios.windows(2) {
        let step = if increasing { w[0] - w[1] } else { w[1] - w[0] };
        if step > 0.0 {
            count += 1;
            worst = worst.max(step);
        }
    }
    (count, worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_is_header_only() {
        let grid = ExperimentGrid { side_counts: vec![], point_counts: vec![20], cells: 25, seed: 1 };
        assert_eq!(to_csv(&grid.run(), true), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn slope_of_power_law() {
        let s: Vec<(f64, f64)> = (1..10).map(|i| (i as f64, 3.0 * (i as f64).powf(1.5))).collect();
        assert!((loglog_slope(&s).unwrap() - 1.5).abs() < 1e-9);
        assert_eq!(loglog_slope(&[(1.0, 1.0)]), None);
    }

    #[test]
    fn inversions() {
        assert_eq!(trend_inversions(&[1.0, 0.8, 0.8, 0.5], false), (0, 0.0));
        let (c, w) = trend_inversions(&[1.0, 0.8, 0.84, 0.5], false);
        assert_eq!(c, 1);
        assert!((w - 0.04).abs() < 1e-12);
        assert_eq!(trend_inversions(&[0.1, 0.3, 0.9], true), (0, 0.0));
    }

    #[test]
    fn small_cell_is_reproducible() {
        let a = run_cell(5, 5, 3, 11);
        let b = run_cell(5, 5, 3, 11);
        assert_eq!(a.trials + a.generation_failures, 3);
        assert_eq!(to_csv(&[a], false), to_csv(&[b], false));
    }
}
