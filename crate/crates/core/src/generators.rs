//! Seeded random instances: simple polygons, convex polygons and interior
//! point sets in general position.
//!
//! Randomness comes from SplitMix64 so that a seed reproduces the same
//! instance on every platform.

use std::cmp::Ordering;

use thiserror::Error;

use crate::geometry::{first_side_conflict, orient, validate_simple_polygon, Location, Orientation, Point, SimplePolygon};
use crate::pipeline::Instance;

/// Interior point coordinates are multiples of `1 / POINT_DENOMINATOR`.
pub const POINT_DENOMINATOR: i64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("gave up generating {what} after {attempts} attempts")]
    GenerationExhausted { what: &'static str, attempts: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// SplitMix64 (Steele, Lea and Flood).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Uniform in `0..bound` by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi as i128 - lo as i128 + 1) as u64;
        (lo as i128 + self.below(span) as i128) as i64
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of one trial of a bench cell.
pub fn trial_seed(seed: u64, m: usize, n: usize, trial: usize) -> u64 {
    [m as u64, n as u64, trial as u64]
        .into_iter()
        .fold(mix64(seed), |h, v| mix64(h ^ v.wrapping_add(0x9E37_79B9_7F4A_7C15)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    /// Polygon vertices lie in `[0, extent]²`; defaults to `10 m`.
    pub extent: Option<i64>,
    pub attempts: usize,
}

impl GenConfig {
    pub fn new(m: usize, n: usize, seed: u64) -> GenConfig {
        GenConfig { m, n, seed, extent: None, attempts: 1000 }
    }

    pub fn extent(&self) -> i64 {
        self.extent.unwrap_or(10 * self.m as i64)
    }

    fn check(&self) -> Result<(), GenError> {
        if self.m < 3 {
            return Err(GenError::InvalidConfig(format!("m = {} < 3", self.m)));
        }
        let extent = self.extent();
        if extent < 2 || ((extent + 1) as u128).pow(2) < 2 * self.m as u128 {
            return Err(GenError::InvalidConfig(format!("extent {extent} is too small for m = {}", self.m)));
        }
        Ok(())
    }
}

fn collinear_with_any(points: &[Point], p: &Point) -> bool {
    let k = points.len();
    (0..k).any(|i| (i + 1..k).any(|j| orient(&points[i], &points[j], p) == Orientation::Collinear))
}

/// `m` distinct lattice points, no three collinear.
fn lattice_points(rng: &mut SplitMix64, m: usize, extent: i64, attempts: usize) -> Option<Vec<Point>> {
    let mut out: Vec<Point> = Vec::with_capacity(m);
    let mut budget = attempts.saturating_mul(m.max(1));
    while out.len() < m {
        if budget == 0 {
            return None;
        }
        budget -= 1;
        let p = Point::new(rng.range(0, extent), rng.range(0, extent));
        if !out.contains(&p) && !collinear_with_any(&out, &p) {
            out.push(p);
        }
    }
    Some(out)
}

/// Random lattice points untangled by 2-opt moves into a simple polygon.
pub fn random_simple_polygon(cfg: &GenConfig) -> Result<SimplePolygon, GenError> {
    cfg.check()?;
    let mut rng = SplitMix64::new(cfg.seed);
    for _ in 0..cfg.attempts.max(1) {
        let Some(mut ring) = lattice_points(&mut rng, cfg.m, cfg.extent(), cfg.attempts) else {
            continue;
        };
        // Each reversal strictly shortens the ring, so this terminates; the
        // cap only guards against a bug.
        let mut moves = 0usize;
        while let Some((i, j)) = first_side_conflict(&ring) {
            ring[i + 1..=j].reverse();
            moves += 1;
            if moves > cfg.m.pow(3) + 1000 {
                break;
            }
        }
        if let Ok(p) = validate_simple_polygon(ring) {
            return Ok(p);
        }
    }
    Err(GenError::GenerationExhausted { what: "simple polygon", attempts: cfg.attempts })
}

fn half(v: &(i64, i64)) -> bool {
    v.1 < 0 || (v.1 == 0 && v.0 < 0)
}

fn by_angle(a: &(i64, i64), b: &(i64, i64)) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

/// Splits sorted distinct values into two monotone chains from min to max
/// and returns the edge-vector components, which sum to zero.
fn chain_components(rng: &mut SplitMix64, mut values: Vec<i64>) -> Vec<i64> {
    values.sort_unstable();
    let (lo, hi) = (values[0], values[values.len() - 1]);
    let (mut last_a, mut last_b) = (lo, lo);
    let mut out = Vec::with_capacity(values.len());
    for &v in &values[1..values.len() - 1] {
        if rng.below(2) == 0 {
            out.push(v - last_a);
            last_a = v;
        } else {
            out.push(last_b - v);
            last_b = v;
        }
    }
    out.push(hi - last_a);
    out.push(last_b - hi);
    out
}

/// Random convex lattice polygon with exactly `m` vertices, by Valtr's
/// construction: random edge vectors summing to zero, sorted by angle.
pub fn random_convex_polygon(cfg: &GenConfig) -> Result<SimplePolygon, GenError> {
    cfg.check()?;
    let mut rng = SplitMix64::new(cfg.seed ^ 0xC0DE_C0DE_C0DE_C0DE);
    let extent = cfg.extent();
    let distinct = |rng: &mut SplitMix64| -> Option<Vec<i64>> {
        let mut v: Vec<i64> = Vec::with_capacity(cfg.m);
        for _ in 0..cfg.attempts.saturating_mul(cfg.m) {
            if v.len() == cfg.m {
                break;
            }
            let x = rng.range(0, extent);
            if !v.contains(&x) {
                v.push(x);
            }
        }
        (v.len() == cfg.m).then_some(v)
    };
    for _ in 0..cfg.attempts.max(1) {
        let (Some(xs), Some(ys)) = (distinct(&mut rng), distinct(&mut rng)) else {
            continue;
        };
        let dx = chain_components(&mut rng, xs);
        let mut dy = chain_components(&mut rng, ys);
        rng.shuffle(&mut dy);
        let mut vectors: Vec<(i64, i64)> = dx.into_iter().zip(dy).collect();
        if vectors.contains(&(0, 0)) {
            continue;
        }
        vectors.sort_by(by_angle);
        let (mut x, mut y) = (0i64, 0i64);
        let mut ring = Vec::with_capacity(cfg.m);
        for (vx, vy) in vectors {
            ring.push((x, y));
            x += vx;
            y += vy;
        }
        let min_x = ring.iter().map(|p| p.0).min().unwrap();
        let min_y = ring.iter().map(|p| p.1).min().unwrap();
        let ring: Vec<Point> = ring.iter().map(|&(x, y)| Point::new(x - min_x, y - min_y)).collect();
        if let Ok(p) = validate_simple_polygon(ring) {
            if p.is_convex() {
                return Ok(p);
            }
        }
    }
    Err(GenError::GenerationExhausted { what: "convex polygon", attempts: cfg.attempts })
}

/// `n` points strictly inside `polygon` on the `1/16` lattice, with
/// distinct x-coordinates and no three collinear.
pub fn random_interior_points(polygon: &SimplePolygon, cfg: &GenConfig) -> Result<Vec<Point>, GenError> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x05EE_D0FA_1190_1475);
    let (lo, hi) = polygon.bounding_box();
    let d = POINT_DENOMINATOR;
    let scaled = |v: num_rational::Rational64, up: bool| {
        let s = v * d;
        if up { s.ceil().to_integer() } else { s.floor().to_integer() }
    };
    let (x0, x1) = (scaled(lo.x(), false), scaled(hi.x(), true));
    let (y0, y1) = (scaled(lo.y(), false), scaled(hi.y(), true));

    let mut out: Vec<Point> = Vec::with_capacity(cfg.n);
    let mut budget = cfg.attempts.saturating_mul(cfg.n.max(1)).saturating_mul(10);
    while out.len() < cfg.n {
        if budget == 0 {
            return Err(GenError::GenerationExhausted { what: "interior points", attempts: cfg.attempts });
        }
        budget -= 1;
        let Ok(p) = Point::with_denominator(rng.range(x0, x1), rng.range(y0, y1), d) else {
            continue;
        };
        if polygon.locate(&p) != Location::Inside
            || out.iter().any(|q| q.cmp_x(&p) == Ordering::Equal)
            || collinear_with_any(&out, &p)
        {
            continue;
        }
        out.push(p);
    }
    Ok(out)
}

/// Polygon and points from one configuration.
pub fn generate_instance(cfg: &GenConfig) -> Result<Instance, GenError> {
    let polygon = random_simple_polygon(cfg)?;
    let points = random_interior_points(&polygon, cfg)?;
    let inst = Instance::new(polygon, points).expect("generated points lie inside");
    Ok(inst.with_name(format!("random-m{}-n{}", cfg.m, cfg.n)).with_seed(cfg.seed))
}

/// Convex polygon and points from one configuration.
pub fn generate_convex_instance(cfg: &GenConfig) -> Result<Instance, GenError> {
    let polygon = random_convex_polygon(cfg)?;
    let points = random_interior_points(&polygon, cfg)?;
    let inst = Instance::new(polygon, points).expect("generated points lie inside");
    Ok(inst.with_name(format!("convex-m{}-n{}", cfg.m, cfg.n)).with_seed(cfg.seed))
}
