//! Independent checks on candidate cycles, and an exhaustive oracle.
//!
//! Nothing here looks at the decomposition or the connection search; only
//! the instance and the geometric predicates are used.

use thiserror::Error;

use crate::geometry::{segments_conflict, Location, Point, Segment};
use crate::pipeline::Instance;

pub const DEFAULT_ORACLE_CAP: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    WrongLength { expected: usize, got: usize },
    UnknownPoint(usize),
    RepeatedPoint(usize),
    MissingPoint(usize),
    PointNotInside(usize),
    /// Cycle edge with coincident endpoints, by position in the cycle.
    DegenerateEdge(usize),
    /// Two cycle edges conflict; edge `i` runs from `cycle[i]` to `cycle[i + 1]`.
    EdgeConflict(usize, usize),
    /// Cycle edge `edge` touches polygon side `side`.
    SideContact { edge: usize, side: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub is_hamiltonian: bool,
    pub is_simple: bool,
    pub inside_polygon: bool,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.is_hamiltonian && self.is_simple && self.inside_polygon && self.violations.is_empty()
    }
}

/// Full exact check of `cycle` (point ids in order) against `inst`.
pub fn validate_cycle(inst: &Instance, cycle: &[usize]) -> ValidityReport {
    let n = inst.points.len();
    let mut violations = Vec::new();

    if cycle.len() != n {
        violations.push(Violation::WrongLength { expected: n, got: cycle.len() });
    }
    let mut seen = vec![false; n];
    for &p in cycle {
        if p >= n {
            violations.push(Violation::UnknownPoint(p));
        } else if std::mem::replace(&mut seen[p], true) {
            violations.push(Violation::RepeatedPoint(p));
        }
    }
    violations.extend((0..n).filter(|&p| !seen[p]).map(Violation::MissingPoint));
    let is_hamiltonian = violations.is_empty() && n >= 3;
    if !is_hamiltonian {
        if n < 3 && violations.is_empty() {
            violations.push(Violation::WrongLength { expected: 3, got: n });
        }
        return ValidityReport { is_hamiltonian, is_simple: false, inside_polygon: false, violations };
    }

    let mut inside_polygon = true;
    for (i, p) in inst.points.iter().enumerate() {
        if inst.polygon.locate(p) != Location::Inside {
            inside_polygon = false;
            violations.push(Violation::PointNotInside(i));
        }
    }

    let k = cycle.len();
    let mut segments: Vec<Option<Segment>> = Vec::with_capacity(k);
    let mut is_simple = true;
    for i in 0..k {
        let s = Segment::new(inst.points[cycle[i]], inst.points[cycle[(i + 1) % k]]).ok();
        if s.is_none() {
            is_simple = false;
            violations.push(Violation::DegenerateEdge(i));
        }
        segments.push(s);
    }

    for i in 0..k {
        let Some(a) = &segments[i] else { continue };
        for (j, b) in segments.iter().enumerate().skip(i + 1) {
            let Some(b) = b else { continue };
            let adjacent = j == i + 1 || (i == 0 && j == k - 1);
            if segments_conflict(a, b, adjacent) {
                is_simple = false;
                violations.push(Violation::EdgeConflict(i, j));
            }
        }
        for (side, s) in inst.polygon.sides().enumerate() {
            if segments_conflict(a, &s, false) {
                inside_polygon = false;
                violations.push(Violation::SideContact { edge: i, side });
            }
        }
    }

    ValidityReport { is_hamiltonian, is_simple, inside_polygon, violations }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n} points exceed the oracle cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
}

/// Exhaustive search for any valid cycle. Returns the lexicographically
/// smallest witness starting at point 0, or `None` if there is none.
pub fn brute_force_exists(inst: &Instance, cap: usize) -> Result<Option<Vec<usize>>, OracleError> {
    let n = inst.points.len();
    if n > cap {
        return Err(OracleError::InstanceTooLarge { n, cap });
    }
    if n < 3 {
        return Ok(None);
    }
    let pts: &[Point] = &inst.points;
    let sides: Vec<Segment> = inst.polygon.sides().collect();

    let id = |a: usize, b: usize| a.min(b) * n + a.max(b);
    let mut segment: Vec<Option<Segment>> = vec![None; n * n];
    for a in 0..n {
        for b in a + 1..n {
            if let Ok(s) = Segment::new(pts[a], pts[b]) {
                if !sides.iter().any(|q| segments_conflict(&s, q, false)) {
                    segment[id(a, b)] = Some(s);
                }
            }
        }
    }
    // conflict[e * n² + f] for usable edges e, f.
    let nn = n * n;
    let mut conflict = vec![false; nn * nn];
    for e in 0..nn {
        let Some(se) = &segment[e] else { continue };
        for f in 0..nn {
            let Some(sf) = &segment[f] else { continue };
            if e == f {
                conflict[e * nn + f] = true;
                continue;
            }
            let shares = se.has_endpoint(&sf.a) || se.has_endpoint(&sf.b);
            conflict[e * nn + f] = segments_conflict(se, sf, shares);
        }
    }

    struct Search<'a> {
        n: usize,
        nn: usize,
        segment: &'a [Option<Segment>],
        conflict: &'a [bool],
        path: Vec<usize>,
        used: Vec<bool>,
        edges: Vec<usize>,
    }

    impl Search<'_> {
        fn id(&self, a: usize, b: usize) -> usize {
            a.min(b) * self.n + a.max(b)
        }

        fn fits(&self, e: usize) -> bool {
            self.segment[e].is_some() && self.edges.iter().all(|&f| !self.conflict[e * self.nn + f])
        }

        fn run(&mut self) -> bool {
            let last = *self.path.last().unwrap();
            if self.path.len() == self.n {
                if self.path[1] > self.path[self.n - 1] {
                    return false;
                }
                let close = self.id(last, 0);
                return self.fits(close);
            }
            for next in 1..self.n {
                if self.used[next] {
                    continue;
                }
                let e = self.id(last, next);
                if !self.fits(e) {
                    continue;
                }
                self.used[next] = true;
                self.path.push(next);
                self.edges.push(e);
                if self.run() {
                    return true;
                }
                self.edges.pop();
                self.path.pop();
                self.used[next] = false;
            }
            false
        }
    }

    let mut search = Search {
        n,
        nn,
        segment: &segment,
        conflict: &conflict,
        path: vec![0],
        used: vec![false; n],
        edges: Vec::with_capacity(n),
    };
    search.used[0] = true;
    if search.run() {
        let witness = search.path;
        debug_assert!(validate_cycle(inst, &witness).is_valid());
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}
