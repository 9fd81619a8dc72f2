//! The full embedding: partition, tour, per-piece rings, connections, merge.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::connection::{traverse, ConnectionEdge, ConnectionEvent, ConnectionState, Obstacles, PairState};
use crate::embedding::{assign_points, piece_cycle, CycleKind, EmbeddingError, EmbeddingWarning, PieceAssignment, PieceCycle};
use crate::geometry::{check_general_position, GeneralPositionReport, Location, Point, SimplePolygon};
use crate::partition::{convex_partition, dual_tree, euler_tour, Decomposition, DualTree, EulerTour, PartitionError};
use crate::verify::validate_cycle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("point {0} is not strictly inside the polygon")]
    PointNotInside(usize),
    #[error("a cycle needs at least 3 points, got {0}")]
    DegenerateInstance(usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// A polygon and the points to join, all strictly inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub polygon: SimplePolygon,
    pub points: Vec<Point>,
    pub name: Option<String>,
    pub seed: Option<u64>,
    pub report: GeneralPositionReport,
}

impl Instance {
    pub fn new(polygon: SimplePolygon, points: Vec<Point>) -> Result<Instance, PipelineError> {
        if let Some(i) = points.iter().position(|p| polygon.locate(p) != Location::Inside) {
            return Err(PipelineError::PointNotInside(i));
        }
        let report = check_general_position(&points, &polygon);
        Ok(Instance { polygon, points, name: None, seed: None, report })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Instance {
        self.name = Some(name.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Instance {
        self.seed = Some(seed);
        self
    }

    pub fn m(&self) -> usize {
        self.polygon.len()
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// No admissible segment at all between the two pieces.
    NoConnectionEdge(usize, usize),
    /// A lone point was saturated and no piece further on could take over.
    SaturationDeadEnd,
    /// The pair got one connection edge but never a second.
    NoSecondEdge(usize, usize),
    /// The merged graph has a vertex of degree other than 2 or several components.
    DisconnectedOutput,
    /// The merged graph is a single cycle but the validator rejects it.
    InvalidGeometry,
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FailureReason::NoConnectionEdge(a, b) => write!(f, "NoConnectionEdge({a},{b})"),
            FailureReason::SaturationDeadEnd => write!(f, "SaturationDeadEnd"),
            FailureReason::NoSecondEdge(a, b) => write!(f, "NoSecondEdge({a},{b})"),
            FailureReason::DisconnectedOutput => write!(f, "DisconnectedOutput"),
            FailureReason::InvalidGeometry => write!(f, "InvalidGeometry"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Point ids in cycle order, starting at point 0.
    Success(Vec<usize>),
    Failure(FailureReason),
}

/// Everything built along the way, kept for rendering and diagnosis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub decomposition: Decomposition,
    pub dual: DualTree,
    pub tour: EulerTour,
    pub assignment: PieceAssignment,
    pub cycles: Vec<PieceCycle>,
    pub connections: ConnectionState,
    /// Edges of the merged graph as sorted point-id pairs.
    pub edges: Vec<(usize, usize)>,
    pub warnings: Vec<EmbeddingWarning>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub outcome: Outcome,
    pub structure: Structure,
}

impl EmbeddingResult {
    pub fn is_success(&self) -> bool {
        matches!(self.outcome, Outcome::Success(_))
    }

    pub fn cycle(&self) -> Option<&[usize]> {
        match &self.outcome {
            Outcome::Success(c) => Some(c),
            Outcome::Failure(_) => None,
        }
    }
}

fn sorted(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Union of ring edges and connection edges, minus the ring edge between
/// the two endpoints of every doubly connected pair in pieces with at
/// least three points.
pub fn merge(cycles: &[PieceCycle], st: &ConnectionState) -> Vec<(usize, usize)> {
    let mut edges: BTreeSet<(usize, usize)> = cycles
        .iter()
        .flat_map(|c| c.ring_edges())
        .map(|(a, b)| sorted(a, b))
        .collect();
    for (_, state) in st.pairs() {
        if let PairState::Two(e1, e2) = state {
            for piece in [e1.from.piece, e1.to.piece] {
                let c = &cycles[piece];
                if c.kind() != CycleKind::Cycle {
                    continue;
                }
                let (a, b) = (e1.point_in(piece), e2.point_in(piece));
                if let (Some(a), Some(b)) = (a, b) {
                    if c.are_ring_adjacent(a, b) {
                        edges.remove(&sorted(a, b));
                    }
                }
            }
        }
    }
    edges.extend(st.accepted().iter().map(|e: &ConnectionEdge| sorted(e.from.point, e.to.point)));
    edges.into_iter().collect()
}

/// Reads a Hamiltonian cycle out of an edge list: every vertex of degree 2
/// and one component. Starts at point 0 toward its smaller neighbour.
pub fn cycle_from_edges(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    if n < 3 || edges.len() != n {
        return None;
    }
    let mut adj = vec![Vec::with_capacity(2); n];
    for &(a, b) in edges {
        if a == b {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    if adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let (mut prev, mut cur) = (0, adj[0][0].min(adj[0][1]));
    order.push(0);
    while cur != 0 {
        if order.len() == n {
            return None;
        }
        order.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

fn diagnose(st: &ConnectionState) -> Option<FailureReason> {
    let pairs: Vec<_> = st.pairs().collect();
    if let Some((&(a, b), _)) = pairs.iter().find(|(_, s)| **s == PairState::Failed) {
        return Some(FailureReason::NoConnectionEdge(a, b));
    }
    if st
        .events
        .iter()
        .any(|e| matches!(e, ConnectionEvent::SaturationDeadEnd { .. }))
    {
        return Some(FailureReason::SaturationDeadEnd);
    }
    pairs
        .iter()
        .find(|(_, s)| matches!(s, PairState::One(_)))
        .map(|(&(a, b), _)| FailureReason::NoSecondEdge(a, b))
}

/// Runs the whole heuristic. Success is reported only when the independent
/// validator accepts the merged cycle.
pub fn embed_cycle(inst: &Instance) -> Result<EmbeddingResult, PipelineError> {
    let n = inst.n();
    if n < 3 {
        return Err(PipelineError::DegenerateInstance(n));
    }
    let decomposition = convex_partition(&inst.polygon)?;
    let dual = dual_tree(&decomposition);
    let assignment = assign_points(&decomposition, &inst.points)?;
    let mut warnings = assignment.warnings.clone();

    let mut cycles = Vec::with_capacity(decomposition.piece_count());
    for (piece, ids) in assignment.sets.iter().enumerate() {
        let (c, w) = piece_cycle(piece, ids, &inst.points);
        warnings.extend(w);
        cycles.push(c);
    }

    let root = if decomposition.piece_count() == 1 {
        0
    } else {
        let smallest = (0..n).min_by(|&a, &b| inst.points[a].cmp(&inst.points[b])).unwrap();
        assignment.piece_of(smallest).expect("every point is assigned")
    };
    let tour = euler_tour(&dual, root)?;

    let mut connections = ConnectionState::new(n);
    if decomposition.piece_count() > 1 {
        let ctx = Obstacles::new(&inst.polygon, &inst.points, &cycles);
        traverse(&tour, &mut connections, &ctx);
    }
    let edges = merge(&cycles, &connections);

    let outcome = match cycle_from_edges(n, &edges) {
        Some(cycle) if validate_cycle(inst, &cycle).is_valid() => Outcome::Success(cycle),
        Some(_) => Outcome::Failure(diagnose(&connections).unwrap_or(FailureReason::InvalidGeometry)),
        None => Outcome::Failure(diagnose(&connections).unwrap_or(FailureReason::DisconnectedOutput)),
    };
    log::debug!("embed: m={} n={} pieces={} outcome={:?}", inst.m(), n, decomposition.piece_count(), outcome);

    Ok(EmbeddingResult {
        outcome,
        structure: Structure {
            decomposition,
            dual,
            tour,
            assignment,
            cycles,
            connections,
            edges,
            warnings,
        },
    })
}
