//! Connection edges between the embedded structures of two pieces.
//!
//! A connection edge joins a point of one piece to a point of another and
//! must not touch the polygon boundary, either piece's ring, or any edge
//! accepted earlier. Each unordered piece pair gets at most two; the second
//! is searched among ring neighbours of the first edge's endpoints so that
//! the ring edge between them can be dropped when the rings are merged.
//!
//! The search state is memoized per piece pair. A pair whose first search
//! came up empty is never searched again.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::embedding::{CycleKind, PieceCycle};
use crate::geometry::{segment_conflicts_polygon, segments_conflict, Point, Segment, SimplePolygon};
use crate::partition::EulerTour;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub piece: usize,
    pub point: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConnectionEdge {
    pub from: Endpoint,
    pub to: Endpoint,
    pub segment: Segment,
}

impl ConnectionEdge {
    fn new(from: Endpoint, to: Endpoint, coords: &[Point]) -> ConnectionEdge {
        ConnectionEdge {
            from,
            to,
            segment: Segment::between(coords[from.point], coords[to.point]),
        }
    }

    /// Endpoint point id inside `piece`, if the edge touches it.
    pub fn point_in(&self, piece: usize) -> Option<usize> {
        if self.from.piece == piece {
            Some(self.from.point)
        } else if self.to.piece == piece {
            Some(self.to.point)
        } else {
            None
        }
    }

    pub fn touches(&self, point: usize) -> bool {
        self.from.point == point || self.to.point == point
    }

    pub fn points(&self) -> (usize, usize) {
        (self.from.point, self.to.point)
    }

    pub fn pieces(&self) -> (usize, usize) {
        pair_key(self.from.piece, self.to.piece)
    }
}

pub(crate) fn pair_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Memo entry for an unordered piece pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum PairState {
    #[default]
    NotTried,
    /// The first search found nothing; never retried.
    Failed,
    One(ConnectionEdge),
    Two(ConnectionEdge, ConnectionEdge),
}

impl PairState {
    pub fn edges(&self) -> Vec<ConnectionEdge> {
        match self {
            PairState::NotTried | PairState::Failed => Vec::new(),
            PairState::One(e) => vec![*e],
            PairState::Two(a, b) => vec![*a, *b],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConnectionEvent {
    /// First search between the pair found no admissible segment.
    NoConnectionEdge(usize, usize),
    /// The second edge came from exchanging endpoints with the first.
    Swapped(usize, usize),
    /// Neither a second edge nor a swap was possible.
    NoSecondEdge(usize, usize),
    /// `from` could not bypass the saturated lone point of `saturated`.
    SaturationDeadEnd { from: usize, saturated: usize },
    /// `from` bypassed `saturated` and connected to `to` instead.
    Rerouted { from: usize, saturated: usize, to: usize },
}

/// Everything a candidate segment must avoid.
#[derive(Clone, Debug)]
pub struct Obstacles<'a> {
    pub polygon: &'a SimplePolygon,
    pub points: &'a [Point],
    pub cycles: &'a [PieceCycle],
    piece_of: Vec<usize>,
}

impl<'a> Obstacles<'a> {
    pub fn new(polygon: &'a SimplePolygon, points: &'a [Point], cycles: &'a [PieceCycle]) -> Obstacles<'a> {
        let mut piece_of = vec![usize::MAX; points.len()];
        for c in cycles {
            for &p in &c.points {
                piece_of[p] = c.piece;
            }
        }
        Obstacles { polygon, points, cycles, piece_of }
    }

    pub fn piece_of(&self, point: usize) -> usize {
        self.piece_of[point]
    }

    fn is_lone_point(&self, point: usize) -> bool {
        self.cycles[self.piece_of[point]].kind() == CycleKind::Single
    }

    fn endpoint(&self, point: usize) -> Endpoint {
        Endpoint { piece: self.piece_of[point], point }
    }
}

/// Memo table, live edges and per-point incidence counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionState {
    memo: BTreeMap<(usize, usize), PairState>,
    accepted: Vec<ConnectionEdge>,
    incidence: Vec<u8>,
    pub events: Vec<ConnectionEvent>,
    /// Piece pairs in the order the tour requested them.
    pub calls: Vec<(usize, usize)>,
}

impl ConnectionState {
    pub fn new(point_count: usize) -> ConnectionState {
        ConnectionState {
            memo: BTreeMap::new(),
            accepted: Vec::new(),
            incidence: vec![0; point_count],
            events: Vec::new(),
            calls: Vec::new(),
        }
    }

    pub fn pair(&self, a: usize, b: usize) -> &PairState {
        static NOT_TRIED: PairState = PairState::NotTried;
        self.memo.get(&pair_key(a, b)).unwrap_or(&NOT_TRIED)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &PairState)> {
        self.memo.iter()
    }

    pub fn accepted(&self) -> &[ConnectionEdge] {
        &self.accepted
    }

    pub fn incidence(&self, point: usize) -> u8 {
        self.incidence[point]
    }

    fn set_pair(&mut self, a: usize, b: usize, s: PairState) {
        self.memo.insert(pair_key(a, b), s);
    }

    fn accept(&mut self, e: ConnectionEdge) {
        self.incidence[e.from.point] += 1;
        self.incidence[e.to.point] += 1;
        self.accepted.push(e);
    }

    fn retract(&mut self, e: &ConnectionEdge) {
        if let Some(i) = self.accepted.iter().position(|x| x == e) {
            self.accepted.remove(i);
            self.incidence[e.from.point] -= 1;
            self.incidence[e.to.point] -= 1;
        }
    }

    /// Pairwise checks over the live edges: no two conflict, none touches
    /// the polygon or a ring it does not end on, and the memo agrees with
    /// the live list.
    pub fn check_invariants(&self, ctx: &Obstacles) -> Result<(), String> {
        for (i, e) in self.accepted.iter().enumerate() {
            if segment_conflicts_polygon(&e.segment, ctx.polygon, &[]) {
                return Err(format!("edge {:?} touches the polygon", e.points()));
            }
            for c in ctx.cycles {
                for s in c.ring_segments(ctx.points) {
                    let own = c.piece == e.from.piece || c.piece == e.to.piece;
                    if own && segments_conflict(&e.segment, &s, true) {
                        return Err(format!("edge {:?} crosses ring of piece {}", e.points(), c.piece));
                    }
                }
            }
            for f in &self.accepted[i + 1..] {
                if edges_conflict(e, f, ctx) {
                    return Err(format!("edges {:?} and {:?} conflict", e.points(), f.points()));
                }
            }
        }
        let mut from_memo: Vec<ConnectionEdge> = self.memo.values().flat_map(|s| s.edges()).collect();
        let mut live = self.accepted.clone();
        let key = |e: &ConnectionEdge| (e.from, e.to);
        from_memo.sort_by_key(key);
        live.sort_by_key(key);
        if from_memo != live {
            return Err("memo and live edge list disagree".into());
        }
        for (p, &count) in self.incidence.iter().enumerate() {
            let actual = self.accepted.iter().filter(|e| e.touches(p)).count();
            if actual != count as usize {
                return Err(format!("incidence count of point {p} is stale"));
            }
            let cap = if ctx.is_lone_point(p) { 2 } else { 1 };
            if actual > cap {
                return Err(format!("point {p} carries {actual} connection edges"));
            }
        }
        Ok(())
    }
}

/// Two connection edges may meet only at a lone point, and never overlap.
fn edges_conflict(e: &ConnectionEdge, f: &ConnectionEdge, ctx: &Obstacles) -> bool {
    let (e1, e2) = e.points();
    let shared = [e1, e2].into_iter().find(|&p| f.touches(p));
    match shared {
        Some(p) if !ctx.is_lone_point(p) => true,
        Some(_) => segments_conflict(&e.segment, &f.segment, true),
        None => segments_conflict(&e.segment, &f.segment, false),
    }
}

/// Admissibility of joining `u` (in `p1`) to `v` (in `p2`) given the current
/// state, pretending `ignoring` is gone and `extra` is already accepted.
#[allow(clippy::too_many_arguments)]
fn admissible(
    u: usize,
    v: usize,
    p1: &PieceCycle,
    p2: &PieceCycle,
    st: &ConnectionState,
    ctx: &Obstacles,
    ignoring: Option<&ConnectionEdge>,
    extra: &[ConnectionEdge],
) -> bool {
    if ctx.points[u] == ctx.points[v] {
        return false;
    }
    let live = || {
        st.accepted
            .iter()
            .filter(move |e| Some(*e) != ignoring)
            .chain(extra.iter())
    };
    for p in [u, v] {
        let count = live().filter(|e| e.touches(p)).count();
        let cap = if ctx.is_lone_point(p) { 2 } else { 1 };
        if count >= cap {
            return false;
        }
    }

    let cand = ConnectionEdge::new(ctx.endpoint(u), ctx.endpoint(v), ctx.points);
    if segment_conflicts_polygon(&cand.segment, ctx.polygon, &[]) {
        return false;
    }
    for ring in [p1, p2] {
        if ring
            .ring_segments(ctx.points)
            .iter()
            .any(|s| segments_conflict(&cand.segment, s, true))
        {
            return false;
        }
    }
    !live().any(|e| edges_conflict(&cand, e, ctx))
}

/// Public form of the admissibility test against the current state.
pub fn is_admissible(
    u: usize,
    v: usize,
    p1: &PieceCycle,
    p2: &PieceCycle,
    st: &ConnectionState,
    ctx: &Obstacles,
) -> bool {
    admissible(u, v, p1, p2, st, ctx, None, &[])
}

/// All point pairs between two pieces, nearest first. Ties break by the
/// point id in `p1`, then in `p2`.
pub fn sorted_candidates(p1: &PieceCycle, p2: &PieceCycle, coords: &[Point]) -> Vec<(usize, usize)> {
    let mut all: Vec<(BigRational, usize, usize)> = Vec::with_capacity(p1.len() * p2.len());
    for &u in &p1.points {
        for &v in &p2.points {
            all.push((coords[u].squared_distance(&coords[v]), u, v));
        }
    }
    all.sort_unstable();
    all.into_iter().map(|(_, u, v)| (u, v)).collect()
}

fn nearest_admissible(
    p1: &PieceCycle,
    p2: &PieceCycle,
    st: &ConnectionState,
    ctx: &Obstacles,
) -> Option<ConnectionEdge> {
    sorted_candidates(p1, p2, ctx.points)
        .into_iter()
        .find(|&(u, v)| admissible(u, v, p1, p2, st, ctx, None, &[]))
        .map(|(u, v)| ConnectionEdge::new(ctx.endpoint(u), ctx.endpoint(v), ctx.points))
}

/// First search for a pair: scan every point pair by increasing distance
/// and keep the first admissible one, or memoize the failure.
pub fn first_connection(
    p1: &PieceCycle,
    p2: &PieceCycle,
    st: &mut ConnectionState,
    ctx: &Obstacles,
) -> Option<ConnectionEdge> {
    debug_assert_eq!(*st.pair(p1.piece, p2.piece), PairState::NotTried);
    match nearest_admissible(p1, p2, st, ctx) {
        Some(e) => {
            st.accept(e);
            st.set_pair(p1.piece, p2.piece, PairState::One(e));
            Some(e)
        }
        None => {
            st.set_pair(p1.piece, p2.piece, PairState::Failed);
            st.events.push(ConnectionEvent::NoConnectionEdge(p1.piece, p2.piece));
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SecondOutcome {
    Added(ConnectionEdge),
    /// The first edge was replaced by these two.
    Swapped(ConnectionEdge, ConnectionEdge),
    Unchanged,
}

/// Second edge for a pair that has one: join ring neighbours of the first
/// edge's endpoints (a lone point stands in for itself). If none fits, try
/// exchanging endpoints between each candidate and the first edge.
pub fn second_connection(
    p1: &PieceCycle,
    p2: &PieceCycle,
    st: &mut ConnectionState,
    ctx: &Obstacles,
) -> SecondOutcome {
    let PairState::One(first) = *st.pair(p1.piece, p2.piece) else {
        return SecondOutcome::Unchanged;
    };
    let u = first.point_in(p1.piece).expect("edge ends in p1");
    let v = first.point_in(p2.piece).expect("edge ends in p2");

    let mut candidates = Vec::with_capacity(4);
    for &u2 in &p1.neighbours(u) {
        for &v2 in &p2.neighbours(v) {
            candidates.push((u2, v2));
        }
    }

    if let Some(&(u2, v2)) = candidates
        .iter()
        .find(|&&(u2, v2)| admissible(u2, v2, p1, p2, st, ctx, None, &[]))
    {
        let e = ConnectionEdge::new(ctx.endpoint(u2), ctx.endpoint(v2), ctx.points);
        st.accept(e);
        st.set_pair(p1.piece, p2.piece, PairState::Two(first, e));
        return SecondOutcome::Added(e);
    }

    for &(u2, v2) in &candidates {
        // u-v2 and u2-v replace u-v.
        if !admissible(u, v2, p1, p2, st, ctx, Some(&first), &[]) {
            continue;
        }
        let a = ConnectionEdge::new(ctx.endpoint(u), ctx.endpoint(v2), ctx.points);
        if !admissible(u2, v, p1, p2, st, ctx, Some(&first), &[a]) {
            continue;
        }
        let b = ConnectionEdge::new(ctx.endpoint(u2), ctx.endpoint(v), ctx.points);
        st.retract(&first);
        st.accept(a);
        st.accept(b);
        st.set_pair(p1.piece, p2.piece, PairState::Two(a, b));
        st.events.push(ConnectionEvent::Swapped(p1.piece, p2.piece));
        return SecondOutcome::Swapped(a, b);
    }

    st.events.push(ConnectionEvent::NoSecondEdge(p1.piece, p2.piece));
    SecondOutcome::Unchanged
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RerouteFailure {
    /// The tour ended before any usable piece.
    NoEligiblePiece,
    /// A usable piece was found but every pair is blocked.
    Blocked(usize),
}

/// `p2` is a lone point that already carries two edges. Walk the tour on
/// from `position` to the first other piece that has several points or a
/// lone point with spare capacity, and connect `p1` to it directly.
pub fn saturation_reroute(
    p1: &PieceCycle,
    p2: &PieceCycle,
    tour: &EulerTour,
    position: usize,
    st: &mut ConnectionState,
    ctx: &Obstacles,
) -> Result<ConnectionEdge, RerouteFailure> {
    let eligible = tour.sequence.iter().skip(position + 1).copied().find(|&q| {
        let c = &ctx.cycles[q];
        q != p1.piece
            && q != p2.piece
            && !c.is_empty()
            && (c.len() > 1 || st.incidence(c.points[0]) <= 1)
            && matches!(st.pair(p1.piece, q), PairState::NotTried | PairState::One(_))
    });
    let Some(q) = eligible else {
        st.events.push(ConnectionEvent::SaturationDeadEnd { from: p1.piece, saturated: p2.piece });
        return Err(RerouteFailure::NoEligiblePiece);
    };
    let target = &ctx.cycles[q];
    match nearest_admissible(p1, target, st, ctx) {
        Some(e) => {
            st.accept(e);
            let next = match st.pair(p1.piece, q) {
                PairState::One(e0) => PairState::Two(*e0, e),
                _ => PairState::One(e),
            };
            st.set_pair(p1.piece, q, next);
            st.events.push(ConnectionEvent::Rerouted { from: p1.piece, saturated: p2.piece, to: q });
            Ok(e)
        }
        None => {
            st.events.push(ConnectionEvent::SaturationDeadEnd { from: p1.piece, saturated: p2.piece });
            Err(RerouteFailure::Blocked(q))
        }
    }
}

/// One request from the tour walk: dispatch on the memo entry.
pub fn compute_connection(
    p1: &PieceCycle,
    p2: &PieceCycle,
    tour: &EulerTour,
    position: usize,
    st: &mut ConnectionState,
    ctx: &Obstacles,
) {
    st.calls.push((p1.piece, p2.piece));
    match st.pair(p1.piece, p2.piece).clone() {
        PairState::NotTried => {
            first_connection(p1, p2, st, ctx);
        }
        PairState::Failed | PairState::Two(..) => {}
        PairState::One(_) => {
            let saturated = p2.kind() == CycleKind::Single && st.incidence(p2.points[0]) >= 2;
            if saturated {
                let _ = saturation_reroute(p1, p2, tour, position, st, ctx);
            } else {
                second_connection(p1, p2, st, ctx);
            }
        }
    }
}

/// Next step of the tour walk at position `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    /// Tour positions to connect.
    pub call: Option<(usize, usize)>,
    pub next: usize,
}

/// Tour-walk dispatch with the empty-piece skip rules.
///
/// * both `tour[j]` and `tour[j + 1]` have points: connect them;
/// * `tour[j]` is empty: connect the next two nonempty positions;
/// * `tour[j + 1]` is empty: connect `tour[j]` to the next nonempty
///   position holding a different piece.
///
/// Skipped-to targets whose pair already failed are passed over.
pub fn connect_with_skip(
    tour: &EulerTour,
    j: usize,
    nonempty: impl Fn(usize) -> bool,
    failed: impl Fn(usize, usize) -> bool,
) -> Step {
    let seq = &tour.sequence;
    let len = seq.len();
    if j + 1 >= len {
        return Step { call: None, next: len };
    }
    let after = |from: usize, piece: usize| {
        (from + 1..len).find(|&b| nonempty(seq[b]) && seq[b] != piece && !failed(piece, seq[b]))
    };
    let (cur, nxt) = (seq[j], seq[j + 1]);
    if nonempty(cur) && nonempty(nxt) {
        Step { call: Some((j, j + 1)), next: j + 1 }
    } else if !nonempty(cur) {
        let call = (j + 1..len)
            .find(|&a| nonempty(seq[a]))
            .and_then(|a| after(a, seq[a]).map(|b| (a, b)));
        Step { call, next: j + 2 }
    } else {
        Step { call: after(j, cur).map(|b| (j, b)), next: j + 1 }
    }
}

/// Walks the whole tour, issuing connection requests.
pub fn traverse(tour: &EulerTour, st: &mut ConnectionState, ctx: &Obstacles) {
    let mut j = 0;
    while j + 1 < tour.len() {
        let step = {
            let st_ref = &*st;
            connect_with_skip(
                tour,
                j,
                |p| !ctx.cycles[p].is_empty(),
                |a, b| *st_ref.pair(a, b) == PairState::Failed,
            )
        };
        if let Some((a, b)) = step.call {
            let (p1, p2) = (&ctx.cycles[tour.sequence[a]], &ctx.cycles[tour.sequence[b]]);
            compute_connection(p1, p2, tour, b, st, ctx);
        }
        j = step.next;
    }
}

/// Used by tests to compare candidate distances.
pub fn compare_lengths(a: (usize, usize), b: (usize, usize), coords: &[Point]) -> Ordering {
    coords[a.0]
        .squared_distance(&coords[a.1])
        .cmp(&coords[b.0].squared_distance(&coords[b.1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn square(side: i64) -> SimplePolygon {
        SimplePolygon::new(pts(&[(-side, -side), (side, -side), (side, side), (-side, side)])).unwrap()
    }

    fn cycle(piece: usize, points: &[usize]) -> PieceCycle {
        PieceCycle { piece, points: points.to_vec() }
    }

    fn tour(seq: &[usize]) -> EulerTour {
        EulerTour { sequence: seq.to_vec() }
    }

    #[test]
    fn l_hexagon_worked_connections() {
        let q = SimplePolygon::new(pts(&[(0, 0), (8, 0), (8, 4), (4, 4), (4, 8), (0, 8)])).unwrap();
        let coords = pts(&[(2, 1), (6, 2), (1, 6)]);
        let cycles = vec![cycle(0, &[0, 1]), cycle(1, &[2])];
        let ctx = Obstacles::new(&q, &coords, &cycles);
        let mut st = ConnectionState::new(3);

        let e = first_connection(&cycles[0], &cycles[1], &mut st, &ctx).unwrap();
        assert_eq!(e.points(), (0, 2));

        let out = second_connection(&cycles[0], &cycles[1], &mut st, &ctx);
        let SecondOutcome::Added(e2) = out else { panic!("{out:?}") };
        assert_eq!(e2.points(), (1, 2));
        assert!(matches!(st.pair(1, 0), PairState::Two(..)));
        st.check_invariants(&ctx).unwrap();
    }

    #[test]
    fn two_lone_points_with_clear_sight() {
        let q = square(10);
        let coords = pts(&[(0, 0), (3, 1)]);
        let cycles = vec![cycle(0, &[0]), cycle(1, &[1])];
        let ctx = Obstacles::new(&q, &coords, &cycles);
        let mut st = ConnectionState::new(2);
        let e = first_connection(&cycles[0], &cycles[1], &mut st, &ctx).unwrap();
        assert_eq!(e.points(), (0, 1));
        // The only second candidate is the same segment again.
        assert_eq!(second_connection(&cycles[0], &cycles[1], &mut st, &ctx), SecondOutcome::Unchanged);
        assert!(matches!(st.pair(0, 1), PairState::One(_)));
    }

    fn u_shape() -> SimplePolygon {
        SimplePolygon::new(pts(&[(0, 0), (10, 0), (10, 10), (7, 10), (7, 3), (3, 3), (3, 10), (0, 10)]))
            .unwrap()
    }

    #[test]
    fn blocked_pair_memoized_as_failed() {
        let q = u_shape();
        let coords = pts(&[(1, 8), (2, 9), (8, 8), (9, 9)]);
        let cycles = vec![cycle(0, &[0, 1]), cycle(1, &[2, 3])];
        let ctx = Obstacles::new(&q, &coords, &cycles);
        // Exhaustive oracle: every pair leaves the polygon.
        for (u, v) in sorted_candidates(&cycles[0], &cycles[1], &coords) {
            let s = Segment::new(coords[u], coords[v]).unwrap();
            assert!(segment_conflicts_polygon(&s, &q, &[]));
        }
        let mut st = ConnectionState::new(4);
        assert!(first_connection(&cycles[0], &cycles[1], &mut st, &ctx).is_none());
        assert_eq!(*st.pair(1, 0), PairState::Failed);
        // Never retried.
        compute_connection(&cycles[1], &cycles[0], &tour(&[0, 1]), 1, &mut st, &ctx);
        assert_eq!(*st.pair(0, 1), PairState::Failed);
        assert!(st.accepted().is_empty());
    }

    #[test]
    fn swap_when_second_candidate_crosses_first() {
        let q = square(20);
        // u, v nearest; u2-v2 crosses u-v; u-v2 and u2-v do not.
        let coords = pts(&[(0, 0), (1, 10), (2, 0), (1, -10)]);
        let cycles = vec![cycle(0, &[0, 1]), cycle(1, &[2, 3])];
        let ctx = Obstacles::new(&q, &coords, &cycles);
        let mut st = ConnectionState::new(4);
        let first = first_connection(&cycles[0], &cycles[1], &mut st, &ctx).unwrap();
        assert_eq!(first.points(), (0, 2));
        assert!(segments_conflict(
            &Segment::new(coords[1], coords[3]).unwrap(),
            &first.segment,
            false
        ));
        let out = second_connection(&cycles[0], &cycles[1], &mut st, &ctx);
        let SecondOutcome::Swapped(a, b) = out else { panic!("{out:?}") };
        assert_eq!((a.points(), b.points()), ((0, 3), (1, 2)));
        assert!(!st.accepted().contains(&first));
        assert_eq!(st.accepted().len(), 2);
        st.check_invariants(&ctx).unwrap();
    }

    #[test]
    fn reroute_past_saturated_lone_point() {
        let q = square(30);
        // Piece 1 is a lone point already joined to pieces 0 and 2.
        let coords = pts(&[(-10, 0), (-12, 3), (-12, -3), (0, 0), (10, 0), (12, 3), (12, -3)]);
        let cycles = vec![cycle(0, &[0, 1, 2]), cycle(1, &[3]), cycle(2, &[4, 5, 6])];
        let ctx = Obstacles::new(&q, &coords, &cycles);
        let mut st = ConnectionState::new(7);
        first_connection(&cycles[0], &cycles[1], &mut st, &ctx).unwrap();
        first_connection(&cycles[1], &cycles[2], &mut st, &ctx).unwrap();
        assert_eq!(st.incidence(3), 2);

        let t = tour(&[0, 1, 2, 1, 0]);
        let e = saturation_reroute(&cycles[2], &cycles[1], &t, 3, &mut st, &ctx).unwrap();
        assert_eq!(e.pieces(), (0, 2));
        // Vertices already carrying edges are not reused.
        assert!(!e.touches(0) && !e.touches(4));
        st.check_invariants(&ctx).unwrap();
    }

    #[test]
    fn reroute_falls_off_tour() {
        let q = square(30);
        let coords = pts(&[(-10, 0), (0, 0), (10, 0)]);
        let cycles = vec![cycle(0, &[0]), cycle(1, &[1]), cycle(2, &[2])];
        let ctx = Obstacles::new(&q, &coords, &cycles);
        let mut st = ConnectionState::new(3);
        first_connection(&cycles[0], &cycles[1], &mut st, &ctx).unwrap();
        first_connection(&cycles[1], &cycles[2], &mut st, &ctx).unwrap();
        let t = tour(&[0, 1, 2, 1, 0]);
        assert_eq!(
            saturation_reroute(&cycles[2], &cycles[1], &t, 4, &mut st, &ctx),
            Err(RerouteFailure::NoEligiblePiece)
        );
    }

    #[test]
    fn reroute_blocked_by_polygon() {
        let q = u_shape();
        // Arms 0 and 2 cannot see each other; lone point 1 at the bottom is
        // saturated by lone points 3 and 4.
        let coords = pts(&[(1, 8), (2, 9), (5, 1), (8, 8), (9, 9), (2, 1), (8, 1)]);
        let cycles = vec![
            cycle(0, &[0, 1]),
            cycle(1, &[2]),
            cycle(2, &[3, 4]),
            cycle(3, &[5]),
            cycle(4, &[6]),
        ];
        let ctx = Obstacles::new(&q, &coords, &cycles);
        let mut st = ConnectionState::new(7);
        first_connection(&cycles[3], &cycles[1], &mut st, &ctx).unwrap();
        first_connection(&cycles[1], &cycles[4], &mut st, &ctx).unwrap();
        assert_eq!(st.incidence(2), 2);
        let t = tour(&[1, 0, 1, 2, 1, 3, 1, 4, 1]);
        assert_eq!(
            saturation_reroute(&cycles[0], &cycles[1], &t, 2, &mut st, &ctx),
            Err(RerouteFailure::Blocked(2))
        );
        assert!(st.events.contains(&ConnectionEvent::SaturationDeadEnd { from: 0, saturated: 1 }));
    }

    /// Literal replay of the tour loop with positions, used as oracle.
    fn replay(seq: &[usize], empty: &[usize]) -> Vec<(usize, usize)> {
        let t = tour(seq);
        let mut j = 0;
        let mut calls = Vec::new();
        while j + 1 < t.len() {
            let step = connect_with_skip(&t, j, |p| !empty.contains(&p), |_, _| false);
            if let Some((a, b)) = step.call {
                calls.push((seq[a], seq[b]));
            }
            j = step.next;
        }
        calls
    }

    #[test]
    fn skip_rules() {
        assert_eq!(replay(&[0, 1, 0], &[]), vec![(0, 1), (1, 0)]);
        // j=0: next is empty, skip to piece 2; j=1: empty, connect the next
        // two nonempty positions (0 at 2, 2 at 3); j=3: (2, 0).
        assert_eq!(replay(&[0, 1, 0, 2, 0], &[1]), vec![(0, 2), (0, 2), (2, 0)]);
        assert!(replay(&[0], &[]).is_empty());
        // Only one nonempty piece: nothing to connect.
        assert!(replay(&[0, 1, 0], &[1]).is_empty());
    }

    #[test]
    fn skip_passes_over_failed_pairs() {
        let t = tour(&[0, 1, 2, 1, 3, 1, 0]);
        let s = connect_with_skip(&t, 0, |p| p != 1, |a, b| pair_key(a, b) == (0, 2));
        assert_eq!(s.call, Some((0, 4)));
    }
}
