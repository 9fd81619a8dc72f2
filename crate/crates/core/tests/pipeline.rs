use std::path::PathBuf;

use polycycle::geometry::{Point, SimplePolygon};
use polycycle::io::parse_instance;
use polycycle::pipeline::{embed_cycle, FailureReason, Instance, Outcome};
use polycycle::verify::{brute_force_exists, validate_cycle, Violation, DEFAULT_ORACLE_CAP};

fn load(name: &str) -> Instance {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    parse_instance(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn pts(c: &[(i64, i64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

#[test]
fn worked_instance_connections() {
    let inst = load("l_hexagon.txt");
    let r = embed_cycle(&inst).unwrap();
    assert_eq!(r.outcome, Outcome::Success(vec![0, 1, 2]));
    let mut segments: Vec<(Point, Point)> = r
        .structure
        .connections
        .accepted()
        .iter()
        .map(|e| (e.segment.a.min(e.segment.b), e.segment.a.max(e.segment.b)))
        .collect();
    segments.sort();
    assert_eq!(
        segments,
        vec![
            (Point::new(1, 6), Point::new(2, 1)),
            (Point::new(1, 6), Point::new(6, 2)),
        ]
    );
    assert_eq!(format!("{r:?}"), format!("{:?}", embed_cycle(&inst).unwrap()));
}

#[test]
fn convex_square_takes_single_piece_branch() {
    let q = SimplePolygon::new(pts(&[(0, 0), (20, 0), (20, 20), (0, 20)])).unwrap();
    let inst = Instance::new(q, pts(&[(3, 2), (15, 4), (17, 13), (9, 18), (5, 11)])).unwrap();
    let r = embed_cycle(&inst).unwrap();
    assert!(r.is_success());
    assert_eq!(r.structure.tour.sequence, vec![0]);
    assert!(r.structure.connections.calls.is_empty());
}

#[test]
fn incompleteness_witness() {
    let inst = load("incomplete_witness.txt");
    let r = embed_cycle(&inst).unwrap();
    assert_eq!(r.outcome, Outcome::Failure(FailureReason::NoSecondEdge(0, 1)));
    let witness = brute_force_exists(&inst, DEFAULT_ORACLE_CAP).unwrap().expect("a cycle exists");
    assert!(validate_cycle(&inst, &witness).is_valid());
}

#[test]
fn corner_instance_has_no_cycle() {
    let inst = load("l_hexagon_corner.txt");
    let report = validate_cycle(&inst, &[0, 1, 2]);
    assert!(report.violations.iter().any(|v| matches!(v, Violation::SideContact { edge: 0, .. })));
    assert_eq!(brute_force_exists(&inst, DEFAULT_ORACLE_CAP).unwrap(), None);
    assert!(!embed_cycle(&inst).unwrap().is_success());
}

#[test]
fn convex_pentagon_file() {
    let inst = load("convex_pentagon.txt");
    assert!(inst.report.is_empty());
    let r = embed_cycle(&inst).unwrap();
    assert!(r.is_success());
    assert!(brute_force_exists(&inst, DEFAULT_ORACLE_CAP).unwrap().is_some());
}
