use std::cmp::Ordering;

use num_bigint::BigInt;

use super::{Point, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    LeftTurn,
    RightTurn,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::LeftTurn => Orientation::RightTurn,
            Orientation::RightTurn => Orientation::LeftTurn,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Sign of `a * d - b * c`, exact. Runs in `i128` and falls back to
/// big integers when a product overflows.
fn det_sign(a: i128, b: i128, c: i128, d: i128) -> Ordering {
    match (a.checked_mul(d), b.checked_mul(c)) {
        (Some(ad), Some(bc)) => ad.cmp(&bc),
        _ => (BigInt::from(a) * BigInt::from(d)).cmp(&(BigInt::from(b) * BigInt::from(c))),
    }
}

/// Exact sign of `(q - p) x (r - p)`.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    // Both deltas carry the positive factor p.den; the two cross terms share
    // the factor p.den^2 * q.den * r.den, so the sign is unaffected.
    let (ax, ay) = p.delta(q);
    let (bx, by) = p.delta(r);
    match det_sign(ax, ay, bx, by) {
        Ordering::Greater => Orientation::LeftTurn,
        Ordering::Less => Orientation::RightTurn,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// `r` is collinear with `p q` and lies within its bounding box.
pub(crate) fn within_box(p: &Point, q: &Point, r: &Point) -> bool {
    let (lo_x, hi_x) = if p.cmp_x(q) == Ordering::Greater { (q, p) } else { (p, q) };
    let (lo_y, hi_y) = if p.cmp_y(q) == Ordering::Greater { (q, p) } else { (p, q) };
    r.cmp_x(lo_x) != Ordering::Less
        && r.cmp_x(hi_x) != Ordering::Greater
        && r.cmp_y(lo_y) != Ordering::Less
        && r.cmp_y(hi_y) != Ordering::Greater
}

/// `r` lies on the closed segment `s`.
pub fn on_segment(s: &Segment, r: &Point) -> bool {
    orient(&s.a, &s.b, r) == Orientation::Collinear && within_box(&s.a, &s.b, r)
}

/// Whether two closed segments share any point.
///
/// With `shared_endpoints_allowed`, contact that happens exactly at an
/// endpoint common to both segments is tolerated. Collinear overlap of
/// positive length is a conflict regardless.
pub fn segments_conflict(s1: &Segment, s2: &Segment, shared_endpoints_allowed: bool) -> bool {
    let o1 = orient(&s1.a, &s1.b, &s2.a);
    let o2 = orient(&s1.a, &s1.b, &s2.b);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return collinear_conflict(s1, s2, shared_endpoints_allowed);
    }

    let shared = s1.has_endpoint(&s2.a) || s1.has_endpoint(&s2.b);
    if shared {
        // Lines are distinct, so the shared endpoint is the only contact.
        return !shared_endpoints_allowed;
    }

    let o3 = orient(&s2.a, &s2.b, &s1.a);
    let o4 = orient(&s2.a, &s2.b, &s1.b);

    if o1 != o2
        && o3 != o4
        && o1 != Orientation::Collinear
        && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear
        && o4 != Orientation::Collinear
    {
        return true;
    }

    (o1 == Orientation::Collinear && within_box(&s1.a, &s1.b, &s2.a))
        || (o2 == Orientation::Collinear && within_box(&s1.a, &s1.b, &s2.b))
        || (o3 == Orientation::Collinear && within_box(&s2.a, &s2.b, &s1.a))
        || (o4 == Orientation::Collinear && within_box(&s2.a, &s2.b, &s1.b))
}

fn collinear_conflict(s1: &Segment, s2: &Segment, shared_endpoints_allowed: bool) -> bool {
    // Project onto the axis along which s1 is not degenerate.
    let by_x = s1.a.cmp_x(&s1.b) != Ordering::Equal;
    let key = |p: &Point, q: &Point| if by_x { p.cmp_x(q) } else { p.cmp_y(q) };
    let (lo1, hi1) = if key(&s1.a, &s1.b) == Ordering::Greater { (s1.b, s1.a) } else { (s1.a, s1.b) };
    let (lo2, hi2) = if key(&s2.a, &s2.b) == Ordering::Greater { (s2.b, s2.a) } else { (s2.a, s2.b) };
    let lo = if key(&lo1, &lo2) == Ordering::Greater { lo1 } else { lo2 };
    let hi = if key(&hi1, &hi2) == Ordering::Less { hi1 } else { hi2 };
    match key(&lo, &hi) {
        Ordering::Greater => false,
        Ordering::Less => true,
        // Single touching point; on collinear segments it is an endpoint of both.
        Ordering::Equal => !shared_endpoints_allowed,
    }
}
