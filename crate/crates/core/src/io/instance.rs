use std::fmt::Write as _;

use num_rational::Rational64;

use crate::geometry::{validate_simple_polygon, Point};
use crate::pipeline::Instance;

use super::ParseError;

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Exact value of `-12`, `3.25` or `7/3`.
pub fn parse_coordinate(token: &str) -> Option<Rational64> {
    if let Some((p, q)) = token.split_once('/') {
        let (p, q): (i64, i64) = (p.parse().ok()?, q.parse().ok()?);
        return (q != 0).then(|| Rational64::new(p, q));
    }
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut num: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let mut den: i64 = 1;
    for c in frac.chars() {
        num = num.checked_mul(10)?.checked_add(c.to_digit(10)? as i64)?;
        den = den.checked_mul(10)?;
    }
    Some(Rational64::new(if negative { -num } else { num }, den))
}

/// Integer if whole, terminating decimal if possible, `p/q` otherwise.
pub fn format_coordinate(v: Rational64) -> String {
    let (p, q) = (*v.numer(), *v.denom());
    if q == 1 {
        return p.to_string();
    }
    let mut rest = q;
    let mut digits = 0u32;
    while rest % 2 == 0 || rest % 5 == 0 {
        rest /= if rest % 2 == 0 { 2 } else { 5 };
        digits += 1;
    }
    if rest != 1 || digits > 18 {
        return format!("{p}/{q}");
    }
    let scale = 10i128.pow(digits);
    let scaled = p as i128 * (scale / q as i128);
    let sign = if scaled < 0 { "-" } else { "" };
    let a = scaled.unsigned_abs();
    let (whole, frac) = (a / scale as u128, a % scale as u128);
    let frac = format!("{:0width$}", frac, width = digits as usize);
    format!("{sign}{whole}.{}", frac.trim_end_matches('0'))
}

fn parse_point(line: usize, text: &str) -> Result<Point, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let [x, y] = tokens.as_slice() else {
        return Err(syntax(line, format!("expected `x y`, found `{text}`")));
    };
    let coord = |t: &str| parse_coordinate(t).ok_or_else(|| syntax(line, format!("bad coordinate `{t}`")));
    Point::from_ratios(coord(x)?, coord(y)?).map_err(|_| syntax(line, "coordinate out of range"))
}

fn parse_header(line: usize, text: &str, keyword: &str) -> Result<usize, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [k, count] if *k == keyword => count
            .parse()
            .map_err(|_| syntax(line, format!("bad count `{count}`"))),
        _ => Err(syntax(line, format!("expected `{keyword} <count>`, found `{text}`"))),
    }
}

/// Parses the line-oriented instance format.
///
/// ```text
/// # name: l-hexagon
/// polygon 6
/// 0 0
/// ...
/// points 3
/// 2 1
/// ...
/// ```
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut name = None;
    let mut seed = None;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let (content, comment) = match raw.split_once('#') {
            Some((c, rest)) => (c, Some(rest.trim())),
            None => (raw, None),
        };
        if let Some(comment) = comment {
            if let Some(v) = comment.strip_prefix("name:") {
                name = Some(v.trim().to_string());
            } else if let Some(v) = comment.strip_prefix("seed:") {
                seed = Some(v.trim().parse().map_err(|_| syntax(number, "bad seed"))?);
            }
        }
        let content = content.trim();
        if !content.is_empty() {
            lines.push((number, content));
        }
    }

    let mut it = lines.into_iter();
    let end = |what: &str| syntax(text.lines().count() + 1, format!("unexpected end of input, expected {what}"));

    let (line, header) = it.next().ok_or_else(|| end("`polygon <m>`"))?;
    let m = parse_header(line, header, "polygon")?;
    let mut ring = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, t) = it.next().ok_or_else(|| end("a polygon vertex"))?;
        ring.push(parse_point(line, t)?);
    }
    let (line, header) = it.next().ok_or_else(|| end("`points <n>`"))?;
    let n = parse_header(line, header, "points")?;
    let mut points = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, t) = it.next().ok_or_else(|| end("a point"))?;
        points.push(parse_point(line, t)?);
    }
    if let Some((line, t)) = it.next() {
        return Err(syntax(line, format!("trailing content `{t}`")));
    }

    let polygon = validate_simple_polygon(ring)?;
    let mut inst = Instance::new(polygon, points)?;
    inst.name = name;
    inst.seed = seed;
    Ok(inst)
}

pub fn format_point(p: &Point) -> String {
    format!("{} {}", format_coordinate(p.x()), format_coordinate(p.y()))
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    if let Some(name) = &inst.name {
        let _ = writeln!(out, "# name: {name}");
    }
    if let Some(seed) = inst.seed {
        let _ = writeln!(out, "# seed: {seed}");
    }
    let _ = writeln!(out, "polygon {}", inst.polygon.len());
    for v in inst.polygon.vertices() {
        let _ = writeln!(out, "{}", format_point(v));
    }
    let _ = writeln!(out, "points {}", inst.points.len());
    for p in &inst.points {
        let _ = writeln!(out, "{}", format_point(p));
    }
    out
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::geometry::GeometryError;

    const L_HEXAGON: &str = "# name: l-hexagon\npolygon 6\n0 0\n8 0\n8 4\n4 4\n4 8\n0 8\npoints 3\n2 1\n6 2\n1 6\n";

    #[test]
    fn coordinates() {
        assert_eq!(parse_coordinate("-12"), Some(Rational64::from_integer(-12)));
        assert_eq!(parse_coordinate("3.25"), Some(Rational64::new(13, 4)));
        assert_eq!(parse_coordinate("-.5"), Some(Rational64::new(-1, 2)));
        assert_eq!(parse_coordinate("7/3"), Some(Rational64::new(7, 3)));
        assert_eq!(parse_coordinate("1/0"), None);
        assert_eq!(parse_coordinate("1e3"), None);
        assert_eq!(parse_coordinate("."), None);
        for v in [Rational64::new(13, 4), Rational64::new(-1, 16), Rational64::new(7, 3), Rational64::zero()] {
            assert_eq!(parse_coordinate(&format_coordinate(v)), Some(v));
        }
        assert_eq!(format_coordinate(Rational64::new(-1, 16)), "-0.0625");
    }

    #[test]
    fn round_trip() {
        let inst = parse_instance(L_HEXAGON).unwrap();
        assert_eq!(inst.name.as_deref(), Some("l-hexagon"));
        assert_eq!(inst.n(), 3);
        let text = serialize_instance(&inst);
        assert_eq!(text, L_HEXAGON);
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "polygon 3\n0 0\n4 x\n0 4\npoints 0\n";
        assert_eq!(
            parse_instance(bad).unwrap_err(),
            ParseError::Syntax { line: 3, message: "bad coordinate `x`".into() }
        );
        let short = "polygon 3\n0 0\n";
        assert!(matches!(parse_instance(short), Err(ParseError::Syntax { line: 3, .. })));
        let bowtie = "polygon 4\n0 0\n4 4\n4 0\n0 4\npoints 0\n";
        assert!(matches!(
            parse_instance(bowtie),
            Err(ParseError::Geometry(GeometryError::SelfIntersecting { .. }))
        ));
    }
}
