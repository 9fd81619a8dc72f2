use std::fmt::Write as _;

use crate::geometry::Point;
use crate::pipeline::{EmbeddingResult, Instance, Outcome};

#[derive(Clone, Debug, PartialEq)]
pub struct SvgOptions {
    /// Width of the drawing area in pixels; height follows the aspect ratio.
    pub width: f64,
    pub margin: f64,
    /// Label points with their one-based ids.
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> SvgOptions {
        SvgOptions { width: 600.0, margin: 20.0, labels: false }
    }
}

struct Frame {
    min: (f64, f64),
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn new(inst: &Instance, opts: &SvgOptions) -> Frame {
        let (lo, hi) = inst.polygon.bounding_box();
        let (lo, hi) = (lo.to_f64(), hi.to_f64());
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(f64::MIN_POSITIVE);
        Frame { min: lo, max_y: hi.1, scale: opts.width / span, margin: opts.margin }
    }

    /// Screen coordinates, y pointing down.
    fn map(&self, p: &Point) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (
            self.margin + (x - self.min.0) * self.scale,
            self.margin + (self.max_y - y) * self.scale,
        )
    }
}

fn line(out: &mut String, class: &str, colour: &str, width: f64, a: (f64, f64), b: (f64, f64)) {
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{colour}" stroke-width="{width}"/>"#,
        a.0, a.1, b.0, b.1
    );
}

/// Polygon in black, essential diagonals in red, cycle (or, on failure,
/// the partial merged structure) in green, connection edges in blue and
/// points as dots.
pub fn render_svg(inst: &Instance, result: Option<&EmbeddingResult>, opts: &SvgOptions) -> String {
    let frame = Frame::new(inst, opts);
    let (lo, hi) = inst.polygon.bounding_box();
    let (w, h) = {
        let (lo, hi) = (lo.to_f64(), hi.to_f64());
        (
            (hi.0 - lo.0) * frame.scale + 2.0 * opts.margin,
            (hi.1 - lo.1) * frame.scale + 2.0 * opts.margin,
        )
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    if let Some(name) = &inst.name {
        let escaped = name.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let _ = writeln!(out, "  <title>{escaped}</title>");
    }

    let ring: Vec<String> = inst
        .polygon
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = frame.map(v);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"  <polygon class="boundary" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        ring.join(" ")
    );

    if let Some(r) = result {
        let s = &r.structure;
        for d in &s.decomposition.diagonals {
            line(&mut out, "diagonal", "red", 1.5, frame.map(&d.a), frame.map(&d.b));
        }
        let mut edges: Vec<(usize, usize)> = match &r.outcome {
            Outcome::Success(c) => (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect(),
            Outcome::Failure(_) => s.edges.clone(),
        };
        edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
        edges.sort_unstable();
        for (a, b) in edges {
            line(&mut out, "cycle", "green", 1.5, frame.map(&inst.points[a]), frame.map(&inst.points[b]));
        }
        for e in s.connections.accepted() {
            let (a, b) = e.points();
            line(&mut out, "connection", "blue", 2.5, frame.map(&inst.points[a]), frame.map(&inst.points[b]));
        }
    }

    for (i, p) in inst.points.iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = writeln!(out, r#"  <circle class="point" cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        if opts.labels {
            let _ = writeln!(
                out,
                r#"  <text class="label" x="{:.3}" y="{:.3}" font-size="10">{}</text>"#,
                x + 4.0,
                y - 4.0,
                i + 1
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
