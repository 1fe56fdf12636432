//! SVG pictures of instances and their solutions.
//!
//! Two views exist: the primal plane (segments plus the selected lines) and
//! the dual plane (strip boundaries, the transversal polygon, and the
//! selected lines as points). Coordinates are rendered as decimals with 12
//! significant digits; this is the only place in the crate where exact
//! values are rounded, and nothing ever reads them back.

use std::fmt::Write as _;

use crate::dual::{segment_strip, DualPoint, DualStrip, PolygonClass};
use crate::instance::{canonical_intervals, canonicalize, InstanceDocument, MappedLine, SolveResult};
use crate::rational::Rational;
use crate::selectors::{select, SelectorMethod};
use crate::Error;

/// Which plane to draw.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlotMode {
    Primal,
    Dual,
}

/// Growable bounding box over plot coordinates (y already flipped).
struct BBox {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl BBox {
    fn new() -> Self {
        BBox {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, x: f64, y: f64) {
        if x.is_finite() && y.is_finite() {
            self.min_x = self.min_x.min(x);
            self.max_x = self.max_x.max(x);
            self.min_y = self.min_y.min(y);
            self.max_y = self.max_y.max(y);
        }
    }

    fn is_empty(&self) -> bool {
        self.min_x > self.max_x
    }

    /// Pad degenerate extents to unit size, then grow 10% per side.
    fn finished(mut self) -> Self {
        if self.is_empty() {
            self.add(0.0, 0.0);
        }
        if self.max_x - self.min_x < 1e-9 {
            self.min_x -= 1.0;
            self.max_x += 1.0;
        }
        if self.max_y - self.min_y < 1e-9 {
            self.min_y -= 1.0;
            self.max_y += 1.0;
        }
        let dx = 0.1 * (self.max_x - self.min_x);
        let dy = 0.1 * (self.max_y - self.min_y);
        BBox {
            min_x: self.min_x - dx,
            max_x: self.max_x + dx,
            min_y: self.min_y - dy,
            max_y: self.max_y + dy,
        }
    }

    fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    fn stroke(&self) -> f64 {
        0.008 * self.width().min(self.height())
    }
}

/// Decimal with 12 significant digits, trailing zeros trimmed.
fn sig12(v: f64) -> String {
    if !v.is_finite() || v == 0.0 {
        return "0".to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = (11 - exponent).clamp(0, 30) as usize;
    let text = format!("{v:.decimals$}");
    let trimmed = if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.')
    } else {
        &text
    };
    if trimmed == "-0" {
        "0".to_string()
    } else {
        trimmed.to_string()
    }
}

/// Plot ordinate for a mathematical ordinate (SVG y grows downward).
fn plot_y(y: f64) -> f64 {
    -y
}

fn approx(r: &Rational) -> f64 {
    r.to_f64()
}

fn svg_header(out: &mut String, bbox: &BBox, name: Option<&str>) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        sig12(bbox.min_x),
        sig12(bbox.min_y),
        sig12(bbox.width()),
        sig12(bbox.height())
    );
    if let Some(name) = name {
        let escaped = name.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let _ = writeln!(out, "  <title>{escaped}</title>");
    }
    let sw = bbox.stroke();
    let _ = writeln!(
        out,
        "  <style>\n    \
         .segment {{ stroke: #20457c; stroke-width: {seg}; stroke-linecap: round; }}\n    \
         .strip {{ stroke: #9aa0a6; stroke-width: {thin}; }}\n    \
         .stab-polygon {{ fill: #7aa02555; stroke: #55771b; stroke-width: {thin}; }}\n    \
         .selector {{ stroke: #b3372e; stroke-width: {thin}; fill: #b3372e; }}\n  \
         </style>",
        seg = sig12(1.5 * sw),
        thin = sig12(0.6 * sw),
    );
}

fn line_element(out: &mut String, class: &str, method: Option<SelectorMethod>, p: (f64, f64), q: (f64, f64)) {
    let attr = match method {
        Some(m) => format!(" data-method=\"{}\"", m.token()),
        None => String::new(),
    };
    let _ = writeln!(
        out,
        r#"  <line class="{class}"{attr} x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        sig12(p.0),
        sig12(p.1),
        sig12(q.0),
        sig12(q.1)
    );
}

fn circle_element(out: &mut String, class: &str, method: Option<SelectorMethod>, c: (f64, f64), r: f64) {
    let attr = match method {
        Some(m) => format!(" data-method=\"{}\"", m.token()),
        None => String::new(),
    };
    let _ = writeln!(
        out,
        r#"  <circle class="{class}"{attr} cx="{}" cy="{}" r="{}"/>"#,
        sig12(c.0),
        sig12(c.1),
        sig12(r)
    );
}

fn primal_svg(
    doc: &InstanceDocument,
    result: &SolveResult,
    methods: &[SelectorMethod],
) -> String {
    let endpoints: Vec<((f64, f64), (f64, f64))> = doc
        .segments
        .iter()
        .map(|seg| {
            let (p, q) = seg.endpoints();
            (
                (approx(&p.x), plot_y(approx(&p.y))),
                (approx(&q.x), plot_y(approx(&q.y))),
            )
        })
        .collect();
    let mut bbox = BBox::new();
    for (p, q) in &endpoints {
        bbox.add(p.0, p.1);
        bbox.add(q.0, q.1);
    }
    let bbox = bbox.finished();

    let mut out = String::new();
    svg_header(&mut out, &bbox, doc.name.as_deref());
    for (p, q) in &endpoints {
        line_element(&mut out, "segment", None, *p, *q);
    }
    for (method, mapped) in &result.lines {
        if !methods.contains(method) {
            continue;
        }
        match mapped {
            MappedLine::Slanted(l) => {
                let (m, b) = (approx(&l.m), approx(&l.b));
                let p = (bbox.min_x, plot_y(m * bbox.min_x + b));
                let q = (bbox.max_x, plot_y(m * bbox.max_x + b));
                line_element(&mut out, "selector", Some(*method), p, q);
            }
            MappedLine::Vertical { x } => {
                let x = approx(x);
                let p = (x, bbox.min_y);
                let q = (x, bbox.max_y);
                line_element(&mut out, "selector", Some(*method), p, q);
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn dual_svg(
    doc: &InstanceDocument,
    result: &SolveResult,
    methods: &[SelectorMethod],
) -> Result<String, Error> {
    let (intervals, _) = canonical_intervals(doc)?;
    let strips: Vec<DualStrip> = intervals.iter().map(segment_strip).collect();

    // The selected lines as dual points of the canonical frame.
    let mut selector_points: Vec<(SelectorMethod, DualPoint)> = Vec::new();
    if result.feasible {
        if let Ok((family, _)) = canonicalize(doc) {
            for method in methods {
                if let Ok(line) = select(&family, *method) {
                    selector_points
                        .push((*method, DualPoint::new(line.m.clone(), line.b.clone())));
                }
            }
        }
    }

    let mut bbox = BBox::new();
    for v in result.polygon.vertices() {
        bbox.add(approx(&v.m), plot_y(approx(&v.b)));
    }
    for (_, p) in &selector_points {
        bbox.add(approx(&p.m), plot_y(approx(&p.b)));
    }
    if bbox.is_empty() {
        // No polygon to frame: focus on the pairwise crossings of the strip
        // boundary lines instead.
        for (i, a) in strips.iter().enumerate() {
            for b in strips.iter().skip(i + 1) {
                if a.slope == b.slope {
                    continue;
                }
                for ca in [&a.lower, &a.upper] {
                    for cb in [&b.lower, &b.upper] {
                        let m = (cb - ca) / (&a.slope - &b.slope);
                        let bb = &a.slope * &m + ca;
                        bbox.add(approx(&m), plot_y(approx(&bb)));
                    }
                }
            }
        }
    }
    if bbox.is_empty() {
        for s in &strips {
            bbox.add(0.0, plot_y(approx(&s.lower)));
            bbox.add(0.0, plot_y(approx(&s.upper)));
        }
    }
    let bbox = bbox.finished();

    let mut out = String::new();
    svg_header(&mut out, &bbox, doc.name.as_deref());
    for strip in &strips {
        let (slope, lower, upper) = (approx(&strip.slope), approx(&strip.lower), approx(&strip.upper));
        for c in [lower, upper] {
            let p = (bbox.min_x, plot_y(slope * bbox.min_x + c));
            let q = (bbox.max_x, plot_y(slope * bbox.max_x + c));
            line_element(&mut out, "strip", None, p, q);
        }
    }
    let vertices = result.polygon.vertices();
    match result.polygon.class() {
        PolygonClass::Empty => {}
        PolygonClass::SinglePoint => {
            let v = &vertices[0];
            circle_element(
                &mut out,
                "stab-polygon",
                None,
                (approx(&v.m), plot_y(approx(&v.b))),
                1.6 * bbox.stroke(),
            );
        }
        PolygonClass::SegmentShaped => {
            let (a, b) = (&vertices[0], &vertices[1]);
            line_element(
                &mut out,
                "stab-polygon",
                None,
                (approx(&a.m), plot_y(approx(&a.b))),
                (approx(&b.m), plot_y(approx(&b.b))),
            );
        }
        PolygonClass::FullDimensional => {
            let points: Vec<String> = vertices
                .iter()
                .map(|v| format!("{},{}", sig12(approx(&v.m)), sig12(plot_y(approx(&v.b)))))
                .collect();
            let _ = writeln!(
                out,
                r#"  <polygon class="stab-polygon" points="{}"/>"#,
                points.join(" ")
            );
        }
    }
    for (method, p) in &selector_points {
        circle_element(
            &mut out,
            "selector",
            Some(*method),
            (approx(&p.m), plot_y(approx(&p.b))),
            1.2 * bbox.stroke(),
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Render the instance and its solution as a standalone SVG document.
pub fn emit_svg(
    doc: &InstanceDocument,
    result: &SolveResult,
    mode: PlotMode,
    methods: &[SelectorMethod],
) -> Result<String, Error> {
    match mode {
        PlotMode::Primal => Ok(primal_svg(doc, result, methods)),
        PlotMode::Dual => dual_svg(doc, result, methods),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{parse_instance, solve_instance};

    fn wide_instance() -> InstanceDocument {
        parse_instance(
            r#"{"segments":[
                {"x":1,"lo":1,"hi":7},{"x":3,"lo":4,"hi":10},{"x":4,"lo":3,"hi":8},
                {"x":7,"lo":6,"hi":9},{"x":9,"lo":3,"hi":10},{"x":10,"lo":2,"hi":12}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn primal_plot_draws_every_segment_and_selector() {
        let doc = wide_instance();
        let result = solve_instance(&doc).unwrap();
        let svg = emit_svg(&doc, &result, PlotMode::Primal, &SelectorMethod::ALL).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(r#"class="segment""#).count(), 6);
        assert_eq!(svg.matches(r#"class="selector""#).count(), 5);
        assert!(svg.contains(r#"data-method="centroid""#));
    }

    #[test]
    fn primal_plot_respects_the_method_filter() {
        let doc = wide_instance();
        let result = solve_instance(&doc).unwrap();
        let svg = emit_svg(
            &doc,
            &result,
            PlotMode::Primal,
            &[SelectorMethod::ExtremeMin, SelectorMethod::ExtremeMax],
        )
        .unwrap();
        assert_eq!(svg.matches(r#"class="selector""#).count(), 2);
    }

    #[test]
    fn dual_plot_has_strips_polygon_and_points() {
        let doc = wide_instance();
        let result = solve_instance(&doc).unwrap();
        let svg = emit_svg(&doc, &result, PlotMode::Dual, &SelectorMethod::ALL).unwrap();
        assert_eq!(svg.matches(r#"class="strip""#).count(), 12);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert_eq!(svg.matches(r#"<circle class="selector""#).count(), 5);
    }

    #[test]
    fn dual_plot_of_an_infeasible_instance_has_no_polygon() {
        let doc = parse_instance(
            r#"{"segments":[{"x":0,"lo":0,"hi":1},{"x":1,"lo":3,"hi":4},{"x":2,"lo":0,"hi":1}]}"#,
        )
        .unwrap();
        let result = solve_instance(&doc).unwrap();
        let svg = emit_svg(&doc, &result, PlotMode::Dual, &SelectorMethod::ALL).unwrap();
        assert_eq!(svg.matches(r#"class="strip""#).count(), 6);
        assert!(!svg.contains("<polygon"));
        assert!(!svg.contains(r#"<circle class="selector""#));
    }

    #[test]
    fn dual_plot_marks_a_unique_transversal_with_a_point() {
        let doc = parse_instance(
            r#"{"segments":[{"x":0,"lo":0,"hi":1},{"x":1,"lo":1,"hi":2},{"x":2,"lo":0,"hi":1}]}"#,
        )
        .unwrap();
        let result = solve_instance(&doc).unwrap();
        let svg = emit_svg(&doc, &result, PlotMode::Dual, &[]).unwrap();
        assert!(svg.contains(r#"<circle class="stab-polygon""#));
        assert!(!svg.contains("<polygon"));
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(-2.5), "-2.5");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(1e-4), "0.0001");
        assert_eq!(sig12(1234.5), "1234.5");
    }
}
