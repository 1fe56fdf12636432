//! Instance documents: JSON ingestion, normalization to vertical position,
//! and the all-in-one solver.
//!
//! Input segments may be given directly as vertical segments or, together
//! with a direction vector, as endpoint pairs of any parallel family. A
//! positive similarity (rotation plus positive scaling, chosen so every
//! scalar stays rational) turns the family vertical; it preserves incidence
//! and orientation signs, so transversality questions transfer verbatim.
//! Selected lines are mapped back into the original frame before they are
//! reported, which can legitimately produce a vertical line; the
//! [`MappedLine`] type keeps that case representable.

use serde_json::{json, Map, Value};

use crate::dual::{polygon_area, stabbing_polygon, StabPolygon};
use crate::family::{SegmentFamily, VerticalSegment};
use crate::geom::{Line, Point};
use crate::rational::Rational;
use crate::selectors::{select, SelectorMethod};
use crate::stabbing::feasibility;
use crate::Error;

/// One segment as the input file stated it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RawSegment {
    Vertical { x: Rational, lo: Rational, hi: Rational },
    Endpoints { p: Point, q: Point },
}

impl RawSegment {
    pub fn endpoints(&self) -> (Point, Point) {
        match self {
            RawSegment::Vertical { x, lo, hi } => {
                (Point::new(x.clone(), lo.clone()), Point::new(x.clone(), hi.clone()))
            }
            RawSegment::Endpoints { p, q } => (p.clone(), q.clone()),
        }
    }
}

/// A parsed instance file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InstanceDocument {
    /// Common direction of all segments; absent means vertical.
    pub direction: Option<(Rational, Rational)>,
    pub segments: Vec<RawSegment>,
    pub name: Option<String>,
}

fn input(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Input { path: path.into(), message: message.into() }
}

fn json_rational(value: &Value, path: &str) -> Result<Rational, Error> {
    let text = match value {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => {
            return Err(input(
                path,
                format!("expected a number or an exact numeric string, got {other}"),
            ))
        }
    };
    text.parse::<Rational>().map_err(|e| input(path, e.to_string()))
}

fn json_point(value: &Value, path: &str) -> Result<Point, Error> {
    let arr = value
        .as_array()
        .ok_or_else(|| input(path, "expected a two-element coordinate array"))?;
    if arr.len() != 2 {
        return Err(input(path, format!("expected 2 coordinates, got {}", arr.len())));
    }
    Ok(Point::new(
        json_rational(&arr[0], &format!("{path}[0]"))?,
        json_rational(&arr[1], &format!("{path}[1]"))?,
    ))
}

fn check_fields(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Result<(), Error> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(input(
                format!("{path}.{key}"),
                format!("unknown field (expected one of: {})", allowed.join(", ")),
            ));
        }
    }
    Ok(())
}

/// Parse and validate an instance document.
///
/// Rationals are accepted as JSON numbers (including decimals and
/// exponents), `"p/q"` strings, or decimal strings; every form converts
/// exactly. Errors carry the JSON path of the offending field.
pub fn parse_instance(text: &str) -> Result<InstanceDocument, Error> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| input("$", e.to_string()))?;
    let obj = root.as_object().ok_or_else(|| input("$", "expected a JSON object"))?;
    check_fields(obj, "$", &["direction", "segments", "name"])?;

    let direction = match obj.get("direction") {
        None => None,
        Some(v) => {
            let arr = v
                .as_array()
                .ok_or_else(|| input("$.direction", "expected a two-element array"))?;
            if arr.len() != 2 {
                return Err(input(
                    "$.direction",
                    format!("expected 2 components, got {}", arr.len()),
                ));
            }
            let dx = json_rational(&arr[0], "$.direction[0]")?;
            let dy = json_rational(&arr[1], "$.direction[1]")?;
            if dx.is_zero() && dy.is_zero() {
                return Err(Error::ZeroDirection);
            }
            Some((dx, dy))
        }
    };

    let name = match obj.get("name") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(input("$.name", "expected a string")),
    };

    let segments_value =
        obj.get("segments").ok_or_else(|| input("$", "missing field: segments"))?;
    let items = segments_value
        .as_array()
        .ok_or_else(|| input("$.segments", "expected an array"))?;

    let mut segments = Vec::with_capacity(items.len());
    for (idx, item) in items.iter().enumerate() {
        let path = format!("$.segments[{idx}]");
        let seg = item
            .as_object()
            .ok_or_else(|| input(&path, "expected an object"))?;
        let parsed = if seg.contains_key("x") {
            check_fields(seg, &path, &["x", "lo", "hi"])?;
            let field = |name: &str| {
                seg.get(name)
                    .ok_or_else(|| input(&path, format!("missing field: {name}")))
            };
            let x = json_rational(field("x")?, &format!("{path}.x"))?;
            let lo = json_rational(field("lo")?, &format!("{path}.lo"))?;
            let hi = json_rational(field("hi")?, &format!("{path}.hi"))?;
            if lo > hi {
                return Err(input(&path, format!("lo {lo} exceeds hi {hi}")));
            }
            RawSegment::Vertical { x, lo, hi }
        } else if seg.contains_key("p") {
            check_fields(seg, &path, &["p", "q"])?;
            let q = seg
                .get("q")
                .ok_or_else(|| input(&path, "missing field: q"))?;
            RawSegment::Endpoints {
                p: json_point(&seg["p"], &format!("{path}.p"))?,
                q: json_point(q, &format!("{path}.q"))?,
            }
        } else {
            return Err(input(&path, "segment needs fields x/lo/hi or p/q"));
        };
        segments.push(parsed);
    }

    let doc = InstanceDocument { direction, segments, name };
    validate_parallel(&doc)?;
    Ok(doc)
}

/// Every raw segment must be parallel to the declared direction (vertical
/// when no direction is declared). Point segments are parallel to anything.
fn validate_parallel(doc: &InstanceDocument) -> Result<(), Error> {
    let (dx, dy) = effective_direction(doc);
    for (index, seg) in doc.segments.iter().enumerate() {
        let parallel = match seg {
            RawSegment::Vertical { .. } => dx.is_zero(),
            RawSegment::Endpoints { p, q } => {
                (&q.x - &p.x) * &dy == (&q.y - &p.y) * &dx
            }
        };
        if !parallel {
            return Err(Error::NotParallel { index });
        }
    }
    Ok(())
}

fn effective_direction(doc: &InstanceDocument) -> (Rational, Rational) {
    doc.direction
        .clone()
        .unwrap_or_else(|| (Rational::zero(), Rational::one()))
}

/// JSON encoding of an exact rational: a plain number when it is an integer
/// that fits in 64 bits, otherwise a reduced `"p/q"` string. Both forms
/// parse back exactly.
pub fn rational_to_json(r: &Rational) -> Value {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        if let Some(n) = r.numer().to_i64() {
            return json!(n);
        }
    }
    json!(r.to_string())
}

/// Inverse-normalized JSON document; `parse_instance` of the output yields
/// the same document back.
pub fn serialize_instance(doc: &InstanceDocument) -> String {
    let mut root = Map::new();
    if let Some((dx, dy)) = &doc.direction {
        root.insert(
            "direction".to_string(),
            json!([rational_to_json(dx), rational_to_json(dy)]),
        );
    }
    if let Some(name) = &doc.name {
        root.insert("name".to_string(), json!(name));
    }
    let segments: Vec<Value> = doc
        .segments
        .iter()
        .map(|seg| match seg {
            RawSegment::Vertical { x, lo, hi } => json!({
                "x": rational_to_json(x),
                "lo": rational_to_json(lo),
                "hi": rational_to_json(hi),
            }),
            RawSegment::Endpoints { p, q } => json!({
                "p": [rational_to_json(&p.x), rational_to_json(&p.y)],
                "q": [rational_to_json(&q.x), rational_to_json(&q.y)],
            }),
        })
        .collect();
    root.insert("segments".to_string(), json!(segments));
    serde_json::to_string_pretty(&Value::Object(root)).expect("valid JSON value")
}

/// A line expressed in the original input frame. Mapping a canonical-frame
/// line back through the inverse similarity can turn it vertical (for
/// example, horizontal input segments stabbed by a vertical line), so the
/// vertical case is explicit here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MappedLine {
    Slanted(Line),
    Vertical { x: Rational },
}

impl MappedLine {
    pub fn to_json(&self) -> Value {
        match self {
            MappedLine::Slanted(l) => json!({
                "m": rational_to_json(&l.m),
                "b": rational_to_json(&l.b),
            }),
            MappedLine::Vertical { x } => json!({
                "vertical": true,
                "x": rational_to_json(x),
            }),
        }
    }
}

/// The positive similarity `(x, y) ↦ (dy·x − dx·y, dx·x + dy·y)` that turns
/// the declared direction vertical, together with enough structure to map
/// results back. Its determinant is `dx² + dy² > 0`, so orientation signs
/// are preserved and the transversal structure transfers exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalMap {
    dx: Rational,
    dy: Rational,
}

impl CanonicalMap {
    pub fn new(dx: Rational, dy: Rational) -> Result<Self, Error> {
        if dx.is_zero() && dy.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(CanonicalMap { dx, dy })
    }

    pub fn identity() -> Self {
        CanonicalMap { dx: Rational::zero(), dy: Rational::one() }
    }

    pub fn is_identity(&self) -> bool {
        self.dx.is_zero() && self.dy == Rational::one()
    }

    pub fn det(&self) -> Rational {
        &self.dx * &self.dx + &self.dy * &self.dy
    }

    /// Original frame to canonical frame.
    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.dy * &p.x - &self.dx * &p.y,
            &self.dx * &p.x + &self.dy * &p.y,
        )
    }

    /// Canonical frame back to the original frame.
    pub fn apply_inverse(&self, p: &Point) -> Point {
        let det = self.det();
        Point::new(
            (&self.dy * &p.x + &self.dx * &p.y) / &det,
            (&self.dy * &p.y - &self.dx * &p.x) / det,
        )
    }

    /// Original-frame image of a canonical line `y = m·x + b`: a point lies
    /// on it exactly when its canonical image satisfies the line equation,
    /// which solves to a line again, vertical when `dy + m·dx = 0`.
    pub fn line_back(&self, l: &Line) -> MappedLine {
        let den = &self.dy + &(&l.m * &self.dx);
        if den.is_zero() {
            // dy + m·dx and dx − m·dy cannot both vanish for a nonzero
            // direction, so the division below is safe.
            let num = &self.dx - &(&l.m * &self.dy);
            MappedLine::Vertical { x: &l.b / &num }
        } else {
            MappedLine::Slanted(Line::new(
                (&(&l.m * &self.dy) - &self.dx) / &den,
                &l.b / &den,
            ))
        }
    }

    /// Canonical-frame image of an original-frame line, via the images of
    /// two of its points. Vertical when the line is parallel to the
    /// declared direction.
    pub fn line_forward(&self, l: &Line) -> MappedLine {
        let p0 = self.apply(&Point::new(Rational::zero(), l.b.clone()));
        let p1 = self.apply(&Point::new(Rational::one(), l.eval(&Rational::one())));
        match Line::through(&p0, &p1) {
            Ok(line) => MappedLine::Slanted(line),
            Err(_) => MappedLine::Vertical { x: p0.x },
        }
    }
}

/// Canonical-frame images of the raw segments, in input order, before any
/// sorting or same-abscissa merging. Unlike a [`SegmentFamily`], the result
/// may contain repeated abscissae.
pub fn canonical_intervals(
    doc: &InstanceDocument,
) -> Result<(Vec<VerticalSegment>, CanonicalMap), Error> {
    let (dx, dy) = effective_direction(doc);
    let map = CanonicalMap::new(dx, dy)?;
    if doc.segments.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut mapped = Vec::with_capacity(doc.segments.len());
    for (index, seg) in doc.segments.iter().enumerate() {
        let (p, q) = seg.endpoints();
        let p = map.apply(&p);
        let q = map.apply(&q);
        if p.x != q.x {
            return Err(Error::NotParallel { index });
        }
        let (lo, hi) = if p.y <= q.y { (p.y, q.y) } else { (q.y, p.y) };
        mapped.push(VerticalSegment::new(p.x, lo, hi).expect("ordered interval"));
    }
    Ok((mapped, map))
}

/// Normalize an instance to a vertical family: apply the canonical map,
/// sort by abscissa, and merge same-abscissa segments by interval
/// intersection. Disjoint same-abscissa intervals mean no non-vertical
/// line can cross both, which is reported as [`Error::DisjointAtAbscissa`].
pub fn canonicalize(doc: &InstanceDocument) -> Result<(SegmentFamily, CanonicalMap), Error> {
    let (intervals, map) = canonical_intervals(doc)?;
    let mut mapped: Vec<(Rational, Rational, Rational)> = intervals
        .into_iter()
        .map(|s| (s.x().clone(), s.lo().clone(), s.hi().clone()))
        .collect();
    mapped.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut merged: Vec<(Rational, Rational, Rational)> = Vec::new();
    for (x, lo, hi) in mapped {
        match merged.last_mut() {
            Some((last_x, last_lo, last_hi)) if *last_x == x => {
                // A line crosses both same-abscissa segments only through
                // their common part.
                if lo > *last_lo {
                    *last_lo = lo;
                }
                if hi < *last_hi {
                    *last_hi = hi;
                }
                if last_lo > last_hi {
                    return Err(Error::DisjointAtAbscissa(x));
                }
            }
            _ => merged.push((x, lo, hi)),
        }
    }
    let segments: Vec<VerticalSegment> = merged
        .into_iter()
        .map(|(x, lo, hi)| VerticalSegment::new(x, lo, hi).expect("merged interval is nonempty"))
        .collect();
    let family = SegmentFamily::new(segments).expect("merged abscissae strictly increase");
    Ok((family, map))
}

/// Everything the solver knows about one instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveResult {
    pub feasible: bool,
    pub unique: bool,
    /// One selected transversal per method, in the original input frame.
    /// Empty when infeasible.
    pub lines: Vec<(SelectorMethod, MappedLine)>,
    /// The transversal polygon, in canonical dual coordinates.
    pub polygon: StabPolygon,
    pub area: Rational,
    /// Present when infeasibility was decided during normalization.
    pub note: Option<String>,
}

impl SolveResult {
    pub fn line_for(&self, method: SelectorMethod) -> Option<&MappedLine> {
        self.lines.iter().find(|(m, _)| *m == method).map(|(_, l)| l)
    }
}

/// Canonicalize, decide feasibility, build the polygon, and run every
/// selector. Needs at least two segments; a lone segment has no polygon to
/// speak of (its transversals fill a whole dual strip).
pub fn solve_instance(doc: &InstanceDocument) -> Result<SolveResult, Error> {
    let (family, map) = match canonicalize(doc) {
        Ok(pair) => pair,
        Err(err @ Error::DisjointAtAbscissa(_)) => {
            return Ok(SolveResult {
                feasible: false,
                unique: false,
                lines: Vec::new(),
                polygon: StabPolygon::empty(),
                area: Rational::zero(),
                note: Some(err.to_string()),
            })
        }
        Err(other) => return Err(other),
    };
    if family.len() < 2 {
        return Err(Error::InsufficientSegments { needed: 2, found: family.len() });
    }
    let report = feasibility(&family);
    let polygon = stabbing_polygon(&family)?;
    let area = polygon_area(&polygon);
    let mut lines = Vec::new();
    if report.feasible {
        for method in SelectorMethod::ALL {
            let line = select(&family, method)?;
            lines.push((method, map.line_back(&line)));
        }
    }
    Ok(SolveResult {
        feasible: report.feasible,
        unique: report.unique,
        lines,
        polygon,
        area,
        note: None,
    })
}
