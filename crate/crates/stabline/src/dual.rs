//! The dual plane of lines, where the transversal set becomes a polygon.
//!
//! A non-vertical line `y = m·x + b` is identified with the point `(m, b)`.
//! Under this identification the lines through one fixed point `P` form a
//! line (the sheaf dual), the lines crossing one vertical segment form a
//! strip between two parallel lines, and the lines crossing every segment
//! of a family form the intersection of those strips: a convex polygon,
//! possibly degenerate or empty. This module builds that polygon from the
//! small hand-checked candidate set (endpoint lines that cross everything)
//! and also provides a deliberately naive feasibility oracle used to
//! cross-check the fast decision procedure.

use std::fmt;

use crate::family::{SegmentFamily, VerticalSegment};
use crate::geom::{Line, Point};
use crate::rational::{rat, Rational};
use crate::stabbing::{extreme_max_ba, extreme_min_ab, stabs_all};
use crate::Error;

/// A point of the dual plane, i.e. a non-vertical primal line.
/// Ordering is lexicographic in `(m, b)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DualPoint {
    pub m: Rational,
    pub b: Rational,
}

impl DualPoint {
    pub fn new(m: Rational, b: Rational) -> Self {
        DualPoint { m, b }
    }
}

impl fmt::Display for DualPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.b)
    }
}

/// Line-to-point side of the duality.
pub fn line_to_dual(l: &Line) -> DualPoint {
    DualPoint::new(l.m.clone(), l.b.clone())
}

/// Point-to-line side of the duality; exact inverse of [`line_to_dual`].
pub fn dual_to_line(p: &DualPoint) -> Line {
    Line::new(p.m.clone(), p.b.clone())
}

/// The dual image of the sheaf of lines through `p`: every line through
/// `p` has its dual point on the returned dual-plane line `b = −x_p·m + y_p`.
pub fn point_sheaf_dual(p: &Point) -> Line {
    Line::new(-&p.x, p.y.clone())
}

/// The set of lines crossing one segment, as a region of the dual plane:
/// all `(m, b)` with `lower ≤ m·x + b ≤ upper`, bounded by the two parallel
/// dual lines `b = lower − x·m` and `b = upper − x·m` of slope `−x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualStrip {
    pub slope: Rational,
    pub lower: Rational,
    pub upper: Rational,
}

impl DualStrip {
    /// Membership test; equivalent to "the primal line crosses the segment".
    pub fn contains(&self, p: &DualPoint) -> bool {
        // slope = −x, so b − slope·m is the primal line's value at x.
        let value = &p.b - &(&self.slope * &p.m);
        self.lower <= value && value <= self.upper
    }
}

/// The strip of all lines crossing `s`.
pub fn segment_strip(s: &VerticalSegment) -> DualStrip {
    DualStrip { slope: -s.x(), lower: s.lo().clone(), upper: s.hi().clone() }
}

/// Dimension classes of the transversal polygon.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolygonClass {
    Empty,
    SinglePoint,
    SegmentShaped,
    FullDimensional,
}

impl PolygonClass {
    pub fn name(&self) -> &'static str {
        match self {
            PolygonClass::Empty => "empty",
            PolygonClass::SinglePoint => "single-point",
            PolygonClass::SegmentShaped => "segment-shaped",
            PolygonClass::FullDimensional => "full-dimensional",
        }
    }
}

/// The convex polygon of all transversals of a family, in dual coordinates.
///
/// Vertices are pairwise distinct extreme points, ordered counterclockwise
/// starting at the lexicographically smallest `(m, b)`; collinear boundary
/// points are never kept. Zero, one, or two vertices encode the empty,
/// single-line, and slope-degenerate cases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabPolygon {
    vertices: Vec<DualPoint>,
}

/// Cross product of `a − o` and `b − o` in dual coordinates; positive on
/// counterclockwise turns.
fn turn(o: &DualPoint, a: &DualPoint, b: &DualPoint) -> Rational {
    (&a.m - &o.m) * (&b.b - &o.b) - (&b.m - &o.m) * (&a.b - &o.b)
}

/// Strict convex hull of a deduplicated, lexicographically sorted point
/// set, counterclockwise from the smallest point. Collinear points are
/// dropped; an input that is entirely collinear collapses to its two
/// extremes (or fewer).
fn convex_hull_ccw(points: Vec<DualPoint>) -> Vec<DualPoint> {
    if points.len() <= 2 {
        return points;
    }
    let zero = Rational::zero();
    let mut lower: Vec<DualPoint> = Vec::new();
    for p in &points {
        while lower.len() >= 2
            && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= zero
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<DualPoint> = Vec::new();
    for p in points.iter().rev() {
        while upper.len() >= 2
            && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= zero
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    // A fully collinear input leaves one point per chain: its two extremes.
    lower.extend(upper);
    lower
}

impl StabPolygon {
    pub fn empty() -> Self {
        StabPolygon { vertices: Vec::new() }
    }

    /// Canonical polygon from an arbitrary bag of candidate dual points:
    /// exact deduplication, then extreme points only, counterclockwise from
    /// the lexicographically smallest vertex.
    pub(crate) fn from_candidates(mut points: Vec<DualPoint>) -> Self {
        points.sort();
        points.dedup();
        StabPolygon { vertices: convex_hull_ccw(points) }
    }

    pub fn vertices(&self) -> &[DualPoint] {
        &self.vertices
    }

    pub fn class(&self) -> PolygonClass {
        match self.vertices.len() {
            0 => PolygonClass::Empty,
            1 => PolygonClass::SinglePoint,
            2 => PolygonClass::SegmentShaped,
            _ => PolygonClass::FullDimensional,
        }
    }

    /// Closed membership test (boundary counts as inside).
    pub fn contains(&self, q: &DualPoint) -> bool {
        let zero = Rational::zero();
        match self.class() {
            PolygonClass::Empty => false,
            PolygonClass::SinglePoint => self.vertices[0] == *q,
            PolygonClass::SegmentShaped => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                if turn(a, b, q) != zero {
                    return false;
                }
                // q is on the supporting line; bound it to the segment.
                let along = (&b.m - &a.m) * (&q.m - &a.m) + (&b.b - &a.b) * (&q.b - &a.b);
                let full = (&b.m - &a.m) * (&b.m - &a.m) + (&b.b - &a.b) * (&b.b - &a.b);
                zero <= along && along <= full
            }
            PolygonClass::FullDimensional => {
                let n = self.vertices.len();
                (0..n).all(|k| turn(&self.vertices[k], &self.vertices[(k + 1) % n], q) >= zero)
            }
        }
    }

    /// Signed shoelace area; positive for the counterclockwise vertex order
    /// kept by this type, zero for degenerate classes.
    fn signed_area_twice(&self) -> Rational {
        let n = self.vertices.len();
        let mut acc = Rational::zero();
        for k in 0..n {
            let a = &self.vertices[k];
            let b = &self.vertices[(k + 1) % n];
            acc = acc + (&a.m * &b.b - &b.m * &a.b);
        }
        acc
    }

    /// Barycenter of the polygon as a measure: the area centroid when full
    /// dimensional, the midpoint of a segment-shaped polygon, the vertex
    /// itself for a single point, absent when empty. Computed by the exact
    /// shoelace centroid formula, which agrees with the area integral.
    pub fn centroid(&self) -> Option<DualPoint> {
        match self.class() {
            PolygonClass::Empty => None,
            PolygonClass::SinglePoint => Some(self.vertices[0].clone()),
            PolygonClass::SegmentShaped => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                let half = rat(1, 2);
                Some(DualPoint::new((&a.m + &b.m) * &half, (&a.b + &b.b) * half))
            }
            PolygonClass::FullDimensional => {
                let n = self.vertices.len();
                let mut sum_m = Rational::zero();
                let mut sum_b = Rational::zero();
                for k in 0..n {
                    let a = &self.vertices[k];
                    let b = &self.vertices[(k + 1) % n];
                    let w = &a.m * &b.b - &b.m * &a.b;
                    sum_m = sum_m + (&a.m + &b.m) * &w;
                    sum_b = sum_b + (&a.b + &b.b) * w;
                }
                let scale = rat(3, 1) * self.signed_area_twice();
                Some(DualPoint::new(sum_m / &scale, sum_b / scale))
            }
        }
    }
}

/// Absolute shoelace area of the polygon; zero for all degenerate classes.
pub fn polygon_area(p: &StabPolygon) -> Rational {
    p.signed_area_twice().abs() / rat(2, 1)
}

/// The transversal polygon of a two-segment family: the dual points of the
/// four endpoint lines `A₁A₂`, `A₁B₂`, `B₁A₂`, `B₁B₂`. It is a (possibly
/// degenerate) parallelogram whose barycenter is the dual of the line
/// through the two segment midpoints.
pub fn two_segment_parallelogram(
    s1: &VerticalSegment,
    s2: &VerticalSegment,
) -> Result<StabPolygon, Error> {
    if s1.x() == s2.x() {
        return Err(Error::VerticalLine);
    }
    let mut candidates = Vec::with_capacity(4);
    for p in [s1.bottom(), s1.top()] {
        for q in [s2.bottom(), s2.top()] {
            let line = Line::through(&p, &q).expect("distinct abscissae");
            candidates.push(line_to_dual(&line));
        }
    }
    Ok(StabPolygon::from_candidates(candidates))
}

/// The convex polygon of all transversals of the family.
///
/// Candidates are the two extreme lines plus every bottom-bottom and
/// top-top endpoint line; whatever fails to cross all segments is dropped,
/// and the survivors reduce to their convex hull. The result is empty
/// exactly when the family has no transversal, and it coincides with the
/// intersection of all segment strips.
pub fn stabbing_polygon(f: &SegmentFamily) -> Result<StabPolygon, Error> {
    if f.len() < 2 {
        return Err(Error::InsufficientSegments { needed: 2, found: f.len() });
    }
    let mut candidates = Vec::new();
    let mut push_if_stabs = |line: Line| {
        if stabs_all(&line, f) {
            candidates.push(line_to_dual(&line));
        }
    };
    push_if_stabs(extreme_min_ab(f).expect("checked n >= 2").line);
    push_if_stabs(extreme_max_ba(f).expect("checked n >= 2").line);
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let bottoms = Line::through(&f.get(i).bottom(), &f.get(j).bottom())
                .expect("distinct abscissae");
            push_if_stabs(bottoms);
            let tops =
                Line::through(&f.get(i).top(), &f.get(j).top()).expect("distinct abscissae");
            push_if_stabs(tops);
        }
    }
    Ok(StabPolygon::from_candidates(candidates))
}

/// Brute-force feasibility: intersect every non-parallel pair of strip
/// boundary lines and test each intersection against all strips.
///
/// The strip intersection is bounded (any two strips of distinct slopes
/// already bound it), and a nonempty bounded intersection of half-planes
/// contains a vertex, which lies on two independent boundary lines. So
/// scanning all pairwise boundary intersections finds a transversal
/// whenever one exists, independently of the extreme-line machinery.
pub fn oracle_feasible(f: &SegmentFamily) -> Result<Option<DualPoint>, Error> {
    if f.len() < 2 {
        return Err(Error::InsufficientSegments { needed: 2, found: f.len() });
    }
    let strips: Vec<DualStrip> = f.iter().map(segment_strip).collect();
    // Boundary lines of the strips, as (slope, intercept) in the dual plane.
    let mut boundaries = Vec::with_capacity(2 * strips.len());
    for s in &strips {
        boundaries.push((s.slope.clone(), s.lower.clone()));
        boundaries.push((s.slope.clone(), s.upper.clone()));
    }
    for (u, (s1, c1)) in boundaries.iter().enumerate() {
        for (s2, c2) in boundaries.iter().skip(u + 1) {
            if s1 == s2 {
                continue;
            }
            let m = (c2 - c1) / (s1 - s2);
            let b = s1 * &m + c1;
            let candidate = DualPoint::new(m, b);
            if strips.iter().all(|strip| strip.contains(&candidate)) {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}
