//! Strategies for picking one distinguished transversal out of many.
//!
//! All five strategies live in the dual plane, where the transversals of a
//! family form a convex polygon: the two extreme-slope vertices, the dual
//! midpoint between them, the vertex average, and the area centroid. None
//! of them is "the best" in any formal sense; they are simply the natural
//! representatives, exposed side by side.

use std::fmt;
use std::str::FromStr;

use crate::dual::{dual_to_line, stabbing_polygon};
use crate::family::SegmentFamily;
use crate::geom::Line;
use crate::rational::{rat, Rational};
use crate::stabbing::{extreme_max_ba, extreme_min_ab, feasibility};
use crate::Error;

/// The available selection strategies.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SelectorMethod {
    /// The maximum-slope transversal `A_sB_t`.
    ExtremeMin,
    /// The minimum-slope transversal `B_uA_v`.
    ExtremeMax,
    /// The dual midpoint of the two extremes.
    Midpoint,
    /// The vertex average of the transversal polygon.
    DiscreteBarycenter,
    /// The area centroid of the transversal polygon.
    ContinuousBarycenter,
}

impl SelectorMethod {
    pub const ALL: [SelectorMethod; 5] = [
        SelectorMethod::ExtremeMin,
        SelectorMethod::ExtremeMax,
        SelectorMethod::Midpoint,
        SelectorMethod::DiscreteBarycenter,
        SelectorMethod::ContinuousBarycenter,
    ];

    /// Stable command-line token for the method.
    pub fn token(&self) -> &'static str {
        match self {
            SelectorMethod::ExtremeMin => "extreme-min",
            SelectorMethod::ExtremeMax => "extreme-max",
            SelectorMethod::Midpoint => "midpoint",
            SelectorMethod::DiscreteBarycenter => "discrete",
            SelectorMethod::ContinuousBarycenter => "centroid",
        }
    }
}

impl fmt::Display for SelectorMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SelectorMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SelectorMethod::ALL
            .into_iter()
            .find(|m| m.token() == s)
            .ok_or_else(|| Error::UnknownMethod(s.to_string()))
    }
}

fn require_feasible(f: &SegmentFamily) -> Result<(), Error> {
    if f.len() < 2 {
        return Err(Error::InsufficientSegments { needed: 2, found: f.len() });
    }
    if !feasibility(f).feasible {
        return Err(Error::NoTransversal);
    }
    Ok(())
}

/// The transversal halfway between the two extremes, in dual coordinates.
/// Convexity of the transversal polygon makes it a transversal too.
pub fn select_midpoint(f: &SegmentFamily) -> Result<Line, Error> {
    require_feasible(f)?;
    let r = extreme_min_ab(f)?.line;
    let p = extreme_max_ba(f)?.line;
    let half = rat(1, 2);
    Ok(Line::new((&r.m + &p.m) * &half, (&r.b + &p.b) * half))
}

/// The arithmetic mean of the polygon's vertices, read back as a line.
pub fn select_discrete_barycenter(f: &SegmentFamily) -> Result<Line, Error> {
    require_feasible(f)?;
    let poly = stabbing_polygon(f)?;
    let vertices = poly.vertices();
    let count = rat(vertices.len() as i64, 1);
    let mut sum_m = Rational::zero();
    let mut sum_b = Rational::zero();
    for v in vertices {
        sum_m = sum_m + &v.m;
        sum_b = sum_b + &v.b;
    }
    Ok(Line::new(sum_m / &count, sum_b / count))
}

/// The area centroid of the polygon, read back as a line. Degenerate
/// polygons use the centroid of their lower-dimensional measure: a
/// segment's midpoint or the single point itself.
pub fn select_continuous_barycenter(f: &SegmentFamily) -> Result<Line, Error> {
    require_feasible(f)?;
    let poly = stabbing_polygon(f)?;
    let centroid = poly.centroid().expect("feasible families have a nonempty polygon");
    Ok(dual_to_line(&centroid))
}

/// Dispatch over [`SelectorMethod`].
pub fn select(f: &SegmentFamily, method: SelectorMethod) -> Result<Line, Error> {
    match method {
        SelectorMethod::ExtremeMin => {
            require_feasible(f)?;
            Ok(extreme_min_ab(f)?.line)
        }
        SelectorMethod::ExtremeMax => {
            require_feasible(f)?;
            Ok(extreme_max_ba(f)?.line)
        }
        SelectorMethod::Midpoint => select_midpoint(f),
        SelectorMethod::DiscreteBarycenter => select_discrete_barycenter(f),
        SelectorMethod::ContinuousBarycenter => select_continuous_barycenter(f),
    }
}
