//! Common transversals of parallel line segments, computed exactly.
//!
//! Given a family of vertical segments (or any parallel family, which an
//! input similarity first normalizes to vertical position), this crate
//! decides whether a single straight line crosses all of them, describes the
//! set of all such lines as a convex polygon in slope/intercept space, and
//! picks distinguished representatives from that set. Every scalar is an
//! exact rational; nothing here rounds except the SVG renderer, which is
//! display-only.
//!
//! The key idea is the classical point/line duality: a non-vertical line
//! `y = m·x + b` is the point `(m, b)` of the dual plane, and the lines
//! crossing one vertical segment form a strip between two parallel dual
//! lines. A line crosses every segment exactly when its dual point lies in
//! the intersection of all the strips, so the transversal problem becomes a
//! question about a convex polygon.
//!
//! ```
//! use stabline::{rat, SegmentFamily, VerticalSegment};
//! use stabline::stabbing::feasibility;
//!
//! let family = SegmentFamily::new(vec![
//!     VerticalSegment::new(rat(0, 1), rat(0, 1), rat(1, 1)).unwrap(),
//!     VerticalSegment::new(rat(1, 1), rat(1, 1), rat(2, 1)).unwrap(),
//!     VerticalSegment::new(rat(2, 1), rat(0, 1), rat(1, 1)).unwrap(),
//! ])
//! .unwrap();
//! let report = feasibility(&family);
//! assert!(report.feasible && report.unique);
//! ```

#![forbid(unsafe_code)]
// Error carries owned rationals for context; the fallible paths are cold.
#![allow(clippy::result_large_err)]

use std::fmt;

pub mod dual;
pub mod family;
pub mod geom;
pub mod instance;
pub mod rational;
pub mod selectors;
pub mod stabbing;
pub mod svg;

pub use crate::dual::{DualPoint, DualStrip, PolygonClass, StabPolygon};
pub use crate::family::{SegmentFamily, VerticalSegment};
pub use crate::geom::{orientation, phi, Line, Orientation, Point};
pub use crate::instance::{CanonicalMap, InstanceDocument, MappedLine, RawSegment, SolveResult};
pub use crate::rational::{rat, Rational};
pub use crate::selectors::SelectorMethod;
pub use crate::stabbing::{ExtremeLine, FeasibilityReport};

/// Everything that can go wrong in this crate.
///
/// Infeasibility of a family is not an error for the decision operations
/// (they report it in their result); it only becomes `NoTransversal` when an
/// operation is asked to produce a line that does not exist.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    ZeroDenominator,
    /// A text literal could not be read as an exact rational.
    NumberSyntax(String),
    /// Two points with equal abscissae define no representable line.
    VerticalLine,
    /// A segment interval with lo > hi.
    InvalidInterval { lo: Rational, hi: Rational },
    /// A family must contain at least one segment.
    EmptyFamily,
    /// Families require pairwise distinct abscissae; merge duplicates first.
    DuplicateAbscissa(Rational),
    /// The operation needs more segments than the family has.
    InsufficientSegments { needed: usize, found: usize },
    /// Asked for a stabbing line of a family that has none.
    NoTransversal,
    /// The direction of an instance must be a nonzero vector.
    ZeroDirection,
    /// A raw segment is not parallel to the declared direction.
    NotParallel { index: usize },
    /// Same-abscissa segments whose intervals share no point. Only a
    /// vertical line could meet both, and vertical transversals are outside
    /// the model, so the instance is reported infeasible with this note.
    DisjointAtAbscissa(Rational),
    /// An unrecognized selector name.
    UnknownMethod(String),
    /// A malformed instance document; `path` locates the offending field.
    Input { path: String, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::NumberSyntax(text) => {
                write!(f, "cannot parse {text:?} as an exact rational")
            }
            Error::VerticalLine => {
                write!(f, "points share an abscissa; vertical lines are not representable")
            }
            Error::InvalidInterval { lo, hi } => {
                write!(f, "segment interval is empty: lo {lo} exceeds hi {hi}")
            }
            Error::EmptyFamily => write!(f, "the family contains no segments"),
            Error::DuplicateAbscissa(x) => {
                write!(f, "two segments share the abscissa {x}; merge them before building a family")
            }
            Error::InsufficientSegments { needed, found } => {
                write!(f, "operation needs at least {needed} segments, found {found}")
            }
            Error::NoTransversal => write!(f, "no line crosses every segment"),
            Error::ZeroDirection => write!(f, "direction must be a nonzero vector"),
            Error::NotParallel { index } => {
                write!(f, "segment {index} is not parallel to the declared direction")
            }
            Error::DisjointAtAbscissa(x) => write!(
                f,
                "segments at abscissa {x} share no point; only a vertical line could cross \
                 them all, and vertical transversals are outside the model"
            ),
            Error::UnknownMethod(name) => write!(
                f,
                "unknown method {name:?} (expected extreme-min, extreme-max, midpoint, \
                 discrete, or centroid)"
            ),
            Error::Input { path, message } => write!(f, "{path}: {message}"),
        }
    }
}

impl std::error::Error for Error {}
