//! Vertical segments and validated families of them.

use std::fmt;

use crate::geom::Point;
use crate::rational::{rat, Rational};
use crate::Error;

/// The closed vertical segment `{x} × [lo, hi]`. `lo == hi` is allowed and
/// describes a single point, which several results explicitly permit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerticalSegment {
    x: Rational,
    lo: Rational,
    hi: Rational,
}

impl VerticalSegment {
    pub fn new(x: Rational, lo: Rational, hi: Rational) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(VerticalSegment { x, lo, hi })
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Lower endpoint, the `A` of the segment.
    pub fn bottom(&self) -> Point {
        Point::new(self.x.clone(), self.lo.clone())
    }

    /// Upper endpoint, the `B` of the segment.
    pub fn top(&self) -> Point {
        Point::new(self.x.clone(), self.hi.clone())
    }

    pub fn midpoint(&self) -> Point {
        Point::new(self.x.clone(), (&self.lo + &self.hi) / rat(2, 1))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for VerticalSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{x={}, [{}, {}]}}", self.x, self.lo, self.hi)
    }
}

/// A nonempty list of vertical segments with strictly increasing abscissae.
///
/// Construction sorts the input by abscissa; exact duplicates are rejected
/// rather than merged, because merging (by interval intersection) is an
/// input-normalization concern handled before a family exists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SegmentFamily {
    segments: Vec<VerticalSegment>,
}

impl SegmentFamily {
    pub fn new(mut segments: Vec<VerticalSegment>) -> Result<Self, Error> {
        if segments.is_empty() {
            return Err(Error::EmptyFamily);
        }
        segments.sort_by(|a, b| a.x.cmp(&b.x));
        for pair in segments.windows(2) {
            if pair[0].x == pair[1].x {
                return Err(Error::DuplicateAbscissa(pair[0].x.clone()));
            }
        }
        Ok(SegmentFamily { segments })
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        // The constructor guarantees at least one segment.
        false
    }

    pub fn segments(&self) -> &[VerticalSegment] {
        &self.segments
    }

    /// Segment at 0-based position `i` in abscissa order.
    pub fn get(&self, i: usize) -> &VerticalSegment {
        &self.segments[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VerticalSegment> {
        self.segments.iter()
    }
}
