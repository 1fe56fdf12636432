//! Deciding whether a family of vertical segments has a common transversal.
//!
//! Write `A_i` and `B_i` for the lower and upper endpoints of segment `i`.
//! Among all lines through a lower endpoint of one segment and an upper
//! endpoint of a later one, take the one of minimum slope, `r = A_sB_t`;
//! symmetrically take the maximum-slope line `p = B_uA_v` through an upper
//! endpoint and a later lower endpoint. A transversal exists if and only if
//! `r` crosses every segment (equivalently: `p` does), and when one exists,
//! `r` and `p` are themselves the transversals of maximum and minimum slope.
//! The transversal is unique exactly when `r` and `p` coincide.

use crate::family::{SegmentFamily, VerticalSegment};
use crate::geom::{phi, Line, Point};
use crate::rational::Rational;
use crate::Error;

/// An extreme-slope witness line together with the 1-based pair of segment
/// indices `(i, j)`, `i < j`, whose endpoints span it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremeLine {
    pub line: Line,
    pub i: usize,
    pub j: usize,
}

/// Outcome of the transversal decision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// A transversal when one exists; for two or more segments this is the
    /// minimum-slope endpoint line `A_sB_t`.
    pub witness: Option<Line>,
    /// True when exactly one transversal exists. Implies `feasible`.
    pub unique: bool,
}

/// Does the line meet the closed segment? Boundary contact counts.
pub fn stabs(l: &Line, s: &VerticalSegment) -> bool {
    let y = l.eval(s.x());
    *s.lo() <= y && y <= *s.hi()
}

/// Does the line meet every segment of the family?
pub fn stabs_all(l: &Line, f: &SegmentFamily) -> bool {
    f.iter().all(|s| stabs(l, s))
}

fn require(f: &SegmentFamily, needed: usize) -> Result<(), Error> {
    if f.len() < needed {
        return Err(Error::InsufficientSegments { needed, found: f.len() });
    }
    Ok(())
}

/// The minimum-slope line through a lower endpoint `A_i` and a later upper
/// endpoint `B_j`. Ties resolve to the lexicographically smallest `(i, j)`.
pub fn extreme_min_ab(f: &SegmentFamily) -> Result<ExtremeLine, Error> {
    require(f, 2)?;
    let mut best: Option<ExtremeLine> = None;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let line = Line::through(&f.get(i).bottom(), &f.get(j).top())
                .expect("family abscissae are strictly increasing");
            if best.as_ref().is_none_or(|cur| line.m < cur.line.m) {
                best = Some(ExtremeLine { line, i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(best.expect("at least one index pair exists"))
}

/// The maximum-slope line through an upper endpoint `B_i` and a later lower
/// endpoint `A_j`. Ties resolve to the lexicographically smallest `(i, j)`.
pub fn extreme_max_ba(f: &SegmentFamily) -> Result<ExtremeLine, Error> {
    require(f, 2)?;
    let mut best: Option<ExtremeLine> = None;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let line = Line::through(&f.get(i).top(), &f.get(j).bottom())
                .expect("family abscissae are strictly increasing");
            if best.as_ref().is_none_or(|cur| line.m > cur.line.m) {
                best = Some(ExtremeLine { line, i: i + 1, j: j + 1 });
            }
        }
    }
    Ok(best.expect("at least one index pair exists"))
}

/// Decide existence and uniqueness of a transversal.
///
/// A single segment is always feasible; the witness is then the horizontal
/// line through its midpoint. With two or more segments, feasibility is
/// exactly "the minimum-slope endpoint line crosses everything", an
/// O(n²) candidate scan followed by an O(n) check.
pub fn feasibility(f: &SegmentFamily) -> FeasibilityReport {
    if f.len() == 1 {
        let witness = Line::new(Rational::zero(), f.get(0).midpoint().y);
        return FeasibilityReport { feasible: true, witness: Some(witness), unique: false };
    }
    let r = extreme_min_ab(f).expect("checked n >= 2");
    if !stabs_all(&r.line, f) {
        return FeasibilityReport { feasible: false, witness: None, unique: false };
    }
    let p = extreme_max_ba(f).expect("checked n >= 2");
    // When the two extreme lines coincide the slope range of transversals
    // collapses to one value, and with it the whole solution set.
    let unique = r.line == p.line;
    FeasibilityReport { feasible: true, witness: Some(r.line), unique }
}

/// The cubic sign test: transversality is equivalent to
/// `phi(A_i, B_j, A_k) ≤ 0 ≤ phi(B_i, A_j, B_k)` for every `i < j < k`.
/// Kept as an independent cross-check for [`feasibility`].
pub fn condition_ii(f: &SegmentFamily) -> Result<bool, Error> {
    require(f, 3)?;
    let zero = Rational::zero();
    let a = |i: usize| -> Point { f.get(i).bottom() };
    let b = |i: usize| -> Point { f.get(i).top() };
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            for k in j + 1..f.len() {
                if phi(&a(i), &b(j), &a(k)) > zero || phi(&b(i), &a(j), &b(k)) < zero {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The closed interval of slopes realized by transversals, as
/// `(minimum, maximum)`. These are the slopes of `B_uA_v` and `A_sB_t`.
pub fn slope_bounds(f: &SegmentFamily) -> Result<(Rational, Rational), Error> {
    require(f, 2)?;
    if !feasibility(f).feasible {
        return Err(Error::NoTransversal);
    }
    let r = extreme_min_ab(f)?;
    let p = extreme_max_ba(f)?;
    Ok((p.line.m, r.line.m))
}
