//! Primal-plane primitives: points, non-vertical lines, and the orientation
//! functional `phi`.

use std::cmp::Ordering;
use std::fmt;

use crate::rational::Rational;
use crate::Error;

/// A point of the primal plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The non-vertical line `y = m·x + b`. Vertical lines are unrepresentable
/// by construction; operations that could produce one return an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    pub m: Rational,
    pub b: Rational,
}

impl Line {
    pub fn new(m: Rational, b: Rational) -> Self {
        Line { m, b }
    }

    /// The unique non-vertical line through two points with distinct
    /// abscissae.
    pub fn through(p: &Point, q: &Point) -> Result<Line, Error> {
        if p.x == q.x {
            return Err(Error::VerticalLine);
        }
        let m = (&q.y - &p.y) / (&q.x - &p.x);
        let b = &p.y - &(&m * &p.x);
        Ok(Line { m, b })
    }

    /// Ordinate of the line at abscissa `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        &self.m * x + &self.b
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y = {}·x + {}", self.m, self.b)
    }
}

/// The three ways an ordered point triple can sit in the plane.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// The orientation functional: the determinant
///
/// ```text
/// | 1    1    1   |
/// | x_a  x_b  x_c |
/// | y_a  y_b  y_c |
/// ```
///
/// evaluated by cofactor expansion as
/// `(x_b − x_a)·(y_c − y_a) − (x_c − x_a)·(y_b − y_a)`.
///
/// It is zero exactly when the three points are collinear and positive
/// exactly when they wind counterclockwise. Swapping any two arguments
/// negates the value. Translations and rotations preserve it; a positive
/// similarity with scale factor `k` multiplies it by `k²`, so its sign
/// survives any of those maps.
pub fn phi(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&c.x - &a.x) * (&b.y - &a.y)
}

/// Sign of [`phi`] as a symbolic answer.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    match phi(a, b, c).cmp(&Rational::zero()) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(rat(x, 1), rat(y, 1))
    }

    #[test]
    fn phi_unit_triangle() {
        assert_eq!(phi(&pt(0, 0), &pt(1, 0), &pt(0, 1)), rat(1, 1));
    }

    #[test]
    fn phi_collinear_is_zero() {
        assert_eq!(phi(&pt(0, 0), &pt(1, 1), &pt(2, 2)), Rational::zero());
    }

    #[test]
    fn phi_matches_hand_determinant() {
        assert_eq!(phi(&pt(0, 0), &pt(2, 0), &pt(1, 5)), rat(10, 1));
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(
            orientation(&pt(0, 0), &pt(2, 0), &pt(1, 5)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(&pt(0, 0), &pt(1, 5), &pt(2, 0)),
            Orientation::Clockwise
        );
        assert_eq!(
            orientation(&pt(0, 0), &pt(1, 1), &pt(2, 2)),
            Orientation::Collinear
        );
    }

    #[test]
    fn swapping_arguments_negates_phi() {
        let (a, b, c) = (pt(3, -1), pt(7, 2), pt(-4, 5));
        let value = phi(&a, &b, &c);
        assert_eq!(phi(&b, &a, &c), -&value);
        assert_eq!(phi(&a, &c, &b), -value);
    }

    #[test]
    fn line_through_examples() {
        let l = Line::through(&pt(3, 4), &pt(9, 10)).unwrap();
        assert_eq!(l, Line::new(rat(1, 1), rat(1, 1)));

        let l = Line::through(&pt(1, 7), &pt(7, 6)).unwrap();
        assert_eq!(l, Line::new(rat(-1, 6), rat(43, 6)));

        let l = Line::through(&pt(0, 5), &pt(1, 5)).unwrap();
        assert_eq!(l, Line::new(rat(0, 1), rat(5, 1)));
    }

    #[test]
    fn line_through_rejects_equal_abscissae() {
        assert_eq!(Line::through(&pt(2, 0), &pt(2, 9)), Err(Error::VerticalLine));
    }

    #[test]
    fn line_through_hits_both_points() {
        let p = Point::new(rat(1, 3), rat(-2, 7));
        let q = Point::new(rat(5, 2), rat(11, 4));
        let l = Line::through(&p, &q).unwrap();
        assert_eq!(l.eval(&p.x), p.y);
        assert_eq!(l.eval(&q.x), q.y);
    }

    #[test]
    fn eval_examples() {
        let r = Line::new(rat(1, 1), rat(1, 1));
        assert_eq!(r.eval(&rat(9, 1)), rat(10, 1));

        let flat = Line::new(rat(0, 1), rat(17, 3));
        assert_eq!(flat.eval(&rat(-100, 1)), rat(17, 3));

        let s1 = Line::new(rat(5, 12), rat(49, 12));
        assert_eq!(s1.eval(&rat(1, 1)), rat(9, 2));
    }
}
