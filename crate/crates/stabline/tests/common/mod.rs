//! Seeded random generators shared by the integration suites. Everything is
//! driven by an explicit ChaCha stream so failures reproduce exactly.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stabline::geom::{Line, Point};
use stabline::instance::{CanonicalMap, InstanceDocument, RawSegment};
use stabline::{rat, Rational, SegmentFamily, VerticalSegment};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational in `[lo, hi]` with denominator at most `max_den`.
pub fn rand_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(lo * den..=hi * den);
    rat(num, den)
}

/// `n` strictly increasing abscissae with denominators at most 4 in
/// `[-20, 20]`.
pub fn distinct_abscissae(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    loop {
        let mut xs: Vec<Rational> = (0..n).map(|_| rand_rational(rng, -20, 20, 4)).collect();
        xs.sort();
        xs.dedup();
        if xs.len() == n {
            return xs;
        }
    }
}

/// An unconstrained random family: 2 to 8 segments, bounds in `[-20, 20]`
/// with denominators at most 4. When `force_point` is set one segment
/// degenerates to a point.
pub fn random_family(rng: &mut ChaCha8Rng, force_point: bool) -> SegmentFamily {
    let n = rng.gen_range(2..=8);
    let xs = distinct_abscissae(rng, n);
    let point_index = if force_point { Some(rng.gen_range(0..n)) } else { None };
    let mut segments = Vec::with_capacity(n);
    for (i, x) in xs.into_iter().enumerate() {
        let a = rand_rational(rng, -20, 20, 4);
        if point_index == Some(i) {
            segments.push(VerticalSegment::new(x, a.clone(), a).unwrap());
        } else {
            let b = rand_rational(rng, -20, 20, 4);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            segments.push(VerticalSegment::new(x, lo, hi).unwrap());
        }
    }
    SegmentFamily::new(segments).unwrap()
}

/// A family built to straddle a hidden line, hence always feasible.
pub fn feasible_family(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize) -> SegmentFamily {
    let n = rng.gen_range(n_lo..=n_hi);
    let m = rand_rational(rng, -3, 3, 4);
    let b = rand_rational(rng, -5, 5, 4);
    let xs = distinct_abscissae(rng, n);
    let segments = xs
        .into_iter()
        .map(|x| {
            let y = &m * &x + &b;
            let down = rand_rational(rng, 0, 5, 4);
            let up = rand_rational(rng, 0, 5, 4);
            VerticalSegment::new(x, &y - &down, &y + &up).unwrap()
        })
        .collect();
    SegmentFamily::new(segments).unwrap()
}

/// A family whose only transversal is the returned line. Three segments
/// touch the line from alternating sides (bottom, top, bottom). Any
/// transversal g then satisfies g - line >= 0, <= 0, >= 0 at increasing
/// abscissae, and an affine function with that sign pattern is identically
/// zero. The remaining segments straddle the line with slack on both sides.
pub fn unique_family(rng: &mut ChaCha8Rng) -> (SegmentFamily, Line) {
    let m = rand_rational(rng, -3, 3, 4);
    let b = rand_rational(rng, -5, 5, 4);
    let line = Line::new(m, b);
    let n = rng.gen_range(3..=7);
    let xs = distinct_abscissae(rng, n);
    let anchors = [0, n / 2, n - 1];
    let mut segments = Vec::with_capacity(n);
    for (i, x) in xs.into_iter().enumerate() {
        let y = line.eval(&x);
        let d = rand_rational(rng, 1, 5, 4);
        if i == anchors[1] {
            segments.push(VerticalSegment::new(x, &y - &d, y.clone()).unwrap());
        } else if i == anchors[0] || i == anchors[2] {
            segments.push(VerticalSegment::new(x, y.clone(), &y + &d).unwrap());
        } else {
            let up = rand_rational(rng, 1, 5, 4);
            segments.push(VerticalSegment::new(x, &y - &d, &y + &up).unwrap());
        }
    }
    (SegmentFamily::new(segments).unwrap(), line)
}

/// A nonzero rational direction vector.
pub fn random_direction(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    loop {
        let dx = rand_rational(rng, -5, 5, 3);
        let dy = rand_rational(rng, -5, 5, 3);
        if !dx.is_zero() || !dy.is_zero() {
            return (dx, dy);
        }
    }
}

/// The vertical family as a plain instance document (no direction field).
pub fn family_document(family: &SegmentFamily) -> InstanceDocument {
    InstanceDocument {
        direction: None,
        segments: family
            .iter()
            .map(|s| RawSegment::Vertical {
                x: s.x().clone(),
                lo: s.lo().clone(),
                hi: s.hi().clone(),
            })
            .collect(),
        name: None,
    }
}

/// The same family pushed through the inverse of the similarity belonging
/// to `direction`: canonicalizing the result recovers `family` exactly.
pub fn skewed_document(
    family: &SegmentFamily,
    direction: (Rational, Rational),
) -> InstanceDocument {
    let map = CanonicalMap::new(direction.0.clone(), direction.1.clone()).unwrap();
    let segments = family
        .iter()
        .map(|s| {
            let p = map.apply_inverse(&Point::new(s.x().clone(), s.lo().clone()));
            let q = map.apply_inverse(&Point::new(s.x().clone(), s.hi().clone()));
            RawSegment::Endpoints { p, q }
        })
        .collect();
    InstanceDocument { direction: Some(direction), segments, name: None }
}
