//! Planar convex hulls and digital convexity over the integer lattice.
//!
//! All orientation tests use exact `i128` arithmetic.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glossa::Point;

/// A finite set of lattice points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSet {
    pub points: BTreeSet<Point>,
}

impl LatticeSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.contains(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.points.iter().copied()
    }

    /// Inclusive bounding box as `(min, max)`.
    pub fn bounds(&self) -> Option<(Point, Point)> {
        let first = *self.points.first()?;
        Some(self.points.iter().fold((first, first), |(lo, hi), p| {
            (
                Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        }))
    }
}

impl<P: Into<Point>> FromIterator<P> for LatticeSet {
    fn from_iter<I: IntoIterator<Item = P>>(iter: I) -> Self {
        LatticeSet {
            points: iter.into_iter().map(Into::into).collect(),
        }
    }
}

/// Twice the signed area of the triangle `o, a, b`; positive when counterclockwise.
pub fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ax, ay) = (a.x as i128 - o.x as i128, a.y as i128 - o.y as i128);
    let (bx, by) = (b.x as i128 - o.x as i128, b.y as i128 - o.y as i128);
    ax * by - ay * bx
}

/// Monotone-chain hull in counterclockwise order, starting from the minimum point by
/// `(x, y)`. Collinear boundary points are dropped.
pub fn convex_hull_2d(points: &LatticeSet) -> Result<Vec<Point>> {
    let pts: Vec<Point> = points.iter().collect();
    match pts.len() {
        0 => return Err(Error::EmptyPointSet),
        1 => return Ok(pts),
        _ => {}
    }

    let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(lower)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn edge_lattice_steps(a: Point, b: Point) -> u128 {
    gcd(
        (b.x as i128 - a.x as i128).unsigned_abs(),
        (b.y as i128 - a.y as i128).unsigned_abs(),
    )
}

/// Number of lattice points in the closed convex polygon with the given hull vertices
/// (counterclockwise, no collinear vertices), by Pick's theorem.
pub fn lattice_points_in_hull(hull: &[Point]) -> u128 {
    match hull.len() {
        0 => 0,
        1 => 1,
        2 => edge_lattice_steps(hull[0], hull[1]) + 1,
        n => {
            let twice_area: i128 = (0..n)
                .map(|i| cross(hull[0], hull[i], hull[(i + 1) % n]))
                .sum();
            let boundary: u128 = (0..n)
                .map(|i| edge_lattice_steps(hull[i], hull[(i + 1) % n]))
                .sum();
            // 2A = 2I + B − 2
            let interior = (twice_area.unsigned_abs() + 2 - boundary) / 2;
            interior + boundary
        }
    }
}

/// True iff `points = conv(points) ∩ ℤ²`. Empty sets and singletons are convex.
pub fn is_digitally_convex(points: &LatticeSet) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let hull = convex_hull_2d(points).expect("nonempty");
    lattice_points_in_hull(&hull) == points.len() as u128
}
