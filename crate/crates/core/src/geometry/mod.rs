//! Geometric primitives on the unit square and the unit torus.
//!
//! Segments are compared in a planar lift: under [`Metric::Torus`] every
//! segment stores the lattice offset of its far endpoint, and a second segment
//! is translated next to the first before any orientation test. Orientation
//! signs are exact (see [`orient`]), so degenerate fixtures always produce the
//! same answer.

mod orient;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use orient::{orient2d, orient2d_exact, LiftedPoint, Orientation};

use crate::error::{Error, Result};

/// Longest segment the torus lift handles.
pub const TORUS_MAX_SEGMENT: f64 = 0.25;

/// A position in `[0,1)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if (0.0..1.0).contains(&x) && (0.0..1.0).contains(&y) {
            Ok(Point { x, y })
        } else {
            Err(Error::NonCanonicalPoint { x, y })
        }
    }

    /// Canonical representative of `(x, y)` modulo 1 in each coordinate.
    pub fn wrapped(x: f64, y: f64) -> Self {
        Point {
            x: wrap_unit(x),
            y: wrap_unit(y),
        }
    }

    pub(crate) fn new_unchecked(x: f64, y: f64) -> Self {
        debug_assert!((0.0..1.0).contains(&x) && (0.0..1.0).contains(&y));
        Point { x, y }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

fn wrap_unit(v: f64) -> f64 {
    let w = v.rem_euclid(1.0);
    // rem_euclid can round up to exactly 1.0 for tiny negative inputs.
    if w >= 1.0 {
        0.0
    } else {
        w
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    #[default]
    Square,
    Torus,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Square => "square",
            Metric::Torus => "torus",
        })
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square" => Ok(Metric::Square),
            "torus" => Ok(Metric::Torus),
            other => Err(Error::InvalidConfig(format!("unknown metric '{other}'"))),
        }
    }
}

/// Lattice offset in `{-1,0,1}` that brings `to` nearest to `from` along one axis.
fn axis_offset(from: f64, to: f64) -> i32 {
    let d = to - from;
    if d > 0.5 {
        -1
    } else if d < -0.5 {
        1
    } else {
        0
    }
}

/// Offset applied to `q` so that `q + offset` realizes the distance to `p`.
pub fn geodesic_offset(p: &Point, q: &Point, metric: Metric) -> (i32, i32) {
    match metric {
        Metric::Square => (0, 0),
        Metric::Torus => (axis_offset(p.x, q.x), axis_offset(p.y, q.y)),
    }
}

fn displacement(p: &Point, q: &Point, offset: (i32, i32)) -> (f64, f64) {
    ((q.x - p.x) + f64::from(offset.0), (q.y - p.y) + f64::from(offset.1))
}

pub fn distance(p: &Point, q: &Point, metric: Metric) -> f64 {
    let (dx, dy) = displacement(p, q, geodesic_offset(p, q, metric));
    (dx * dx + dy * dy).sqrt()
}

/// A straight segment from `a` to `b + lift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
    pub lift: (i32, i32),
}

impl Segment {
    /// The geodesic segment between `a` and `b` under `metric`.
    pub fn new(a: Point, b: Point, metric: Metric) -> Self {
        Segment {
            a,
            b,
            lift: geodesic_offset(&a, &b, metric),
        }
    }

    pub fn length(&self) -> f64 {
        let (dx, dy) = displacement(&self.a, &self.b, self.lift);
        (dx * dx + dy * dy).sqrt()
    }

    fn midpoint(&self) -> (f64, f64) {
        let (dx, dy) = displacement(&self.a, &self.b, self.lift);
        (self.a.x + 0.5 * dx, self.a.y + 0.5 * dy)
    }

    fn endpoints(&self, shift: (i32, i32)) -> (LiftedPoint, LiftedPoint) {
        (
            LiftedPoint::new(self.a, shift),
            LiftedPoint::new(self.b, (self.lift.0 + shift.0, self.lift.1 + shift.1)),
        )
    }
}

fn check_torus_length(s: &Segment) -> Result<()> {
    let length = s.length();
    if length >= TORUS_MAX_SEGMENT {
        Err(Error::TorusRadiusTooLarge { length })
    } else {
        Ok(())
    }
}

/// Both segments as lifted endpoint pairs, `s2` translated next to `s1`.
fn lift_pair(s1: &Segment, s2: &Segment, metric: Metric) -> Result<([LiftedPoint; 2], [LiftedPoint; 2])> {
    let shift = match metric {
        Metric::Square => (0, 0),
        Metric::Torus => {
            check_torus_length(s1)?;
            check_torus_length(s2)?;
            let (m1x, m1y) = s1.midpoint();
            let (m2x, m2y) = s2.midpoint();
            (
                (m1x - m2x).round().clamp(-1.0, 1.0) as i32,
                (m1y - m2y).round().clamp(-1.0, 1.0) as i32,
            )
        }
    };
    let (p1, p2) = s1.endpoints((0, 0));
    let (q1, q2) = s2.endpoints(shift);
    Ok(([p1, p2], [q1, q2]))
}

struct Orientations {
    /// Sides of s2's endpoints relative to s1.
    c: i8,
    d: i8,
    /// Sides of s1's endpoints relative to s2.
    a: i8,
    b: i8,
}

fn orientations(p: &[LiftedPoint; 2], q: &[LiftedPoint; 2]) -> Orientations {
    Orientations {
        c: orient2d(&p[0], &p[1], &q[0]).sign(),
        d: orient2d(&p[0], &p[1], &q[1]).sign(),
        a: orient2d(&q[0], &q[1], &p[0]).sign(),
        b: orient2d(&q[0], &q[1], &p[1]).sign(),
    }
}

/// Whether the open segments share a point interior to both.
///
/// Collinear overlaps are not crossings; segments meeting only at a shared
/// endpoint are not crossings.
pub fn segments_cross(s1: &Segment, s2: &Segment, metric: Metric) -> Result<bool> {
    let (p, q) = lift_pair(s1, s2, metric)?;
    let o = orientations(&p, &q);
    Ok(o.c * o.d < 0 && o.a * o.b < 0)
}

/// Whether `f` touches any interior point of `e`.
///
/// This includes proper crossings, an endpoint of `f` lying in the open
/// interior of `e`, and collinear overlap of positive length.
pub fn interior_intersected(e: &Segment, f: &Segment, metric: Metric) -> Result<bool> {
    let (p, q) = lift_pair(e, f, metric)?;
    let o = orientations(&p, &q);
    if o.c == 0 && o.d == 0 {
        return Ok(collinear_overlap(&p, &q));
    }
    // The supporting lines meet in a single point X. X is interior to e iff
    // e's endpoints are strictly on opposite sides of f's line, and X lies on
    // the closed segment f iff f's endpoints are not strictly on one side.
    Ok(o.a * o.b < 0 && o.c * o.d <= 0)
}

fn collinear_overlap(p: &[LiftedPoint; 2], q: &[LiftedPoint; 2]) -> bool {
    let cmp: fn(&LiftedPoint, &LiftedPoint) -> Ordering = if p[0].cmp_x(&p[1]) != Ordering::Equal {
        LiftedPoint::cmp_x
    } else {
        LiftedPoint::cmp_y
    };
    let order = |u: LiftedPoint, v: LiftedPoint| {
        if cmp(&u, &v) == Ordering::Greater {
            (v, u)
        } else {
            (u, v)
        }
    };
    let (lo1, hi1) = order(p[0], p[1]);
    let (lo2, hi2) = order(q[0], q[1]);
    let lo = if cmp(&lo1, &lo2) == Ordering::Greater { lo1 } else { lo2 };
    let hi = if cmp(&hi1, &hi2) == Ordering::Less { hi1 } else { hi2 };
    cmp(&lo, &hi) == Ordering::Less
}

/// Occupancy of the two open half-disks with diameter `uv`.
///
/// Returns `(left, right)` relative to the oriented segment `u -> v`. Points on
/// the line through `u` and `v`, or on the bounding circle, are in neither.
pub fn half_disks_nonempty(u: &Point, v: &Point, others: &[Point], metric: Metric) -> (bool, bool) {
    let seg = Segment::new(*u, *v, metric);
    let (lu, lv) = seg.endpoints((0, 0));
    let (mx, my) = seg.midpoint();
    let radius = 0.5 * seg.length();
    let radius_sq = radius * radius;
    let (mut left, mut right) = (false, false);
    for w in others {
        let shift = match metric {
            Metric::Square => (0, 0),
            Metric::Torus => (
                (mx - w.x).round().clamp(-1.0, 1.0) as i32,
                (my - w.y).round().clamp(-1.0, 1.0) as i32,
            ),
        };
        let lw = LiftedPoint::new(*w, shift);
        let (wx, wy) = lw.approx();
        let (dx, dy) = (wx - mx, wy - my);
        if dx * dx + dy * dy >= radius_sq {
            continue;
        }
        match orient2d(&lu, &lv, &lw) {
            Orientation::CounterClockwise => left = true,
            Orientation::Clockwise => right = true,
            Orientation::Collinear => {}
        }
        if left && right {
            break;
        }
    }
    (left, right)
}
