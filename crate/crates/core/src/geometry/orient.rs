//! Exact sign of the 2D orientation determinant.
//!
//! Coordinates are canonical values in `[0,1)` plus an integer lattice shift
//! (the torus lift). The fast path evaluates the determinant in `f64` and
//! accepts the sign when it clears a conservative error bound; otherwise the
//! determinant is recomputed over big integers, scaling every coordinate by
//! `2^SCALE_BITS`, which represents any finite `f64` of magnitude `< 2^32`
//! exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::Point;

const SCALE_BITS: i64 = 1100;

/// A canonical point translated by an integer lattice vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiftedPoint {
    pub point: Point,
    pub shift: (i32, i32),
}

impl LiftedPoint {
    pub fn new(point: Point, shift: (i32, i32)) -> Self {
        LiftedPoint { point, shift }
    }

    pub fn at(point: Point) -> Self {
        LiftedPoint { point, shift: (0, 0) }
    }

    /// Coordinates rounded to `f64`.
    pub fn approx(&self) -> (f64, f64) {
        (
            self.point.x() + f64::from(self.shift.0),
            self.point.y() + f64::from(self.shift.1),
        )
    }

    /// Exact comparison of the lifted x coordinates.
    pub fn cmp_x(&self, other: &LiftedPoint) -> Ordering {
        cmp_lifted(self.point.x(), self.shift.0, other.point.x(), other.shift.0)
    }

    /// Exact comparison of the lifted y coordinates.
    pub fn cmp_y(&self, other: &LiftedPoint) -> Ordering {
        cmp_lifted(self.point.y(), self.shift.1, other.point.y(), other.shift.1)
    }

    fn exact(&self) -> (BigInt, BigInt) {
        (
            scaled(self.point.x(), self.shift.0),
            scaled(self.point.y(), self.shift.1),
        )
    }
}

// `f` is in [0,1), so the integer parts decide unless they are equal.
fn cmp_lifted(f1: f64, k1: i32, f2: f64, k2: i32) -> Ordering {
    match k1.cmp(&k2) {
        Ordering::Equal => f1.total_cmp(&f2),
        other => other,
    }
}

/// Exact value of `f + k` multiplied by `2^SCALE_BITS`.
fn scaled(f: f64, k: i32) -> BigInt {
    let bits = f.to_bits();
    let negative = bits >> 63 == 1;
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let fraction = bits & ((1u64 << 52) - 1);
    let (mantissa, exponent) = if biased == 0 {
        (fraction, -1074)
    } else {
        (fraction | (1u64 << 52), biased - 1075)
    };
    let mut value = BigInt::from(mantissa) << ((exponent + SCALE_BITS) as usize);
    if negative {
        value = -value;
    }
    value + (BigInt::from(k) << SCALE_BITS as usize)
}

/// Sign of the orientation of the triangle `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }

    fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
        }
    }
}

pub fn orient2d(a: &LiftedPoint, b: &LiftedPoint, c: &LiftedPoint) -> Orientation {
    let (ax, ay) = a.approx();
    let (bx, by) = b.approx();
    let (cx, cy) = c.approx();
    let (dx1, dy1, dx2, dy2) = (bx - ax, by - ay, cx - ax, cy - ay);
    let left = dx1 * dy2;
    let right = dy1 * dx2;
    let det = left - right;
    // Lifted inputs carry up to half an ulp of rounding each, so the bound
    // covers input error as well as the arithmetic itself.
    let spread = dx1.abs() + dy1.abs() + dx2.abs() + dy2.abs();
    let bound = 2e-15 * spread + 1e-15 * (left.abs() + right.abs()) + 1e-28;
    if det > bound {
        return Orientation::CounterClockwise;
    }
    if det < -bound {
        return Orientation::Clockwise;
    }
    orient2d_exact(a, b, c)
}

pub fn orient2d_exact(a: &LiftedPoint, b: &LiftedPoint, c: &LiftedPoint) -> Orientation {
    let (ax, ay) = a.exact();
    let (bx, by) = b.exact();
    let (cx, cy) = c.exact();
    let det = (&bx - &ax) * (&cy - &ay) - (&by - &ay) * (&cx - &ax);
    Orientation::from_ordering(det.sign().cmp_zero())
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}
