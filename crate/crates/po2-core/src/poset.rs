//! Points of the positive quadrant and the product partial order.
//!
//! A [`Point`] is a pair of positive integers. Two points compare by
//! [`Point::leq`], which holds when both coordinates do. The derived `Ord`
//! is the lexicographic storage order used for sorting and serialization;
//! it is *not* the poset order.

use core::fmt;

/// A pair of positive integers.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    x: u32,
    y: u32,
}

impl Point {
    /// Creates a point. Panics if either coordinate is zero; coordinates
    /// start at 1 and untrusted input is screened at parse time.
    pub fn new(x: u32, y: u32) -> Point {
        assert!(x >= 1 && y >= 1, "point coordinates start at 1");
        Point { x, y }
    }

    pub fn x(&self) -> u32 {
        self.x
    }

    pub fn y(&self) -> u32 {
        self.y
    }

    /// Product partial order: `self` is below `other` when neither
    /// coordinate decreases.
    pub fn leq(&self, other: &Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// Strict version of [`Point::leq`].
    pub fn strictly_less(&self, other: &Point) -> bool {
        self.leq(other) && self != other
    }

    /// Swaps the two coordinates. An involution and an order automorphism.
    pub fn flip(&self) -> Point {
        Point { x: self.y, y: self.x }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Position of a point relative to the two bands with index `n`: the column
/// band is all points with first coordinate `n`, the row band all points
/// with second coordinate `n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BandMembership {
    /// In the column band only (`x = n`, `y != n`).
    Column,
    /// In the row band only (`y = n`, `x != n`).
    Row,
    /// The crossing point (`x = y = n`).
    Both,
    Neither,
}

/// Classifies `p` against the column and row bands of index `n`.
pub fn band_membership(p: Point, n: u32) -> BandMembership {
    match (p.x == n, p.y == n) {
        (true, true) => BandMembership::Both,
        (true, false) => BandMembership::Column,
        (false, true) => BandMembership::Row,
        (false, false) => BandMembership::Neither,
    }
}
