//! The idempotents as a semilattice.
//!
//! Idempotents are exactly the identity partial maps with cofinite domain,
//! so sending an idempotent to its set of domain holes is an isomorphism
//! onto the finite subsets of the quadrant under union, with the identity
//! element as the unit.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::element::{CanonicalElement, HoleSet, PreservingCore};
use crate::ops::{compose, is_idempotent};
use crate::poset::Point;

/// A semilattice operation was applied to a non-idempotent element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NotIdempotent;

impl fmt::Display for NotIdempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("operand is not an idempotent")
    }
}

/// The idempotent whose domain misses exactly the given points, with the
/// smallest bound containing them.
pub fn from_holes(holes: &HoleSet) -> CanonicalElement {
    let bound = holes
        .iter()
        .map(|p| p.x().max(p.y()))
        .max()
        .map_or(1, |m| m + 1);
    let mut window = BTreeMap::new();
    for i in 1..bound {
        for j in 1..bound {
            let p = Point::new(i, j);
            if !holes.contains(&p) {
                window.insert(p, p);
            }
        }
    }
    CanonicalElement::from_core(
        PreservingCore {
            bound,
            row_shifts: alloc::vec![0; (bound - 1) as usize],
            col_shifts: alloc::vec![0; (bound - 1) as usize],
            window,
        },
        false,
    )
}

/// Meet of two idempotents: their composition, the idempotent whose holes
/// are the union of the operands' holes. Commutative, associative, and
/// idempotent; the identity is the unit.
pub fn meet(e1: &CanonicalElement, e2: &CanonicalElement) -> Result<CanonicalElement, NotIdempotent> {
    if !is_idempotent(e1) || !is_idempotent(e2) {
        return Err(NotIdempotent);
    }
    let result = compose(e1, e2);
    debug_assert!(result.semantic_eq(&from_holes(&e1.dom_holes().union(&e2.dom_holes()))));
    Ok(result)
}

/// Natural partial order on idempotents: `e1 <= e2` when their meet is
/// `e1`, equivalently when `e2` keeps every point that `e1` keeps.
pub fn natural_leq(e1: &CanonicalElement, e2: &CanonicalElement) -> Result<bool, NotIdempotent> {
    Ok(meet(e1, e2)?.semantic_eq(e1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{column_shift, identity};

    fn pt(x: u32, y: u32) -> Point {
        Point::new(x, y)
    }

    fn holes(points: &[(u32, u32)]) -> HoleSet {
        points.iter().map(|(x, y)| pt(*x, *y)).collect()
    }

    #[test]
    fn from_holes_examples() {
        assert!(from_holes(&HoleSet::new()).semantic_eq(&identity()));
        let e = from_holes(&holes(&[(1, 1)]));
        assert_eq!(e.eval(pt(1, 1)), None);
        assert_eq!(e.eval(pt(7, 2)), Some(pt(7, 2)));
        let sym = from_holes(&holes(&[(3, 5), (5, 3)]));
        assert_eq!(crate::green::h_class_size(&sym), 2);
    }

    #[test]
    fn meet_examples() {
        let e1 = from_holes(&holes(&[(1, 1)]));
        let e2 = from_holes(&holes(&[(2, 2)]));
        let m = meet(&e1, &e2).unwrap();
        assert_eq!(m.dom_holes(), holes(&[(1, 1), (2, 2)]));
        assert!(meet(&e1, &identity()).unwrap().semantic_eq(&e1));
        assert!(meet(&e1, &e1).unwrap().semantic_eq(&e1));
        assert_eq!(meet(&e1, &column_shift(1)), Err(NotIdempotent));
    }

    #[test]
    fn natural_leq_examples() {
        let small = from_holes(&holes(&[(1, 1), (2, 2)]));
        let big = from_holes(&holes(&[(1, 1)]));
        assert_eq!(natural_leq(&small, &big), Ok(true));
        assert_eq!(natural_leq(&big, &small), Ok(false));
        assert_eq!(natural_leq(&big, &identity()), Ok(true));
        assert_eq!(
            natural_leq(&from_holes(&holes(&[(1, 1)])), &from_holes(&holes(&[(2, 2)]))),
            Ok(false)
        );
    }
}
