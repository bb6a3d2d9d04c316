//! The monoid structure: units, generators, composition, and idempotents.
//!
//! Composition follows the right-action convention used throughout the
//! crate: `compose(a, b)` applies `a` first, then `b`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::element::{validate, CanonicalElement, PreservingCore, RawElement};
use crate::poset::Point;

/// The identity element: bound 1, empty window, preserving.
pub fn identity() -> CanonicalElement {
    CanonicalElement::from_core(empty_core(), false)
}

/// The coordinate flip `(i,j) -> (j,i)`, the only non-trivial unit.
pub fn coordinate_flip() -> CanonicalElement {
    CanonicalElement::from_core(empty_core(), true)
}

fn empty_core() -> PreservingCore {
    PreservingCore {
        bound: 1,
        row_shifts: Vec::new(),
        col_shifts: Vec::new(),
        window: BTreeMap::new(),
    }
}

/// The generator that shifts the first `l` columns down by one step,
/// dropping the bottom point of each: `(i,j) -> (i, j-1)` for `i <= l`,
/// fixed otherwise. Its domain misses `(1,1)..(l,1)` and its range is
/// everything.
pub fn column_shift(l: u32) -> CanonicalElement {
    assert!(l >= 1, "column_shift requires l >= 1");
    let bound = l + 1;
    let mut window = BTreeMap::new();
    for i in 1..=l {
        for j in 2..=l {
            window.insert(Point::new(i, j), Point::new(i, j - 1));
        }
    }
    CanonicalElement::from_core(
        PreservingCore {
            bound,
            row_shifts: alloc::vec![0; l as usize],
            col_shifts: alloc::vec![1; l as usize],
            window,
        },
        false,
    )
}

/// The row mirror of [`column_shift`]: conjugate by the coordinate flip.
pub fn row_shift(l: u32) -> CanonicalElement {
    flip_conjugate(&column_shift(l))
}

/// Conjugation by the coordinate flip. On the core this swaps the two
/// shift vectors and flips every window pair; the orientation flag is
/// unchanged. An involution.
pub fn flip_conjugate(a: &CanonicalElement) -> CanonicalElement {
    CanonicalElement::from_core(flip_conjugate_core(&a.core), a.flipped)
}

fn flip_conjugate_core(core: &PreservingCore) -> PreservingCore {
    PreservingCore {
        bound: core.bound,
        row_shifts: core.col_shifts.clone(),
        col_shifts: core.row_shifts.clone(),
        window: core
            .window
            .iter()
            .map(|(p, q)| (p.flip(), q.flip()))
            .collect(),
    }
}

/// Composition in application order: `p -> b(a(p))`. Total, since the
/// monoid is closed. The result is re-validated (a failure here would be a
/// library bug, not bad input) and normalized.
pub fn compose(a: &CanonicalElement, b: &CanonicalElement) -> CanonicalElement {
    let second = if a.flipped {
        flip_conjugate_core(&b.core)
    } else {
        b.core.clone()
    };
    let core = compose_cores(&a.core, &second);
    let raw = RawElement {
        bound: core.bound,
        row_shifts: core.row_shifts,
        col_shifts: core.col_shifts,
        window: core.window,
        flipped: a.flipped != b.flipped,
    };
    validate(raw)
        .expect("composition of validated elements failed re-validation; library bug")
        .normalize()
}

/// Composition of two preserving cores, first then second. The bound
/// `max(B1, B2 + maxshift(first))` is large enough that beyond it both
/// factors act by their tail formulas, so the composite tails are the
/// entrywise sums of the shift vectors; the window is rebuilt by
/// evaluation.
fn compose_cores(first: &PreservingCore, second: &PreservingCore) -> PreservingCore {
    let bound = first.bound.max(second.bound + first.max_shift());
    let row_shifts = (1..bound)
        .map(|j| first.row_shift(j) + second.row_shift(j))
        .collect();
    let col_shifts = (1..bound)
        .map(|i| first.col_shift(i) + second.col_shift(i))
        .collect();
    let mut window = BTreeMap::new();
    for i in 1..bound {
        for j in 1..bound {
            let p = Point::new(i, j);
            if let Some(q) = first.eval(p).and_then(|q| second.eval(q)) {
                window.insert(p, q);
            }
        }
    }
    PreservingCore {
        bound,
        row_shifts,
        col_shifts,
        window,
    }
}

/// Iterated composition; `k = 0` yields the identity.
pub fn power(a: &CanonicalElement, k: u32) -> CanonicalElement {
    let mut acc = identity();
    for _ in 0..k {
        acc = compose(&acc, a);
    }
    acc
}

/// True exactly when the element has a full domain, which forces it to be
/// one of the two units.
pub fn is_unit(a: &CanonicalElement) -> bool {
    let unit = a.dom_holes().is_empty();
    debug_assert!(
        !unit || a.semantic_eq(&identity()) || a.semantic_eq(&coordinate_flip()),
        "a full-domain element must be one of the two units"
    );
    unit
}

/// True exactly when the element is an identity partial map: preserving,
/// all shifts zero, and every window entry fixed.
pub fn is_idempotent(a: &CanonicalElement) -> bool {
    !a.flipped
        && a.row_shifts().iter().all(|d| *d == 0)
        && a.col_shifts().iter().all(|e| *e == 0)
        && a.window().iter().all(|(p, q)| p == q)
}

/// Independent idempotency decider: the domain and range complements must
/// coincide, and some point `(n,1)` of the domain with `n > 1` must map
/// into the first row band (symmetrically, some `(1,m)` into the first
/// column band; the two criteria agree on every element). The search is
/// finite: window row one, plus a single tail probe, since tail behavior
/// is uniform beyond the bound.
pub fn is_idempotent_by_witness(a: &CanonicalElement) -> bool {
    let same_complements = a.dom_holes() == a.ran_holes();
    let b = a.bound();

    let row_witness = (2..b)
        .filter_map(|n| a.eval(Point::new(n, 1)))
        .any(|q| q.y() == 1)
        || a.eval(Point::new(b.max(2), 1)).is_some_and(|q| q.y() == 1);
    let col_witness = (2..b)
        .filter_map(|m| a.eval(Point::new(1, m)))
        .any(|q| q.x() == 1)
        || a.eval(Point::new(1, b.max(2))).is_some_and(|q| q.x() == 1);

    let by_row = same_complements && row_witness;
    let by_col = same_complements && col_witness;
    debug_assert_eq!(by_row, by_col, "the two witness criteria must agree");
    by_row
}
