//! Deciders and class enumeration for Green's relations.
//!
//! Because the group of units has exactly two elements, every relation
//! reduces to a finite comparison against translates by the coordinate
//! flip: two elements are L-related when equal or equal after flipping on
//! the left, R-related with the flip on the right, D-related when one is
//! obtained from the other by flipping on either side, and J coincides
//! with D in this monoid.

use alloc::vec::Vec;

use crate::element::{CanonicalElement, Orientation};
use crate::ops::{compose, coordinate_flip, flip_conjugate, is_idempotent, is_unit};

pub fn l_related(a: &CanonicalElement, b: &CanonicalElement) -> bool {
    a.semantic_eq(b) || a.semantic_eq(&compose(&coordinate_flip(), b))
}

pub fn r_related(a: &CanonicalElement, b: &CanonicalElement) -> bool {
    a.semantic_eq(b) || a.semantic_eq(&compose(b, &coordinate_flip()))
}

pub fn h_related(a: &CanonicalElement, b: &CanonicalElement) -> bool {
    a.semantic_eq(b)
        || (a.semantic_eq(&compose(&coordinate_flip(), b))
            && a.semantic_eq(&compose(b, &coordinate_flip())))
}

pub fn d_related(a: &CanonicalElement, b: &CanonicalElement) -> bool {
    d_class(b).iter().any(|c| c.semantic_eq(a))
}

/// Identical to [`d_related`]; the two relations coincide in this monoid.
pub fn j_related(a: &CanonicalElement, b: &CanonicalElement) -> bool {
    d_related(a, b)
}

/// 2 when the element commutes with the coordinate flip (equivalently, is
/// fixed by conjugation), 1 otherwise.
pub fn h_class_size(a: &CanonicalElement) -> usize {
    if a.semantic_eq(&flip_conjugate(a)) {
        2
    } else {
        1
    }
}

/// The D-class as a deduplicated, deterministically sorted list of
/// normalized elements: the element and its translates by units on either
/// side. Always has two or four members.
pub fn d_class(a: &CanonicalElement) -> Vec<CanonicalElement> {
    let w = coordinate_flip();
    let mut members = alloc::vec![
        a.normalize(),
        compose(&w, a),
        compose(a, &w),
        compose(&compose(&w, a), &w),
    ];
    members.sort();
    members.dedup();
    members
}

/// Classification record for one element.
#[derive(Clone, Debug)]
pub struct GreenReport {
    pub orientation: Orientation,
    pub n_alpha: u32,
    pub is_unit: bool,
    pub is_idempotent: bool,
    pub h_class_size: usize,
    pub d_class_size: usize,
    pub d_class: Vec<CanonicalElement>,
}

impl GreenReport {
    pub fn of(a: &CanonicalElement) -> GreenReport {
        let d_class = d_class(a);
        GreenReport {
            orientation: a.orientation(),
            n_alpha: a.n_alpha(),
            is_unit: is_unit(a),
            is_idempotent: is_idempotent(a),
            h_class_size: h_class_size(a),
            d_class_size: d_class.len(),
            d_class,
        }
    }
}
