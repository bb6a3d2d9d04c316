//! Exact algebra of the monoid of monotone injective partial selfmaps of
//! the positive quadrant, ordered componentwise, with cofinite domain and
//! image.
//!
//! Elements are stored in a finite canonical form (a window table plus
//! per-band tail shifts and an orientation flag), constructed only through
//! the validator or the operations here. The crate provides the monoid
//! structure (units, generators, composition), idempotents and their
//! semilattice, deciders for all of Green's relations, and an independent
//! truncated-grid oracle used to cross-check everything with exact integer
//! arithmetic.
//!
//! All values are immutable and all operations are pure.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod element;
pub mod green;
pub mod ops;
pub mod oracle;
pub mod poset;
pub mod semilattice;

pub use element::{
    validate, CanonicalElement, HoleSet, Orientation, PreservingCore, RawElement, ValidationError,
};
pub use green::{
    d_class, d_related, h_class_size, h_related, j_related, l_related, r_related, GreenReport,
};
pub use ops::{
    column_shift, compose, coordinate_flip, flip_conjugate, identity, is_idempotent,
    is_idempotent_by_witness, is_unit, power, row_shift,
};
pub use oracle::{
    diagnostic_grid_size, eval_raw, grid_project, pointwise_compose, random_element,
    raw_grid_report, GridMap, RawGridReport,
};
pub use poset::{band_membership, BandMembership, Point};
pub use semilattice::{from_holes, meet, natural_leq, NotIdempotent};
