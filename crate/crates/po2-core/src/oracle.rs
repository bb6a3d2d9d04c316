//! Brute-force verification on truncated grids, and a deterministic
//! random element generator.
//!
//! The grid machinery is deliberately independent of the canonical
//! representation: it works on plain tables of points, so it can serve as
//! ground truth for the algebraic operations. Boundary effects are handled
//! by comparing only on a margin-adjusted sub-grid rather than by padding.

use alloc::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::element::{CanonicalElement, HoleSet, RawElement};
use crate::ops;
use crate::poset::Point;
use crate::semilattice::from_holes;

/// A finite partial map on the square grid `[1,M] x [1,M]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GridMap {
    size: u32,
    table: BTreeMap<Point, Point>,
}

impl GridMap {
    /// Builds a grid map from explicit entries. Panics if an entry leaves
    /// the grid.
    pub fn from_entries<I: IntoIterator<Item = (Point, Point)>>(size: u32, entries: I) -> GridMap {
        let table: BTreeMap<Point, Point> = entries.into_iter().collect();
        for (p, q) in &table {
            assert!(
                p.x() <= size && p.y() <= size && q.x() <= size && q.y() <= size,
                "grid map entry outside the grid"
            );
        }
        GridMap { size, table }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn table(&self) -> &BTreeMap<Point, Point> {
        &self.table
    }

    pub fn get(&self, p: &Point) -> Option<Point> {
        self.table.get(p).copied()
    }

    /// True when every comparable pair of defined points has images in the
    /// same order. All pairs are covered; a suffix-minimum sweep keeps the
    /// scan quadratic in the grid side.
    pub fn is_monotone(&self) -> bool {
        let m = self.size as usize;
        let width = m + 2;
        let idx = |x: usize, y: usize| x * width + y;
        let mut min_x = alloc::vec![u32::MAX; width * width];
        let mut min_y = alloc::vec![u32::MAX; width * width];
        for x in (1..=m).rev() {
            for y in (1..=m).rev() {
                // Componentwise minimum of images over the strict upper set.
                let upper_x = min_x[idx(x + 1, y)].min(min_x[idx(x, y + 1)]);
                let upper_y = min_y[idx(x + 1, y)].min(min_y[idx(x, y + 1)]);
                let mut here_x = upper_x;
                let mut here_y = upper_y;
                if let Some(q) = self.table.get(&Point::new(x as u32, y as u32)) {
                    if q.x() > upper_x || q.y() > upper_y {
                        return false;
                    }
                    here_x = here_x.min(q.x());
                    here_y = here_y.min(q.y());
                }
                min_x[idx(x, y)] = here_x;
                min_y[idx(x, y)] = here_y;
            }
        }
        true
    }

    /// True when no two defined points share an image.
    pub fn is_injective(&self) -> bool {
        let images: BTreeSet<Point> = self.table.values().copied().collect();
        images.len() == self.table.len()
    }
}

/// Restricts an element to the grid: defined at the points of the domain
/// whose image also lies in the grid.
pub fn grid_project(a: &CanonicalElement, size: u32) -> GridMap {
    let mut table = BTreeMap::new();
    for x in 1..=size {
        for y in 1..=size {
            let p = Point::new(x, y);
            if let Some(q) = a.eval(p) {
                if q.x() <= size && q.y() <= size {
                    table.insert(p, q);
                }
            }
        }
    }
    GridMap { size, table }
}

/// Table composition, first map then second, defined where both legs are.
pub fn pointwise_compose(g1: &GridMap, g2: &GridMap) -> GridMap {
    assert_eq!(g1.size, g2.size, "grid sizes must match");
    let table = g1
        .table
        .iter()
        .filter_map(|(p, q)| g2.table.get(q).map(|r| (*p, *r)))
        .collect();
    GridMap { size: g1.size, table }
}

/// Deterministic pseudo-random element: a word of the given length over
/// the primitive family (the flip, column and row shifts up to 5, and
/// idempotents with holes in `[1,6]^2`), folded by composition. Length 0
/// yields the identity. The generator is pinned so equal seeds produce
/// equal elements everywhere.
pub fn random_element(seed: u64, word_len: u32) -> CanonicalElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = ops::identity();
    for _ in 0..word_len {
        let primitive = match rng.gen_range(0..4u32) {
            0 => ops::coordinate_flip(),
            1 => ops::column_shift(rng.gen_range(1..=5)),
            2 => ops::row_shift(rng.gen_range(1..=5)),
            _ => {
                let count = rng.gen_range(0..=4u32);
                let mut holes = HoleSet::new();
                for _ in 0..count {
                    holes.insert(Point::new(rng.gen_range(1..=6), rng.gen_range(1..=6)));
                }
                from_holes(&holes)
            }
        };
        acc = ops::compose(&acc, &primitive);
    }
    acc
}

/// Grid verdict on an unvalidated candidate, component by component.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RawGridReport {
    /// Bound positive, shift vectors of the declared length, window keys
    /// inside the square.
    pub structure_ok: bool,
    /// Every declared shift stays below the bound, so every tail output is
    /// a valid point.
    pub tails_ok: bool,
    /// No image of a grid point escapes the grid box (images of a genuine
    /// element never increase the larger coordinate).
    pub images_in_box: bool,
    pub monotone: bool,
    pub injective: bool,
}

impl RawGridReport {
    pub fn accepted(&self) -> bool {
        self.structure_ok && self.tails_ok && self.images_in_box && self.monotone && self.injective
    }
}

/// Evaluates a raw candidate by region dispatch, with no invariants
/// assumed. `None` for domain holes, missing shift entries, and tail
/// outputs that would leave the quadrant.
pub fn eval_raw(raw: &RawElement, p: Point) -> Option<Point> {
    let b = raw.bound;
    if b == 0 {
        return None;
    }
    let (i, j) = (p.x(), p.y());
    let q = if i >= b && j >= b {
        Some(p)
    } else if j < b && i >= b {
        let d = *raw.row_shifts.get((j - 1) as usize)?;
        i.checked_sub(d)
            .filter(|x| *x >= 1)
            .map(|x| Point::new(x, j))
    } else if i < b && j >= b {
        let e = *raw.col_shifts.get((i - 1) as usize)?;
        j.checked_sub(e)
            .filter(|y| *y >= 1)
            .map(|y| Point::new(i, y))
    } else {
        raw.window.get(&p).copied()
    }?;
    Some(if raw.flipped { q.flip() } else { q })
}

/// Projects a raw candidate onto the grid and checks it from scratch.
/// Independent of [`crate::element::validate`]; the two must agree on
/// whether a candidate denotes a monoid element whenever the grid is large
/// enough (twice the bound plus twice the largest shift suffices).
pub fn raw_grid_report(raw: &RawElement, size: u32) -> RawGridReport {
    let b = raw.bound;
    let side = b.saturating_sub(1) as usize;
    let structure_ok = b >= 1
        && raw.row_shifts.len() == side
        && raw.col_shifts.len() == side
        && raw.window.keys().all(|k| k.x() < b && k.y() < b);
    let tails_ok = b >= 1
        && raw.row_shifts.iter().all(|d| *d < b)
        && raw.col_shifts.iter().all(|e| *e < b);

    let mut images_in_box = true;
    let mut table = BTreeMap::new();
    for x in 1..=size {
        for y in 1..=size {
            let p = Point::new(x, y);
            if let Some(q) = eval_raw(raw, p) {
                if q.x() > size || q.y() > size {
                    images_in_box = false;
                } else {
                    table.insert(p, q);
                }
            }
        }
    }
    let grid = GridMap { size, table };
    RawGridReport {
        structure_ok,
        tails_ok,
        images_in_box,
        monotone: grid.is_monotone(),
        injective: grid.is_injective(),
    }
}

/// Grid size at which every defect of a mutated representation becomes
/// visible: twice the bound plus twice the largest declared shift.
pub fn diagnostic_grid_size(raw: &RawElement) -> u32 {
    let max_shift = raw
        .row_shifts
        .iter()
        .chain(raw.col_shifts.iter())
        .copied()
        .max()
        .unwrap_or(0);
    2 * raw.bound.max(1) + 2 * max_shift
}
