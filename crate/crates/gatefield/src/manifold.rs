//! Toroidal lattice geometry: coordinates, wrap-around distances, neighborhood
//! enumeration, and Gray-coded positional bits.
//!
//! Displacements on a torus of period `n` are canonicalized to the range
//! `(-n/2, n/2]` (ties at `n/2` resolve positive), so two raw offsets that
//! wrap to the same displacement are the same neighbor. On degenerate grids
//! (period 1 or 2) this collapses aliased offsets instead of enumerating the
//! same cell twice.

use crate::error::{Error, Result};

/// An H x W lattice with both axes wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusGrid {
    h: usize,
    w: usize,
}

impl TorusGrid {
    pub fn new(h: usize, w: usize) -> Result<Self> {
        if h == 0 || w == 0 {
            return Err(Error::config(format!("grid dimensions must be >= 1, got {h}x{w}")));
        }
        Ok(TorusGrid { h, w })
    }

    pub fn height(&self) -> usize {
        self.h
    }

    pub fn width(&self) -> usize {
        self.w
    }

    /// Number of pixels.
    pub fn len(&self) -> usize {
        self.h * self.w
    }

    pub fn is_empty(&self) -> bool {
        false // H, W >= 1 by construction
    }

    /// Row-major pixel index of an in-range coordinate.
    pub fn index(&self, p: (usize, usize)) -> usize {
        debug_assert!(p.0 < self.h && p.1 < self.w);
        p.0 * self.w + p.1
    }

    pub fn coord(&self, index: usize) -> (usize, usize) {
        (index / self.w, index % self.w)
    }

    /// Wrap a signed coordinate onto the torus.
    pub fn wrap(&self, r: isize, c: isize) -> (usize, usize) {
        (
            r.rem_euclid(self.h as isize) as usize,
            c.rem_euclid(self.w as isize) as usize,
        )
    }

    pub fn contains(&self, p: (usize, usize)) -> bool {
        p.0 < self.h && p.1 < self.w
    }
}

/// Distance metric on the torus; per axis the wrap rule is
/// `min(|delta|, period - |delta|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Manhattan,
    Chebyshev,
}

impl Metric {
    fn combine(&self, dy: usize, dx: usize) -> usize {
        match self {
            Metric::Manhattan => dy + dx,
            Metric::Chebyshev => dy.max(dx),
        }
    }
}

/// Wrap distance along one axis of period `n`.
fn axis_distance(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// Toroidal distance between two in-range coordinates.
pub fn torus_distance(grid: &TorusGrid, p: (usize, usize), q: (usize, usize), metric: Metric) -> usize {
    assert!(grid.contains(p) && grid.contains(q), "coordinates out of range");
    metric.combine(
        axis_distance(p.0, q.0, grid.height()),
        axis_distance(p.1, q.1, grid.width()),
    )
}

/// Canonical displacement class of a raw offset on an axis of period `n`:
/// the representative in `(-n/2, n/2]` with the smaller magnitude (ties to
/// the positive side).
fn canonical_offset(d: isize, n: usize) -> isize {
    let n = n as isize;
    let mut m = d.rem_euclid(n); // in [0, n)
    if 2 * m > n {
        m -= n;
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodKind {
    VonNeumann4,
    Moore8,
    Radius { radius: usize, metric: Metric },
}

/// A neighborhood shape. Offsets are enumerated in a fixed row-major order
/// (ascending `dy`, then ascending `dx`), so kernel wiring is reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighborhood {
    pub kind: NeighborhoodKind,
    pub include_center: bool,
}

impl Neighborhood {
    pub fn new(kind: NeighborhoodKind) -> Self {
        Neighborhood { kind, include_center: false }
    }

    /// Canonical displacement classes of this neighborhood on `grid`,
    /// deduplicated and sorted row-major. Offsets that wrap onto the center
    /// are represented by the center class `(0, 0)`, which is included only
    /// when `include_center` is set.
    pub fn offsets(&self, grid: &TorusGrid) -> Vec<(isize, isize)> {
        let (h, w) = (grid.height(), grid.width());
        let mut out: Vec<(isize, isize)> = match self.kind {
            NeighborhoodKind::VonNeumann4 => [(-1, 0), (0, -1), (0, 1), (1, 0)]
                .iter()
                .map(|&(dy, dx)| (canonical_offset(dy, h), canonical_offset(dx, w)))
                .collect(),
            NeighborhoodKind::Moore8 => {
                let mut v = Vec::with_capacity(8);
                for dy in -1..=1isize {
                    for dx in -1..=1isize {
                        if dy == 0 && dx == 0 {
                            continue;
                        }
                        v.push((canonical_offset(dy, h), canonical_offset(dx, w)));
                    }
                }
                v
            }
            NeighborhoodKind::Radius { radius, metric } => {
                let mut v = Vec::new();
                for r in 0..h {
                    for c in 0..w {
                        let dy = canonical_offset(r as isize, h);
                        let dx = canonical_offset(c as isize, w);
                        if metric.combine(dy.unsigned_abs(), dx.unsigned_abs()) <= radius {
                            v.push((dy, dx));
                        }
                    }
                }
                v
            }
        };
        out.sort_unstable();
        out.dedup();
        out.retain(|&o| o != (0, 0));
        if self.include_center {
            out.push((0, 0));
            out.sort_unstable();
        }
        out
    }

    /// Neighborhood size, independent of the anchor pixel.
    pub fn size(&self, grid: &TorusGrid) -> usize {
        self.offsets(grid).len()
    }
}

/// Enumerate the neighbors of `p` in the fixed offset order, wrapped onto the
/// torus. Total on valid grids; panics if `p` is out of range.
pub fn neighbors(grid: &TorusGrid, nb: &Neighborhood, p: (usize, usize)) -> Vec<(usize, usize)> {
    assert!(grid.contains(p), "coordinate out of range");
    nb.offsets(grid)
        .iter()
        .map(|&(dy, dx)| grid.wrap(p.0 as isize + dy, p.1 as isize + dx))
        .collect()
}

/// Binary-reflected Gray code of `n`.
pub fn gray(n: usize) -> usize {
    n ^ (n >> 1)
}

/// Per-axis Gray position codes for a grid.
///
/// Axis coordinate `x` maps to `gray(x mod 2^bits_per_axis)` so that stepping
/// by one flips exactly one bit whenever `2^bits_per_axis` divides the period
/// (or equals it); for other periods the single wrap seam may flip several.
/// The full code of a pixel is the row-axis code followed by the column-axis
/// code, each emitted least-significant bit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionCode {
    grid: TorusGrid,
    bits_per_axis: usize,
    row_codes: Vec<u32>,
    col_codes: Vec<u32>,
}

impl PositionCode {
    pub fn new(grid: TorusGrid, bits_per_axis: usize) -> Result<Self> {
        if bits_per_axis == 0 || bits_per_axis > 32 {
            return Err(Error::config(format!(
                "bits_per_axis must be in 1..=32, got {bits_per_axis}"
            )));
        }
        let table = |period: usize| -> Vec<u32> {
            let modulus = 1usize << bits_per_axis.min(63);
            (0..period).map(|x| gray(x % modulus) as u32).collect()
        };
        Ok(PositionCode {
            grid,
            bits_per_axis,
            row_codes: table(grid.height()),
            col_codes: table(grid.width()),
        })
    }

    pub fn bits_per_axis(&self) -> usize {
        self.bits_per_axis
    }

    /// Full code length `2 * bits_per_axis`.
    pub fn code_len(&self) -> usize {
        2 * self.bits_per_axis
    }

    pub fn axis_code_row(&self, r: usize) -> u32 {
        self.row_codes[r % self.grid.height()]
    }

    pub fn axis_code_col(&self, c: usize) -> u32 {
        self.col_codes[c % self.grid.width()]
    }

    /// Position code of a coordinate as 0/1 bytes, row axis first.
    pub fn code_bits(&self, p: (usize, usize)) -> Result<Vec<u8>> {
        if !self.grid.contains(p) {
            return Err(Error::shape(format!(
                "coordinate ({}, {}) outside {}x{} grid",
                p.0,
                p.1,
                self.grid.height(),
                self.grid.width()
            )));
        }
        let mut bits = Vec::with_capacity(self.code_len());
        for code in [self.row_codes[p.0], self.col_codes[p.1]] {
            for t in 0..self.bits_per_axis {
                bits.push(((code >> t) & 1) as u8);
            }
        }
        Ok(bits)
    }
}
