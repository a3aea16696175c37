//! Oriented mosaics over the 29 oriented tiles.
//!
//! An oriented mosaic is valid when every signed connection point meets a
//! connection point of the opposite sign on the contiguous tile. Only
//! validity and enumeration are provided; there is no oriented move set.

use std::fmt;
use std::str::FromStr;

use crate::mosaic::Mosaic;
use crate::tcode::{parse_grid, write_grid};
use crate::tiles::{Edge, OrientedTile, Sign};
use crate::{Error, Result};

/// Largest `n` accepted by [`enumerate_oriented`].
pub const ORIENTED_ENUMERATION_CAP: usize = 3;

/// An `n x n` grid of oriented tiles stored row-major, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedMosaic {
    n: usize,
    cells: Vec<OrientedTile>,
}

impl OrientedMosaic {
    pub fn new(n: usize, cells: Vec<OrientedTile>) -> Result<Self> {
        if n == 0 || cells.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, found: cells.len() });
        }
        Ok(OrientedMosaic { n, cells })
    }

    pub fn blank(n: usize) -> Self {
        OrientedMosaic { n, cells: vec![OrientedTile::BLANK; n * n] }
    }

    /// Parses the oriented tile-code (tokens `0..=28`).
    pub fn parse_tcode(text: &str) -> Result<Self> {
        let (n, raw) = parse_grid(text, OrientedTile::COUNT as u8 - 1)?;
        let cells = raw.into_iter().map(|v| OrientedTile::new(v).expect("index checked by parser")).collect();
        Ok(OrientedMosaic { n, cells })
    }

    pub fn to_tcode(&self) -> String {
        write_grid(self.n, self.cells.iter().map(|t| t.index()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[OrientedTile] {
        &self.cells
    }

    pub fn get(&self, i: usize, j: usize) -> OrientedTile {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, tile: OrientedTile) {
        self.cells[i * self.n + j] = tile;
    }

    fn neighbor(&self, i: usize, j: usize, edge: Edge) -> Option<(usize, usize)> {
        let (di, dj) = edge.offset();
        let ni = i.checked_add_signed(di)?;
        let nj = j.checked_add_signed(dj)?;
        (ni < self.n && nj < self.n).then_some((ni, nj))
    }

    /// Every signed connection point meets one of opposite sign across the
    /// shared edge; boundary connection points fail.
    pub fn is_oriented_knot_mosaic(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let profile = self.get(i, j).signed_profile();
                Edge::ALL.into_iter().all(|edge| {
                    let across = self
                        .neighbor(i, j, edge)
                        .and_then(|(a, b)| self.get(a, b).signed_profile().get(edge.opposite()));
                    match (profile.get(edge), across) {
                        (None, None) => true,
                        (Some(s), Some(t)) => s.flipped() == t,
                        _ => false,
                    }
                })
            })
        })
    }

    /// Cellwise underlying unoriented tile.
    pub fn forget_orientation(&self) -> Mosaic {
        Mosaic::new(self.n, self.cells.iter().map(|t| t.underlying()).collect()).expect("same shape")
    }
}

/// All oriented knot n-mosaics in lexicographic order.
pub fn enumerate_oriented(n: usize) -> Result<Vec<OrientedMosaic>> {
    if n > ORIENTED_ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ORIENTED_ENUMERATION_CAP });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut grid = OrientedMosaic::blank(n);
    fill(&mut grid, 0, &mut out);
    Ok(out)
}

/// Row-major depth-first fill; each tile must match the cells above and to
/// the left and carry no point on the outer boundary.
fn fill(grid: &mut OrientedMosaic, pos: usize, out: &mut Vec<OrientedMosaic>) {
    let n = grid.n;
    if pos == n * n {
        out.push(grid.clone());
        return;
    }
    let (i, j) = (pos / n, pos % n);
    let above = (i > 0).then(|| grid.get(i - 1, j).signed_profile().bottom);
    let left = (j > 0).then(|| grid.get(i, j - 1).signed_profile().right);
    for tile in OrientedTile::all() {
        let p = tile.signed_profile();
        let meets = |mine: Option<Sign>, theirs: Option<Option<Sign>>| match theirs {
            None => mine.is_none(),
            Some(t) => mine.map(Sign::flipped) == t,
        };
        if !meets(p.top, above) || !meets(p.left, left) {
            continue;
        }
        if (i == n - 1 && p.bottom.is_some()) || (j == n - 1 && p.right.is_some()) {
            continue;
        }
        grid.cells[pos] = tile;
        fill(grid, pos + 1, out);
    }
    grid.cells[pos] = OrientedTile::BLANK;
}

impl FromStr for OrientedMosaic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrientedMosaic::parse_tcode(s)
    }
}

impl fmt::Display for OrientedMosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tcode())
    }
}

impl fmt::Debug for OrientedMosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedMosaic({})", self.to_tcode())
    }
}
