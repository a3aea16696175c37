//! Square grids of tiles.

use std::fmt;
use std::str::FromStr;

use crate::tcode;
use crate::tiles::{Edge, Tile};
use crate::{Error, Result};

/// Top-left cell of a submosaic: row `i`, column `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Location {
    pub i: usize,
    pub j: usize,
}

impl Location {
    pub const ORIGIN: Location = Location { i: 0, j: 0 };

    pub const fn new(i: usize, j: usize) -> Self {
        Location { i, j }
    }

    /// All locations of a `k`-submosaic inside an `n`-mosaic, row-major.
    pub fn all(n: usize, k: usize) -> impl Iterator<Item = Location> {
        let span = if k <= n { n - k + 1 } else { 0 };
        (0..span).flat_map(move |i| (0..span).map(move |j| Location { i, j }))
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// An `n x n` grid of tiles stored row-major.
///
/// The derived ordering is the lexicographic order on the row-major tile
/// sequence, which is the basis order of the quantum knot spaces. It is only
/// meaningful between mosaics of the same size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mosaic {
    n: usize,
    cells: Vec<Tile>,
}

/// Result of following every strand of a knot mosaic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceSummary {
    /// Number of closed curves.
    pub components: usize,
    /// Number of cells holding a crossing tile.
    pub crossings: usize,
    /// Total number of (cell, strand) passes over all curves.
    pub strand_passes: usize,
}

impl Mosaic {
    pub fn new(n: usize, cells: Vec<Tile>) -> Result<Self> {
        if n == 0 || cells.len() != n * n {
            return Err(Error::SizeMismatch { expected: n * n, found: cells.len() });
        }
        Ok(Mosaic { n, cells })
    }

    pub fn blank(n: usize) -> Self {
        Mosaic { n, cells: vec![Tile::BLANK; n * n] }
    }

    pub(crate) fn from_indices(n: usize, indices: &[u8]) -> Self {
        debug_assert_eq!(indices.len(), n * n);
        Mosaic { n, cells: indices.iter().map(|&v| Tile::new(v).expect("tile index")).collect() }
    }

    pub fn parse_tcode(text: &str) -> Result<Self> {
        let (n, cells) = tcode::parse_grid(text, 10)?;
        Ok(Mosaic::from_indices(n, &cells))
    }

    pub fn to_tcode(&self) -> String {
        tcode::write_grid(self.n, self.cells.iter().map(|t| t.index()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Tile] {
        &self.cells
    }

    pub fn get(&self, i: usize, j: usize) -> Tile {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, tile: Tile) {
        self.cells[i * self.n + j] = tile;
    }

    /// Cellwise image under a tile map.
    pub fn map_tiles(&self, f: impl Fn(Tile) -> Tile) -> Mosaic {
        Mosaic { n: self.n, cells: self.cells.iter().map(|&t| f(t)).collect() }
    }

    /// The `k x k` block whose top-left cell is `loc`.
    pub fn submosaic(&self, k: usize, loc: Location) -> Result<Mosaic> {
        if k == 0 || k > self.n || loc.i + k > self.n || loc.j + k > self.n {
            return Err(Error::out_of_range("submosaic", format!("k={k} at {loc} in a {}-mosaic", self.n)));
        }
        let mut cells = Vec::with_capacity(k * k);
        for r in 0..k {
            let start = (loc.i + r) * self.n + loc.j;
            cells.extend_from_slice(&self.cells[start..start + k]);
        }
        Ok(Mosaic { n: k, cells })
    }

    /// True when the `block.n()`-submosaic at `loc` equals `block`. Out-of-range blocks never match.
    pub fn block_equals(&self, block: &Mosaic, loc: Location) -> bool {
        let k = block.n;
        if loc.i + k > self.n || loc.j + k > self.n {
            return false;
        }
        (0..k).all(|r| {
            let start = (loc.i + r) * self.n + loc.j;
            self.cells[start..start + k] == block.cells[r * k..(r + 1) * k]
        })
    }

    /// Copy of `self` with the block at `loc` overwritten by `block`.
    pub fn with_block(&self, block: &Mosaic, loc: Location) -> Result<Mosaic> {
        let k = block.n;
        if loc.i + k > self.n || loc.j + k > self.n {
            return Err(Error::out_of_range("block", format!("k={k} at {loc} in a {}-mosaic", self.n)));
        }
        let mut out = self.clone();
        for r in 0..k {
            let start = (loc.i + r) * self.n + loc.j;
            out.cells[start..start + k].copy_from_slice(&block.cells[r * k..(r + 1) * k]);
        }
        Ok(out)
    }

    fn neighbor(&self, i: usize, j: usize, edge: Edge) -> Option<(usize, usize)> {
        let (di, dj) = edge.offset();
        let ni = i.checked_add_signed(di)?;
        let nj = j.checked_add_signed(dj)?;
        (ni < self.n && nj < self.n).then_some((ni, nj))
    }

    /// Every connection point meets a connection point of the contiguous
    /// cell. Points on the outer boundary have no partner and fail.
    pub fn is_knot_mosaic(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let p = self.get(i, j).connection_profile();
                // Checking right and bottom from every cell, plus the left and
                // top boundaries, covers every edge exactly once.
                let right = match self.neighbor(i, j, Edge::Right) {
                    Some((a, b)) => self.get(a, b).connection_profile().has(Edge::Left),
                    None => false,
                };
                let below = match self.neighbor(i, j, Edge::Bottom) {
                    Some((a, b)) => self.get(a, b).connection_profile().has(Edge::Top),
                    None => false,
                };
                if p.has(Edge::Right) != right || p.has(Edge::Bottom) != below {
                    return false;
                }
                if (i == 0 && p.has(Edge::Top)) || (j == 0 && p.has(Edge::Left)) {
                    return false;
                }
            }
        }
        true
    }

    /// Pads with a blank last row and column.
    pub fn inject(&self) -> Mosaic {
        let m = self.n + 1;
        let mut cells = vec![Tile::BLANK; m * m];
        for i in 0..self.n {
            cells[i * m..i * m + self.n].copy_from_slice(&self.cells[i * self.n..(i + 1) * self.n]);
        }
        Mosaic { n: m, cells }
    }

    /// `inject` applied `times` times.
    pub fn inject_times(&self, times: usize) -> Mosaic {
        (0..times).fold(self.clone(), |m, _| m.inject())
    }

    /// Counter-clockwise quarter turn of the whole grid, tiles included.
    pub fn rotate90(&self) -> Mosaic {
        let k = self.n;
        let mut cells = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                cells.push(self.get(j, k - 1 - i).rotate90());
            }
        }
        Mosaic { n: k, cells }
    }

    pub fn crossing_count(&self) -> usize {
        self.cells.iter().filter(|t| t.is_crossing()).count()
    }

    /// Connection points along the outer boundary, in the order: top row
    /// (top edges), right column, bottom row, left column.
    pub fn boundary_profile(&self) -> Vec<bool> {
        let n = self.n;
        let mut out = Vec::with_capacity(4 * n);
        out.extend((0..n).map(|j| self.get(0, j).connection_profile().has(Edge::Top)));
        out.extend((0..n).map(|i| self.get(i, n - 1).connection_profile().has(Edge::Right)));
        out.extend((0..n).map(|j| self.get(n - 1, j).connection_profile().has(Edge::Bottom)));
        out.extend((0..n).map(|i| self.get(i, 0).connection_profile().has(Edge::Left)));
        out
    }

    /// Follows each strand across cell boundaries until it closes up.
    pub fn trace(&self) -> Result<TraceSummary> {
        if !self.is_knot_mosaic() {
            return Err(Error::NotAKnotMosaic);
        }
        let n = self.n;
        // visited[(cell, strand slot)]; crossings and double arcs hold two strands.
        let mut visited = vec![[false; 2]; n * n];
        let mut components = 0;
        let mut passes = 0;
        for start in 0..n * n {
            for slot in 0..self.cells[start].strands().len() {
                if visited[start][slot] {
                    continue;
                }
                components += 1;
                let (mut i, mut j) = (start / n, start % n);
                let mut entry = self.cells[start].strands()[slot].ends.0;
                loop {
                    let tile = self.get(i, j);
                    let s = tile
                        .strands()
                        .iter()
                        .position(|s| s.touches(entry))
                        .expect("knot mosaic: entry edge carries a strand");
                    if visited[i * n + j][s] {
                        break;
                    }
                    visited[i * n + j][s] = true;
                    passes += 1;
                    let exit = tile.strand_exit(entry)?;
                    let (ni, nj) = self.neighbor(i, j, exit).ok_or(Error::NotAKnotMosaic)?;
                    i = ni;
                    j = nj;
                    entry = exit.opposite();
                }
            }
        }
        Ok(TraceSummary { components, crossings: self.crossing_count(), strand_passes: passes })
    }

    /// Packs a mosaic with at most 32 cells into 4 bits per cell, first cell
    /// most significant, so numeric order equals lexicographic order.
    pub fn pack(&self) -> Option<u128> {
        if self.cells.len() > 32 {
            return None;
        }
        Some(self.cells.iter().fold(0u128, |acc, t| (acc << 4) | t.index() as u128))
    }

    pub fn unpack(n: usize, packed: u128) -> Mosaic {
        let len = n * n;
        let cells = (0..len)
            .map(|p| {
                let shift = 4 * (len - 1 - p);
                Tile::new(((packed >> shift) & 0xF) as u8).expect("packed tile index")
            })
            .collect();
        Mosaic { n, cells }
    }
}

impl FromStr for Mosaic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mosaic::parse_tcode(s)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tcode())
    }
}

impl fmt::Debug for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mosaic({})", self.to_tcode())
    }
}
