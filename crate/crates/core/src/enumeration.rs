//! Listing and counting knot n-mosaics.
//!
//! Three independent paths:
//!
//! * [`enumerate`]: cell-by-cell depth-first search with per-cell candidate
//!   tables, emitting mosaics in lexicographic order.
//! * [`dfs_count`]: a separate depth-first counter that checks each placed
//!   tile against its neighbours through [`ConnectionProfile`] queries.
//! * [`count`]: a row transfer matrix over [`BoundaryPattern`]s.
//!
//! [`brute_force_count`] scans every grid and is only usable for `n <= 2`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::mosaic::Mosaic;
use crate::tiles::{ConnectionProfile, Edge, Tile};
use crate::{Error, Limits, Result};

/// Tiles allowed in a cell given whether the cell must (or may) connect upward,
/// leftward, downward and rightward. Indexed by `need_top | need_left << 1 |
/// bottom_ok << 2 | right_ok << 3`. Each list is in increasing tile order.
fn candidate_table() -> [Vec<u8>; 16] {
    std::array::from_fn(|key| {
        let need_top = key & 1 != 0;
        let need_left = key & 2 != 0;
        let bottom_ok = key & 4 != 0;
        let right_ok = key & 8 != 0;
        Tile::ALL
            .iter()
            .filter(|t| {
                let p = t.connection_profile();
                p.has(Edge::Top) == need_top
                    && p.has(Edge::Left) == need_left
                    && (bottom_ok || !p.has(Edge::Bottom))
                    && (right_ok || !p.has(Edge::Right))
            })
            .map(|t| t.index())
            .collect()
    })
}

struct Dfs<'a, F> {
    n: usize,
    table: [Vec<u8>; 16],
    cells: Vec<u8>,
    emit: &'a mut F,
}

impl<F: FnMut(&[u8])> Dfs<'_, F> {
    fn run(&mut self, pos: usize) {
        let n = self.n;
        if pos == n * n {
            (self.emit)(&self.cells);
            return;
        }
        let (i, j) = (pos / n, pos % n);
        let down = |t: u8| Tile::new(t).unwrap().connection_profile().has(Edge::Bottom);
        let right = |t: u8| Tile::new(t).unwrap().connection_profile().has(Edge::Right);
        let need_top = i > 0 && down(self.cells[pos - n]);
        let need_left = j > 0 && right(self.cells[pos - 1]);
        let key =
            need_top as usize | (need_left as usize) << 1 | ((i + 1 < n) as usize) << 2 | ((j + 1 < n) as usize) << 3;
        for c in 0..self.table[key].len() {
            self.cells[pos] = self.table[key][c];
            self.run(pos + 1);
        }
    }
}

fn for_each_knot_mosaic(n: usize, mut emit: impl FnMut(&[u8])) {
    let mut dfs = Dfs { n, table: candidate_table(), cells: vec![0; n * n], emit: &mut emit };
    dfs.run(0);
}

/// All knot n-mosaics in lexicographic order.
pub fn enumerate(n: usize, limits: &Limits) -> Result<Vec<Mosaic>> {
    check_n(n)?;
    limits.check(n)?;
    let mut out = Vec::new();
    for_each_knot_mosaic(n, |cells| out.push(Mosaic::from_indices(n, cells)));
    Ok(out)
}

/// Same as [`enumerate`], packed with [`Mosaic::pack`]; strictly increasing.
pub fn enumerate_packed(n: usize, limits: &Limits) -> Result<Vec<u128>> {
    check_n(n)?;
    limits.check(n)?;
    if n * n > 32 {
        return Err(Error::CapExceeded { n, cap: 5 });
    }
    let mut out = Vec::new();
    for_each_knot_mosaic(n, |cells| out.push(cells.iter().fold(0u128, |acc, &t| (acc << 4) | t as u128)));
    Ok(out)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::out_of_range("n", "mosaic size must be positive"))
    } else {
        Ok(())
    }
}

/// Counts knot n-mosaics by depth-first search without listing them.
///
/// Runs in time proportional to the count; practical up to `n = 5`.
pub fn dfs_count(n: usize) -> Result<u64> {
    check_n(n)?;
    fn fits(grid: &[Tile], n: usize, pos: usize, t: Tile) -> bool {
        let (i, j) = (pos / n, pos % n);
        let p = t.connection_profile();
        let above = if i == 0 { ConnectionProfile::EMPTY } else { grid[pos - n].connection_profile() };
        let left = if j == 0 { ConnectionProfile::EMPTY } else { grid[pos - 1].connection_profile() };
        p.has(Edge::Top) == above.has(Edge::Bottom)
            && p.has(Edge::Left) == left.has(Edge::Right)
            && !(i == n - 1 && p.has(Edge::Bottom))
            && !(j == n - 1 && p.has(Edge::Right))
    }
    fn go(grid: &mut Vec<Tile>, n: usize, pos: usize) -> u64 {
        if pos == n * n {
            return 1;
        }
        let mut total = 0;
        for t in Tile::ALL {
            if fits(grid, n, pos, t) {
                grid[pos] = t;
                total += go(grid, n, pos + 1);
            }
        }
        total
    }
    Ok(go(&mut vec![Tile::BLANK; n * n], n, 0))
}

/// Connection points along the bottom edge of a row: bit `j` is column `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPattern(pub u32);

/// Number of valid tile rows between each pair of boundary patterns.
#[derive(Clone, Debug)]
pub struct RowTransfer {
    n: usize,
    /// `rows[top]` lists `(bottom, count)` with nonzero count, sorted by bottom.
    rows: Vec<Vec<(BoundaryPattern, u64)>>,
}

impl RowTransfer {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        if n > 20 {
            return Err(Error::out_of_range("n", format!("{n} is too wide for a row transfer table")));
        }
        // tiles per (top, left, bottom, right) connection profile
        let mut mult = [0u64; 16];
        for t in Tile::ALL {
            mult[t.connection_profile().bits() as usize] += 1;
        }
        let profile_bits = |top: bool, left: bool, bottom: bool, right: bool| {
            let edges: Vec<Edge> = [(top, Edge::Top), (left, Edge::Left), (bottom, Edge::Bottom), (right, Edge::Right)]
                .into_iter()
                .filter_map(|(on, e)| on.then_some(e))
                .collect();
            ConnectionProfile::from_edges(&edges).bits() as usize
        };
        let width = 1usize << n;
        let mut rows = Vec::with_capacity(width);
        for top in 0..width {
            // state: (bottom bits so far, carry into the next cell) -> count
            let mut layer: Vec<(u32, bool, u64)> = vec![(0, false, 1)];
            for j in 0..n {
                let t = top >> j & 1 == 1;
                let mut next: Vec<(u32, bool, u64)> = Vec::new();
                for &(bottom, carry, c) in &layer {
                    for b in [false, true] {
                        for r in [false, true] {
                            if r && j == n - 1 {
                                continue;
                            }
                            let m = mult[profile_bits(t, carry, b, r)];
                            if m > 0 {
                                next.push((bottom | (b as u32) << j, r, c * m));
                            }
                        }
                    }
                }
                next.sort_unstable_by_key(|&(b, r, _)| (b, r));
                next.dedup_by(|a, b| {
                    if (a.0, a.1) == (b.0, b.1) {
                        b.2 += a.2;
                        true
                    } else {
                        false
                    }
                });
                layer = next;
            }
            rows.push(layer.into_iter().map(|(b, _, c)| (BoundaryPattern(b), c)).collect());
        }
        Ok(RowTransfer { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of valid rows with the given top and bottom patterns.
    pub fn get(&self, top: BoundaryPattern, bottom: BoundaryPattern) -> u64 {
        self.rows[top.0 as usize]
            .binary_search_by_key(&bottom, |&(b, _)| b)
            .map(|k| self.rows[top.0 as usize][k].1)
            .unwrap_or(0)
    }

    /// Number of knot n-mosaics: chains of n rows starting and ending at the
    /// empty pattern.
    pub fn count(&self) -> BigUint {
        let mut v = vec![BigUint::zero(); self.rows.len()];
        v[0] = BigUint::one();
        for _ in 0..self.n {
            let mut w = vec![BigUint::zero(); self.rows.len()];
            for (top, amount) in v.iter().enumerate() {
                if amount.is_zero() {
                    continue;
                }
                for &(bottom, c) in &self.rows[top] {
                    w[bottom.0 as usize] += amount * c;
                }
            }
            v = w;
        }
        v.swap_remove(0)
    }
}

/// Number of knot n-mosaics by the transfer-matrix method.
pub fn count(n: usize) -> Result<BigUint> {
    if n > 10 {
        return Err(Error::CapExceeded { n, cap: 10 });
    }
    Ok(RowTransfer::new(n)?.count())
}

/// Counts by testing every one of the `11^(n^2)` grids.
pub fn brute_force_count(n: usize) -> Result<u64> {
    check_n(n)?;
    if n > 2 {
        return Err(Error::CapExceeded { n, cap: 2 });
    }
    let cells = n * n;
    let total = 11u64.pow(cells as u32);
    let mut found = 0;
    let mut grid = Mosaic::blank(n);
    for code in 0..total {
        let mut rest = code;
        for p in (0..cells).rev() {
            grid.set(p / n, p % n, Tile::new((rest % 11) as u8).unwrap());
            rest /= 11;
        }
        found += grid.is_knot_mosaic() as u64;
    }
    Ok(found)
}

/// `11^(n^2)`, the number of n-mosaics.
pub fn mosaic_count(n: usize) -> BigUint {
    BigUint::from(11u32).pow((n * n) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn small_dimensions() {
        let one = enumerate(1, &Limits::DEFAULT).unwrap();
        assert_eq!(one, vec![Mosaic::blank(1)]);
        let two = enumerate(2, &Limits::DEFAULT).unwrap();
        assert_eq!(two, vec![Mosaic::blank(2), "21-34".parse().unwrap()]);
        for n in 1..=2 {
            assert_eq!(brute_force_count(n).unwrap(), [1, 2][n - 1]);
            assert_eq!(count(n).unwrap(), BigUint::from([1u32, 2][n - 1]));
        }
    }

    #[test]
    fn three_mosaics_match_fixture_list() {
        let listed: Vec<String> = enumerate(3, &Limits::DEFAULT).unwrap().iter().map(Mosaic::to_tcode).collect();
        assert_eq!(listed, fixtures::APPENDIX_A);
        assert_eq!(count(3).unwrap(), BigUint::from(22u32));
        assert_eq!(dfs_count(3).unwrap(), 22);
    }

    #[test]
    fn paths_agree_on_four() {
        let list = enumerate(4, &Limits::DEFAULT).unwrap();
        assert!(list.iter().all(Mosaic::is_knot_mosaic));
        assert!(list.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(count(4).unwrap(), BigUint::from(list.len()));
        assert_eq!(dfs_count(4).unwrap(), list.len() as u64);
        let packed = enumerate_packed(4, &Limits::DEFAULT).unwrap();
        assert_eq!(packed.len(), list.len());
        assert!(packed.iter().zip(&list).all(|(p, m)| m.pack() == Some(*p)));
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate(5, &Limits::DEFAULT), Err(Error::CapExceeded { .. })));
        assert!(brute_force_count(3).is_err());
        assert!(count(11).is_err());
        assert!(enumerate(0, &Limits::DEFAULT).is_err());
    }

    #[test]
    fn transfer_rows_have_no_side_connections() {
        let rt = RowTransfer::new(3).unwrap();
        // from the empty pattern, a row can only open pairs of adjacent columns or span
        assert_eq!(rt.get(BoundaryPattern(0), BoundaryPattern(0)), 1);
        assert_eq!(rt.get(BoundaryPattern(0), BoundaryPattern(0b001)), 0);
        assert_eq!(rt.get(BoundaryPattern(0), BoundaryPattern(0b011)), 1);
        assert_eq!(rt.get(BoundaryPattern(0), BoundaryPattern(0b101)), 1);
        assert_eq!(rt.get(BoundaryPattern(0), BoundaryPattern(0b111)), 0);
    }

    #[test]
    fn bound_holds() {
        for n in 1..=6 {
            assert!(count(n).unwrap() < mosaic_count(n));
        }
    }
}
