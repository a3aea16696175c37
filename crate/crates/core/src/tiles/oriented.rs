//! The 29 oriented tiles.
//!
//! Each oriented tile is an unoriented tile with a direction on every strand.
//! A strand starts at a `Minus` connection point and ends at a `Plus` one.
//! Indices follow the usual listing, grouped by rotation class:
//!
//! * `0`: blank
//! * `1..=4`: directed lines
//! * `5..=8`, `9..=12`: directed arcs, one class per turning sense
//! * `13..=14`, `15..=16`, `17..=20`: directed double arcs
//! * `21..=24`, `25..=28`: directed crossings
//!
//! Inside each class, consecutive entries differ by a counter-clockwise
//! quarter turn.

use std::fmt;

use super::{ConnectionProfile, Edge, Tile};
use Edge::{Bottom, Left, Right, Top};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Beginning of a directed strand.
    Minus,
    /// End of a directed strand.
    Plus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// Per-edge sign of an oriented tile; `None` where there is no connection point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedProfile {
    pub top: Option<Sign>,
    pub right: Option<Sign>,
    pub bottom: Option<Sign>,
    pub left: Option<Sign>,
}

impl SignedProfile {
    pub fn get(&self, edge: Edge) -> Option<Sign> {
        match edge {
            Top => self.top,
            Right => self.right,
            Bottom => self.bottom,
            Left => self.left,
        }
    }

    fn set(&mut self, edge: Edge, sign: Sign) {
        let slot = match edge {
            Top => &mut self.top,
            Right => &mut self.right,
            Bottom => &mut self.bottom,
            Left => &mut self.left,
        };
        *slot = Some(sign);
    }

    pub fn count(&self, sign: Sign) -> usize {
        Edge::ALL.iter().filter(|e| self.get(**e) == Some(sign)).count()
    }

    /// Drops the signs, keeping only which edges carry a connection point.
    pub fn unsigned(&self) -> ConnectionProfile {
        let edges: Vec<Edge> = Edge::ALL.into_iter().filter(|e| self.get(*e).is_some()).collect();
        ConnectionProfile::from_edges(&edges)
    }
}

struct Row {
    underlying: u8,
    /// Directed strands as (start, end).
    strands: &'static [(Edge, Edge)],
}

const fn row(underlying: u8, strands: &'static [(Edge, Edge)]) -> Row {
    Row { underlying, strands }
}

const TABLE: [Row; 29] = [
    /*  0 */ row(0, &[]),
    /*  1 */ row(5, &[(Left, Right)]),
    /*  2 */ row(6, &[(Bottom, Top)]),
    /*  3 */ row(5, &[(Right, Left)]),
    /*  4 */ row(6, &[(Top, Bottom)]),
    /*  5 */ row(1, &[(Left, Bottom)]),
    /*  6 */ row(2, &[(Bottom, Right)]),
    /*  7 */ row(3, &[(Right, Top)]),
    /*  8 */ row(4, &[(Top, Left)]),
    /*  9 */ row(1, &[(Bottom, Left)]),
    /* 10 */ row(2, &[(Right, Bottom)]),
    /* 11 */ row(3, &[(Top, Right)]),
    /* 12 */ row(4, &[(Left, Top)]),
    /* 13 */ row(7, &[(Left, Bottom), (Right, Top)]),
    /* 14 */ row(8, &[(Bottom, Right), (Top, Left)]),
    /* 15 */ row(7, &[(Bottom, Left), (Top, Right)]),
    /* 16 */ row(8, &[(Right, Bottom), (Left, Top)]),
    /* 17 */ row(7, &[(Left, Bottom), (Top, Right)]),
    /* 18 */ row(8, &[(Bottom, Right), (Left, Top)]),
    /* 19 */ row(7, &[(Right, Top), (Bottom, Left)]),
    /* 20 */ row(8, &[(Top, Left), (Right, Bottom)]),
    /* 21 */ row(9, &[(Bottom, Top), (Left, Right)]),
    /* 22 */ row(10, &[(Right, Left), (Bottom, Top)]),
    /* 23 */ row(9, &[(Top, Bottom), (Right, Left)]),
    /* 24 */ row(10, &[(Left, Right), (Top, Bottom)]),
    /* 25 */ row(9, &[(Bottom, Top), (Right, Left)]),
    /* 26 */ row(10, &[(Right, Left), (Top, Bottom)]),
    /* 27 */ row(9, &[(Top, Bottom), (Left, Right)]),
    /* 28 */ row(10, &[(Left, Right), (Bottom, Top)]),
];

/// An oriented mosaic tile, index `0..=28`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTile(u8);

impl OrientedTile {
    pub const COUNT: usize = 29;
    pub const BLANK: OrientedTile = OrientedTile(0);

    pub const fn new(index: u8) -> Option<OrientedTile> {
        if (index as usize) < Self::COUNT {
            Some(OrientedTile(index))
        } else {
            None
        }
    }

    pub fn all() -> impl Iterator<Item = OrientedTile> {
        (0..Self::COUNT as u8).map(OrientedTile)
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    /// The tile obtained by forgetting strand directions.
    pub const fn underlying(self) -> Tile {
        Tile(TABLE[self.0 as usize].underlying)
    }

    pub fn directed_strands(self) -> &'static [(Edge, Edge)] {
        TABLE[self.0 as usize].strands
    }

    pub fn signed_profile(self) -> SignedProfile {
        let mut p = SignedProfile { top: None, right: None, bottom: None, left: None };
        for &(start, end) in self.directed_strands() {
            p.set(start, Sign::Minus);
            p.set(end, Sign::Plus);
        }
        p
    }

    /// Counter-clockwise quarter turn.
    pub fn rotate90(self) -> OrientedTile {
        let target: Vec<(Edge, Edge)> =
            self.directed_strands().iter().map(|&(a, b)| (a.rotated(), b.rotated())).collect();
        let under = self.underlying().rotate90();
        OrientedTile::all()
            .find(|t| {
                t.underlying() == under
                    && t.directed_strands().len() == target.len()
                    && target.iter().all(|s| t.directed_strands().contains(s))
            })
            .expect("oriented tile table is closed under rotation")
    }
}

impl fmt::Debug for OrientedTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.0)
    }
}

impl fmt::Display for OrientedTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.0)
    }
}

pub fn oriented_rotation_classes() -> Vec<Vec<OrientedTile>> {
    let all: Vec<OrientedTile> = OrientedTile::all().collect();
    super::rotation_classes(&all, OrientedTile::rotate90)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coherent_with_unoriented() {
        for t in OrientedTile::all() {
            let p = t.signed_profile();
            assert_eq!(p.unsigned(), t.underlying().connection_profile(), "{t}");
            assert_eq!(p.count(Sign::Minus), p.count(Sign::Plus));
            // directed strands trace the same pairs as the unoriented tile
            for &(a, b) in t.directed_strands() {
                assert_eq!(t.underlying().strand_exit(a).unwrap(), b);
            }
        }
        assert!(OrientedTile::new(29).is_none());
    }

    #[test]
    fn blank_has_no_signs() {
        let p = OrientedTile::BLANK.signed_profile();
        assert!(Edge::ALL.iter().all(|e| p.get(*e).is_none()));
    }

    #[test]
    fn fibers_over_unoriented_tiles() {
        let fiber = |u: u8| OrientedTile::all().filter(|t| t.underlying().index() == u).count();
        assert_eq!(fiber(0), 1);
        assert_eq!(fiber(5), 2);
        for u in 1..=6 {
            assert_eq!(fiber(u), 2);
        }
        for u in 7..=10 {
            assert_eq!(fiber(u), 4);
        }
        // all directed versions are distinct
        let mut seen = std::collections::HashSet::new();
        for t in OrientedTile::all() {
            let mut s = t.directed_strands().to_vec();
            s.sort();
            assert!(seen.insert((t.underlying(), s)));
        }
    }

    #[test]
    fn nine_classes_in_listing_order() {
        let classes = oriented_rotation_classes();
        assert_eq!(classes.len(), 9);
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 4, 4, 4, 2, 2, 4, 4, 4]);
        for class in &classes {
            for w in class.windows(2) {
                assert_eq!(w[1].index(), w[0].index() + 1);
                assert_eq!(w[0].rotate90(), w[1]);
            }
        }
    }
}
