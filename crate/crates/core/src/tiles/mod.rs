//! The eleven unoriented mosaic tiles and their geometry.
//!
//! Tiles are numbered `T0..=T10` in the order used for lexicographic
//! comparison of mosaics:
//!
//! | tile | connection points | drawn strands |
//! |------|-------------------|---------------|
//! | T0   | none              | blank |
//! | T1   | left, bottom      | one arc |
//! | T2   | right, bottom     | one arc |
//! | T3   | top, right        | one arc |
//! | T4   | top, left         | one arc |
//! | T5   | left, right       | horizontal line |
//! | T6   | top, bottom       | vertical line |
//! | T7   | all four          | arcs left-bottom and top-right |
//! | T8   | all four          | arcs right-bottom and top-left |
//! | T9   | all four          | crossing, vertical strand over |
//! | T10  | all four          | crossing, vertical strand under |
//!
//! Rotation is a quarter turn counter-clockwise.

pub mod oriented;

use std::fmt;

pub use oriented::{OrientedTile, Sign, SignedProfile};

/// One of the four edge midpoints of a tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    Top,
    Right,
    Bottom,
    Left,
}

impl Edge {
    pub const ALL: [Edge; 4] = [Edge::Top, Edge::Right, Edge::Bottom, Edge::Left];

    /// The edge of the neighbouring cell that touches this one.
    pub const fn opposite(self) -> Edge {
        match self {
            Edge::Top => Edge::Bottom,
            Edge::Right => Edge::Left,
            Edge::Bottom => Edge::Top,
            Edge::Left => Edge::Right,
        }
    }

    /// Where this edge ends up after a counter-clockwise quarter turn.
    pub const fn rotated(self) -> Edge {
        match self {
            Edge::Top => Edge::Left,
            Edge::Left => Edge::Bottom,
            Edge::Bottom => Edge::Right,
            Edge::Right => Edge::Top,
        }
    }

    /// Row/column offset of the neighbour across this edge.
    pub const fn offset(self) -> (isize, isize) {
        match self {
            Edge::Top => (-1, 0),
            Edge::Right => (0, 1),
            Edge::Bottom => (1, 0),
            Edge::Left => (0, -1),
        }
    }

    const fn bit(self) -> u8 {
        match self {
            Edge::Top => 1,
            Edge::Right => 2,
            Edge::Bottom => 4,
            Edge::Left => 8,
        }
    }
}

/// Which edge midpoints of a tile are connection points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ConnectionProfile(u8);

impl ConnectionProfile {
    pub const EMPTY: ConnectionProfile = ConnectionProfile(0);
    pub const FULL: ConnectionProfile = ConnectionProfile(0b1111);

    pub fn from_edges(edges: &[Edge]) -> Self {
        ConnectionProfile(edges.iter().fold(0, |acc, e| acc | e.bit()))
    }

    pub const fn has(self, edge: Edge) -> bool {
        self.0 & edge.bit() != 0
    }

    pub const fn count(self) -> u32 {
        self.0.count_ones()
    }

    pub fn edges(self) -> impl Iterator<Item = Edge> {
        Edge::ALL.into_iter().filter(move |e| self.has(*e))
    }

    /// The profile after a counter-clockwise quarter turn of the tile.
    pub fn rotated(self) -> Self {
        ConnectionProfile::from_edges(&self.edges().map(Edge::rotated).collect::<Vec<_>>())
    }

    pub const fn bits(self) -> u8 {
        self.0
    }
}

impl fmt::Debug for ConnectionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges()).finish()
    }
}

/// Stacking of a strand inside a tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layer {
    Flat,
    Over,
    Under,
}

/// An unordered pair of edges joined by a strand drawn on a tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strand {
    pub ends: (Edge, Edge),
    pub layer: Layer,
}

impl Strand {
    const fn flat(a: Edge, b: Edge) -> Self {
        Strand { ends: (a, b), layer: Layer::Flat }
    }

    pub fn touches(&self, edge: Edge) -> bool {
        self.ends.0 == edge || self.ends.1 == edge
    }

    pub fn other_end(&self, edge: Edge) -> Option<Edge> {
        if self.ends.0 == edge {
            Some(self.ends.1)
        } else if self.ends.1 == edge {
            Some(self.ends.0)
        } else {
            None
        }
    }
}

use Edge::{Bottom, Left, Right, Top};

const STRANDS: [&[Strand]; 11] = [
    &[],
    &[Strand::flat(Left, Bottom)],
    &[Strand::flat(Right, Bottom)],
    &[Strand::flat(Top, Right)],
    &[Strand::flat(Top, Left)],
    &[Strand::flat(Left, Right)],
    &[Strand::flat(Top, Bottom)],
    &[Strand::flat(Left, Bottom), Strand::flat(Top, Right)],
    &[Strand::flat(Right, Bottom), Strand::flat(Top, Left)],
    &[Strand { ends: (Top, Bottom), layer: Layer::Over }, Strand { ends: (Left, Right), layer: Layer::Under }],
    &[Strand { ends: (Top, Bottom), layer: Layer::Under }, Strand { ends: (Left, Right), layer: Layer::Over }],
];

const PROFILES: [u8; 11] = [0, 0b1100, 0b0110, 0b0011, 0b1001, 0b1010, 0b0101, 15, 15, 15, 15];

const ROTATED: [u8; 11] = [0, 2, 3, 4, 1, 6, 5, 8, 7, 10, 9];

/// An unoriented mosaic tile `T0..=T10`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile(u8);

impl Tile {
    pub const COUNT: usize = 11;

    pub const BLANK: Tile = Tile(0);
    /// Crossing with the vertical strand on top.
    pub const CROSS_V_OVER: Tile = Tile(9);
    /// Crossing with the horizontal strand on top.
    pub const CROSS_H_OVER: Tile = Tile(10);

    pub const ALL: [Tile; 11] = {
        let mut all = [Tile(0); 11];
        let mut i = 0;
        while i < 11 {
            all[i] = Tile(i as u8);
            i += 1;
        }
        all
    };

    pub const fn new(index: u8) -> Option<Tile> {
        if index < 11 {
            Some(Tile(index))
        } else {
            None
        }
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    pub const fn connection_profile(self) -> ConnectionProfile {
        ConnectionProfile(PROFILES[self.0 as usize])
    }

    pub const fn strands(self) -> &'static [Strand] {
        STRANDS[self.0 as usize]
    }

    pub const fn rotate90(self) -> Tile {
        Tile(ROTATED[self.0 as usize])
    }

    pub const fn is_crossing(self) -> bool {
        self.0 == 9 || self.0 == 10
    }

    /// Follows the strand entering at `entry` and returns the edge where it leaves.
    pub fn strand_exit(self, entry: Edge) -> crate::Result<Edge> {
        self.strands()
            .iter()
            .find_map(|s| s.other_end(entry))
            .ok_or(crate::Error::NoConnectionPoint { tile: self, edge: entry })
    }

    /// Every tile sharing this tile's connection profile.
    pub fn with_same_profile(self) -> impl Iterator<Item = Tile> {
        let p = self.connection_profile();
        Tile::ALL.into_iter().filter(move |t| t.connection_profile() == p)
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

/// Groups items into classes under repeated application of `rotate`.
pub(crate) fn rotation_classes<T: Copy + PartialEq>(all: &[T], rotate: impl Fn(T) -> T) -> Vec<Vec<T>> {
    let mut classes: Vec<Vec<T>> = Vec::new();
    for &t in all {
        if classes.iter().any(|c| c.contains(&t)) {
            continue;
        }
        let mut class = vec![t];
        let mut r = rotate(t);
        while r != t {
            if !class.contains(&r) {
                class.push(r);
            }
            r = rotate(r);
        }
        classes.push(class);
    }
    classes
}

/// Rotation classes of the unoriented tiles.
pub fn tile_rotation_classes() -> Vec<Vec<Tile>> {
    rotation_classes(&Tile::ALL, Tile::rotate90)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u8) -> Tile {
        Tile::new(i).unwrap()
    }

    #[test]
    fn profile_table() {
        assert_eq!(t(0).connection_profile(), ConnectionProfile::EMPTY);
        assert_eq!(t(5).connection_profile(), ConnectionProfile::from_edges(&[Left, Right]));
        assert_eq!(t(6).connection_profile(), ConnectionProfile::from_edges(&[Top, Bottom]));
        assert_eq!(t(1).connection_profile(), ConnectionProfile::from_edges(&[Left, Bottom]));
        assert_eq!(t(9).connection_profile(), ConnectionProfile::FULL);
        for tile in Tile::ALL {
            let expected = match tile.index() {
                0 => 0,
                1..=6 => 2,
                _ => 4,
            };
            assert_eq!(tile.connection_profile().count(), expected, "{tile}");
        }
    }

    #[test]
    fn strands_cover_profile() {
        for tile in Tile::ALL {
            let mut ends: Vec<Edge> = tile.strands().iter().flat_map(|s| [s.ends.0, s.ends.1]).collect();
            ends.sort();
            let mut profile: Vec<Edge> = tile.connection_profile().edges().collect();
            profile.sort();
            assert_eq!(ends, profile, "{tile}");
            let layered = tile.strands().iter().any(|s| s.layer != Layer::Flat);
            assert_eq!(layered, tile.is_crossing());
        }
    }

    #[test]
    fn rotation() {
        assert_eq!(t(0).rotate90(), t(0));
        assert_eq!(t(5).rotate90(), t(6));
        assert_eq!(t(1).rotate90(), t(2));
        assert_eq!(t(4).rotate90(), t(1));
        assert_eq!(t(9).rotate90(), t(10));
        for tile in Tile::ALL {
            let r4 = tile.rotate90().rotate90().rotate90().rotate90();
            assert_eq!(r4, tile);
            assert_eq!(tile.rotate90().connection_profile(), tile.connection_profile().rotated());
        }
    }

    #[test]
    fn rotated_strands_match() {
        for tile in Tile::ALL {
            let rot = tile.rotate90();
            for s in tile.strands() {
                let image = (s.ends.0.rotated(), s.ends.1.rotated());
                let found = rot
                    .strands()
                    .iter()
                    .find(|r| r.touches(image.0) && r.touches(image.1))
                    .unwrap_or_else(|| panic!("{tile} strand {s:?}"));
                // Turning a crossing swaps which direction is vertical, not which strand is on top.
                assert_eq!(found.layer, s.layer);
            }
        }
    }

    #[test]
    fn strand_exit_pairs() {
        assert_eq!(t(9).strand_exit(Top).unwrap(), Bottom);
        assert_eq!(t(7).strand_exit(Left).unwrap(), Bottom);
        assert_eq!(t(7).strand_exit(Top).unwrap(), Right);
        assert_eq!(t(8).strand_exit(Top).unwrap(), Left);
        assert_eq!(t(8).strand_exit(Right).unwrap(), Bottom);
        assert!(matches!(t(5).strand_exit(Top), Err(crate::Error::NoConnectionPoint { .. })));
        for tile in Tile::ALL {
            for e in Edge::ALL {
                if let Ok(x) = tile.strand_exit(e) {
                    assert_eq!(tile.strand_exit(x).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn five_rotation_classes() {
        let classes = tile_rotation_classes();
        assert_eq!(classes.len(), 5);
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 4, 2, 2, 2]);
    }
}
