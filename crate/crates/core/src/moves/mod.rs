//! Mosaic moves.
//!
//! A deterministic k-move at location `(i, j)` swaps two k-mosaic patterns
//! `N` and `N'` wherever one of them occupies the k-submosaic at `(i, j)`, and
//! leaves every other mosaic alone. It is an involution on all n-mosaics.
//!
//! Move templates come from a text table ([`MoveTable::standard`] embeds the
//! planar isotopy and Reidemeister templates). A template cell is either a
//! tile or a nondeterministic symbol with two options; each template expands
//! to all option choices and all four quarter turns ([`MoveTemplate::expand_patterns`]),
//! and each resulting pattern pair acts at every location that fits.

mod table;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::mosaic::{Location, Mosaic};
use crate::tiles::Tile;
use crate::{Error, Result};

pub use table::parse_table;

const STANDARD_TABLE: &str = include_str!("standard.table");

/// A tile with two options: `options[0]` without the dashed part, `options[1]` with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondetSymbol {
    pub symbol: char,
    pub options: [Tile; 2],
    /// Symbols sharing a label resolve to the same option index.
    pub label: Option<String>,
}

/// One cell of a template pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Fixed(Tile),
    /// Index into [`MoveTemplate::symbols`].
    Symbol(usize),
}

/// What forces two nondeterministic cells to resolve together.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum JoinKey {
    Position(usize),
    Label(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveTemplate {
    name: String,
    k: usize,
    lhs: Vec<Cell>,
    rhs: Vec<Cell>,
    symbols: Vec<NondetSymbol>,
}

/// An unordered pair of distinct k-mosaics, stored with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternPair {
    a: Mosaic,
    b: Mosaic,
}

impl PatternPair {
    /// `None` when the two patterns are equal or differ in size.
    pub fn new(x: Mosaic, y: Mosaic) -> Option<Self> {
        if x.n() != y.n() {
            return None;
        }
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Some(PatternPair { a: x, b: y }),
            std::cmp::Ordering::Greater => Some(PatternPair { a: y, b: x }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn k(&self) -> usize {
        self.a.n()
    }

    pub fn first(&self) -> &Mosaic {
        &self.a
    }

    pub fn second(&self) -> &Mosaic {
        &self.b
    }

    pub fn rotate90(&self) -> PatternPair {
        PatternPair::new(self.a.rotate90(), self.b.rotate90()).expect("rotation is injective")
    }

    /// The pattern paired with `block`, if `block` is one of the two.
    pub fn partner(&self, block: &Mosaic) -> Option<&Mosaic> {
        if *block == self.a {
            Some(&self.b)
        } else if *block == self.b {
            Some(&self.a)
        } else {
            None
        }
    }
}

impl fmt::Display for PatternPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <-> {}", self.a, self.b)
    }
}

impl MoveTemplate {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lhs(&self) -> &[Cell] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Cell] {
        &self.rhs
    }

    pub fn symbols(&self) -> &[NondetSymbol] {
        &self.symbols
    }

    fn check_unused(&self, line: usize) -> Result<()> {
        for (id, s) in self.symbols.iter().enumerate() {
            if !self.lhs.iter().chain(&self.rhs).any(|c| *c == Cell::Symbol(id)) {
                return Err(Error::MoveTable { line, message: format!("symbol '{}' is never used", s.symbol) });
            }
        }
        Ok(())
    }

    fn join_key(&self, pos: usize, symbol: usize) -> JoinKey {
        match &self.symbols[symbol].label {
            Some(l) => JoinKey::Label(l.clone()),
            None => JoinKey::Position(pos),
        }
    }

    fn join_keys(&self) -> Vec<JoinKey> {
        let mut keys = BTreeSet::new();
        for side in [&self.lhs, &self.rhs] {
            for (pos, c) in side.iter().enumerate() {
                if let Cell::Symbol(s) = *c {
                    keys.insert(self.join_key(pos, s));
                }
            }
        }
        keys.into_iter().collect()
    }

    /// Every consistent choice of options, as concrete `(lhs, rhs)` patterns,
    /// without rotation. May contain pairs with `lhs == rhs`.
    pub fn resolutions(&self) -> Vec<(Mosaic, Mosaic)> {
        let keys = self.join_keys();
        let mut out = Vec::with_capacity(1 << keys.len());
        for choice in 0u32..1 << keys.len() {
            let pick = |side: &[Cell]| -> Mosaic {
                let cells = side
                    .iter()
                    .enumerate()
                    .map(|(pos, c)| match *c {
                        Cell::Fixed(t) => t,
                        Cell::Symbol(s) => {
                            let key = self.join_key(pos, s);
                            let bit = keys.iter().position(|k| *k == key).unwrap();
                            self.symbols[s].options[(choice >> bit & 1) as usize]
                        }
                    })
                    .collect();
                Mosaic::new(self.k, cells).expect("k x k pattern")
            };
            out.push((pick(&self.lhs), pick(&self.rhs)));
        }
        out
    }

    /// The template turned a quarter counter-clockwise, options included.
    pub fn rotate90(&self) -> MoveTemplate {
        let k = self.k;
        let turn = |side: &[Cell]| -> Vec<Cell> {
            (0..k * k)
                .map(|p| match side[(p % k) * k + (k - 1 - p / k)] {
                    Cell::Fixed(t) => Cell::Fixed(t.rotate90()),
                    symbol => symbol,
                })
                .collect()
        };
        MoveTemplate {
            name: self.name.clone(),
            k,
            lhs: turn(&self.lhs),
            rhs: turn(&self.rhs),
            symbols: self
                .symbols
                .iter()
                .map(|s| NondetSymbol {
                    symbol: s.symbol,
                    options: [s.options[0].rotate90(), s.options[1].rotate90()],
                    label: s.label.clone(),
                })
                .collect(),
        }
    }

    /// All distinct nondegenerate pattern pairs: option choices times four rotations.
    pub fn expand_patterns(&self) -> Vec<PatternPair> {
        let mut set = BTreeSet::new();
        for (l, r) in self.resolutions() {
            let (mut l, mut r) = (l, r);
            for _ in 0..4 {
                if let Some(p) = PatternPair::new(l.clone(), r.clone()) {
                    set.insert(p);
                }
                l = l.rotate90();
                r = r.rotate90();
            }
        }
        set.into_iter().collect()
    }

    /// Deterministic moves on n-mosaics; empty when `k > n`.
    pub fn expand(&self, n: usize) -> Vec<DeterministicMove> {
        instantiate(&self.expand_patterns(), n)
    }
}

fn instantiate(patterns: &[PatternPair], n: usize) -> Vec<DeterministicMove> {
    let mut out = Vec::new();
    for p in patterns {
        for loc in Location::all(n, p.k()) {
            out.push(DeterministicMove { n, loc, pair: p.clone() });
        }
    }
    out.sort();
    out
}

/// A pattern pair acting at one location of an n-mosaic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeterministicMove {
    n: usize,
    loc: Location,
    pair: PatternPair,
}

impl DeterministicMove {
    pub fn new(n: usize, loc: Location, pair: PatternPair) -> Result<Self> {
        let k = pair.k();
        if k > n || loc.i + k > n || loc.j + k > n {
            return Err(Error::out_of_range("move location", format!("{k}-move at {loc} in a {n}-mosaic")));
        }
        Ok(DeterministicMove { n, loc, pair })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.pair.k()
    }

    pub fn loc(&self) -> Location {
        self.loc
    }

    pub fn pair(&self) -> &PatternPair {
        &self.pair
    }

    /// Swaps the submosaic at the move's location if it is one of the two patterns.
    pub fn apply(&self, m: &Mosaic) -> Result<Mosaic> {
        if m.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: m.n() });
        }
        Ok(self.apply_unchecked(m))
    }

    fn apply_unchecked(&self, m: &Mosaic) -> Mosaic {
        for (from, to) in [(&self.pair.a, &self.pair.b), (&self.pair.b, &self.pair.a)] {
            if m.block_equals(from, self.loc) {
                return m.with_block(to, self.loc).expect("location checked at construction");
            }
        }
        m.clone()
    }

    /// The move as disjoint transpositions `(α, β)`, `α < β`, of positions in
    /// a sorted `basis` that it maps into itself.
    pub fn as_transpositions(&self, basis: &[Mosaic]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (alpha, m) in basis.iter().enumerate() {
            if m.n() != self.n || !m.block_equals(&self.pair.a, self.loc) {
                continue;
            }
            let image = self.apply_unchecked(m);
            if let Ok(beta) = basis.binary_search(&image) {
                out.push((alpha.min(beta), alpha.max(beta)));
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for DeterministicMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.pair, self.loc)
    }
}

/// A parsed move table plus the SHA-256 of its source text.
#[derive(Clone, Debug)]
pub struct MoveTable {
    templates: Vec<MoveTemplate>,
    hash: [u8; 32],
}

impl MoveTable {
    /// The built-in planar isotopy and Reidemeister templates.
    pub fn standard() -> MoveTable {
        MoveTable::parse(STANDARD_TABLE).expect("embedded move table parses")
    }

    pub fn standard_source() -> &'static str {
        STANDARD_TABLE
    }

    pub fn parse(text: &str) -> Result<MoveTable> {
        let templates = parse_table(text)?;
        let hash = Sha256::digest(text.as_bytes()).into();
        Ok(MoveTable { templates, hash })
    }

    pub fn from_file(path: &Path) -> Result<MoveTable> {
        MoveTable::parse(&std::fs::read_to_string(path)?)
    }

    pub fn templates(&self) -> &[MoveTemplate] {
        &self.templates
    }

    pub fn template(&self, name: &str) -> Option<&MoveTemplate> {
        self.templates.iter().find(|t| t.name == name)
    }

    pub fn hash_hex(&self) -> String {
        self.hash.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Union of all templates' pattern pairs, sorted and deduplicated.
    pub fn patterns(&self) -> Vec<PatternPair> {
        let set: BTreeSet<PatternPair> = self.templates.iter().flat_map(|t| t.expand_patterns()).collect();
        set.into_iter().collect()
    }

    /// Every pattern pair at every location that fits an n-mosaic.
    pub fn generators(&self, n: usize) -> Vec<DeterministicMove> {
        instantiate(&self.patterns(), n)
    }
}

/// Lookup structure for applying all generators to packed mosaics at once.
///
/// Works on [`Mosaic::pack`] encodings, so `n <= 5`.
#[derive(Clone, Debug)]
pub struct MoveIndex {
    n: usize,
    /// For each pattern size: the block-key map and the locations it applies at.
    by_size: Vec<SizeIndex>,
}

#[derive(Clone, Debug)]
struct SizeIndex {
    k: usize,
    partners: HashMap<u64, Vec<u64>>,
    /// Per location: bit shifts of the k*k cells, row-major.
    slots: Vec<(Location, Vec<u32>)>,
}

fn block_key(m: &Mosaic) -> u64 {
    m.cells().iter().fold(0u64, |acc, t| (acc << 4) | t.index() as u64)
}

impl MoveIndex {
    pub fn new(table: &MoveTable, n: usize) -> Result<Self> {
        if n * n > 32 {
            return Err(Error::CapExceeded { n, cap: 5 });
        }
        let mut by_k: HashMap<usize, HashMap<u64, Vec<u64>>> = HashMap::new();
        for p in table.patterns() {
            if p.k() > n {
                continue;
            }
            let map = by_k.entry(p.k()).or_default();
            let (a, b) = (block_key(&p.a), block_key(&p.b));
            map.entry(a).or_default().push(b);
            map.entry(b).or_default().push(a);
        }
        let mut sizes: Vec<usize> = by_k.keys().copied().collect();
        sizes.sort_unstable();
        let by_size = sizes
            .into_iter()
            .map(|k| {
                let mut partners = by_k.remove(&k).unwrap();
                for v in partners.values_mut() {
                    v.sort_unstable();
                    v.dedup();
                }
                let slots = Location::all(n, k)
                    .map(|loc| {
                        let shifts = (0..k * k)
                            .map(|c| {
                                let cell = (loc.i + c / k) * n + loc.j + c % k;
                                4 * (n * n - 1 - cell) as u32
                            })
                            .collect();
                        (loc, shifts)
                    })
                    .collect();
                SizeIndex { k, partners, slots }
            })
            .collect();
        Ok(MoveIndex { n, by_size })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Calls `f` with the image of `m` under every generator that moves it.
    /// Images may repeat when different generators agree.
    pub fn for_each_neighbor(&self, m: u128, mut f: impl FnMut(u128)) {
        self.for_each_move(m, |step| f(step.image));
    }

    /// Like [`for_each_neighbor`](Self::for_each_neighbor), also reporting
    /// which generator produced each image.
    pub fn for_each_move(&self, m: u128, mut f: impl FnMut(MoveStep)) {
        for size in &self.by_size {
            let cells = size.k * size.k;
            for (loc, shifts) in &size.slots {
                let key = shifts.iter().fold(0u64, |acc, &s| (acc << 4) | ((m >> s) & 0xF) as u64);
                let Some(partners) = size.partners.get(&key) else { continue };
                let mut cleared = m;
                for &s in shifts {
                    cleared &= !(0xFu128 << s);
                }
                for &p in partners {
                    let mut image = cleared;
                    for (c, &s) in shifts.iter().enumerate() {
                        image |= (((p >> (4 * (cells - 1 - c))) & 0xF) as u128) << s;
                    }
                    f(MoveStep { k: size.k, loc: *loc, from: key, to: p, image });
                }
            }
        }
    }
}

/// One generator application found by [`MoveIndex::for_each_move`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveStep {
    pub k: usize,
    pub loc: Location,
    /// Packed k-mosaic found at `loc`.
    pub from: u64,
    /// Packed k-mosaic it is swapped with.
    pub to: u64,
    /// The whole mosaic after the swap.
    pub image: u128,
}

impl MoveStep {
    /// The generator as a [`DeterministicMove`] on n-mosaics.
    pub fn to_move(&self, n: usize) -> DeterministicMove {
        let unpack = |key: u64| {
            let cells = self.k * self.k;
            let tiles = (0..cells)
                .map(|c| Tile::new(((key >> (4 * (cells - 1 - c))) & 0xF) as u8).expect("packed tile"))
                .collect();
            Mosaic::new(self.k, tiles).expect("k x k block")
        };
        let pair = PatternPair::new(unpack(self.from), unpack(self.to)).expect("distinct patterns");
        DeterministicMove { n, loc: self.loc, pair }
    }
}
