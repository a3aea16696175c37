use std::collections::{BTreeMap, HashMap};

use super::{Involution, KnotBasis, QuantumKnotState};
use crate::mosaic::{Location, Mosaic};
use crate::moves::{DeterministicMove, PatternPair};
use crate::tiles::Tile;
use crate::{Error, Result};

/// A permutation of the knot n-mosaic basis made of disjoint transpositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryMove {
    n: usize,
    dim: usize,
    /// Sorted `(α, β)` with `α < β`.
    pairs: Vec<(usize, usize)>,
    partner: HashMap<usize, usize>,
}

impl UnitaryMove {
    /// Validates that `pairs` are disjoint transpositions inside `0..dim`.
    pub fn from_pairs(n: usize, dim: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let mut partner = HashMap::with_capacity(2 * pairs.len());
        for &(a, b) in &pairs {
            if a == b || b >= dim {
                return Err(Error::out_of_range("transposition", format!("({a}, {b}) in dimension {dim}")));
            }
            if partner.insert(a, b).is_some() || partner.insert(b, a).is_some() {
                return Err(Error::out_of_range("transposition", format!("({a}, {b}) overlaps another pair")));
            }
        }
        Ok(UnitaryMove { n, dim, pairs, partner })
    }

    pub fn identity(basis: &KnotBasis) -> Self {
        UnitaryMove { n: basis.n(), dim: basis.len(), pairs: Vec::new(), partner: HashMap::new() }
    }

    /// The restriction of a deterministic move to the knot n-mosaics.
    pub fn from_move(mv: &DeterministicMove, basis: &KnotBasis) -> Result<Self> {
        if mv.n() != basis.n() {
            return Err(Error::SizeMismatch { expected: basis.n(), found: mv.n() });
        }
        let pair = mv.pair();
        let mut pairs = Vec::new();
        for (alpha, &p) in basis.packed().iter().enumerate() {
            let m = Mosaic::unpack(basis.n(), p);
            if !m.block_equals(pair.first(), mv.loc()) {
                continue;
            }
            let image = mv.apply(&m)?;
            if let Ok(beta) = basis.index_of(&image) {
                pairs.push((alpha, beta));
            }
        }
        Self::from_pairs(basis.n(), basis.len(), pairs)
    }

    /// Builds the permutation `K ↦ f(K)`; `f` must be an involution of the basis.
    pub fn from_involution(basis: &KnotBasis, f: impl Fn(&Mosaic) -> Mosaic) -> Result<Self> {
        let mut pairs = Vec::new();
        for (alpha, m) in basis.mosaics().enumerate() {
            let image = f(&m);
            let beta = basis.index_of(&image)?;
            if f(&image) != m {
                return Err(Error::out_of_range("map", format!("not an involution at {m}")));
            }
            if alpha < beta {
                pairs.push((alpha, beta));
            }
        }
        Self::from_pairs(basis.n(), basis.len(), pairs)
    }

    /// Swaps `T9` and `T10` at cell `(i, j)`.
    pub fn tunneling(basis: &KnotBasis, i: usize, j: usize) -> Result<Self> {
        check_cell(basis.n(), i, j)?;
        Self::from_involution(basis, |m| {
            let mut out = m.clone();
            out.set(i, j, swap_tiles(m.get(i, j), Tile::CROSS_V_OVER, Tile::CROSS_H_OVER));
            out
        })
    }

    /// Swaps `T9` and `T10` in every cell.
    pub fn mirror(basis: &KnotBasis) -> Result<Self> {
        Self::from_involution(basis, |m| m.map_tiles(|t| swap_tiles(t, Tile::CROSS_V_OVER, Tile::CROSS_H_OVER)))
    }

    /// Swaps the two double arcs `T7` and `T8` at cell `(i, j)`.
    pub fn hyperbolic(basis: &KnotBasis, i: usize, j: usize) -> Result<Self> {
        check_cell(basis.n(), i, j)?;
        let (t7, t8) = (Tile::new(7).unwrap(), Tile::new(8).unwrap());
        Self::from_involution(basis, |m| {
            let mut out = m.clone();
            out.set(i, j, swap_tiles(m.get(i, j), t7, t8));
            out
        })
    }

    /// Swaps a blank 2x2 block at `(i, j)` with a small circle.
    pub fn elliptic(basis: &KnotBasis, i: usize, j: usize) -> Result<Self> {
        let n = basis.n();
        if n < 2 || i + 2 > n || j + 2 > n {
            return Err(Error::out_of_range("elliptic block", format!("({i},{j}) in a {n}-mosaic")));
        }
        let circle: Mosaic = "21-34".parse().expect("circle pattern");
        let pair = PatternPair::new(Mosaic::blank(2), circle).expect("distinct patterns");
        Self::from_move(&DeterministicMove::new(n, Location::new(i, j), pair)?, basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `|K⟩ ↦ |gK⟩`, extended linearly.
    pub fn apply(&self, psi: &QuantumKnotState) -> Result<QuantumKnotState> {
        if psi.n() != self.n || psi.dim() != self.dim {
            return Err(Error::SizeMismatch { expected: self.n, found: psi.n() });
        }
        let amps: BTreeMap<usize, _> = psi.terms().map(|(i, c)| (self.permute(i), c)).collect();
        Ok(QuantumKnotState::from_raw(self.n, self.dim, amps))
    }
}

impl Involution for UnitaryMove {
    fn permute(&self, index: usize) -> usize {
        self.partner.get(&index).copied().unwrap_or(index)
    }
}

fn swap_tiles(t: Tile, a: Tile, b: Tile) -> Tile {
    if t == a {
        b
    } else if t == b {
        a
    } else {
        t
    }
}

fn check_cell(n: usize, i: usize, j: usize) -> Result<()> {
    if i >= n || j >= n {
        return Err(Error::out_of_range("cell", format!("({i},{j}) in a {n}-mosaic")));
    }
    Ok(())
}
