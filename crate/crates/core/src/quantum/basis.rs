use crate::enumeration::enumerate_packed;
use crate::mosaic::Mosaic;
use crate::{Error, Limits, Result};

/// The knot n-mosaics in lexicographic order; position `i` is basis vector `|i⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotBasis {
    n: usize,
    packed: Vec<u128>,
}

impl KnotBasis {
    pub fn new(n: usize, limits: &Limits) -> Result<Self> {
        Ok(KnotBasis { n, packed: enumerate_packed(n, limits)? })
    }

    /// From an already sorted list of packed knot n-mosaics.
    pub fn from_packed(n: usize, packed: Vec<u128>) -> Self {
        debug_assert!(packed.windows(2).all(|w| w[0] < w[1]));
        KnotBasis { n, packed }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.packed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.packed.is_empty()
    }

    pub fn packed(&self) -> &[u128] {
        &self.packed
    }

    pub fn mosaic(&self, index: usize) -> Mosaic {
        Mosaic::unpack(self.n, self.packed[index])
    }

    pub fn mosaics(&self) -> impl Iterator<Item = Mosaic> + '_ {
        self.packed.iter().map(|&p| Mosaic::unpack(self.n, p))
    }

    pub fn index_of_packed(&self, packed: u128) -> Option<usize> {
        self.packed.binary_search(&packed).ok()
    }

    /// Basis position of a knot n-mosaic.
    pub fn index_of(&self, m: &Mosaic) -> Result<usize> {
        if m.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: m.n() });
        }
        m.pack().and_then(|p| self.index_of_packed(p)).ok_or(Error::NotAKnotMosaic)
    }
}
