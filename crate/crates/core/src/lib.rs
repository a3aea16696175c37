//! Knot mosaics and quantum knot systems.
//!
//! A knot n-mosaic is an `n x n` grid of the eleven tiles in [`tiles`] in which
//! every strand end meets a strand end of the neighbouring cell. Mosaic moves
//! ([`moves`]) swap small patterns in place; the permutation group they generate
//! on the set of knot n-mosaics is the ambient group, whose orbits are the knot
//! n-types ([`equivalence`]). The [`quantum`] module builds the Hilbert space
//! spanned by knot n-mosaics and the unitary, Hamiltonian and observable
//! machinery on top of it; [`oriented`] covers mosaics with directed strands.

mod error;
mod tcode;

pub mod enumeration;
pub mod equivalence;
pub mod fixtures;
pub mod mosaic;
pub mod moves;
pub mod oriented;
pub mod quantum;
pub mod tiles;

pub use error::{Error, Result};
pub use mosaic::{Location, Mosaic, TraceSummary};
pub use tiles::{ConnectionProfile, Edge, OrientedTile, Tile};

/// Size caps for the exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which knot n-mosaics are listed or orbits computed.
    pub max_n: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits { max_n: 4 };
    /// Unlocks `n = 5` (about four million knot 5-mosaics).
    pub const EXTENDED: Limits = Limits { max_n: 5 };

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::CapExceeded { n, cap: self.max_n })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
