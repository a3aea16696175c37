//! Knot n-types and knot mosaic types.
//!
//! Two knot n-mosaics have the same knot n-type when a sequence of mosaic
//! moves carries one to the other, i.e. when they lie in the same orbit of
//! the group generated by [`MoveTable::generators`]. Mosaics of different
//! sizes are compared after padding with [`Mosaic::inject`].

mod cache;
mod union_find;

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use crate::enumeration::enumerate_packed;
use crate::mosaic::Mosaic;
use crate::moves::{MoveIndex, MoveTable};
use crate::{Error, Limits, Result};

pub use cache::{load_partition, store_partition};
use union_find::UnionFind;

/// Partition of the lexicographically ordered knot n-mosaics into orbits.
///
/// Orbit ids are assigned in order of each orbit's smallest member, and
/// members of each orbit are listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    n: usize,
    basis: Vec<u128>,
    class_of: Vec<u32>,
    orbits: Vec<Vec<u32>>,
}

impl OrbitPartition {
    /// Orbits of `basis` (sorted packed knot n-mosaics) under `index`.
    pub fn compute(basis: Vec<u128>, index: &MoveIndex) -> Self {
        let n = index.n();
        let mut uf = UnionFind::new(basis.len());
        for (a, &m) in basis.iter().enumerate() {
            index.for_each_neighbor(m, |image| {
                let b = basis.binary_search(&image).expect("moves preserve knot mosaics");
                uf.union(a, b);
            });
        }
        let (class_of, orbits) = uf.into_classes();
        OrbitPartition { n, basis, class_of, orbits }
    }

    pub(crate) fn from_parts(n: usize, basis: Vec<u128>, orbits: Vec<Vec<u32>>) -> Result<Self> {
        let mut class_of = vec![u32::MAX; basis.len()];
        for (id, orbit) in orbits.iter().enumerate() {
            for &i in orbit {
                let slot = class_of.get_mut(i as usize).ok_or(Error::NotAnOrbit)?;
                if *slot != u32::MAX {
                    return Err(Error::NotAnOrbit);
                }
                *slot = id as u32;
            }
        }
        if class_of.contains(&u32::MAX) {
            return Err(Error::NotAnOrbit);
        }
        Ok(OrbitPartition { n, basis, class_of, orbits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Packed basis mosaics in lexicographic order.
    pub fn basis(&self) -> &[u128] {
        &self.basis
    }

    pub fn mosaic(&self, index: usize) -> Mosaic {
        Mosaic::unpack(self.n, self.basis[index])
    }

    pub fn index_of(&self, m: &Mosaic) -> Option<usize> {
        if m.n() != self.n {
            return None;
        }
        self.basis.binary_search(&m.pack()?).ok()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbits(&self) -> &[Vec<u32>] {
        &self.orbits
    }

    pub fn orbit(&self, id: usize) -> &[u32] {
        &self.orbits[id]
    }

    pub fn class_of_index(&self, index: usize) -> usize {
        self.class_of[index] as usize
    }

    /// Orbit id of a knot mosaic; `None` if `m` is not in the basis.
    pub fn class_of(&self, m: &Mosaic) -> Option<usize> {
        self.index_of(m).map(|i| self.class_of_index(i))
    }

    /// Orbit sizes in orbit-id order.
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// True when `members` (basis indices) is exactly one orbit.
    pub fn is_orbit(&self, members: &[usize]) -> bool {
        let Some(&first) = members.first() else { return false };
        let Some(&id) = self.class_of.get(first) else { return false };
        let mut sorted: Vec<u32> = members.iter().map(|&m| m as u32).collect();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == members.len() && sorted == self.orbits[id as usize]
    }
}

/// Result of a bounded knot-mosaic-type comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Same orbit after `padding` extra injections of both mosaics.
    Equivalent { padding: usize },
    /// Different orbits for every padding `0..=max_pad` that could be checked.
    NotEquivalentUpTo { max_pad: usize },
    /// Size caps prevented any comparison.
    Unknown,
}

/// Orbit computations for one move table, memoized per `n` and optionally
/// persisted in a cache directory.
pub struct KnotTypes {
    table: MoveTable,
    limits: Limits,
    cache_dir: Option<PathBuf>,
    partitions: Mutex<HashMap<usize, Arc<OrbitPartition>>>,
}

impl KnotTypes {
    pub fn new(table: MoveTable, limits: Limits) -> Self {
        KnotTypes { table, limits, cache_dir: None, partitions: Mutex::new(HashMap::new()) }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn table(&self) -> &MoveTable {
        &self.table
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Orbits of the knot n-mosaics.
    pub fn partition(&self, n: usize) -> Result<Arc<OrbitPartition>> {
        self.limits.check(n)?;
        if let Some(p) = self.partitions.lock().unwrap().get(&n) {
            return Ok(p.clone());
        }
        let hash = self.table.hash_hex();
        let cached = match &self.cache_dir {
            Some(dir) => load_partition(dir, n, &hash)?,
            None => None,
        };
        let partition = match cached {
            Some(p) => p,
            None => {
                let p = OrbitPartition::compute(enumerate_packed(n, &self.limits)?, &MoveIndex::new(&self.table, n)?);
                if let Some(dir) = &self.cache_dir {
                    store_partition(dir, &p, &hash)?;
                }
                p
            }
        };
        let partition = Arc::new(partition);
        self.partitions.lock().unwrap().insert(n, partition.clone());
        Ok(partition)
    }

    /// Same knot n-type: same orbit among the knot n-mosaics.
    pub fn same_knot_type_n(&self, a: &Mosaic, b: &Mosaic) -> Result<bool> {
        if a.n() != b.n() {
            return Err(Error::SizeMismatch { expected: a.n(), found: b.n() });
        }
        if !a.is_knot_mosaic() || !b.is_knot_mosaic() {
            return Err(Error::NotAKnotMosaic);
        }
        let p = self.partition(a.n())?;
        Ok(p.class_of(a) == p.class_of(b))
    }

    /// Same knot mosaic type, testing paddings `0..=max_pad` beyond the
    /// common size.
    pub fn same_knot_type(&self, a: &Mosaic, b: &Mosaic, max_pad: usize) -> Result<Verdict> {
        if !a.is_knot_mosaic() || !b.is_knot_mosaic() {
            return Err(Error::NotAKnotMosaic);
        }
        let size = a.n().max(b.n());
        let a = a.inject_times(size - a.n());
        let b = b.inject_times(size - b.n());
        if a == b {
            return Ok(Verdict::Equivalent { padding: 0 });
        }
        let mut checked = None;
        for pad in 0..=max_pad {
            match self.same_knot_type_n(&a.inject_times(pad), &b.inject_times(pad)) {
                Ok(true) => return Ok(Verdict::Equivalent { padding: pad }),
                Ok(false) => checked = Some(pad),
                Err(e) if e.is_cap() => break,
                Err(e) => return Err(e),
            }
        }
        Ok(match checked {
            Some(max_pad) => Verdict::NotEquivalentUpTo { max_pad },
            None => Verdict::Unknown,
        })
    }

    /// Smallest `n <= bound` with a knot n-mosaic of the same knot mosaic type
    /// as `m`, comparing against one representative per orbit. Paddings are
    /// tried up to the size cap. `None` when no witness is found.
    pub fn mosaic_number(&self, m: &Mosaic, bound: usize) -> Result<Option<usize>> {
        if !m.is_knot_mosaic() {
            return Err(Error::NotAKnotMosaic);
        }
        for n in 1..=bound {
            if n >= m.n() {
                // m padded to n is its own witness
                return Ok(Some(n));
            }
            let reps = match self.partition(n) {
                Ok(p) => p.orbits().iter().map(|o| p.mosaic(o[0] as usize)).collect::<Vec<_>>(),
                Err(e) if e.is_cap() => return Ok(None),
                Err(e) => return Err(e),
            };
            let max_pad = self.limits.max_n.saturating_sub(m.n());
            for rep in reps {
                if let Verdict::Equivalent { .. } = self.same_knot_type(m, &rep, max_pad)? {
                    return Ok(Some(n));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn m(s: &str) -> Mosaic {
        s.parse().unwrap()
    }

    fn types() -> KnotTypes {
        KnotTypes::new(MoveTable::standard(), Limits::DEFAULT)
    }

    #[test]
    fn three_mosaic_orbits() {
        let kt = types();
        let p = kt.partition(3).unwrap();
        let mut sizes = p.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 19]);
        // the singletons: blank and the two mosaics holding a lone double arc
        let singles: Vec<String> =
            p.orbits().iter().filter(|o| o.len() == 1).map(|o| p.mosaic(o[0] as usize).to_tcode()).collect();
        assert_eq!(singles, vec!["000-000-000", "021-274-340", "210-381-034"]);
    }

    #[test]
    fn four_mosaic_orbits() {
        let p = types().partition(4).unwrap();
        let mut sizes = p.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 1, 8, 8, 17, 28, 28, 180, 860, 1460]);
        assert!(p.is_orbit(&p.orbit(0).iter().map(|&i| i as usize).collect::<Vec<_>>()));
        assert!(!p.is_orbit(&[0, 1]));
    }

    #[test]
    fn intro_pair_equivalent() {
        let kt = types();
        let (a, b) = (m(fixtures::INTRO_A), m(fixtures::INTRO_B));
        assert!(kt.same_knot_type_n(&a, &b).unwrap());
        assert_eq!(kt.same_knot_type(&a, &b, 0).unwrap(), Verdict::Equivalent { padding: 0 });
        assert!(kt.same_knot_type_n(&a, &m(fixtures::NON_KNOT_4)).is_err());
    }

    #[test]
    fn padded_comparisons() {
        let kt = types();
        let t = m(fixtures::TREFOIL);
        assert_eq!(kt.same_knot_type(&t, &t.inject(), 3).unwrap(), Verdict::Equivalent { padding: 0 });
        let blank = Mosaic::blank(3);
        let circle = m("000-021-034");
        assert_eq!(kt.same_knot_type(&blank, &circle, 1).unwrap(), Verdict::NotEquivalentUpTo { max_pad: 1 });
        assert_eq!(kt.same_knot_type(&blank, &circle, 5).unwrap(), Verdict::NotEquivalentUpTo { max_pad: 1 });
        let big = Mosaic::blank(5);
        assert_eq!(kt.same_knot_type(&big, &big, 0).unwrap(), Verdict::Equivalent { padding: 0 });
        assert_eq!(kt.same_knot_type(&big, &m("21-34"), 0).unwrap(), Verdict::Unknown);
    }

    #[test]
    fn mosaic_numbers() {
        let kt = types();
        assert_eq!(kt.mosaic_number(&Mosaic::blank(3), 4).unwrap(), Some(1));
        assert_eq!(kt.mosaic_number(&m("21-34"), 4).unwrap(), Some(2));
        assert_eq!(kt.mosaic_number(&m("000-021-034"), 4).unwrap(), Some(2));
        assert_eq!(kt.mosaic_number(&m(fixtures::TREFOIL), 4).unwrap(), Some(4));
        assert_eq!(kt.mosaic_number(&m(fixtures::TREFOIL), 3).unwrap(), None);
        assert!(kt.mosaic_number(&m(fixtures::NON_KNOT_4), 4).is_err());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let kt = types().with_cache_dir(dir.path());
        let first = kt.partition(3).unwrap();
        let again = types().with_cache_dir(dir.path()).partition(3).unwrap();
        assert_eq!(first, again);
        let hash = MoveTable::standard().hash_hex();
        assert!(load_partition(dir.path(), 3, &hash).unwrap().is_some());
        assert!(load_partition(dir.path(), 3, "stale").unwrap().is_none());
        assert!(load_partition(dir.path(), 4, &hash).unwrap().is_none());
    }
}
