//! Quantum knot systems over the knot n-mosaics.
//!
//! The Hilbert space has the knot n-mosaics as orthonormal basis, in
//! lexicographic order ([`KnotBasis`]). Each deterministic move acts as a
//! permutation made of disjoint transpositions ([`UnitaryMove`]). States and
//! observables are sparse; [`QuantumKnotSystem`] ties them to the orbit
//! partition and the generator set for invariance questions.

mod basis;
mod hamiltonian;
mod observable;
mod state;
mod unitary;


use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use num_complex::Complex64;
use rustc_hash::{FxHashMap, FxHashSet};

pub use basis::KnotBasis;
pub use hamiltonian::Hamiltonian;
pub use observable::{
    Distribution, ExactObservable, Level, Observable, Spectrum, DEFAULT_SEED, EIGEN_MERGE_TOL, HERMITIAN_TOL,
};
pub use state::{QuantumKnotState, ZERO_TOL};
pub use unitary::UnitaryMove;

use crate::equivalence::{KnotTypes, OrbitPartition};
use crate::moves::{DeterministicMove, MoveIndex};
use crate::tiles::Tile;
use crate::{Error, Result};

/// Tolerance for floating-point commutation and state comparison.
pub const COMMUTE_TOL: f64 = 1e-12;

/// Limit on the number of distinct states visited by [`QuantumKnotSystem::state_equivalent`].
pub const STATE_SEARCH_CAP: usize = 200_000;

/// A permutation of basis indices that is its own inverse.
pub trait Involution {
    fn permute(&self, index: usize) -> usize;
}

/// A generator restricted to the basis vectors it was looked up for (and
/// their images); indices outside that set must not be queried.
#[derive(Clone, Debug, Default)]
struct LocalMove {
    partner: HashMap<usize, usize>,
}

impl Involution for LocalMove {
    fn permute(&self, index: usize) -> usize {
        self.partner.get(&index).copied().unwrap_or(index)
    }
}

/// Answer of [`QuantumKnotSystem::state_equivalent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateVerdict {
    /// Related by a word of `depth` generators; `None` when decided by orbit
    /// membership of two basis states.
    Equivalent {
        depth: Option<usize>,
    },
    NotEquivalent,
    /// The bounded search ended without a decision.
    Unknown,
}

/// Result of [`QuantumKnotSystem::group_average`].
#[derive(Clone, Debug)]
pub struct GroupAverage {
    /// Sum over the conjugation closure.
    pub observable: Observable,
    /// Number of distinct conjugates `g Ω g⁻¹`.
    pub closure_size: usize,
}

/// The quantum knot system on the knot n-mosaics for one move table.
#[derive(Clone, Debug)]
pub struct QuantumKnotSystem {
    basis: KnotBasis,
    partition: Arc<OrbitPartition>,
    index: MoveIndex,
}

impl QuantumKnotSystem {
    pub fn new(types: &KnotTypes, n: usize) -> Result<Self> {
        let partition = types.partition(n)?;
        let basis = KnotBasis::from_packed(n, partition.basis().to_vec());
        let index = MoveIndex::new(types.table(), n)?;
        Ok(QuantumKnotSystem { basis, partition, index })
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &KnotBasis {
        &self.basis
    }

    pub fn partition(&self) -> &OrbitPartition {
        &self.partition
    }

    /// Every generator that moves at least one of `indices`, restricted to them.
    fn local_generators(&self, indices: impl IntoIterator<Item = usize>) -> Vec<LocalMove> {
        let mut by_key: HashMap<(usize, usize, usize, u64, u64), LocalMove> = HashMap::new();
        for a in indices {
            self.index.for_each_move(self.basis.packed()[a], |step| {
                let b = self.basis.index_of_packed(step.image).expect("moves preserve knot mosaics");
                let key = (step.k, step.loc.i, step.loc.j, step.from.min(step.to), step.from.max(step.to));
                let g = by_key.entry(key).or_default();
                g.partner.insert(a, b);
                g.partner.insert(b, a);
            });
        }
        by_key.into_values().collect()
    }

    /// The distinct nontrivial permutations induced by the generators.
    pub fn generators(&self) -> Vec<UnitaryMove> {
        let mut perms: Vec<Vec<(usize, usize)>> = self
            .local_generators(0..self.dim())
            .into_iter()
            .map(|g| {
                let mut pairs: Vec<(usize, usize)> = g.partner.into_iter().filter(|(a, b)| a < b).collect();
                pairs.sort_unstable();
                pairs
            })
            .collect();
        perms.sort();
        perms.dedup();
        perms
            .into_iter()
            .map(|pairs| UnitaryMove::from_pairs(self.n(), self.dim(), pairs).expect("generator is an involution"))
            .collect()
    }

    pub fn unitary(&self, mv: &DeterministicMove) -> Result<UnitaryMove> {
        UnitaryMove::from_move(mv, &self.basis)
    }

    /// Projector onto the basis mosaics holding `tile` at `(i, j)`.
    pub fn tile_observable(&self, tile: Tile, i: usize, j: usize) -> Result<Observable> {
        let n = self.n();
        if i >= n || j >= n {
            return Err(Error::out_of_range("cell", format!("({i},{j}) in a {n}-mosaic")));
        }
        let hits = self.basis.mosaics().enumerate().filter(|(_, m)| m.get(i, j) == tile).map(|(k, _)| k);
        Observable::projector(n, self.dim(), hits)
    }

    /// Projector onto the span of one orbit, given by its members.
    pub fn orbit_projector(&self, members: &[usize]) -> Result<Observable> {
        if !self.partition.is_orbit(members) {
            return Err(Error::NotAnOrbit);
        }
        Observable::projector(self.n(), self.dim(), members.iter().copied())
    }

    /// Projector onto orbit number `id`.
    pub fn orbit_projector_of(&self, id: usize) -> Result<Observable> {
        if id >= self.partition.orbit_count() {
            return Err(Error::NotAnOrbit);
        }
        let members = self.partition.orbit(id).iter().map(|&i| i as usize);
        Observable::projector(self.n(), self.dim(), members)
    }

    fn check_observable(&self, omega: &Observable) -> Result<()> {
        if omega.dim() != self.dim() {
            return Err(Error::SizeMismatch { expected: self.dim(), found: omega.dim() });
        }
        Ok(())
    }

    fn touched(omega: &Observable) -> BTreeSet<usize> {
        omega.entries().keys().map(|&(a, _)| a).collect()
    }

    /// Whether `Ω` commutes with every generator, within [`COMMUTE_TOL`].
    ///
    /// Generators that fix every basis vector touched by `Ω` commute with it
    /// trivially and are skipped.
    pub fn is_invariant(&self, omega: &Observable) -> Result<bool> {
        self.check_observable(omega)?;
        Ok(self.local_generators(Self::touched(omega)).iter().all(|g| omega.commutes_with(g, COMMUTE_TOL)))
    }

    /// Exact version of [`is_invariant`](Self::is_invariant); `None` when some
    /// entry is not an exact ratio of 64-bit integers.
    pub fn is_invariant_exact(&self, omega: &Observable) -> Result<Option<bool>> {
        self.check_observable(omega)?;
        let Some(exact) = omega.to_exact() else { return Ok(None) };
        Ok(Some(self.local_generators(Self::touched(omega)).iter().all(|g| exact.commutator(g).is_zero())))
    }

    /// Sums the closure of `Ω` under conjugation by the generators.
    ///
    /// Conjugation keeps every entry inside the orbits it starts in, so the
    /// generators are looked up once, restricted to those orbits.
    pub fn group_average(&self, omega: &Observable, cap: usize) -> Result<GroupAverage> {
        self.check_observable(omega)?;
        let relevant: Vec<usize> = Self::touched(omega)
            .into_iter()
            .map(|i| self.partition.class_of_index(i))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .flat_map(|id| self.partition.orbit(id).iter().map(|&i| i as usize))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let local = |i: usize| relevant.binary_search(&i).expect("orbits are closed under moves") as u32;
        let mut perms: Vec<Vec<u32>> = self
            .local_generators(relevant.iter().copied())
            .into_iter()
            .map(|g| relevant.iter().map(|&i| local(g.permute(i))).collect())
            .collect();
        perms.sort();
        perms.dedup();

        // entries as (row, col, value id) in local numbering, sorted
        type Key = Vec<(u32, u32, u32)>;
        let mut values: Vec<Complex64> = Vec::new();
        let mut start: Key = Vec::with_capacity(omega.entries().len());
        for (&(a, b), &v) in omega.entries() {
            let id =
                match values.iter().position(|&w| w.re.to_bits() == v.re.to_bits() && w.im.to_bits() == v.im.to_bits())
                {
                    Some(id) => id,
                    None => {
                        values.push(v);
                        values.len() - 1
                    }
                };
            start.push((local(a), local(b), id as u32));
        }
        let mut sum: FxHashMap<(u32, u32), Complex64> = FxHashMap::default();
        let mut add = |k: &[(u32, u32, u32)]| {
            for &(a, b, id) in k {
                *sum.entry((a, b)).or_insert(Complex64::ZERO) += values[id as usize];
            }
        };
        add(&start);
        let mut seen: FxHashSet<Key> = FxHashSet::default();
        seen.insert(start.clone());
        let mut queue = vec![start];
        let mut image: Key = Vec::new();
        while let Some(current) = queue.pop() {
            for perm in &perms {
                image.clear();
                image.extend(current.iter().map(|&(a, b, id)| (perm[a as usize], perm[b as usize], id)));
                image.sort_unstable();
                if seen.contains(image.as_slice()) {
                    continue;
                }
                if seen.len() == cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                add(&image);
                seen.insert(image.clone());
                queue.push(image.clone());
            }
        }
        let entries = sum.into_iter().map(|((a, b), v)| ((relevant[a as usize], relevant[b as usize]), v));
        let observable = Observable::from_entries(self.n(), self.dim(), entries)?;
        Ok(GroupAverage { observable, closure_size: seen.len() })
    }

    /// Whether some element of the ambient group maps `a` to `b`.
    ///
    /// Refutes by comparing amplitude multisets, globally and per orbit;
    /// decides basis states by orbit membership; otherwise searches generator
    /// words up to length `depth`.
    pub fn state_equivalent(&self, a: &QuantumKnotState, b: &QuantumKnotState, depth: usize) -> Result<StateVerdict> {
        a.check_same_space(b)?;
        if a.dim() != self.dim() {
            return Err(Error::SizeMismatch { expected: self.dim(), found: a.dim() });
        }
        let all = |s: &QuantumKnotState| s.terms().map(|(_, c)| c).collect::<Vec<_>>();
        if !same_multiset(&all(a), &all(b)) {
            return Ok(StateVerdict::NotEquivalent);
        }
        let by_orbit = |s: &QuantumKnotState| {
            let mut m: BTreeMap<usize, Vec<Complex64>> = BTreeMap::new();
            for (i, c) in s.terms() {
                m.entry(self.partition.class_of_index(i)).or_default().push(c);
            }
            m
        };
        let (oa, ob) = (by_orbit(a), by_orbit(b));
        if oa.len() != ob.len() || oa.iter().zip(&ob).any(|((ka, va), (kb, vb))| ka != kb || !same_multiset(va, vb)) {
            return Ok(StateVerdict::NotEquivalent);
        }
        if a.support_len() == 1 {
            return Ok(StateVerdict::Equivalent { depth: None });
        }
        if a.distance_max(b) <= COMMUTE_TOL {
            return Ok(StateVerdict::Equivalent { depth: Some(0) });
        }
        let quantize = |s: &QuantumKnotState| -> Vec<(usize, i64, i64)> {
            s.terms().map(|(i, c)| (i, (c.re * 1e9).round() as i64, (c.im * 1e9).round() as i64)).collect()
        };
        let mut seen = HashSet::from([quantize(a)]);
        let mut frontier = vec![a.clone()];
        for d in 1..=depth {
            let mut next = Vec::new();
            for s in &frontier {
                for g in self.local_generators(s.terms().map(|(i, _)| i)) {
                    let amps = s.terms().map(|(i, c)| (g.permute(i), c)).collect();
                    let image = QuantumKnotState::from_raw(s.n(), s.dim(), amps);
                    if !seen.insert(quantize(&image)) {
                        continue;
                    }
                    if image.distance_max(b) <= COMMUTE_TOL {
                        return Ok(StateVerdict::Equivalent { depth: Some(d) });
                    }
                    if seen.len() > STATE_SEARCH_CAP {
                        return Ok(StateVerdict::Unknown);
                    }
                    next.push(image);
                }
            }
            frontier = next;
        }
        Ok(StateVerdict::Unknown)
    }
}

/// Multiset equality of amplitudes up to [`COMMUTE_TOL`] (greedy matching).
fn same_multiset(a: &[Complex64], b: &[Complex64]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit = b.iter().enumerate().position(|(k, y)| !used[k] && (x - y).norm() <= COMMUTE_TOL);
        hit.map(|k| used[k] = true).is_some()
    })
}
