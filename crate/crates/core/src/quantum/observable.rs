use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::{Complex, Complex64};
use num_rational::Ratio;
use num_traits::Zero;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::state::{parse_complex, ZERO_TOL};
use super::{Involution, KnotBasis, QuantumKnotState};
use crate::mosaic::Mosaic;
use crate::{Error, Result};

/// Largest tolerated `|Ω_ab − conj(Ω_ba)|`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues closer than this are reported as one outcome.
pub const EIGEN_MERGE_TOL: f64 = 1e-9;
/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x6b6e_6f74;

/// A Hermitian operator on the span of the knot n-mosaics, stored sparsely
/// with both triangles present.
#[derive(Clone, Debug, PartialEq)]
pub struct Observable {
    n: usize,
    dim: usize,
    entries: BTreeMap<(usize, usize), Complex64>,
}

/// Eigenvalues of an [`Observable`] with orthonormal sparse eigenvectors.
///
/// Basis vectors that the observable never touches are eigenvectors for `0`
/// and are only counted, not listed.
#[derive(Clone, Debug)]
pub struct Spectrum {
    levels: Vec<Level>,
    untouched: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Level {
    pub eigenvalue: f64,
    pub vectors: Vec<Vec<(usize, Complex64)>>,
}

/// Outcome probabilities of a projective measurement, ascending by eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    outcomes: Vec<(f64, f64)>,
}

impl Observable {
    fn check_index(dim: usize, a: usize, b: usize) -> Result<()> {
        if a >= dim || b >= dim {
            return Err(Error::out_of_range("matrix entry", format!("({a}, {b}) in dimension {dim}")));
        }
        Ok(())
    }

    /// From entries with `row <= col`; the lower triangle is implied.
    pub fn from_upper(
        n: usize,
        dim: usize,
        upper: impl IntoIterator<Item = ((usize, usize), Complex64)>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for ((a, b), v) in upper {
            Self::check_index(dim, a, b)?;
            if a > b {
                return Err(Error::out_of_range("matrix entry", format!("({a}, {b}) is below the diagonal")));
            }
            if a == b && v.im.abs() > HERMITIAN_TOL {
                return Err(Error::NotHermitian { deviation: v.im.abs() });
            }
            let v = if a == b { Complex64::new(v.re, 0.0) } else { v };
            if v.norm() <= ZERO_TOL {
                continue;
            }
            if entries.insert((a, b), v).is_some() {
                return Err(Error::out_of_range("matrix entry", format!("({a}, {b}) given twice")));
            }
            entries.insert((b, a), v.conj());
        }
        Ok(Observable { n, dim, entries })
    }

    /// From a full set of entries; fails unless Hermitian within [`HERMITIAN_TOL`].
    pub fn from_entries(
        n: usize,
        dim: usize,
        all: impl IntoIterator<Item = ((usize, usize), Complex64)>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for ((a, b), v) in all {
            Self::check_index(dim, a, b)?;
            if v.norm() > ZERO_TOL {
                *entries.entry((a, b)).or_insert(Complex64::ZERO) += v;
            }
        }
        let o = Observable { n, dim, entries };
        let deviation = o.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(o)
    }

    pub fn diagonal(n: usize, dim: usize, values: impl IntoIterator<Item = (usize, f64)>) -> Result<Self> {
        Self::from_upper(n, dim, values.into_iter().map(|(i, v)| ((i, i), Complex64::new(v, 0.0))))
    }

    /// Orthogonal projector onto the span of the given basis vectors.
    pub fn projector(n: usize, dim: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        Self::diagonal(n, dim, set.into_iter().map(|i| (i, 1.0)))
    }

    pub fn identity(n: usize, dim: usize) -> Self {
        Self::projector(n, dim, 0..dim).expect("indices in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Complex64> {
        &self.entries
    }

    pub fn get(&self, a: usize, b: usize) -> Complex64 {
        self.entries.get(&(a, b)).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(a, b)| a == b)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        self.entries.iter().map(|(&(a, b), v)| (v - self.get(b, a).conj()).norm()).fold(0.0, f64::max)
    }

    /// `g Ω g⁻¹`.
    pub fn conjugate_by(&self, g: &impl Involution) -> Observable {
        let entries = self.entries.iter().map(|(&(a, b), &v)| ((g.permute(a), g.permute(b)), v)).collect();
        Observable { n: self.n, dim: self.dim, entries }
    }

    /// `[g, Ω] = 0` within `tol`, checked as `g Ω g⁻¹ = Ω` entrywise.
    pub fn commutes_with(&self, g: &impl Involution, tol: f64) -> bool {
        self.entries.iter().all(|(&(a, b), &v)| (self.get(g.permute(a), g.permute(b)) - v).norm() <= tol)
    }

    pub fn add(&self, other: &Observable) -> Result<Observable> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch { expected: self.dim, found: other.dim });
        }
        let mut entries = self.entries.clone();
        for (&k, &v) in &other.entries {
            *entries.entry(k).or_insert(Complex64::ZERO) += v;
        }
        entries.retain(|_, v| v.norm() > ZERO_TOL);
        Ok(Observable { n: self.n, dim: self.dim, entries })
    }

    /// Largest entrywise difference.
    pub fn distance_max(&self, other: &Observable) -> f64 {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .map(|&(a, b)| (self.get(a, b) - other.get(a, b)).norm())
            .fold(0.0, f64::max)
    }

    /// Eigen-decomposition, one connected block of the off-diagonal pattern at a time.
    pub fn spectrum(&self) -> Spectrum {
        let mut neighbors: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in self.entries.keys() {
            neighbors.entry(a).or_default().push(b);
            neighbors.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::new();
        let mut raw: Vec<(f64, Vec<(usize, Complex64)>)> = Vec::new();
        for &start in neighbors.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut block = vec![start];
            let mut k = 0;
            while k < block.len() {
                for &x in &neighbors[&block[k]] {
                    if seen.insert(x) {
                        block.push(x);
                    }
                }
                k += 1;
            }
            block.sort_unstable();
            if block.len() == 1 {
                raw.push((self.get(start, start).re, vec![(start, Complex64::ONE)]));
                continue;
            }
            let m = DMatrix::from_fn(block.len(), block.len(), |r, c| self.get(block[r], block[c]));
            let eig = m.symmetric_eigen();
            for (col, &lambda) in eig.eigenvalues.iter().enumerate() {
                let v: Vec<(usize, Complex64)> = block
                    .iter()
                    .enumerate()
                    .map(|(r, &idx)| (idx, eig.eigenvectors[(r, col)]))
                    .filter(|(_, c)| c.norm() > ZERO_TOL)
                    .collect();
                raw.push((lambda, v));
            }
        }
        let untouched: Vec<usize> = (0..self.dim).filter(|i| !neighbors.contains_key(i)).collect();
        if !untouched.is_empty() {
            raw.push((0.0, Vec::new()));
        }
        raw.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut levels: Vec<Level> = Vec::new();
        for (lambda, v) in raw {
            match levels.last_mut() {
                Some(level) if (lambda - level.eigenvalue).abs() <= EIGEN_MERGE_TOL => {
                    if !v.is_empty() {
                        level.vectors.push(v);
                    }
                }
                _ => levels.push(Level { eigenvalue: lambda, vectors: if v.is_empty() { vec![] } else { vec![v] } }),
            }
        }
        Spectrum { levels, untouched }
    }

    /// Outcome distribution of measuring `psi`: `p(λ) = ⟨ψ|P_λ|ψ⟩ / ⟨ψ|ψ⟩`.
    pub fn measure(&self, psi: &QuantumKnotState) -> Result<Distribution> {
        if psi.dim() != self.dim {
            return Err(Error::SizeMismatch { expected: self.dim, found: psi.dim() });
        }
        let deviation = self.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(self.spectrum().measure(psi))
    }

    /// Reads `re im tcode tcode` lines holding the upper triangle (in basis order).
    pub fn parse(text: &str, basis: &KnotBasis) -> Result<Self> {
        let mut upper = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let [re, im, row, col] = fields[..] else {
                return Err(Error::parse(line_no + 1, "expected `re im tcode tcode`"));
            };
            let v = parse_complex(line_no + 1, re, im)?;
            let a = basis.index_of(&Mosaic::parse_tcode(row)?)?;
            let b = basis.index_of(&Mosaic::parse_tcode(col)?)?;
            // an entry given below the diagonal stands for its mirror image
            upper.push(if a <= b { ((a, b), v) } else { ((b, a), v.conj()) });
        }
        Self::from_upper(basis.n(), basis.len(), upper)
    }

    pub fn to_text(&self, basis: &KnotBasis) -> String {
        let mut out = String::new();
        for (&(a, b), v) in self.entries.range(..) {
            if a <= b {
                writeln!(out, "{} {} {} {}", v.re, v.im, basis.mosaic(a), basis.mosaic(b)).unwrap();
            }
        }
        out
    }

    /// Exact copy with rational entries, if every entry is a ratio of `i64`s
    /// that converts back to the same float.
    pub fn to_exact(&self) -> Option<ExactObservable> {
        let exact = |x: f64| -> Option<Ratio<i64>> {
            let r = Ratio::<i64>::approximate_float(x)?;
            (*r.numer() as f64 / *r.denom() as f64 == x).then_some(r)
        };
        let mut entries = BTreeMap::new();
        for (&k, v) in &self.entries {
            entries.insert(k, Complex::new(exact(v.re)?, exact(v.im)?));
        }
        Some(ExactObservable { dim: self.dim, entries })
    }
}

/// A sparse matrix with exact complex rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactObservable {
    dim: usize,
    entries: BTreeMap<(usize, usize), Complex<Ratio<i64>>>,
}

impl ExactObservable {
    /// `U Ω − Ω U` for the permutation matrix `U` of `g`.
    pub fn commutator(&self, g: &impl Involution) -> ExactObservable {
        let mut out: BTreeMap<(usize, usize), Complex<Ratio<i64>>> = BTreeMap::new();
        for (&(r, c), v) in &self.entries {
            // (UΩ)[g(r), c] = Ω[r, c];  (ΩU)[r, g(c)] = Ω[r, c]  (g is an involution)
            *out.entry((g.permute(r), c)).or_insert_with(Complex::zero) += v;
            *out.entry((r, g.permute(c))).or_insert_with(Complex::zero) -= v;
        }
        out.retain(|_, v| !v.is_zero());
        ExactObservable { dim: self.dim, entries: out }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }
}

impl Spectrum {
    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.eigenvalue).collect()
    }

    /// Basis vectors the observable does not touch (eigenvalue `0`).
    pub fn untouched(&self) -> &[usize] {
        &self.untouched
    }

    pub fn measure(&self, psi: &QuantumKnotState) -> Distribution {
        let norm = psi.norm_sqr();
        let mut outcomes = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let mut p: f64 = level
                .vectors
                .iter()
                .map(|v| v.iter().map(|&(i, c)| c.conj() * psi.amplitude(i)).sum::<Complex64>().norm_sqr())
                .sum();
            if level.eigenvalue.abs() <= EIGEN_MERGE_TOL {
                p += self.untouched.iter().map(|&i| psi.amplitude(i).norm_sqr()).sum::<f64>();
            }
            outcomes.push((level.eigenvalue, p / norm));
        }
        Distribution { outcomes }
    }
}

impl Distribution {
    /// `(eigenvalue, probability)` pairs, ascending by eigenvalue.
    pub fn outcomes(&self) -> &[(f64, f64)] {
        &self.outcomes
    }

    pub fn probability(&self, eigenvalue: f64) -> f64 {
        self.outcomes.iter().find(|(l, _)| (l - eigenvalue).abs() <= EIGEN_MERGE_TOL).map(|&(_, p)| p).unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.outcomes.iter().map(|&(_, p)| p).sum()
    }

    /// `shots` independent draws; returns `(eigenvalue, count)` for every outcome.
    pub fn sample(&self, shots: u64, seed: u64) -> Vec<(f64, u64)> {
        let mut counts: Vec<(f64, u64)> = self.outcomes.iter().map(|&(l, _)| (l, 0)).collect();
        let weights: Vec<f64> = self.outcomes.iter().map(|&(_, p)| p.max(0.0)).collect();
        let Ok(dist) = WeightedIndex::new(&weights) else { return counts };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..shots {
            counts[dist.sample(&mut rng)].1 += 1;
        }
        counts
    }
}
