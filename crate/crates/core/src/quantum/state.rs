use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;

use super::KnotBasis;
use crate::mosaic::Mosaic;
use crate::{Error, Result};

/// Entries with modulus at or below this are dropped from sparse vectors.
pub const ZERO_TOL: f64 = 1e-15;

/// A vector in the span of the knot n-mosaics, stored sparsely by basis index.
///
/// Constructors normalize; operations that are unitary keep the norm.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumKnotState {
    n: usize,
    dim: usize,
    amps: BTreeMap<usize, Complex64>,
}

impl QuantumKnotState {
    /// `|K⟩` for a knot mosaic `K`.
    pub fn basis_state(basis: &KnotBasis, m: &Mosaic) -> Result<Self> {
        let i = basis.index_of(m)?;
        Ok(QuantumKnotState { n: basis.n(), dim: basis.len(), amps: BTreeMap::from([(i, Complex64::ONE)]) })
    }

    /// Normalized superposition; repeated mosaics add up. Fails on the zero vector.
    pub fn from_terms(basis: &KnotBasis, terms: &[(Complex64, Mosaic)]) -> Result<Self> {
        let mut raw = BTreeMap::new();
        for (c, m) in terms {
            *raw.entry(basis.index_of(m)?).or_insert(Complex64::ZERO) += c;
        }
        Self::from_amplitudes(basis.n(), basis.len(), raw).map(|(s, _)| s)
    }

    /// Normalizes `amps`, returning the state and the norm it had before.
    pub fn from_amplitudes(n: usize, dim: usize, amps: BTreeMap<usize, Complex64>) -> Result<(Self, f64)> {
        if let Some(&i) = amps.keys().find(|&&i| i >= dim) {
            return Err(Error::out_of_range("basis index", format!("{i} >= {dim}")));
        }
        let norm = amps.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::out_of_range("state", "zero or non-finite norm"));
        }
        let amps = amps.into_iter().map(|(i, c)| (i, c / norm)).filter(|(_, c)| c.norm() > ZERO_TOL).collect();
        Ok((QuantumKnotState { n, dim, amps }, norm))
    }

    /// Unnormalized construction for internal use by unitary maps.
    pub(crate) fn from_raw(n: usize, dim: usize, amps: BTreeMap<usize, Complex64>) -> Self {
        QuantumKnotState { n, dim, amps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the ambient space (number of knot n-mosaics).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps.get(&index).copied().unwrap_or(Complex64::ZERO)
    }

    /// Nonzero `(index, amplitude)` pairs in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.amps.iter().map(|(&i, &c)| (i, c))
    }

    pub fn support_len(&self) -> usize {
        self.amps.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.values().map(|c| c.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QuantumKnotState) -> Complex64 {
        self.amps.iter().map(|(i, a)| a.conj() * other.amplitude(*i)).sum()
    }

    /// Largest entrywise difference.
    pub fn distance_max(&self, other: &QuantumKnotState) -> f64 {
        self.amps
            .keys()
            .chain(other.amps.keys())
            .map(|&i| (self.amplitude(i) - other.amplitude(i)).norm())
            .fold(0.0, f64::max)
    }

    pub fn check_same_space(&self, other: &QuantumKnotState) -> Result<()> {
        if self.n != other.n || self.dim != other.dim {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    /// Reads `re im tcode` lines (`#` comments and blank lines skipped),
    /// normalizes, and returns the norm of the input as written.
    pub fn parse(text: &str, basis: &KnotBasis) -> Result<(Self, f64)> {
        let mut raw = BTreeMap::new();
        for (line_no, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let [re, im, code] = fields[..] else {
                return Err(Error::parse(line_no + 1, "expected `re im tcode`"));
            };
            let c = parse_complex(line_no + 1, re, im)?;
            let m = Mosaic::parse_tcode(code)?;
            *raw.entry(basis.index_of(&m)?).or_insert(Complex64::ZERO) += c;
        }
        Self::from_amplitudes(basis.n(), basis.len(), raw)
    }

    /// One `re im tcode` line per nonzero amplitude.
    pub fn to_text(&self, basis: &KnotBasis) -> String {
        let mut out = String::new();
        for (i, c) in self.terms() {
            writeln!(out, "{} {} {}", c.re, c.im, basis.mosaic(i)).unwrap();
        }
        out
    }
}

pub(crate) fn parse_complex(line: usize, re: &str, im: &str) -> Result<Complex64> {
    let num = |s: &str| s.parse::<f64>().ok().filter(|v| v.is_finite());
    match (num(re), num(im)) {
        (Some(a), Some(b)) => Ok(Complex64::new(a, b)),
        _ => Err(Error::parse(line, format!("bad amplitude '{re} {im}'"))),
    }
}
