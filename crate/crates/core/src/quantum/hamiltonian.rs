use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::{QuantumKnotState, UnitaryMove};
use crate::{Error, Result};

/// `H_g = (π/2) Σ_j (|α_j⟩ − |β_j⟩)(⟨α_j| − ⟨β_j|)` for a move `g` with
/// transpositions `(α_j, β_j)`.
///
/// On each transposed pair `H_g` is `(π/2)(σ₀ − σ₁)`; basis states fixed by
/// `g` are annihilated. Its spectrum lies in `{0, π}`, and `exp(−i H_g)`
/// is exactly the permutation `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hamiltonian {
    n: usize,
    dim: usize,
    pairs: Vec<(usize, usize)>,
}

impl Hamiltonian {
    pub fn new(g: &UnitaryMove) -> Self {
        Hamiltonian { n: g.n(), dim: g.dim(), pairs: g.pairs().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Nonzero matrix entries `(row, col) -> value`.
    pub fn entries(&self) -> BTreeMap<(usize, usize), f64> {
        let mut out = BTreeMap::new();
        for &(a, b) in &self.pairs {
            out.insert((a, a), FRAC_PI_2);
            out.insert((b, b), FRAC_PI_2);
            out.insert((a, b), -FRAC_PI_2);
            out.insert((b, a), -FRAC_PI_2);
        }
        out
    }

    /// Eigenvalues with multiplicity, ascending: `0` once per fixed basis
    /// state and per pair, `π` once per pair.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let flips = self.pairs.len();
        let mut out = vec![0.0; self.dim - flips];
        out.extend(std::iter::repeat_n(std::f64::consts::PI, flips));
        out
    }

    /// `exp(−i H_g t) ψ` in closed form.
    pub fn evolve(&self, psi: &QuantumKnotState, t: f64) -> Result<QuantumKnotState> {
        if psi.n() != self.n || psi.dim() != self.dim {
            return Err(Error::SizeMismatch { expected: self.n, found: psi.n() });
        }
        let theta = FRAC_PI_2 * t;
        let phase = Complex64::from_polar(1.0, -theta);
        let (c, s) = (theta.cos(), theta.sin());
        let i_s = Complex64::new(0.0, s);
        let mut amps: BTreeMap<usize, Complex64> = psi.terms().collect();
        for &(a, b) in &self.pairs {
            let (ca, cb) = (psi.amplitude(a), psi.amplitude(b));
            if ca == Complex64::ZERO && cb == Complex64::ZERO {
                continue;
            }
            let na = phase * (ca * c + i_s * cb);
            let nb = phase * (cb * c + i_s * ca);
            amps.insert(a, na);
            amps.insert(b, nb);
        }
        amps.retain(|_, v| v.norm() > super::state::ZERO_TOL);
        Ok(QuantumKnotState::from_raw(self.n, self.dim, amps))
    }
}
