use num_complex::Complex64;

use knot_mosaic::equivalence::KnotTypes;
use knot_mosaic::fixtures;
use knot_mosaic::moves::{DeterministicMove, MoveTable, PatternPair};
use knot_mosaic::quantum::{QuantumKnotState, QuantumKnotSystem, StateVerdict, UnitaryMove};
use knot_mosaic::{Limits, Location, Mosaic};

fn m(code: &str) -> Mosaic {
    code.parse().unwrap()
}

fn uniform(sys: &QuantumKnotSystem, codes: &[&str]) -> QuantumKnotState {
    let terms: Vec<(Complex64, Mosaic)> = codes.iter().map(|c| (Complex64::new(1.0, 0.0), m(c))).collect();
    QuantumKnotState::from_terms(sys.basis(), &terms).unwrap()
}

#[test]
fn two_term_superposition_in_k4() {
    let sys = QuantumKnotSystem::new(&KnotTypes::new(MoveTable::standard(), Limits::DEFAULT), 4).unwrap();
    assert_eq!(sys.dim(), 2594);
    let psi = uniform(&sys, &[fixtures::TREFOIL, fixtures::SUPERPOSITION_4_PARTNER]);
    assert_eq!(psi.support_len(), 2);
    assert!((psi.norm_sqr() - 1.0).abs() < 1e-15);
    // mirror swaps every crossing; applying it twice restores the state
    let mirror = UnitaryMove::mirror(sys.basis()).unwrap();
    let image = mirror.apply(&psi).unwrap();
    assert_ne!(image, psi);
    assert_eq!(mirror.apply(&image).unwrap(), psi);
}

#[test]
fn superposition_moved_in_k5() {
    let types = KnotTypes::new(MoveTable::standard(), Limits::EXTENDED);
    let sys = QuantumKnotSystem::new(&types, 5).unwrap();
    assert_eq!(sys.dim(), 4_183_954);
    let (a, b) = fixtures::EXAMPLE_5_IN;
    let before = uniform(&sys, &[a, b]);
    let after = uniform(&sys, &[fixtures::EXAMPLE_5_OUT, b]);
    let pair = PatternPair::new(m(fixtures::EXAMPLE_5_MOVE.0), m(fixtures::EXAMPLE_5_MOVE.1)).unwrap();
    let g = sys.unitary(&DeterministicMove::new(5, Location::new(2, 1), pair).unwrap()).unwrap();
    assert!(g.apply(&before).unwrap().distance_max(&after) < 1e-15);
    assert_eq!(sys.state_equivalent(&before, &after, 1).unwrap(), StateVerdict::Equivalent { depth: Some(1) });
    let blank = uniform(&sys, &["00000-00000-00000-00000-00000", b]);
    assert_eq!(sys.state_equivalent(&before, &blank, 2).unwrap(), StateVerdict::NotEquivalent);
}

#[test]
fn five_is_beyond_the_default_cap() {
    let types = KnotTypes::new(MoveTable::standard(), Limits::DEFAULT);
    assert!(QuantumKnotSystem::new(&types, 5).unwrap_err().is_cap());
}
