//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Runtime budgets are part of each check.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector};
use num_bigint::BigUint;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use knot_mosaic::enumeration::{brute_force_count, count, dfs_count, enumerate, mosaic_count};
use knot_mosaic::equivalence::KnotTypes;
use knot_mosaic::fixtures;
use knot_mosaic::moves::{DeterministicMove, MoveTable, PatternPair};
use knot_mosaic::oriented::{enumerate_oriented, OrientedMosaic};
use knot_mosaic::quantum::{Hamiltonian, Observable, QuantumKnotState, QuantumKnotSystem, StateVerdict};
use knot_mosaic::tiles::oriented::oriented_rotation_classes;
use knot_mosaic::{Limits, Location, Mosaic, OrientedTile};

type Check = Result<(), String>;

const EIGEN_TOL: f64 = 1e-9;
const EVOLVE_TOL: f64 = 1e-9;
const AMPLITUDE_TOL: f64 = 1e-12;
const STATISTICS_TOL: f64 = 1e-12;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

fn m(code: &str) -> Mosaic {
    code.parse().expect("fixture parses")
}

fn types(limits: Limits) -> KnotTypes {
    KnotTypes::new(MoveTable::standard(), limits)
}

fn system(n: usize) -> Result<QuantumKnotSystem, String> {
    QuantumKnotSystem::new(&types(Limits::DEFAULT), n).map_err(|e| e.to_string())
}

fn random_state(sys: &QuantumKnotSystem, rng: &mut ChaCha8Rng) -> QuantumKnotState {
    let amps = (0..sys.dim()).map(|i| (i, Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))));
    QuantumKnotState::from_amplitudes(sys.n(), sys.dim(), amps.collect()).expect("nonzero state").0
}

fn dense(psi: &QuantumKnotState) -> DVector<Complex64> {
    DVector::from_fn(psi.dim(), |i, _| psi.amplitude(i))
}

fn dimensions() -> Check {
    let expected = [(1usize, 1u64), (2, 2), (3, 22)];
    for (n, d) in expected {
        let listed = enumerate(n, &Limits::DEFAULT).map_err(|e| e.to_string())?.len() as u64;
        let counted = count(n).map_err(|e| e.to_string())?;
        let searched = dfs_count(n).map_err(|e| e.to_string())?;
        ensure!(listed == d, "enumerate({n}) = {listed}");
        ensure!(counted == BigUint::from(d), "count({n}) = {counted}");
        ensure!(searched == d, "dfs_count({n}) = {searched}");
        if n <= 2 {
            let brute = brute_force_count(n).map_err(|e| e.to_string())?;
            ensure!(brute == d, "brute_force_count({n}) = {brute}");
        }
    }
    Ok(())
}

fn appendix_listing() -> Check {
    let listed: Vec<String> =
        enumerate(3, &Limits::DEFAULT).map_err(|e| e.to_string())?.iter().map(Mosaic::to_tcode).collect();
    ensure!(listed.len() == fixtures::APPENDIX_A.len(), "{} mosaics listed", listed.len());
    for (i, (got, want)) in listed.iter().zip(fixtures::APPENDIX_A).enumerate() {
        ensure!(got == want, "entry {i}: {got} != {want}");
    }
    Ok(())
}

fn census_four() -> Check {
    let counted = count(4).map_err(|e| e.to_string())?;
    let listed = enumerate(4, &Limits::DEFAULT).map_err(|e| e.to_string())?.len();
    ensure!(counted == BigUint::from(listed), "count(4) = {counted}, enumerate(4) has {listed}");
    ensure!(listed == 2594, "D4 = {listed}");
    Ok(())
}

fn census_five() -> Check {
    let counted = count(5).map_err(|e| e.to_string())?;
    let searched = dfs_count(5).map_err(|e| e.to_string())?;
    ensure!(counted == BigUint::from(searched), "count(5) = {counted}, dfs_count(5) = {searched}");
    ensure!(searched == 4_183_954, "D5 = {searched}");
    Ok(())
}

fn classification() -> Check {
    ensure!(!m(fixtures::NON_KNOT_4).is_knot_mosaic(), "non-knot 4-mosaic accepted");
    ensure!(m(fixtures::TREFOIL).is_knot_mosaic(), "trefoil rejected");
    for (name, code) in
        [("Hopf", fixtures::HOPF_4), ("figure-eight", fixtures::FIGURE_EIGHT_5), ("Borromean", fixtures::BORROMEAN_6)]
    {
        ensure!(m(code).is_knot_mosaic(), "{name} rejected");
    }
    Ok(())
}

fn generators_are_involutions() -> Check {
    let table = MoveTable::standard();
    for n in [3, 4] {
        let basis = enumerate(n, &Limits::DEFAULT).map_err(|e| e.to_string())?;
        let packed: Vec<u128> = basis.iter().map(|b| b.pack().expect("n <= 5")).collect();
        for g in table.generators(n) {
            let mut image = Vec::with_capacity(basis.len());
            for k in &basis {
                let moved = g.apply(k).map_err(|e| e.to_string())?.pack().expect("n <= 5");
                let j = packed.binary_search(&moved).map_err(|_| format!("{g:?} maps {k} outside K({n})"))?;
                image.push(j);
            }
            // an involutive permutation is a product of disjoint transpositions
            ensure!((0..basis.len()).all(|i| image[image[i]] == i), "{g:?} is not an involution");
            let mut pairs: Vec<(usize, usize)> =
                (0..basis.len()).filter(|&i| image[i] > i).map(|i| (i, image[i])).collect();
            let mut listed = g.as_transpositions(&basis);
            pairs.sort_unstable();
            listed.sort_unstable();
            ensure!(pairs == listed, "{g:?} transpositions disagree with its action");
        }
    }
    Ok(())
}

fn intro_move() -> Check {
    let pair = PatternPair::new(m(fixtures::INTRO_MOVE.0), m(fixtures::INTRO_MOVE.1))
        .ok_or("intro patterns differ in boundary")?;
    let g = DeterministicMove::new(4, Location::new(0, 1), pair).map_err(|e| e.to_string())?;
    let (a, b, fixed) = (m(fixtures::INTRO_A), m(fixtures::INTRO_B), m(fixtures::INTRO_FIXED));
    ensure!(g.apply(&a).map_err(|e| e.to_string())? == b, "A does not map to B");
    ensure!(g.apply(&b).map_err(|e| e.to_string())? == a, "B does not map to A");
    ensure!(g.apply(&fixed).map_err(|e| e.to_string())? == fixed, "third mosaic moved");
    Ok(())
}

fn hamiltonian() -> Check {
    let sys = system(3)?;
    let dim = sys.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in sys.generators() {
        let h = Hamiltonian::new(&g);
        let mut matrix = DMatrix::<Complex64>::zeros(dim, dim);
        for ((a, b), v) in h.entries() {
            matrix[(a, b)] = Complex64::new(v, 0.0);
        }
        let eig = matrix.clone().symmetric_eigen();
        for &l in eig.eigenvalues.iter() {
            ensure!(l.abs() < EIGEN_TOL || (l - PI).abs() < EIGEN_TOL, "eigenvalue {l}");
        }
        let mut oracle: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        oracle.sort_by(f64::total_cmp);
        let reported = h.eigenvalues();
        ensure!(reported.len() == oracle.len(), "eigenvalue count {}", reported.len());
        for (a, b) in oracle.iter().zip(&reported) {
            ensure!((a - b).abs() < EIGEN_TOL, "eigenvalue {b} vs oracle {a}");
        }
        let psi = random_state(&sys, &mut rng);
        for t in [0.1, 0.5, 1.0, 2.0] {
            let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from_polar(1.0, -l * t)));
            let propagator = &eig.eigenvectors * phases * eig.eigenvectors.adjoint();
            let want = propagator * dense(&psi);
            let got = dense(&h.evolve(&psi, t).map_err(|e| e.to_string())?);
            let diff = (got - want).iter().map(|z| z.norm()).fold(0.0, f64::max);
            ensure!(diff < EVOLVE_TOL, "evolve at t = {t} off by {diff}");
        }
        let (a, b) = g.pairs()[0];
        let k = QuantumKnotState::basis_state(sys.basis(), &sys.basis().mosaic(a)).map_err(|e| e.to_string())?;
        for t in [0.0, 0.25, 0.5, 1.0, 1.5, 3.0] {
            let out = h.evolve(&k, t).map_err(|e| e.to_string())?;
            let (ca, cb) = ((FRAC_PI_2 * t).cos().abs(), (FRAC_PI_2 * t).sin().abs());
            ensure!((out.amplitude(a).norm() - ca).abs() < AMPLITUDE_TOL, "|c_a| at t = {t}");
            ensure!((out.amplitude(b).norm() - cb).abs() < AMPLITUDE_TOL, "|c_b| at t = {t}");
        }
    }
    Ok(())
}

fn invariance() -> Check {
    let sys = system(3)?;
    let dim = sys.dim();
    let gens = sys.generators();
    let mut projectors = Vec::new();
    for id in 0..sys.partition().orbit_count() {
        let p = sys.orbit_projector_of(id).map_err(|e| e.to_string())?;
        ensure!(
            sys.is_invariant_exact(&p).map_err(|e| e.to_string())? == Some(true),
            "orbit {id} projector fails the exact check"
        );
        for g in &gens {
            ensure!(
                p.to_exact().ok_or("projector is not rational")?.commutator(g).is_zero(),
                "orbit {id} projector fails against a generator"
            );
        }
        projectors.push(p);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for trial in 0..5 {
        let ones: Vec<usize> = (0..dim).filter(|_| rng.random_bool(0.5)).collect();
        let omega = Observable::projector(3, dim, ones).map_err(|e| e.to_string())?;
        let avg = sys.group_average(&omega, 200_000).map_err(|e| e.to_string())?;
        ensure!(
            sys.is_invariant(&avg.observable).map_err(|e| e.to_string())?,
            "group average {trial} is not invariant"
        );
        projectors.push(avg.observable);
    }

    for s in 0..20 {
        let psi = random_state(&sys, &mut rng);
        for g in &gens {
            let moved = g.apply(&psi).map_err(|e| e.to_string())?;
            for omega in &projectors {
                let before = omega.measure(&psi).map_err(|e| e.to_string())?;
                let after = omega.measure(&moved).map_err(|e| e.to_string())?;
                let spread: BTreeMap<u64, f64> = before.outcomes().iter().map(|&(v, p)| (v.to_bits(), p)).collect();
                ensure!(before.outcomes().len() == after.outcomes().len(), "state {s}: outcome sets differ");
                for &(v, p) in after.outcomes() {
                    let q = spread.get(&v.to_bits()).copied().ok_or(format!("state {s}: outcome {v} appeared"))?;
                    ensure!((p - q).abs() < STATISTICS_TOL, "state {s}: p({v}) moved by {}", (p - q).abs());
                }
            }
        }
    }
    Ok(())
}

fn non_equivalence() -> Check {
    let sys = system(3)?;
    let b = sys.basis();
    let one = Complex64::new(1.0, 0.0);
    let psi1 = QuantumKnotState::basis_state(b, &m(fixtures::PSI_1)).map_err(|e| e.to_string())?;
    let psi2 = QuantumKnotState::from_terms(b, &[(one, m(fixtures::PSI_2.0)), (one, m(fixtures::PSI_2.1))])
        .map_err(|e| e.to_string())?;
    let verdict = sys.state_equivalent(&psi1, &psi2, 0).map_err(|e| e.to_string())?;
    ensure!(verdict == StateVerdict::NotEquivalent, "verdict {verdict:?}");
    Ok(())
}

fn mosaic_number() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for k in enumerate(3, &Limits::DEFAULT).map_err(|e| e.to_string())? {
        ensure!(k.crossing_count() <= 1, "{k} has {} crossings", k.crossing_count());
    }
    let trefoil = m(fixtures::TREFOIL);
    ensure!(trefoil.crossing_count() == 3, "trefoil has {} crossings", trefoil.crossing_count());
    let kt = types(Limits::DEFAULT).with_cache_dir(dir.path());
    let number = kt.mosaic_number(&trefoil, 4).map_err(|e| e.to_string())?;
    ensure!(number == Some(4), "mosaic number {number:?}");
    Ok(())
}

fn oriented() -> Check {
    ensure!(OrientedTile::all().count() == 29, "{} oriented tiles", OrientedTile::all().count());
    let classes = oriented_rotation_classes();
    ensure!(classes.len() == 9, "{} rotation classes", classes.len());
    for (n, want) in [(1usize, 1usize), (2, 3)] {
        let got = enumerate_oriented(n).map_err(|e| e.to_string())?.len();
        ensure!(got == want, "oriented count at n = {n} is {got}");
    }

    let tiles: Vec<OrientedTile> = OrientedTile::all().collect();
    let mut brute: BTreeMap<Mosaic, usize> = BTreeMap::new();
    for a in &tiles {
        for b in &tiles {
            for c in &tiles {
                for d in &tiles {
                    let om = OrientedMosaic::new(2, vec![*a, *b, *c, *d]).map_err(|e| e.to_string())?;
                    if om.is_oriented_knot_mosaic() {
                        *brute.entry(om.forget_orientation()).or_default() += 1;
                    }
                }
            }
        }
    }
    let total: usize = brute.values().sum();
    ensure!(total == 3, "brute force found {total} oriented 2-mosaics");
    for k in enumerate(2, &Limits::DEFAULT).map_err(|e| e.to_string())? {
        let components = k.trace().map_err(|e| e.to_string())?.components;
        let fiber = brute.get(&k).copied().unwrap_or(0);
        ensure!(fiber == 1 << components, "{k}: fiber {fiber}, components {components}");
    }
    Ok(())
}

fn loose_bound() -> Check {
    for n in 1..=6 {
        let counted = count(n).map_err(|e| e.to_string())?;
        let bound = mosaic_count(n);
        ensure!(bound == BigUint::from(11u32).pow((n * n) as u32), "mosaic_count({n}) = {bound}");
        ensure!(counted < bound, "count({n}) = {counted} is not below {bound}");
    }
    Ok(())
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    check: fn() -> Check,
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let criteria = [
        Criterion { id: "1", name: "dimension counts D1, D2, D3", budget: s(1), check: dimensions },
        Criterion {
            id: "2",
            name: "enumerate(3) matches the printed 3-mosaic list",
            budget: s(1),
            check: appendix_listing,
        },
        Criterion { id: "3a", name: "count(4) = |enumerate(4)|", budget: s(1), check: census_four },
        Criterion { id: "3b", name: "count(5) = dfs_count(5)", budget: s(300), check: census_five },
        Criterion { id: "4", name: "example mosaics classify", budget: s(1), check: classification },
        Criterion {
            id: "5",
            name: "generators at n = 3, 4 are involutions closed on K(n)",
            budget: s(30),
            check: generators_are_involutions,
        },
        Criterion {
            id: "6",
            name: "intro move swaps two mosaics and fixes the third",
            budget: s(1),
            check: intro_move,
        },
        Criterion {
            id: "7",
            name: "Hamiltonian spectrum, evolution and amplitude law",
            budget: s(10),
            check: hamiltonian,
        },
        Criterion {
            id: "8",
            name: "orbit projectors and group averages are invariant",
            budget: s(60),
            check: invariance,
        },
        Criterion { id: "9", name: "psi1 and psi2 are not equivalent", budget: s(1), check: non_equivalence },
        Criterion { id: "10", name: "mosaic number of the trefoil is 4", budget: s(120), check: mosaic_number },
        Criterion { id: "11", name: "oriented tiles, counts and fibers", budget: s(10), check: oriented },
        Criterion { id: "12", name: "count(n) < 11^(n^2) for n <= 6", budget: s(60), check: loose_bound },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= c.budget => Ok(()),
            Ok(()) => Err(format!("took {elapsed:.2?}, budget {:?}", c.budget)),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS  [{:>3}] {} ({elapsed:.2?})", c.id, c.name),
            Err(e) => {
                failed += 1;
                println!("FAIL  [{:>3}] {} ({elapsed:.2?}): {e}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
