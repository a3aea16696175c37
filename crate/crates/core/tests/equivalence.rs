use knot_mosaic::equivalence::{load_partition, KnotTypes, Verdict};
use knot_mosaic::fixtures;
use knot_mosaic::moves::MoveTable;
use knot_mosaic::{Limits, Mosaic};

fn m(code: &str) -> Mosaic {
    code.parse().unwrap()
}

fn types() -> KnotTypes {
    KnotTypes::new(MoveTable::standard(), Limits::DEFAULT)
}

#[test]
fn orbit_sizes() {
    let kt = types();
    let mut three = kt.partition(3).unwrap().sizes();
    three.sort_unstable();
    assert_eq!(three, [1, 1, 1, 19]);
    let mut four = kt.partition(4).unwrap().sizes();
    four.sort_unstable();
    assert_eq!(four, [1, 1, 1, 1, 1, 8, 8, 17, 28, 28, 180, 860, 1460]);
    assert_eq!(four.iter().sum::<usize>(), 2594);
}

#[test]
fn orbits_preserve_components() {
    let kt = types();
    for n in [3, 4] {
        let p = kt.partition(n).unwrap();
        for orbit in p.orbits() {
            let components: Vec<usize> =
                orbit.iter().map(|&i| p.mosaic(i as usize).trace().unwrap().components).collect();
            assert!(components.windows(2).all(|w| w[0] == w[1]), "n = {n}");
        }
    }
}

#[test]
fn stabilized_equivalence() {
    let kt = types();
    assert_eq!(
        kt.same_knot_type(&m(fixtures::INTRO_A), &m(fixtures::INTRO_B), 0).unwrap(),
        Verdict::Equivalent { padding: 0 }
    );
    let tref = m(fixtures::TREFOIL);
    assert_eq!(
        kt.same_knot_type(&tref, &m(fixtures::TREFOIL_INJECTED), 0).unwrap(),
        Verdict::Equivalent { padding: 0 }
    );
    assert!(!kt.same_knot_type_n(&tref, &m(fixtures::HOPF_4)).unwrap());
    assert_eq!(
        kt.same_knot_type(&Mosaic::blank(3), &m(fixtures::PSI_1), 1).unwrap(),
        Verdict::NotEquivalentUpTo { max_pad: 1 }
    );
    // the unknot drawn in a 2-mosaic is the circle of any larger mosaic
    assert_eq!(kt.same_knot_type(&m("21-34"), &m(fixtures::PSI_1), 1).unwrap(), Verdict::Equivalent { padding: 0 });
}

#[test]
fn cached_partition_matches_fresh() {
    let dir = tempfile::tempdir().unwrap();
    let table = MoveTable::standard();
    let fresh = types().partition(4).unwrap();
    let cached = KnotTypes::new(table.clone(), Limits::DEFAULT).with_cache_dir(dir.path());
    assert_eq!(cached.partition(4).unwrap().orbits(), fresh.orbits());
    let loaded = load_partition(dir.path(), 4, &table.hash_hex()).unwrap().unwrap();
    assert_eq!(loaded.orbits(), fresh.orbits());
    assert!(load_partition(dir.path(), 4, "other").unwrap().is_none());
}
