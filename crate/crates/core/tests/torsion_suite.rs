//! The torsion-theory grids: filter enumeration against the brute-force
//! subset oracle, radical properties, the invariance theorem instance check
//! and the differentiality theorem instance check over every fixture.

use std::collections::BTreeSet;

use localix_core::{
    check_delta_invariance, delta_invariant_ideal, differential_on_radical,
    enumerate_gabriel_filters, enumerate_left_ideals, enumerate_module_derivations,
    fixtures, gabriel_filter_of_radical, is_gabriel_filter, is_torsion, regular,
    torsion_radical, torsion_theory, Bounds, EmModule, Error, Submodule, TorsionClass,
};

/// Brute force: run the axiom verdict over every subset of the ideal
/// lattice and collect the passing ones.
fn oracle_filters(algebra: &localix_core::Algebra, bounds: &Bounds) -> Vec<Vec<Submodule>> {
    let lattice = enumerate_left_ideals(algebra, bounds).unwrap();
    let n = lattice.len();
    assert!(n <= 10, "oracle only runs on small lattices");
    let mut passing = Vec::new();
    for mask in 0u32..(1 << n) {
        let members: Vec<Submodule> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| lattice[i].clone())
            .collect();
        if is_gabriel_filter(algebra, &members, bounds).unwrap().is_ok() {
            passing.push(members);
        }
    }
    passing
}

#[test]
fn filter_enumeration_matches_the_subset_oracle_on_every_fixture() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        let enumerated: BTreeSet<Vec<Submodule>> =
            enumerate_gabriel_filters(&fixture.algebra, &bounds)
                .unwrap()
                .into_iter()
                .map(|f| f.ideals().to_vec())
                .collect();
        let oracle: BTreeSet<Vec<Submodule>> =
            oracle_filters(&fixture.algebra, &bounds).into_iter().collect();
        assert_eq!(enumerated, oracle, "{}", fixture.name);
    }
}

#[test]
fn fixture_filter_counts() {
    let bounds = Bounds::default();
    let count = |a: &localix_core::Algebra| {
        enumerate_gabriel_filters(a, &bounds).unwrap().len()
    };
    assert_eq!(count(&fixtures::dual_numbers()), 2);
    assert_eq!(count(&fixtures::z4()), 2);
    assert_eq!(count(&fixtures::f2xf2()), 4);
    // no pinned count for the upper-triangular algebra; the subset oracle
    // above is the authority, this records the value for regressions
    let upper = count(&fixtures::upper_triangular());
    assert!(upper >= 2, "at least the trivial and improper filters exist");
}

#[test]
fn filters_are_closed_under_pairwise_intersection() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        for filter in enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap() {
            for a in filter.ideals() {
                for b in filter.ideals() {
                    assert!(
                        filter.contains(&a.intersect(b).unwrap()),
                        "{}",
                        fixture.name
                    );
                }
            }
        }
    }
}

#[test]
fn torsion_checks_on_the_corpus() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        let filters = enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap();
        let trivial = filters.iter().find(|f| f.len() == 1).expect("trivial filter");
        for (name, m) in &fixture.corpus {
            // over the trivial filter only the zero module is torsion
            assert_eq!(
                is_torsion(m, trivial, &bounds).unwrap(),
                m.is_zero(),
                "{}/{}",
                fixture.name,
                name
            );
            // the zero submodule of anything is torsion for every filter
            for filter in &filters {
                assert!(torsion_radical(m, filter, &bounds).is_ok());
            }
        }
        let zero = EmModule::zero_module(&fixture.algebra);
        for filter in &filters {
            assert!(is_torsion(&zero, filter, &bounds).unwrap(), "{}", fixture.name);
        }
    }
}

#[test]
fn radicals_at_the_extreme_filters() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        let filters = enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap();
        let trivial = filters.iter().find(|f| f.len() == 1).expect("trivial filter");
        let improper = filters.iter().find(|f| f.is_improper()).expect("improper filter");
        for (name, m) in &fixture.corpus {
            assert!(
                torsion_radical(m, trivial, &bounds).unwrap().is_zero(),
                "{}/{}",
                fixture.name,
                name
            );
            assert!(
                torsion_radical(m, improper, &bounds).unwrap().is_full(),
                "{}/{}",
                fixture.name,
                name
            );
        }
    }
}

#[test]
fn torsion_theories_build_and_classify_every_fixture() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        for filter in enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap() {
            let theory = torsion_theory(&filter, &fixture.corpus, &bounds)
                .unwrap_or_else(|e| panic!("{}: {e}", fixture.name));
            assert_eq!(theory.classification().len(), fixture.corpus.len());
        }
    }
}

#[test]
fn split_ring_regular_module_is_mixed_for_the_half_filter() {
    let a = fixtures::f2xf2();
    let bounds = Bounds::default();
    let e1a = Submodule::from_generators(&a.carrier(), &[vec![1, 0]]);
    let filter = enumerate_gabriel_filters(&a, &bounds)
        .unwrap()
        .into_iter()
        .find(|f| f.len() == 2 && f.contains(&e1a))
        .unwrap();
    let corpus = vec![("A".to_string(), regular(&a))];
    let theory = torsion_theory(&filter, &corpus, &bounds).unwrap();
    assert_eq!(theory.classification()[0].1, TorsionClass::Mixed);
}

#[test]
fn filter_to_radical_to_filter_is_the_identity_everywhere() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        for filter in enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap() {
            let recovered = gabriel_filter_of_radical(
                &fixture.algebra,
                |m| torsion_radical(m, &filter, &bounds),
                &bounds,
            )
            .unwrap();
            assert_eq!(recovered, filter, "{}", fixture.name);
        }
    }
}

#[test]
fn invariance_theorem_holds_on_the_full_grid() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        for d in &fixture.derivations {
            for filter in enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap() {
                assert_eq!(
                    check_delta_invariance(&fixture.algebra, d, &filter, &bounds).unwrap(),
                    Ok(()),
                    "{}",
                    fixture.name
                );
            }
        }
    }
}

#[test]
fn invariant_ideal_requires_filter_membership() {
    let a = fixtures::dual_numbers();
    let d = fixtures::dual_numbers_ddx();
    let bounds = Bounds::default();
    let trivial = enumerate_gabriel_filters(&a, &bounds)
        .unwrap()
        .into_iter()
        .find(|f| f.len() == 1)
        .unwrap();
    let x_ideal = Submodule::from_generators(&a.carrier(), &[vec![0, 1]]);
    assert!(matches!(
        delta_invariant_ideal(&a, &trivial, &x_ideal, &d, &bounds),
        Err(Error::NotInFilter)
    ));
}

#[test]
fn differentiality_theorem_holds_on_the_full_grid() {
    let bounds = Bounds::default();
    for fixture in fixtures::all() {
        let filters = enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap();
        for d in &fixture.derivations {
            for (name, m) in &fixture.corpus {
                let derivations = enumerate_module_derivations(m, d, &bounds).unwrap();
                for filter in &filters {
                    let radical = torsion_radical(m, filter, &bounds).unwrap();
                    for dd in &derivations {
                        assert_eq!(
                            differential_on_radical(&radical, dd.map()),
                            Ok(()),
                            "{}/{}",
                            fixture.name,
                            name
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn split_ring_derivations_preserve_the_half_radical() {
    // the expected shape of the differentiality instance on the split ring:
    // delta is forced to zero, derivations on the regular module are the
    // right multiplications, and they all preserve e2A
    let a = fixtures::f2xf2();
    let bounds = Bounds::default();
    let reg = regular(&a);
    let d = localix_core::AlgebraDerivation::zero(&a);
    let derivations = enumerate_module_derivations(&reg, &d, &bounds).unwrap();
    assert_eq!(derivations.len(), 4);
    let expected: BTreeSet<_> = a.elements().iter().map(|c| a.right_mul_map(c)).collect();
    let got: BTreeSet<_> = derivations.iter().map(|f| f.map().clone()).collect();
    assert_eq!(got, expected);
}
