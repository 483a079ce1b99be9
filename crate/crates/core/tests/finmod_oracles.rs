//! Brute-force oracles for the finite-module layer: Hom groups against raw
//! generator-image enumeration, kernels and quotients against element
//! enumeration, and the subgroup lattice against the subset oracle.

use std::collections::BTreeSet;

use localix_core::{
    enumerate_subgroups, quotient, submodule::QuotientPresentation, Bounds, Elem, FinModule,
    HomGroup, ModuleMap, Submodule,
};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every additive map `m -> n`, found by enumerating all generator images and
/// keeping the well-defined assignments.
fn oracle_additive_maps(m: &FinModule, n: &FinModule) -> Vec<ModuleMap> {
    let images_per_gen: Vec<Vec<Elem>> = (0..m.rank())
        .map(|_| n.elements().collect::<Vec<_>>())
        .collect();
    let mut out = Vec::new();
    let total: usize = images_per_gen.iter().map(Vec::len).product::<usize>().max(1);
    assert!(total <= 1 << 16, "oracle only runs on small instances");
    for mut idx in 0..total {
        let mut images = Vec::with_capacity(m.rank());
        for choices in &images_per_gen {
            images.push(choices[idx % choices.len()].clone());
            idx /= choices.len();
        }
        if let Ok(map) = ModuleMap::from_images(m.clone(), n.clone(), &images) {
            out.push(map);
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn hom_group_matches_the_generator_image_oracle() {
    let cases = vec![
        (FinModule::new(4, vec![2]).unwrap(), FinModule::base(4)),
        (FinModule::base(4), FinModule::base(4)),
        (FinModule::new(2, vec![2, 2]).unwrap(), FinModule::base(2)),
        (FinModule::new(4, vec![2, 4]).unwrap(), FinModule::new(4, vec![2, 4]).unwrap()),
        (FinModule::new(12, vec![2, 6]).unwrap(), FinModule::new(12, vec![4]).unwrap()),
        (FinModule::zero(2), FinModule::base(2)),
        (FinModule::base(2), FinModule::zero(2)),
    ];
    for (m, n) in cases {
        let oracle = oracle_additive_maps(&m, &n);
        let hom = HomGroup::new(&m, &n).unwrap();
        assert_eq!(hom.group().cardinality(), oracle.len() as u128, "{m:?} -> {n:?}");
        let mut indexed: Vec<ModuleMap> = hom.maps().collect();
        indexed.sort();
        assert_eq!(indexed, oracle, "{m:?} -> {n:?}");
    }
}

#[test]
fn hom_of_klein_four_to_z2_has_four_maps() {
    let v = FinModule::new(2, vec![2, 2]).unwrap();
    let z2 = FinModule::base(2);
    assert_eq!(oracle_additive_maps(&v, &z2).len(), 4);
    assert_eq!(HomGroup::new(&v, &z2).unwrap().group().cardinality(), 4);
}

#[test]
fn cyclic_hom_cardinality_is_the_gcd() {
    let m = 12u64;
    for a in [2u64, 3, 4, 6, 12] {
        for b in [2u64, 3, 4, 6, 12] {
            let src = FinModule::new(m, vec![a]).unwrap();
            let dst = FinModule::new(m, vec![b]).unwrap();
            let hom = HomGroup::new(&src, &dst).unwrap();
            assert_eq!(hom.group().cardinality(), gcd(a, b) as u128, "a={a} b={b}");
        }
    }
}

#[test]
fn kernel_and_image_against_element_enumeration() {
    let z4 = FinModule::base(4);
    let double = ModuleMap::new(z4.clone(), z4.clone(), vec![vec![2]]).unwrap();
    let kernel_oracle: BTreeSet<Elem> =
        z4.elements().filter(|x| double.apply(x) == vec![0]).collect();
    assert_eq!(
        kernel_oracle,
        double.kernel().elements().into_iter().collect::<BTreeSet<_>>()
    );
    let image_oracle: BTreeSet<Elem> = z4.elements().map(|x| double.apply(&x)).collect();
    assert_eq!(
        image_oracle,
        double.image().elements().into_iter().collect::<BTreeSet<_>>()
    );
}

#[test]
fn quotient_of_z4_is_cyclic_of_order_two() {
    let z4 = FinModule::base(4);
    let two = Submodule::from_generators(&z4, &[vec![2]]);
    let q: QuotientPresentation = quotient(&z4, &two);
    assert_eq!(q.module.cardinality(), 2);
    assert_eq!(q.module.rank(), 1);
    let classes: BTreeSet<Elem> = z4.elements().map(|x| q.proj.apply(&x)).collect();
    assert_eq!(classes.len(), 2);
}

/// Subsets of the element set closed under addition, i.e. all subgroups.
fn oracle_subgroups(m: &FinModule) -> BTreeSet<BTreeSet<Elem>> {
    let elements: Vec<Elem> = m.elements().collect();
    let n = elements.len();
    assert!(n <= 16, "oracle only runs on small instances");
    let mut out = BTreeSet::new();
    for mask in 0usize..(1 << n) {
        let subset: Vec<&Elem> =
            elements.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, e)| e).collect();
        if !subset.iter().any(|e| m.is_zero_elem(e)) {
            continue;
        }
        let set: BTreeSet<Elem> = subset.iter().map(|e| (*e).clone()).collect();
        let closed = subset
            .iter()
            .all(|x| subset.iter().all(|y| set.contains(&m.add(x, y))));
        if closed {
            out.insert(set);
        }
    }
    out
}

#[test]
fn subgroup_enumeration_matches_the_subset_oracle() {
    let bounds = Bounds::default();
    for m in [
        FinModule::base(4),
        FinModule::new(2, vec![2, 2]).unwrap(),
        FinModule::new(8, vec![8]).unwrap(),
        FinModule::new(4, vec![2, 4]).unwrap(),
        FinModule::new(12, vec![12]).unwrap(),
    ] {
        let oracle = oracle_subgroups(&m);
        let enumerated = enumerate_subgroups(&m, &bounds).unwrap();
        assert_eq!(enumerated.len(), oracle.len(), "{m:?}");
        for s in &enumerated {
            let as_set: BTreeSet<Elem> = s.elements().into_iter().collect();
            assert!(oracle.contains(&as_set), "{m:?}: spurious subgroup");
        }
    }
}

#[test]
fn klein_four_has_five_subgroups() {
    let v = FinModule::new(2, vec![2, 2]).unwrap();
    assert_eq!(oracle_subgroups(&v).len(), 5);
}

// property strategies

fn arb_modulus() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(4), Just(6), Just(8), Just(12)]
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn arb_module() -> impl Strategy<Value = FinModule> {
    arb_modulus().prop_flat_map(|m| {
        let rank = 0usize..3;
        (Just(m), rank, proptest::collection::vec(0usize..8, 3)).prop_map(
            move |(m, rank, picks)| {
                // build a divisibility chain top-down from the modulus
                let mut current = m;
                let mut chain = Vec::new();
                for pick in picks.iter().take(rank) {
                    let ds = divisors(current);
                    current = ds[pick % ds.len()];
                    if current > 1 {
                        chain.push(current);
                    }
                }
                chain.sort_unstable();
                FinModule::new(m, chain).expect("constructed chain is valid")
            },
        )
    })
}

fn arb_module_with_submodule() -> impl Strategy<Value = (FinModule, Submodule)> {
    arb_module().prop_flat_map(|m| {
        let card = m.cardinality() as usize;
        let gens = proptest::collection::vec(0usize..card.max(1), 0..3);
        (Just(m), gens).prop_map(|(m, idxs)| {
            let elements: Vec<Elem> = m.elements().collect();
            let gens: Vec<Elem> = idxs.iter().map(|&i| elements[i % elements.len()].clone()).collect();
            let s = Submodule::from_generators(&m, &gens);
            (m, s)
        })
    })
}

fn arb_endomorphism_pair() -> impl Strategy<Value = (ModuleMap, ModuleMap)> {
    arb_module().prop_flat_map(|m| {
        let hom = std::rc::Rc::new(HomGroup::new(&m, &m).unwrap());
        let card = hom.group().cardinality() as usize;
        let other = hom.clone();
        ((0usize..card.max(1)), (0usize..card.max(1))).prop_map(move |(i, j)| {
            let h: Vec<Elem> = hom.group().elements().collect();
            (other.to_map(&h[i % h.len()]), other.to_map(&h[j % h.len()]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quotient_cardinality_is_the_index((m, s) in arb_module_with_submodule()) {
        let q = quotient(&m, &s);
        prop_assert_eq!(q.module.cardinality() * s.cardinality(), m.cardinality());
        prop_assert_eq!(q.proj.kernel(), s);
    }

    #[test]
    fn canonical_form_decides_set_equality((m, s) in arb_module_with_submodule()) {
        let rebuilt = Submodule::from_generators(&m, &s.elements());
        prop_assert_eq!(&rebuilt, &s);
        let other = Submodule::from_generators(&m, &[m.zero_elem()]);
        let same_sets = s.elements() == other.elements();
        prop_assert_eq!(same_sets, s == other);
    }

    #[test]
    fn composition_respects_kernels_and_images((f, g) in arb_endomorphism_pair()) {
        let gf = g.compose(&f);
        prop_assert!(f.kernel().is_subset(&gf.kernel()));
        prop_assert!(gf.image().is_subset(&g.image()));
        prop_assert!(f.kernel().is_subset(&f.preimage(&f.image()).unwrap()));
    }

    #[test]
    fn sum_and_intersect_are_lattice_operations(
        (m, s1) in arb_module_with_submodule(),
    ) {
        let s2 = Submodule::from_generators(&m, &[m.zero_elem()]);
        let join = s1.sum(&s2).unwrap();
        let meet = s1.intersect(&s2).unwrap();
        prop_assert_eq!(&join, &s1);
        prop_assert!(meet.is_zero());
        prop_assert_eq!(s1.intersect(&s1).unwrap(), s1.clone());
    }
}
