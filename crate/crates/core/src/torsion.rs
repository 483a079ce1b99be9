//! Left-ideal lattices, Gabriel filters and hereditary torsion theories on
//! modules over the monad.
//!
//! With the ground ring as single generator, a filter lives on the regular
//! module: it is a collection of left ideals subject to four axioms. Module
//! morphisms out of the regular module correspond to right multiplications,
//! which makes every axiom an exhaustively checkable statement at this
//! scale. The torsion radical is computed both by the defining sum over
//! torsion subobjects and by the elementwise annihilator test; the two must
//! coincide.

use std::collections::BTreeSet;

use crate::algebra::{Algebra, AlgebraDerivation};
use crate::bounds::Bounds;
use crate::em::{
    em_hom, em_quotient, em_submodule, enumerate_em_submodules, regular, EmModule,
    ModuleDerivation,
};
use crate::error::{anchor, Error, LawReport, Result, Violation};
use crate::finmod::{Elem, ModuleMap};
use crate::submodule::Submodule;

/// All left ideals of the algebra: action-closed subgroups of the regular
/// module, canonically sorted.
pub fn enumerate_left_ideals(algebra: &Algebra, bounds: &Bounds) -> Result<Vec<Submodule>> {
    enumerate_em_submodules(&regular(algebra), bounds)
}

fn ideal_display(s: &Submodule) -> String {
    let gens: Vec<String> =
        s.generators().iter().map(|g| crate::finmod::fmt_elem(g)).collect();
    if gens.is_empty() {
        "0".to_string()
    } else {
        format!("<{}>", gens.join(", "))
    }
}

/// Precomputed data about the full left-ideal lattice, shared by the axiom
/// checks and the filter enumeration.
struct IdealLattice {
    ideals: Vec<Submodule>,
    /// `subset[i][j]`: ideal `i` is contained in ideal `j`.
    subset: Vec<Vec<bool>>,
    /// Element indices of the algebra elements lying in each ideal.
    members: Vec<Vec<usize>>,
    elements: Vec<Elem>,
    /// `pre[x][i]`: lattice index of `{ a : a * x_elem  in ideals[i] }`.
    pre: Vec<Vec<usize>>,
    full_index: usize,
}

impl IdealLattice {
    fn build(algebra: &Algebra, bounds: &Bounds) -> Result<IdealLattice> {
        let ideals = enumerate_left_ideals(algebra, bounds)?;
        let n = ideals.len();
        let elements = algebra.elements();
        let subset: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| ideals[i].is_subset(&ideals[j])).collect())
            .collect();
        let members: Vec<Vec<usize>> = ideals
            .iter()
            .map(|ideal| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| ideal.contains(x))
                    .map(|(idx, _)| idx)
                    .collect()
            })
            .collect();
        let pre: Vec<Vec<usize>> = elements
            .iter()
            .map(|x| {
                let rx = algebra.right_mul_map(x);
                (0..n)
                    .map(|i| {
                        let p = rx.preimage(&ideals[i]).expect("ideal of the carrier");
                        ideals
                            .binary_search(&p)
                            .expect("preimage of a left ideal is a left ideal")
                    })
                    .collect()
            })
            .collect();
        let full = Submodule::full(&algebra.carrier());
        let full_index =
            ideals.binary_search(&full).expect("the whole module is a left ideal");
        Ok(IdealLattice { ideals, subset, members, elements, pre, full_index })
    }

    /// The four filter axioms against a member mask, first violation wins.
    fn verdict(&self, in_filter: &[bool]) -> LawReport {
        let n = self.ideals.len();
        if !in_filter[self.full_index] {
            return Err(Violation {
                anchor: anchor::FILTER_AXIOMS,
                law: "axiom (1): the whole module belongs to the filter",
                indices: vec![self.full_index],
                lhs: "missing".into(),
                rhs: ideal_display(&self.ideals[self.full_index]),
            });
        }
        for i in 0..n {
            if !in_filter[i] {
                continue;
            }
            for j in 0..n {
                if self.subset[i][j] && !in_filter[j] {
                    return Err(Violation {
                        anchor: anchor::FILTER_AXIOMS,
                        law: "axiom (2): upward closure",
                        indices: vec![i, j],
                        lhs: ideal_display(&self.ideals[i]),
                        rhs: ideal_display(&self.ideals[j]),
                    });
                }
            }
        }
        for i in 0..n {
            if !in_filter[i] {
                continue;
            }
            for (x, row) in self.pre.iter().enumerate() {
                if !in_filter[row[i]] {
                    return Err(Violation {
                        anchor: anchor::FILTER_AXIOMS,
                        law: "axiom (3): closure under morphism preimages",
                        indices: vec![i, x],
                        lhs: ideal_display(&self.ideals[row[i]]),
                        rhs: crate::finmod::fmt_elem(&self.elements[x]),
                    });
                }
            }
        }
        for j in 0..n {
            if !in_filter[j] {
                continue;
            }
            for i in 0..n {
                if in_filter[i] || !self.subset[i][j] {
                    continue;
                }
                // every morphism into ideal j is right multiplication by a member
                let saturated =
                    self.members[j].iter().all(|&x| in_filter[self.pre[x][i]]);
                if saturated {
                    return Err(Violation {
                        anchor: anchor::FILTER_AXIOMS,
                        law: "axiom (4): saturation",
                        indices: vec![i, j],
                        lhs: ideal_display(&self.ideals[i]),
                        rhs: ideal_display(&self.ideals[j]),
                    });
                }
            }
        }
        Ok(())
    }
}

/// A validated Gabriel filter: a collection of left ideals satisfying the
/// four axioms, stored canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabrielFilter {
    algebra: Algebra,
    ideals: Vec<Submodule>,
}

impl GabrielFilter {
    pub fn new(algebra: &Algebra, ideals: Vec<Submodule>, bounds: &Bounds) -> Result<Self> {
        is_gabriel_filter(algebra, &ideals, bounds)?
            .map_err(|v| Error::InvalidModule(format!("not a Gabriel filter: {v}")))?;
        let mut sorted = ideals;
        sorted.sort();
        sorted.dedup();
        Ok(GabrielFilter { algebra: algebra.clone(), ideals: sorted })
    }

    fn from_validated(algebra: &Algebra, mut ideals: Vec<Submodule>) -> Self {
        ideals.sort();
        ideals.dedup();
        GabrielFilter { algebra: algebra.clone(), ideals }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn ideals(&self) -> &[Submodule] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn contains(&self, s: &Submodule) -> bool {
        self.ideals.binary_search(s).is_ok()
    }

    /// The improper filter of all left ideals makes every module torsion.
    pub fn is_improper(&self) -> bool {
        self.ideals.iter().any(|i| i.is_zero())
    }
}

/// Check the four filter axioms; axiom (3) ranges over all module
/// endomorphisms of the regular module (right multiplications), axiom (4)
/// over all morphisms into each member.
pub fn is_gabriel_filter(
    algebra: &Algebra,
    ideals: &[Submodule],
    bounds: &Bounds,
) -> Result<LawReport> {
    let lattice = IdealLattice::build(algebra, bounds)?;
    let mut in_filter = vec![false; lattice.ideals.len()];
    for ideal in ideals {
        let idx = lattice.ideals.binary_search(ideal).map_err(|_| {
            Error::InvalidModule(format!(
                "{} is not a left ideal of the algebra",
                ideal_display(ideal)
            ))
        })?;
        in_filter[idx] = true;
    }
    Ok(lattice.verdict(&in_filter))
}

/// All Gabriel filters, by testing every upward-closed candidate collection
/// against the axioms.
pub fn enumerate_gabriel_filters(
    algebra: &Algebra,
    bounds: &Bounds,
) -> Result<Vec<GabrielFilter>> {
    let lattice = IdealLattice::build(algebra, bounds)?;
    let n = lattice.ideals.len();
    if n > bounds.max_ideal_lattice {
        return Err(Error::BoundExceeded {
            what: "ideal lattice for filter enumeration",
            size: n,
            bound: bounds.max_ideal_lattice,
        });
    }
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask & (1 << lattice.full_index) == 0 {
            continue;
        }
        let in_filter: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        // pre-filter upward closure before the full axiom run
        let upward = (0..n).all(|i| {
            !in_filter[i] || (0..n).all(|j| !lattice.subset[i][j] || in_filter[j])
        });
        if !upward {
            continue;
        }
        if lattice.verdict(&in_filter).is_ok() {
            let members: Vec<Submodule> = (0..n)
                .filter(|&i| in_filter[i])
                .map(|i| lattice.ideals[i].clone())
                .collect();
            found.push(GabrielFilter::from_validated(algebra, members));
        }
    }
    found.sort_by(|a, b| a.ideals.cmp(&b.ideals));
    Ok(found)
}

/// The annihilator ideal of a module element: the kernel of `a -> a * x`.
pub fn annihilator(m: &EmModule, x: &[i64]) -> Submodule {
    let a = m.algebra();
    let images: Vec<Elem> = (0..a.rank()).map(|j| m.action(j).apply(x)).collect();
    let act_on_x = ModuleMap::from_images(a.carrier(), m.carrier().clone(), &images)
        .expect("action on an element is well defined");
    act_on_x.kernel()
}

/// Is every morphism out of the regular module killed by the filter? Checked
/// via annihilators and independently via direct morphism enumeration; the
/// two routes must agree.
pub fn is_torsion(m: &EmModule, filter: &GabrielFilter, bounds: &Bounds) -> Result<bool> {
    let elements = m.carrier().enumerate_elements(bounds)?;
    let by_annihilators =
        elements.iter().all(|x| filter.contains(&annihilator(m, x)));

    let reg = regular(m.algebra());
    let morphisms = em_hom(&reg, m)?;
    let by_morphisms = morphisms.maps().iter().all(|f| filter.contains(&f.kernel()));
    assert_eq!(
        by_annihilators, by_morphisms,
        "annihilator route and morphism route must agree"
    );
    Ok(by_annihilators)
}

/// The torsion radical: the sum of all torsion subobjects, cross-checked
/// against the elementwise annihilator form.
pub fn torsion_radical(
    m: &EmModule,
    filter: &GabrielFilter,
    bounds: &Bounds,
) -> Result<Submodule> {
    let elements = m.carrier().enumerate_elements(bounds)?;
    let ann_ok: Vec<bool> =
        elements.iter().map(|x| filter.contains(&annihilator(m, x))).collect();

    // literal form: sum of all subobjects whose every element has its
    // annihilator in the filter
    let mut literal = Submodule::zero(m.carrier());
    for sub in enumerate_em_submodules(m, bounds)? {
        let torsion = elements
            .iter()
            .zip(&ann_ok)
            .all(|(x, &ok)| ok || !sub.contains(x));
        if torsion {
            literal = literal.sum(&sub)?;
        }
    }

    // fast form: the set of elements with annihilator in the filter,
    // together with a proof that this set is an action-closed subgroup
    let torsion_set: Vec<Elem> = elements
        .iter()
        .zip(&ann_ok)
        .filter(|(_, &ok)| ok)
        .map(|(x, _)| x.clone())
        .collect();
    let set: BTreeSet<Elem> = torsion_set.iter().cloned().collect();
    for x in &torsion_set {
        for y in &torsion_set {
            assert!(
                set.contains(&m.carrier().add(x, y)),
                "torsion elements must be closed under addition"
            );
        }
        for i in 0..m.algebra().rank() {
            assert!(
                set.contains(&m.action(i).apply(x)),
                "torsion elements must be closed under the action"
            );
        }
    }
    let fast = Submodule::from_generators(m.carrier(), &torsion_set);
    assert_eq!(fast.cardinality(), torsion_set.len() as u128);

    assert_eq!(literal, fast, "subobject sum and annihilator set must coincide");
    Ok(fast)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionClass {
    Torsion,
    Free,
    Mixed,
}

impl std::fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TorsionClass::Torsion => write!(f, "torsion"),
            TorsionClass::Free => write!(f, "torsion-free"),
            TorsionClass::Mixed => write!(f, "mixed"),
        }
    }
}

/// A hereditary torsion theory presented by its Gabriel filter, with the
/// cached classification of a module corpus.
#[derive(Debug, Clone)]
pub struct TorsionTheory {
    filter: GabrielFilter,
    classification: Vec<(String, TorsionClass)>,
}

impl TorsionTheory {
    pub fn filter(&self) -> &GabrielFilter {
        &self.filter
    }

    pub fn classification(&self) -> &[(String, TorsionClass)] {
        &self.classification
    }

    pub fn radical(&self, m: &EmModule, bounds: &Bounds) -> Result<Submodule> {
        torsion_radical(m, &self.filter, bounds)
    }
}

/// Classify a corpus and verify idempotence, vanishing of the radical on the
/// torsion-free quotient, and (on small members) hereditarity.
pub fn torsion_theory(
    filter: &GabrielFilter,
    corpus: &[(String, EmModule)],
    bounds: &Bounds,
) -> Result<TorsionTheory> {
    let mut classification = Vec::new();
    for (name, m) in corpus {
        let radical = torsion_radical(m, filter, bounds)?;

        // idempotence through the abstract presentation of the radical
        let sub = em_submodule(m, &radical)?;
        let radical_of_radical = torsion_radical(&sub.module, filter, bounds)?;
        if !radical_of_radical.is_full() {
            return Err(Error::Defect(format!(
                "{}: radical is not idempotent on {name}",
                anchor::RADICAL
            )));
        }

        // the torsion-free quotient has vanishing radical
        let quo = em_quotient(m, &radical)?;
        if !torsion_radical(&quo.module, filter, bounds)?.is_zero() {
            return Err(Error::Defect(format!(
                "{}: quotient by the radical is not torsion free for {name}",
                anchor::RADICAL
            )));
        }

        // hereditarity over the full submodule lattice, where small enough
        if m.carrier().cardinality() <= 16 {
            for n in enumerate_em_submodules(m, bounds)? {
                let abstracted = em_submodule(m, &n)?;
                let inner = torsion_radical(&abstracted.module, filter, bounds)?;
                let pushed = abstracted.include.push_forward(&inner)?;
                let expected = n.intersect(&radical)?;
                if pushed != expected {
                    return Err(Error::Defect(format!(
                        "{}: radical is not hereditary on {name}",
                        anchor::RADICAL
                    )));
                }
            }
        }

        let class = if radical.is_full() {
            TorsionClass::Torsion
        } else if radical.is_zero() {
            TorsionClass::Free
        } else {
            TorsionClass::Mixed
        };
        classification.push((name.clone(), class));
    }
    Ok(TorsionTheory { filter: filter.clone(), classification })
}

/// The filter recovered from a radical procedure: the ideals whose quotient
/// module is torsion.
pub fn gabriel_filter_of_radical<F>(
    algebra: &Algebra,
    sigma: F,
    bounds: &Bounds,
) -> Result<GabrielFilter>
where
    F: Fn(&EmModule) -> Result<Submodule>,
{
    let reg = regular(algebra);
    let mut members = Vec::new();
    for ideal in enumerate_left_ideals(algebra, bounds)? {
        let quo = em_quotient(&reg, &ideal)?;
        if sigma(&quo.module)?.is_full() {
            members.push(ideal);
        }
    }
    GabrielFilter::new(algebra, members, bounds)
}

/// The largest subideal of `ideal` pushed into it by the derivation: the sum
/// of all left ideals `P` inside `ideal` with `d(P)` still inside, computed
/// both by the literal sum and by the largest-ideal fast path.
pub fn delta_invariant_ideal(
    algebra: &Algebra,
    filter: &GabrielFilter,
    ideal: &Submodule,
    d: &AlgebraDerivation,
    bounds: &Bounds,
) -> Result<Submodule> {
    if !filter.contains(ideal) {
        return Err(Error::NotInFilter);
    }
    let dmap = d.as_map(algebra);

    let mut literal = Submodule::zero(&algebra.carrier());
    for p in enumerate_left_ideals(algebra, bounds)? {
        if p.is_subset(ideal) && dmap.push_forward(&p)?.is_subset(ideal) {
            literal = literal.sum(&p)?;
        }
    }

    // fast path: S = { x in ideal : d(x) in ideal }, then the largest left
    // ideal inside S
    let s = ideal.intersect(&dmap.preimage(ideal)?)?;
    let mut fast = s.clone();
    for i in 0..algebra.rank() {
        let li = algebra.left_mul_map(&algebra.basis_elem(i));
        fast = fast.intersect(&li.preimage(&s)?)?;
    }

    assert_eq!(literal, fast, "literal sum and largest-ideal computation must agree");
    debug_assert!(dmap.push_forward(&literal)?.is_subset(ideal));
    Ok(literal)
}

/// Instance form of the invariance theorem: for every member ideal, the
/// invariant subideal is again a member and is pushed inside by `d`.
pub fn check_delta_invariance(
    algebra: &Algebra,
    d: &AlgebraDerivation,
    filter: &GabrielFilter,
    bounds: &Bounds,
) -> Result<LawReport> {
    for (idx, ideal) in filter.ideals().iter().enumerate() {
        let j = delta_invariant_ideal(algebra, filter, ideal, d, bounds)?;
        if !filter.contains(&j) {
            return Ok(Err(Violation {
                anchor: anchor::DELTA_INVARIANCE,
                law: "invariant subideal stays in the filter",
                indices: vec![idx],
                lhs: ideal_display(&j),
                rhs: ideal_display(ideal),
            }));
        }
        let dmap = d.as_map(algebra);
        if !dmap.push_forward(&j)?.is_subset(ideal) {
            return Ok(Err(Violation {
                anchor: anchor::DELTA_INVARIANCE,
                law: "derivation maps the invariant subideal inside",
                indices: vec![idx],
                lhs: ideal_display(&dmap.push_forward(&j)?),
                rhs: ideal_display(ideal),
            }));
        }
    }
    Ok(Ok(()))
}

/// Differentiality against a precomputed radical; grid drivers share the
/// radical across many derivations.
pub fn differential_on_radical(radical: &Submodule, d_map: &ModuleMap) -> LawReport {
    let image = d_map.push_forward(radical).expect("derivation endomorphism of the carrier");
    if image.is_subset(radical) {
        return Ok(());
    }
    let witness = radical
        .elements()
        .into_iter()
        .find(|x| !radical.contains(&d_map.apply(x)))
        .expect("violation has an element witness");
    Err(Violation {
        anchor: anchor::DIFFERENTIAL,
        law: "derivation preserves the torsion radical",
        indices: vec![],
        lhs: crate::finmod::fmt_elem(&d_map.apply(&witness)),
        rhs: crate::finmod::fmt_elem(&witness),
    })
}

/// Instance form of differentiality: the derivation preserves the torsion
/// radical.
pub fn check_differential(
    filter: &GabrielFilter,
    m: &EmModule,
    d_on_m: &ModuleDerivation,
    bounds: &Bounds,
) -> Result<LawReport> {
    crate::em::check_module_derivation(m, d_on_m.delta(), d_on_m.map())
        .map_err(Error::InvalidDerivation)?;
    let radical = torsion_radical(m, filter, bounds)?;
    Ok(differential_on_radical(&radical, d_on_m.map()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ideal_lattices_of_the_fixtures() {
        let bounds = Bounds::default();
        assert_eq!(enumerate_left_ideals(&fixtures::dual_numbers(), &bounds).unwrap().len(), 3);
        assert_eq!(enumerate_left_ideals(&fixtures::z4(), &bounds).unwrap().len(), 3);
        assert_eq!(enumerate_left_ideals(&fixtures::f2xf2(), &bounds).unwrap().len(), 4);
        assert_eq!(
            enumerate_left_ideals(&fixtures::upper_triangular(), &bounds).unwrap().len(),
            7
        );
    }

    #[test]
    fn trivial_filter_is_valid() {
        let a = fixtures::dual_numbers();
        let bounds = Bounds::default();
        let full = Submodule::full(&a.carrier());
        assert_eq!(is_gabriel_filter(&a, &[full], &bounds).unwrap(), Ok(()));
    }

    #[test]
    fn missing_zero_ideal_breaks_saturation() {
        // over the dual numbers, {A, (x)} fails axiom (4) with I = 0, J = (x)
        let a = fixtures::dual_numbers();
        let bounds = Bounds::default();
        let full = Submodule::full(&a.carrier());
        let x_ideal = Submodule::from_generators(&a.carrier(), &[vec![0, 1]]);
        let verdict = is_gabriel_filter(&a, &[full, x_ideal], &bounds).unwrap();
        let violation = verdict.unwrap_err();
        assert!(violation.law.starts_with("axiom (4)"));
        assert_eq!(violation.lhs, "0");
    }

    #[test]
    fn filter_counts_on_fixtures() {
        let bounds = Bounds::default();
        assert_eq!(
            enumerate_gabriel_filters(&fixtures::dual_numbers(), &bounds).unwrap().len(),
            2
        );
        assert_eq!(enumerate_gabriel_filters(&fixtures::z4(), &bounds).unwrap().len(), 2);
        assert_eq!(enumerate_gabriel_filters(&fixtures::f2xf2(), &bounds).unwrap().len(), 4);
    }

    #[test]
    fn annihilators_in_the_split_ring() {
        let a = fixtures::f2xf2();
        let reg = regular(&a);
        // Ann(e1) = e2 A
        let ann = annihilator(&reg, &[1, 0]);
        assert_eq!(ann.elements(), vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn radical_of_split_ring_with_half_filter() {
        let a = fixtures::f2xf2();
        let bounds = Bounds::default();
        let filters = enumerate_gabriel_filters(&a, &bounds).unwrap();
        // find the filter {A, e1A}
        let e1a = Submodule::from_generators(&a.carrier(), &[vec![1, 0]]);
        let filter = filters
            .iter()
            .find(|f| f.len() == 2 && f.contains(&e1a))
            .expect("the half filter exists");
        let reg = regular(&a);
        let radical = torsion_radical(&reg, filter, &bounds).unwrap();
        // the radical is e2A
        assert_eq!(radical.elements(), vec![vec![0, 0], vec![0, 1]]);
        assert!(!is_torsion(&reg, filter, &bounds).unwrap());
    }

    #[test]
    fn trivial_and_improper_filters_classify_everything() {
        let a = fixtures::dual_numbers();
        let bounds = Bounds::default();
        let filters = enumerate_gabriel_filters(&a, &bounds).unwrap();
        let trivial = filters.iter().find(|f| f.len() == 1).unwrap();
        let improper = filters.iter().find(|f| f.is_improper()).unwrap();
        let reg = regular(&a);
        assert!(torsion_radical(&reg, trivial, &bounds).unwrap().is_zero());
        assert!(torsion_radical(&reg, improper, &bounds).unwrap().is_full());
        // zero module is torsion for every filter
        let zero = EmModule::zero_module(&a);
        assert!(is_torsion(&zero, trivial, &bounds).unwrap());
        assert!(is_torsion(&zero, improper, &bounds).unwrap());
    }

    #[test]
    fn invariant_ideal_of_x_is_zero() {
        // d/dx sends (x) outside of itself, so the invariant subideal of (x)
        // under the improper filter is 0
        let a = fixtures::dual_numbers();
        let d = fixtures::dual_numbers_ddx();
        let bounds = Bounds::default();
        let filters = enumerate_gabriel_filters(&a, &bounds).unwrap();
        let improper = filters.iter().find(|f| f.is_improper()).unwrap();
        let x_ideal = Submodule::from_generators(&a.carrier(), &[vec![0, 1]]);
        let j = delta_invariant_ideal(&a, improper, &x_ideal, &d, &bounds).unwrap();
        assert!(j.is_zero());
        // and for the whole module the invariant subideal is everything
        let full = Submodule::full(&a.carrier());
        let j_full = delta_invariant_ideal(&a, improper, &full, &d, &bounds).unwrap();
        assert!(j_full.is_full());
    }

    #[test]
    fn invariance_theorem_on_dual_numbers() {
        let a = fixtures::dual_numbers();
        let d = fixtures::dual_numbers_ddx();
        let bounds = Bounds::default();
        for filter in enumerate_gabriel_filters(&a, &bounds).unwrap() {
            assert_eq!(check_delta_invariance(&a, &d, &filter, &bounds).unwrap(), Ok(()));
        }
    }

    #[test]
    fn zero_derivation_is_always_invariant() {
        for fixture in fixtures::all() {
            let bounds = Bounds::default();
            let d = AlgebraDerivation::zero(&fixture.algebra);
            for filter in enumerate_gabriel_filters(&fixture.algebra, &bounds).unwrap() {
                assert_eq!(
                    check_delta_invariance(&fixture.algebra, &d, &filter, &bounds).unwrap(),
                    Ok(())
                );
            }
        }
    }

    #[test]
    fn filter_radical_round_trip() {
        let a = fixtures::f2xf2();
        let bounds = Bounds::default();
        for filter in enumerate_gabriel_filters(&a, &bounds).unwrap() {
            let recovered = gabriel_filter_of_radical(
                &a,
                |m| torsion_radical(m, &filter, &bounds),
                &bounds,
            )
            .unwrap();
            assert_eq!(recovered, filter);
        }
    }
}
