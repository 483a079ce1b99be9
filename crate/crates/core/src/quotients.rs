//! Modules of quotients: localization at a torsion theory, the canonical map
//! into it, and the unique extension of module derivations.
//!
//! A finite Gabriel filter is closed under intersection, so it has a minimum
//! ideal and the defining directed colimit collapses: the carrier is the
//! group of module morphisms from the minimum ideal into `M / M_tau`, with
//! the algebra acting through right multiplication on the argument. The raw
//! colimit (morphisms out of every member ideal, glued by restriction along
//! common members) is still built as an oracle and matched against the
//! carrier class by class.

use std::collections::BTreeSet;

use crate::algebra::AlgebraDerivation;
use crate::bounds::Bounds;
use crate::em::{
    check_em_module, check_em_morphism, em_hom, em_quotient, em_submodule,
    enumerate_module_derivations, regular, EmHom, EmModule, EmQuotient, EmSubmodule,
    ModuleDerivation, ShortExactSequence,
};
use crate::error::{anchor, Error, LawReport, Result, Violation};
use crate::finmod::{fmt_elem, Elem, ModuleMap};
use crate::submodule::Submodule;
use crate::torsion::{
    annihilator, delta_invariant_ideal, differential_on_radical, torsion_radical, GabrielFilter,
    TorsionTheory,
};

/// The unique minimum ideal of a filter: the intersection of all members,
/// which the filter axioms force back into the filter.
pub fn min_ideal(filter: &GabrielFilter) -> Result<Submodule> {
    let mut iter = filter.ideals().iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Defect("a Gabriel filter is never empty".into()))?;
    let mut min = first.clone();
    for ideal in iter {
        min = min.intersect(ideal)?;
    }
    if !filter.contains(&min) {
        return Err(Error::Defect(
            "filter is not closed under intersection of members".into(),
        ));
    }
    debug_assert!(filter.ideals().iter().all(|i| min.is_subset(i)));
    Ok(min)
}

/// One member of the raw colimit: a morphism defined on a member ideal.
pub struct ColimitItem {
    pub ideal_index: usize,
    pub map: ModuleMap,
}

/// The raw directed colimit of `Hom(I, N)` over the filter members, glued by
/// restriction along common members.
pub struct RawColimit {
    /// Item indices grouped into equivalence classes.
    pub classes: Vec<Vec<usize>>,
    pub items: Vec<ColimitItem>,
    /// Class representatives, restricted to the minimum ideal.
    pub reps_on_min: Vec<ModuleMap>,
}

struct IdealHoms {
    sub: EmSubmodule,
    maps: Vec<ModuleMap>,
}

/// The inclusion `T_K -> T_I` between the abstract forms of nested ideals.
fn ideal_inclusion(k_sub: &EmSubmodule, i_sub: &EmSubmodule) -> Result<ModuleMap> {
    let t_k = k_sub.module.carrier();
    let images: Vec<Elem> = (0..t_k.rank())
        .map(|b| i_sub.coords(&k_sub.include.apply(&t_k.generator(b))))
        .collect::<Result<_>>()?;
    ModuleMap::from_images(t_k.clone(), i_sub.module.carrier().clone(), &images)
}

/// Build the raw colimit realization of the module of quotients over `n`.
pub fn colimit_hom(
    filter: &GabrielFilter,
    n: &EmModule,
    bounds: &Bounds,
) -> Result<RawColimit> {
    let reg = regular(filter.algebra());
    let mut per_ideal = Vec::new();
    for ideal in filter.ideals() {
        let sub = em_submodule(&reg, ideal)?;
        let homs = em_hom(&sub.module, n)?;
        if homs.count() > bounds.max_elements as u128 {
            return Err(Error::BoundExceeded {
                what: "colimit hom enumeration",
                size: homs.count().min(usize::MAX as u128) as usize,
                bound: bounds.max_elements,
            });
        }
        per_ideal.push(IdealHoms { sub, maps: homs.maps() });
    }

    let mut items = Vec::new();
    for (ideal_index, ih) in per_ideal.iter().enumerate() {
        for map in &ih.maps {
            items.push(ColimitItem { ideal_index, map: map.clone() });
        }
    }

    // two items agree when they restrict equally to some common member ideal
    let ideals = filter.ideals();
    let equivalent = |p: &ColimitItem, q: &ColimitItem| -> Result<bool> {
        for (k_idx, k) in ideals.iter().enumerate() {
            if !k.is_subset(&ideals[p.ideal_index]) || !k.is_subset(&ideals[q.ideal_index]) {
                continue;
            }
            let to_p = ideal_inclusion(&per_ideal[k_idx].sub, &per_ideal[p.ideal_index].sub)?;
            let to_q = ideal_inclusion(&per_ideal[k_idx].sub, &per_ideal[q.ideal_index].sub)?;
            if p.map.compose(&to_p) == q.map.compose(&to_q) {
                return Ok(true);
            }
        }
        Ok(false)
    };

    // union-find over the items
    let mut parent: Vec<usize> = (0..items.len()).collect();
    fn root(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for p in 0..items.len() {
        for q in p + 1..items.len() {
            if equivalent(&items[p], &items[q])? {
                let (rp, rq) = (root(&mut parent, p), root(&mut parent, q));
                if rp != rq {
                    parent[rp.max(rq)] = rp.min(rq);
                }
            }
        }
    }
    let mut class_map: std::collections::BTreeMap<usize, Vec<usize>> =
        std::collections::BTreeMap::new();
    for i in 0..items.len() {
        let r = root(&mut parent, i);
        class_map.entry(r).or_default().push(i);
    }

    // represent every class on the minimum ideal and check consistency
    let min = min_ideal(filter)?;
    let min_idx = ideals
        .iter()
        .position(|i| *i == min)
        .expect("minimum ideal is a member");
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut reps_on_min = Vec::new();
    for (_, members) in class_map {
        let mut rep: Option<ModuleMap> = None;
        for &idx in &members {
            let item = &items[idx];
            let to_item =
                ideal_inclusion(&per_ideal[min_idx].sub, &per_ideal[item.ideal_index].sub)?;
            let restricted = item.map.compose(&to_item);
            match &rep {
                None => rep = Some(restricted),
                Some(r) => {
                    if *r != restricted {
                        return Err(Error::Defect(format!(
                            "{}: class members restrict inconsistently",
                            anchor::QUOTIENT_MODULE
                        )));
                    }
                }
            }
        }
        classes.push(members);
        reps_on_min.push(rep.expect("classes are nonempty"));
    }
    Ok(RawColimit { classes, items, reps_on_min })
}

/// The module of quotients of a module at a torsion theory, together with
/// the canonical map into it and the raw-colimit oracle.
pub struct QuotientModule {
    source: EmModule,
    filter: GabrielFilter,
    pub min_ideal: Submodule,
    pub torsion_part: Submodule,
    quotient: EmQuotient,
    min_sub: EmSubmodule,
    em: EmHom,
    /// The carrier as a module over the monad.
    pub module: EmModule,
    /// The canonical map from the source into the carrier.
    pub phi: ModuleMap,
    pub raw: RawColimit,
}

impl QuotientModule {
    pub fn source(&self) -> &EmModule {
        &self.source
    }

    pub fn filter(&self) -> &GabrielFilter {
        &self.filter
    }

    /// The torsion-free quotient `M / M_tau` that the carrier maps out of.
    pub fn torsion_free_quotient(&self) -> &EmModule {
        &self.quotient.module
    }

    pub fn projection(&self) -> &ModuleMap {
        &self.quotient.proj
    }

    /// The abstract form of the minimum ideal.
    pub fn min_ideal_module(&self) -> &EmModule {
        &self.min_sub.module
    }

    /// The concrete morphism `T_min -> M/M_tau` indexed by a carrier element.
    pub fn morphism_of(&self, t: &[i64]) -> ModuleMap {
        self.em.of_coords(t)
    }

    /// Carrier coordinates of a concrete morphism.
    pub fn class_of(&self, f: &ModuleMap) -> Result<Elem> {
        self.em.coords(f)
    }
}

/// Build the module of quotients and verify its structural invariants.
pub fn module_of_quotients(
    m: &EmModule,
    theory: &TorsionTheory,
    bounds: &Bounds,
) -> Result<QuotientModule> {
    let filter = theory.filter().clone();
    let algebra = m.algebra().clone();
    let torsion_part = torsion_radical(m, &filter, bounds)?;
    let quotient = em_quotient(m, &torsion_part)?;
    let n = quotient.module.clone();

    let min = min_ideal(&filter)?;
    // the minimum ideal is stable under right multiplication
    for x in algebra.elements() {
        let rx = algebra.right_mul_map(&x);
        if !rx.push_forward(&min)?.is_subset(&min) {
            return Err(Error::Defect(format!(
                "{}: minimum ideal is not stable under right multiplication",
                anchor::QUOTIENT_MODULE
            )));
        }
    }
    let reg = regular(&algebra);
    let min_sub = em_submodule(&reg, &min)?;
    let t_min = min_sub.module.carrier().clone();

    let em = em_hom(&min_sub.module, &n)?;
    if em.count() > bounds.max_elements as u128 {
        return Err(Error::BoundExceeded {
            what: "quotient module carrier",
            size: em.count().min(usize::MAX as u128) as usize,
            bound: bounds.max_elements,
        });
    }
    let carrier = em.module().clone();

    // the action on classes: (a . f)(x) = f(x * a)
    let mut rho = Vec::with_capacity(algebra.rank());
    for i in 0..algebra.rank() {
        let images: Vec<Elem> = (0..t_min.rank())
            .map(|b| {
                let x = min_sub.include.apply(&t_min.generator(b));
                min_sub.coords(&algebra.mul(&x, &algebra.basis_elem(i)))
            })
            .collect::<Result<_>>()?;
        rho.push(ModuleMap::from_images(t_min.clone(), t_min.clone(), &images)?);
    }
    let mut action = Vec::with_capacity(algebra.rank());
    for rho_i in &rho {
        let images: Vec<Elem> = (0..carrier.rank())
            .map(|b| em.coords(&em.of_coords(&carrier.generator(b)).compose(rho_i)))
            .collect::<Result<_>>()?;
        action.push(ModuleMap::from_images(carrier.clone(), carrier.clone(), &images)?);
    }
    let module = EmModule::new(algebra.clone(), carrier.clone(), action)?;
    check_em_module(&module).map_err(|v| {
        Error::Defect(format!("{}: carrier fails the module laws: {v}", anchor::QUOTIENT_MODULE))
    })?;

    // the canonical map: a source element goes to the class of
    // x -> p(x . element)
    let phi_columns: Vec<Elem> = (0..m.carrier().rank())
        .map(|b| {
            let g = m.carrier().generator(b);
            let images: Vec<Elem> = (0..t_min.rank())
                .map(|c| {
                    let x = min_sub.include.apply(&t_min.generator(c));
                    quotient.proj.apply(&m.act(&x, &g))
                })
                .collect();
            let f = ModuleMap::from_images(t_min.clone(), n.carrier().clone(), &images)?;
            em.coords(&f)
        })
        .collect::<Result<_>>()?;
    let phi = ModuleMap::from_images(m.carrier().clone(), carrier.clone(), &phi_columns)?;
    check_em_morphism(m, &module, &phi).map_err(|v| {
        Error::Defect(format!(
            "{}: canonical map is not a module morphism: {v}",
            anchor::CANONICAL_MAP
        ))
    })?;

    // kernel and cokernel of the canonical map are torsion
    let kernel = phi.kernel();
    for x in kernel.elements() {
        if !filter.contains(&annihilator(m, &x)) {
            return Err(Error::Defect(format!(
                "{}: kernel of the canonical map is not torsion",
                anchor::CANONICAL_MAP
            )));
        }
    }
    let coker = em_quotient(&module, &phi.image())?;
    if !torsion_radical(&coker.module, &filter, bounds)?.is_full() {
        return Err(Error::Defect(format!(
            "{}: cokernel of the canonical map is not torsion",
            anchor::CANONICAL_MAP
        )));
    }
    if torsion_part.is_zero() && !kernel.is_zero() {
        return Err(Error::Defect(format!(
            "{}: canonical map out of a torsion-free module must be injective",
            anchor::CANONICAL_MAP
        )));
    }
    // a torsion module localizes to zero
    if torsion_part.is_full() && !module.is_zero() {
        return Err(Error::Defect(format!(
            "{}: a torsion module must localize to zero",
            anchor::QUOTIENT_MODULE
        )));
    }

    // raw colimit oracle: classes correspond exactly to carrier elements
    let raw = colimit_hom(&filter, &n, bounds)?;
    if raw.classes.len() as u128 != carrier.cardinality() {
        return Err(Error::Defect(format!(
            "{}: raw colimit has {} classes but the carrier has {} elements",
            anchor::QUOTIENT_MODULE,
            raw.classes.len(),
            carrier.cardinality()
        )));
    }
    let mut seen: BTreeSet<Elem> = BTreeSet::new();
    for rep in &raw.reps_on_min {
        let coords = em.coords(rep).map_err(|_| {
            Error::Defect(format!(
                "{}: raw class representative is not a module morphism",
                anchor::QUOTIENT_MODULE
            ))
        })?;
        seen.insert(coords);
    }
    let all: BTreeSet<Elem> = carrier.elements().collect();
    if seen != all {
        return Err(Error::Defect(format!(
            "{}: raw colimit classes do not exhaust the carrier",
            anchor::QUOTIENT_MODULE
        )));
    }

    Ok(QuotientModule {
        source: m.clone(),
        filter,
        min_ideal: min,
        torsion_part,
        quotient,
        min_sub,
        em,
        module,
        phi,
        raw,
    })
}

/// The raw extension matrix for one particular choice of invariant ideal
/// `j`: classes are evaluated through `K = min_ideal /\ j` and re-represented
/// on the minimum ideal.
pub fn extend_with_choice(
    q: &QuotientModule,
    d_on_m: &ModuleDerivation,
    j: &Submodule,
    bounds: &Bounds,
) -> Result<ModuleMap> {
    if !q.torsion_part.is_zero() {
        return Err(Error::NotTorsionFree);
    }
    assert_eq!(d_on_m.module(), &q.source, "derivation on a different module");
    let algebra = q.source.algebra().clone();
    let d = d_on_m.delta();
    let dmap = d.as_map(&algebra);
    if !q.filter.contains(j) {
        return Err(Error::NotInFilter);
    }
    if !dmap.push_forward(j)?.is_subset(&q.min_ideal) {
        return Err(Error::Defect(format!(
            "{}: chosen ideal is not pushed into the minimum ideal",
            anchor::EXTENSION
        )));
    }

    let k = q.min_ideal.intersect(j)?;
    // both lie in the filter, so the intersection contains the minimum ideal
    // and the re-representation step is the identity
    if k != q.min_ideal {
        return Err(Error::Defect(format!(
            "{}: intersection with the minimum ideal escaped the minimum",
            anchor::EXTENSION
        )));
    }
    let _ = bounds;

    // the induced derivation on M/M_tau = M
    let n = q.torsion_free_quotient().clone();
    let p = q.projection();
    let d_n_images: Vec<Elem> = (0..n.carrier().rank())
        .map(|b| p.apply(&d_on_m.apply(&q.quotient.lift(&n.carrier().generator(b)))))
        .collect();
    let d_n = ModuleMap::from_images(n.carrier().clone(), n.carrier().clone(), &d_n_images)?;

    // the derivation restricted to the minimum ideal
    let t_min = q.min_sub.module.carrier().clone();
    let delta_t_images: Vec<Elem> = (0..t_min.rank())
        .map(|b| {
            let x = q.min_sub.include.apply(&t_min.generator(b));
            q.min_sub.coords(&dmap.apply(&x)).map_err(|_| {
                Error::Defect(format!(
                    "{}: derivation does not preserve the minimum ideal",
                    anchor::EXTENSION
                ))
            })
        })
        .collect::<Result<_>>()?;
    let delta_t = ModuleMap::from_images(t_min.clone(), t_min, &delta_t_images)?;

    // column by column: f -> D . f - f . delta
    let carrier = q.module.carrier();
    let columns: Vec<Elem> = (0..carrier.rank())
        .map(|b| {
            let f = q.morphism_of(&carrier.generator(b));
            let extended = d_n.compose(&f).sub(&f.compose(&delta_t));
            check_em_morphism(&q.min_sub.module, &n, &extended).map_err(|v| {
                Error::Defect(format!(
                    "{}: extended class is not a module morphism: {v}",
                    anchor::EXTENSION
                ))
            })?;
            q.class_of(&extended)
        })
        .collect::<Result<_>>()?;
    ModuleMap::from_images(carrier.clone(), carrier.clone(), &columns)
}

/// Extend a derivation on a torsion-free module to its module of quotients.
pub fn extend_derivation(
    q: &QuotientModule,
    d_on_m: &ModuleDerivation,
    bounds: &Bounds,
) -> Result<ModuleDerivation> {
    let algebra = q.source.algebra().clone();
    let j = delta_invariant_ideal(
        &algebra,
        &q.filter,
        &q.min_ideal,
        d_on_m.delta(),
        bounds,
    )?;
    if !q.filter.contains(&j) {
        return Err(Error::Defect(format!(
            "{}: invariant subideal of the minimum ideal left the filter",
            anchor::DELTA_INVARIANCE
        )));
    }
    let map = extend_with_choice(q, d_on_m, &j, bounds)?;
    ModuleDerivation::new(q.module.clone(), d_on_m.delta().clone(), map)
}

/// The lift diagram: the extension commutes with the canonical map.
pub fn check_lift(
    q: &QuotientModule,
    d_on_m: &ModuleDerivation,
    extended: &ModuleDerivation,
    bounds: &Bounds,
) -> Result<LawReport> {
    let lhs = extended.map().compose(&q.phi);
    let rhs = q.phi.compose(d_on_m.map());
    for x in q.source.carrier().enumerate_elements(bounds)? {
        if lhs.apply(&x) != rhs.apply(&x) {
            return Ok(Err(Violation {
                anchor: anchor::LIFT,
                law: "extension lifts the derivation along the canonical map",
                indices: vec![],
                lhs: fmt_elem(&lhs.apply(&x)),
                rhs: fmt_elem(&rhs.apply(&x)),
            }));
        }
    }
    Ok(Ok(()))
}

/// Outcome of the uniqueness enumeration.
pub struct UniqueLift {
    pub count: usize,
    pub lifts: Vec<ModuleDerivation>,
}

/// Enumerate all derivations on the carrier satisfying the lift diagram.
pub fn verify_unique_lift(
    q: &QuotientModule,
    d_on_m: &ModuleDerivation,
    bounds: &Bounds,
) -> Result<UniqueLift> {
    let candidates = enumerate_module_derivations(&q.module, d_on_m.delta(), bounds)?;
    let rhs = q.phi.compose(d_on_m.map());
    let lifts: Vec<ModuleDerivation> = candidates
        .into_iter()
        .filter(|cand| cand.map().compose(&q.phi) == rhs)
        .collect();
    Ok(UniqueLift { count: lifts.len(), lifts })
}

/// Precomputed lift classification for a grid of derivations over the same
/// localization: every derivation candidate on the carrier, keyed by its
/// composite with the canonical map. Looking up the lifts of a given
/// derivation is then a single map probe instead of a fresh enumeration.
pub struct LiftIndex {
    by_composite: std::collections::BTreeMap<ModuleMap, Vec<ModuleDerivation>>,
    pub candidate_count: usize,
}

impl LiftIndex {
    pub fn new(
        q: &QuotientModule,
        delta: &AlgebraDerivation,
        bounds: &Bounds,
    ) -> Result<LiftIndex> {
        let candidates = enumerate_module_derivations(&q.module, delta, bounds)?;
        let candidate_count = candidates.len();
        let mut by_composite: std::collections::BTreeMap<ModuleMap, Vec<ModuleDerivation>> =
            std::collections::BTreeMap::new();
        for cand in candidates {
            by_composite.entry(cand.map().compose(&q.phi)).or_default().push(cand);
        }
        Ok(LiftIndex { by_composite, candidate_count })
    }

    /// All carrier derivations satisfying the lift diagram for `d_on_m`.
    pub fn lifts_of(&self, q: &QuotientModule, d_on_m: &ModuleDerivation) -> &[ModuleDerivation] {
        self.by_composite
            .get(&q.phi.compose(d_on_m.map()))
            .map_or(&[], |v| v.as_slice())
    }
}

/// Extension in the general case: pass to the torsion-free quotient first.
pub struct GeneralExtension {
    pub torsion_part: Submodule,
    /// The induced derivation on `M / M_tau`.
    pub induced: ModuleDerivation,
    /// The localization of the torsion-free quotient; by construction this
    /// is the module of quotients of the source itself.
    pub localized: QuotientModule,
    /// The unique extension on the carrier.
    pub extended: ModuleDerivation,
}

pub fn extend_derivation_general(
    m: &EmModule,
    d_on_m: &ModuleDerivation,
    theory: &TorsionTheory,
    bounds: &Bounds,
) -> Result<GeneralExtension> {
    let cell = LocalizationCell::new(m, theory, bounds)?;
    let (induced, extended) = cell.extend(d_on_m, bounds)?;
    Ok(GeneralExtension {
        torsion_part: cell.torsion_part,
        induced,
        localized: cell.localized,
        extended,
    })
}

/// The per-(module, theory) part of the general extension pipeline, shared
/// across a whole grid of derivations on the same module: the torsion
/// radical, the torsion-free quotient and its localization are computed
/// once, then [`LocalizationCell::extend`] runs per derivation.
pub struct LocalizationCell {
    source: EmModule,
    pub torsion_part: Submodule,
    quo: EmQuotient,
    pub localized: QuotientModule,
}

impl LocalizationCell {
    pub fn new(m: &EmModule, theory: &TorsionTheory, bounds: &Bounds) -> Result<Self> {
        let torsion_part = torsion_radical(m, theory.filter(), bounds)?;
        let quo = em_quotient(m, &torsion_part)?;
        let localized = module_of_quotients(&quo.module, theory, bounds)?;
        Ok(LocalizationCell { source: m.clone(), torsion_part, quo, localized })
    }

    /// The extension of one derivation: the induced derivation on the
    /// torsion-free quotient and its unique extension to the carrier, with
    /// the composite lift diagram verified.
    pub fn extend(
        &self,
        d_on_m: &ModuleDerivation,
        bounds: &Bounds,
    ) -> Result<(ModuleDerivation, ModuleDerivation)> {
        assert_eq!(d_on_m.module(), &self.source, "derivation on a different module");
        match differential_on_radical(&self.torsion_part, d_on_m.map()) {
            Ok(()) => {}
            Err(v) => {
                return Err(Error::Defect(format!(
                    "{}: differential precondition failed: {v}",
                    anchor::ALL_DIFFERENTIAL
                )))
            }
        }
        let n = self.quo.module.clone();
        let images: Vec<Elem> = (0..n.carrier().rank())
            .map(|b| {
                self.quo
                    .proj
                    .apply(&d_on_m.apply(&self.quo.lift(&n.carrier().generator(b))))
            })
            .collect();
        let induced_map =
            ModuleMap::from_images(n.carrier().clone(), n.carrier().clone(), &images)?;
        let induced = ModuleDerivation::new(n, d_on_m.delta().clone(), induced_map)?;
        let extended = extend_derivation(&self.localized, &induced, bounds)?;

        // the composite lift diagram through the projection
        let through = self.localized.phi.compose(&self.quo.proj);
        let lhs = extended.map().compose(&through);
        let rhs = through.compose(d_on_m.map());
        if lhs != rhs {
            return Err(Error::Defect(format!(
                "{}: general lift diagram does not commute",
                anchor::GENERAL_LIFT
            )));
        }
        Ok((induced, extended))
    }
}

/// Left exactness of localization on a short exact sequence: the induced
/// sequence is exact at the first two positions.
pub fn check_h_left_exact(
    ses: &ShortExactSequence,
    theory: &TorsionTheory,
    bounds: &Bounds,
) -> Result<LawReport> {
    ses.validate()?;
    let q_sub = module_of_quotients(&ses.sub, theory, bounds)?;
    let q_mid = module_of_quotients(&ses.mid, theory, bounds)?;
    let q_quo = module_of_quotients(&ses.quo, theory, bounds)?;

    let h_include = induced_map(&q_sub, &q_mid, &ses.include)?;
    let h_project = induced_map(&q_mid, &q_quo, &ses.project)?;

    if !h_include.kernel().is_zero() {
        return Ok(Err(Violation {
            anchor: anchor::LEFT_EXACT,
            law: "localized inclusion is injective",
            indices: vec![],
            lhs: format!("kernel of size {}", h_include.kernel().cardinality()),
            rhs: "0".into(),
        }));
    }
    if h_project.kernel() != h_include.image() {
        return Ok(Err(Violation {
            anchor: anchor::LEFT_EXACT,
            law: "exactness at the middle of the localized sequence",
            indices: vec![],
            lhs: format!("kernel of size {}", h_project.kernel().cardinality()),
            rhs: format!("image of size {}", h_include.image().cardinality()),
        }));
    }
    Ok(Ok(()))
}

/// The map induced on carriers by a morphism of sources (functoriality of
/// localization).
pub fn induced_map(
    q_src: &QuotientModule,
    q_dst: &QuotientModule,
    g: &ModuleMap,
) -> Result<ModuleMap> {
    assert_eq!(g.domain(), q_src.source.carrier(), "morphism domain mismatch");
    assert_eq!(g.codomain(), q_dst.source.carrier(), "morphism codomain mismatch");
    assert_eq!(
        q_src.min_sub.module, q_dst.min_sub.module,
        "localizations at the same filter share the minimum ideal"
    );
    // the radical is functorial, so g descends to the torsion-free quotients
    if !g
        .push_forward(&q_src.torsion_part)?
        .is_subset(&q_dst.torsion_part)
    {
        return Err(Error::Defect(
            "morphism does not preserve the torsion radical".into(),
        ));
    }
    let n_src = q_src.torsion_free_quotient().carrier();
    let n_dst = q_dst.torsion_free_quotient().carrier();
    let g_bar_images: Vec<Elem> = (0..n_src.rank())
        .map(|b| {
            q_dst
                .projection()
                .apply(&g.apply(&q_src.quotient.lift(&n_src.generator(b))))
        })
        .collect();
    let g_bar = ModuleMap::from_images(n_src.clone(), n_dst.clone(), &g_bar_images)?;

    let carrier_src = q_src.module.carrier();
    let columns: Vec<Elem> = (0..carrier_src.rank())
        .map(|b| {
            let f = q_src.morphism_of(&carrier_src.generator(b));
            q_dst.class_of(&g_bar.compose(&f))
        })
        .collect::<Result<_>>()?;
    ModuleMap::from_images(carrier_src.clone(), q_dst.module.carrier().clone(), &columns)
}

/// All filter members that the derivation pushes into the minimum ideal;
/// the extension must not depend on which one is chosen.
pub fn valid_invariant_choices(
    q: &QuotientModule,
    d: &AlgebraDerivation,
) -> Result<Vec<Submodule>> {
    let algebra = q.source.algebra();
    let dmap = d.as_map(algebra);
    let mut out = Vec::new();
    for ideal in q.filter.ideals() {
        if dmap.push_forward(ideal)?.is_subset(&q.min_ideal) {
            out.push(ideal.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::torsion::{enumerate_gabriel_filters, torsion_theory};

    fn theory_for(
        algebra: &crate::algebra::Algebra,
        pick: impl Fn(&GabrielFilter) -> bool,
    ) -> TorsionTheory {
        let bounds = Bounds::default();
        let filter = enumerate_gabriel_filters(algebra, &bounds)
            .unwrap()
            .into_iter()
            .find(pick)
            .expect("requested filter exists");
        torsion_theory(&filter, &[], &bounds).unwrap()
    }

    #[test]
    fn min_ideal_of_the_fixture_filters() {
        let a = fixtures::f2xf2();
        let bounds = Bounds::default();
        for filter in enumerate_gabriel_filters(&a, &bounds).unwrap() {
            let min = min_ideal(&filter).unwrap();
            assert!(filter.contains(&min));
            assert!(filter.ideals().iter().all(|i| min.is_subset(i)));
        }
    }

    #[test]
    fn trivial_filter_localizes_identically() {
        // H over the trivial filter is isomorphic to the module itself
        let a = fixtures::dual_numbers();
        let theory = theory_for(&a, |f| f.len() == 1);
        let bounds = Bounds::default();
        let reg = regular(&a);
        let q = module_of_quotients(&reg, &theory, &bounds).unwrap();
        assert_eq!(q.module.carrier().cardinality(), 4);
        assert!(q.phi.kernel().is_zero());
        assert!(q.phi.image().is_full());
    }

    #[test]
    fn improper_filter_localizes_to_zero() {
        let a = fixtures::dual_numbers();
        let theory = theory_for(&a, |f| f.is_improper());
        let bounds = Bounds::default();
        let reg = regular(&a);
        let q = module_of_quotients(&reg, &theory, &bounds).unwrap();
        assert!(q.module.is_zero());
        assert_eq!(q.raw.classes.len(), 1);
    }

    #[test]
    fn split_ring_localization_has_two_elements() {
        let a = fixtures::f2xf2();
        let e1a = Submodule::from_generators(
            &a.carrier(),
            &[vec![1, 0]],
        );
        let theory = theory_for(&a, |f| f.len() == 2 && f.contains(&e1a));
        let bounds = Bounds::default();
        let reg = regular(&a);
        let q = module_of_quotients(&reg, &theory, &bounds).unwrap();
        assert_eq!(q.module.carrier().cardinality(), 2);
        // kernel of the canonical map is e2A
        assert_eq!(q.phi.kernel().elements(), vec![vec![0, 0], vec![0, 1]]);
        // cokernel vanishes
        assert!(q.phi.image().is_full());
        // the raw colimit sees both member ideals
        assert_eq!(q.raw.items.len(), 2 + 2);
    }

    #[test]
    fn extension_on_the_dual_numbers() {
        let a = fixtures::dual_numbers();
        let d = fixtures::dual_numbers_ddx();
        let theory = theory_for(&a, |f| f.len() == 1);
        let bounds = Bounds::default();
        let reg = regular(&a);
        let q = module_of_quotients(&reg, &theory, &bounds).unwrap();
        let d_on_m = ModuleDerivation::new(reg.clone(), d.clone(), d.as_map(&a)).unwrap();
        let extended = extend_derivation(&q, &d_on_m, &bounds).unwrap();
        assert_eq!(check_lift(&q, &d_on_m, &extended, &bounds).unwrap(), Ok(()));
        let unique = verify_unique_lift(&q, &d_on_m, &bounds).unwrap();
        assert_eq!(unique.count, 1);
        assert_eq!(unique.lifts[0].map(), extended.map());
    }

    #[test]
    fn extension_requires_torsion_free_source() {
        let a = fixtures::f2xf2();
        let e1a = Submodule::from_generators(&a.carrier(), &[vec![1, 0]]);
        let theory = theory_for(&a, |f| f.len() == 2 && f.contains(&e1a));
        let bounds = Bounds::default();
        let reg = regular(&a);
        let q = module_of_quotients(&reg, &theory, &bounds).unwrap();
        let d = crate::algebra::AlgebraDerivation::zero(&a);
        let d_on_m = ModuleDerivation::new(reg.clone(), d.clone(), ModuleMap::zero(reg.carrier(), reg.carrier())).unwrap();
        assert!(matches!(
            extend_derivation(&q, &d_on_m, &bounds),
            Err(Error::NotTorsionFree)
        ));
    }

    #[test]
    fn general_extension_through_the_torsion_quotient() {
        let a = fixtures::f2xf2();
        let e1a = Submodule::from_generators(&a.carrier(), &[vec![1, 0]]);
        let theory = theory_for(&a, |f| f.len() == 2 && f.contains(&e1a));
        let bounds = Bounds::default();
        let reg = regular(&a);
        let d = crate::algebra::AlgebraDerivation::zero(&a);
        // right multiplication by e1 is a 0-derivation on the regular module
        let rmul = a.right_mul_map(&[1, 0]);
        let d_on_m = ModuleDerivation::new(reg.clone(), d, rmul).unwrap();
        let general = extend_derivation_general(&reg, &d_on_m, &theory, &bounds).unwrap();
        let unique = verify_unique_lift(&general.localized, &general.induced, &bounds).unwrap();
        assert_eq!(unique.count, 1);
        assert_eq!(unique.lifts[0].map(), general.extended.map());
    }

    #[test]
    fn left_exactness_on_ideal_sequences() {
        let a = fixtures::f2xf2();
        let bounds = Bounds::default();
        let reg = regular(&a);
        for filter in enumerate_gabriel_filters(&a, &bounds).unwrap() {
            let theory = torsion_theory(&filter, &[], &bounds).unwrap();
            for ideal in crate::torsion::enumerate_left_ideals(&a, &bounds).unwrap() {
                let ses = fixtures::submodule_ses(&reg, &ideal).unwrap();
                assert_eq!(
                    check_h_left_exact(&ses, &theory, &bounds).unwrap(),
                    Ok(()),
                    "left exactness fails for filter of size {}",
                    filter.len()
                );
            }
        }
    }
}
