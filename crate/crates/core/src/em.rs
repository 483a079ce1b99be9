//! Modules over the monad induced by a finite free algebra.
//!
//! For an algebra `A` free of rank `r` over `k = Z/m`, the monad sends a
//! module `M0` to `M0^r` (the concrete form of `A (x) M0`), with
//! multiplication and unit read off the structure constants. A module over
//! the monad is a carrier together with one action endomorphism per algebra
//! basis element; the two module laws and the morphism condition are checked
//! exhaustively on basis/generator combinations, with witnesses on failure.

use crate::algebra::{check_leibniz, Algebra, AlgebraDerivation};
use crate::bounds::Bounds;
use crate::error::{anchor, Error, LawReport, Result, Violation};
use crate::finmod::{fmt_elem, Elem, FinModule, ModuleMap};
use crate::hom::HomGroup;
use crate::linalg::{solve, Mat};
use crate::submodule::{
    enumerate_subgroups, quotient, QuotientPresentation, Submodule, SubmodulePresentation,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmModule {
    algebra: Algebra,
    carrier: FinModule,
    action: Vec<ModuleMap>,
}

impl EmModule {
    pub fn new(algebra: Algebra, carrier: FinModule, action: Vec<ModuleMap>) -> Result<Self> {
        if carrier.modulus() != algebra.modulus() {
            return Err(Error::ModulusMismatch {
                left: carrier.modulus(),
                right: algebra.modulus(),
            });
        }
        if action.len() != algebra.rank() {
            return Err(Error::InvalidMap(format!(
                "expected one action map per basis element ({}), got {}",
                algebra.rank(),
                action.len()
            )));
        }
        for act in &action {
            if act.domain() != &carrier || act.codomain() != &carrier {
                return Err(Error::InvalidMap(
                    "action maps must be endomorphisms of the carrier".into(),
                ));
            }
        }
        Ok(EmModule { algebra, carrier, action })
    }

    pub fn zero_module(algebra: &Algebra) -> EmModule {
        let carrier = FinModule::zero(algebra.modulus());
        let action =
            (0..algebra.rank()).map(|_| ModuleMap::zero(&carrier, &carrier)).collect();
        EmModule { algebra: algebra.clone(), carrier, action }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn carrier(&self) -> &FinModule {
        &self.carrier
    }

    pub fn action(&self, i: usize) -> &ModuleMap {
        &self.action[i]
    }

    pub fn actions(&self) -> &[ModuleMap] {
        &self.action
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero_module()
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, a: &[i64], x: &[i64]) -> Elem {
        self.act_map(a).apply(x)
    }

    /// The action of an algebra element as a single endomorphism.
    pub fn act_map(&self, a: &[i64]) -> ModuleMap {
        let k = self.carrier.rank();
        let mut rows = vec![vec![0i64; k]; k];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for c in 0..k {
                for b in 0..k {
                    let v = ai as i128 * self.action[i].entry(c, b) as i128;
                    rows[c][b] = ((rows[c][b] as i128 + v)
                        % self.carrier.factor(c) as i128) as i64;
                }
            }
        }
        ModuleMap::new(self.carrier.clone(), self.carrier.clone(), rows)
            .expect("linear combination of actions is well defined")
    }

    /// The structure map `M^r -> M` collecting all basis actions.
    pub fn structure_map(&self) -> ModuleMap {
        let r = self.algebra.rank();
        let k = self.carrier.rank();
        let domain = self.carrier.power(r);
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|c| {
                let mut row = vec![0i64; k * r];
                for a in 0..k {
                    for j in 0..r {
                        row[FinModule::power_slot(a, j, r)] = self.action[j].entry(c, a);
                    }
                }
                row
            })
            .collect();
        ModuleMap::new(domain, self.carrier.clone(), rows)
            .expect("structure map is well defined")
    }
}

/// The algebra as a module over itself, acting by left multiplication.
pub fn regular(algebra: &Algebra) -> EmModule {
    let action: Vec<ModuleMap> =
        (0..algebra.rank()).map(|i| algebra.left_mul_map(&algebra.basis_elem(i))).collect();
    EmModule { algebra: algebra.clone(), carrier: algebra.carrier(), action }
}

/// The free module on `M0`: carrier `M0^r` with the action induced by the
/// structure constants.
pub fn free_module(algebra: &Algebra, m0: &FinModule) -> Result<EmModule> {
    if m0.modulus() != algebra.modulus() {
        return Err(Error::ModulusMismatch { left: m0.modulus(), right: algebra.modulus() });
    }
    let r = algebra.rank();
    let k = m0.rank();
    let carrier = m0.power(r);
    let mut action = Vec::with_capacity(r);
    for i in 0..r {
        let mut rows = vec![vec![0i64; k * r]; k * r];
        for a in 0..k {
            for j in 0..r {
                let product = algebra.basis_product(i, j);
                for (l, &coeff) in product.iter().enumerate() {
                    rows[FinModule::power_slot(a, l, r)][FinModule::power_slot(a, j, r)] = coeff;
                }
            }
        }
        action.push(ModuleMap::new(carrier.clone(), carrier.clone(), rows)?);
    }
    EmModule::new(algebra.clone(), carrier, action)
}

/// The unit `M0 -> M0^r`, tensoring with the algebra unit.
pub fn eta(algebra: &Algebra, m0: &FinModule) -> ModuleMap {
    let r = algebra.rank();
    let k = m0.rank();
    let mut rows = vec![vec![0i64; k]; k * r];
    for a in 0..k {
        for j in 0..r {
            rows[FinModule::power_slot(a, j, r)][a] = algebra.one()[j];
        }
    }
    ModuleMap::new(m0.clone(), m0.power(r), rows).expect("unit map is well defined")
}

/// The monad applied to a map: `phi` across every algebra coordinate.
pub fn lift_map(algebra: &Algebra, phi: &ModuleMap) -> ModuleMap {
    let r = algebra.rank();
    let k_in = phi.domain().rank();
    let k_out = phi.codomain().rank();
    let mut rows = vec![vec![0i64; k_in * r]; k_out * r];
    for c in 0..k_out {
        for a in 0..k_in {
            for j in 0..r {
                rows[FinModule::power_slot(c, j, r)][FinModule::power_slot(a, j, r)] =
                    phi.entry(c, a);
            }
        }
    }
    ModuleMap::new(phi.domain().power(r), phi.codomain().power(r), rows)
        .expect("lifted map is well defined")
}

/// The monad multiplication `(M0^r)^r -> M0^r` from the structure constants.
pub fn theta(algebra: &Algebra, m0: &FinModule) -> ModuleMap {
    let r = algebra.rank();
    let k = m0.rank();
    let um = m0.power(r);
    let uum = um.power(r);
    let mut rows = vec![vec![0i64; k * r * r]; k * r];
    for a in 0..k {
        for i in 0..r {
            for j in 0..r {
                let inner_slot = FinModule::power_slot(a, j, r);
                let outer_slot = FinModule::power_slot(inner_slot, i, r);
                let product = algebra.basis_product(i, j);
                for (l, &coeff) in product.iter().enumerate() {
                    rows[FinModule::power_slot(a, l, r)][outer_slot] = coeff;
                }
            }
        }
    }
    ModuleMap::new(uum, um, rows).expect("multiplication map is well defined")
}

/// The component at `M0` of a derivation candidate, acting on the algebra
/// coordinate of `M0^r`.
pub fn delta_map(algebra: &Algebra, d: &AlgebraDerivation, m0: &FinModule) -> ModuleMap {
    let r = algebra.rank();
    let k = m0.rank();
    let um = m0.power(r);
    let mut rows = vec![vec![0i64; k * r]; k * r];
    for a in 0..k {
        for i in 0..r {
            for j in 0..r {
                rows[FinModule::power_slot(a, i, r)][FinModule::power_slot(a, j, r)] =
                    d.entry(i, j);
            }
        }
    }
    ModuleMap::new(um.clone(), um, rows).expect("derivation component is well defined")
}

fn first_column_difference(lhs: &ModuleMap, rhs: &ModuleMap) -> Option<usize> {
    (0..lhs.domain().rank()).find(|&b| lhs.column(b) != rhs.column(b))
}

/// Both module laws on all basis/generator combinations.
pub fn check_em_module(m: &EmModule) -> LawReport {
    let a = m.algebra();
    for i in 0..a.rank() {
        for j in 0..a.rank() {
            let lhs = m.act_map(a.basis_product(i, j));
            let rhs = m.action(i).compose(m.action(j));
            if lhs != rhs {
                let b = first_column_difference(&lhs, &rhs).unwrap_or(0);
                return Err(Violation {
                    anchor: anchor::EM_MODULE,
                    law: "action associativity",
                    indices: vec![i, j, b],
                    lhs: fmt_elem(&lhs.column(b)),
                    rhs: fmt_elem(&rhs.column(b)),
                });
            }
        }
    }
    let unit_act = m.act_map(&a.one());
    let id = ModuleMap::identity(m.carrier());
    if unit_act != id {
        let b = first_column_difference(&unit_act, &id).unwrap_or(0);
        return Err(Violation {
            anchor: anchor::EM_MODULE,
            law: "unit acts as identity",
            indices: vec![b],
            lhs: fmt_elem(&unit_act.column(b)),
            rhs: fmt_elem(&id.column(b)),
        });
    }
    Ok(())
}

/// The morphism condition for a map between carriers.
pub fn check_em_morphism(src: &EmModule, dst: &EmModule, g: &ModuleMap) -> LawReport {
    assert_eq!(g.domain(), src.carrier(), "morphism domain mismatch");
    assert_eq!(g.codomain(), dst.carrier(), "morphism codomain mismatch");
    for i in 0..src.algebra().rank() {
        let lhs = g.compose(src.action(i));
        let rhs = dst.action(i).compose(g);
        if lhs != rhs {
            let b = first_column_difference(&lhs, &rhs).unwrap_or(0);
            return Err(Violation {
                anchor: anchor::EM_MODULE,
                law: "morphism intertwines the action",
                indices: vec![i, b],
                lhs: fmt_elem(&lhs.column(b)),
                rhs: fmt_elem(&rhs.column(b)),
            });
        }
    }
    Ok(())
}

/// Derivation law, checked two ways: the Leibniz rule on basis pairs and the
/// defining square on the probe module `k`. The two routes must agree.
pub fn check_derivation(algebra: &Algebra, d: &AlgebraDerivation) -> LawReport {
    let leibniz = check_leibniz(algebra, d);

    let probe = FinModule::base(algebra.modulus());
    let theta_m = theta(algebra, &probe);
    let delta_m = delta_map(algebra, d, &probe);
    let u_delta = lift_map(algebra, &delta_m);
    let delta_um = delta_map(algebra, d, &probe.power(algebra.rank()));
    let lhs = theta_m.compose(&u_delta.add(&delta_um));
    let rhs = delta_m.compose(&theta_m);
    let square: LawReport = if lhs == rhs {
        Ok(())
    } else {
        let b = first_column_difference(&lhs, &rhs).unwrap_or(0);
        Err(Violation {
            anchor: anchor::DERIVATION,
            law: "derivation square on the probe module",
            indices: vec![b],
            lhs: fmt_elem(&lhs.column(b)),
            rhs: fmt_elem(&rhs.column(b)),
        })
    };

    assert_eq!(
        leibniz.is_ok(),
        square.is_ok(),
        "basis Leibniz check and the probe square must agree"
    );
    leibniz
}

/// A derivation on a module, relative to a derivation on the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDerivation {
    module: EmModule,
    delta: AlgebraDerivation,
    map: ModuleMap,
}

impl ModuleDerivation {
    pub fn new(module: EmModule, delta: AlgebraDerivation, map: ModuleMap) -> Result<Self> {
        check_module_derivation(&module, &delta, &map).map_err(Error::InvalidDerivation)?;
        Ok(ModuleDerivation { module, delta, map })
    }

    pub fn module(&self) -> &EmModule {
        &self.module
    }

    pub fn delta(&self) -> &AlgebraDerivation {
        &self.delta
    }

    pub fn map(&self) -> &ModuleMap {
        &self.map
    }

    pub fn apply(&self, x: &[i64]) -> Elem {
        self.map.apply(x)
    }
}

/// The module-derivation law `D(a x) = a D(x) + delta(a) x` on all basis
/// elements and carrier generators.
pub fn check_module_derivation(
    m: &EmModule,
    delta: &AlgebraDerivation,
    map: &ModuleMap,
) -> LawReport {
    assert_eq!(map.domain(), m.carrier(), "derivation domain mismatch");
    assert_eq!(map.codomain(), m.carrier(), "derivation codomain mismatch");
    let a = m.algebra();
    for i in 0..a.rank() {
        let lhs = map.compose(m.action(i));
        let mut rhs = m.action(i).compose(map);
        let delta_of_basis: Elem = (0..a.rank()).map(|j| delta.entry(j, i)).collect();
        rhs = rhs.add(&m.act_map(&delta_of_basis));
        if lhs != rhs {
            let b = first_column_difference(&lhs, &rhs).unwrap_or(0);
            return Err(Violation {
                anchor: anchor::MODULE_DERIVATION,
                law: "module derivation law",
                indices: vec![i, b],
                lhs: fmt_elem(&lhs.column(b)),
                rhs: fmt_elem(&rhs.column(b)),
            });
        }
    }
    Ok(())
}

/// The linear map `f -> (f . act_i - act'_i . f)_i` on Hom coordinates; its
/// kernel is the group of intertwiners.
fn intertwining_defect(hom: &HomGroup, src: &EmModule, dst: &EmModule) -> ModuleMap {
    let r = src.algebra().rank();
    let domain = hom.group().clone();
    let codomain = domain.power(r);
    let n = domain.rank();
    let mut rows = vec![vec![0i64; n]; n * r];
    for b in 0..n {
        let f = hom.to_map(&domain.generator(b));
        for i in 0..r {
            let bracket = f.compose(src.action(i)).sub(&dst.action(i).compose(&f));
            let coords = hom.from_map(&bracket);
            for (a, &v) in coords.iter().enumerate() {
                rows[FinModule::power_slot(a, i, r)][b] = v;
            }
        }
    }
    ModuleMap::new(domain, codomain, rows).expect("defect map is well defined")
}

/// The group of module morphisms `src -> dst`, as a subgroup of the full Hom
/// group with coordinates for its members.
pub struct EmHom {
    hom: HomGroup,
    subgroup: Submodule,
    pres: SubmodulePresentation,
}

pub fn em_hom(src: &EmModule, dst: &EmModule) -> Result<EmHom> {
    let hom = HomGroup::new(src.carrier(), dst.carrier())?;
    let defect = intertwining_defect(&hom, src, dst);
    let subgroup = defect.kernel();
    let pres = subgroup.presentation();
    Ok(EmHom { hom, subgroup, pres })
}

impl EmHom {
    pub fn count(&self) -> u128 {
        self.subgroup.cardinality()
    }

    /// The abstract group of morphisms.
    pub fn module(&self) -> &FinModule {
        self.pres.module()
    }

    pub fn contains(&self, f: &ModuleMap) -> bool {
        self.subgroup.contains(&self.hom.from_map(f))
    }

    /// Morphism indexed by an element of [`EmHom::module`].
    pub fn of_coords(&self, t: &[i64]) -> ModuleMap {
        self.hom.to_map(&self.pres.embed.apply(t))
    }

    /// Coordinates of a morphism; errors when the map is not a morphism.
    pub fn coords(&self, f: &ModuleMap) -> Result<Elem> {
        self.pres.express(&self.hom.from_map(f))
    }

    /// All morphisms, in the canonical coordinate order.
    pub fn maps(&self) -> Vec<ModuleMap> {
        self.module().elements().map(|t| self.of_coords(&t)).collect()
    }
}

/// Complete solution set of the module-derivation law, found by solving the
/// linear congruence system on Hom coordinates.
pub fn enumerate_module_derivations(
    m: &EmModule,
    delta: &AlgebraDerivation,
    bounds: &Bounds,
) -> Result<Vec<ModuleDerivation>> {
    let card = m.carrier().cardinality();
    if card > bounds.max_elements as u128 {
        return Err(Error::BoundExceeded {
            what: "module derivation carrier",
            size: card.min(usize::MAX as u128) as usize,
            bound: bounds.max_elements,
        });
    }
    let a = m.algebra();
    let r = a.rank();
    let hom = HomGroup::new(m.carrier(), m.carrier())?;
    let defect = intertwining_defect(&hom, m, m);
    // inhomogeneous side: D . act_i - act_i . D = sum_j delta[j][i] act_j
    let target = defect.codomain().clone();
    let mut rhs = vec![0i64; target.rank()];
    for i in 0..r {
        let delta_of_basis: Elem = (0..r).map(|j| delta.entry(j, i)).collect();
        let coords = hom.from_map(&m.act_map(&delta_of_basis));
        for (c, &v) in coords.iter().enumerate() {
            rhs[FinModule::power_slot(c, i, r)] = v;
        }
    }
    // particular solution over the integers, with slack for the target moduli
    let n = hom.group().rank();
    let mut aug = defect.to_mat().hstack(&Mat::zeros(target.rank(), target.rank()));
    for c in 0..target.rank() {
        aug[(c, n + c)] = target.factor(c) as i128;
    }
    let b: Vec<i128> = rhs.iter().map(|&v| v as i128).collect();
    let Some(z) = solve(&aug, &b) else {
        return Ok(Vec::new());
    };
    let particular = hom.group().reduce(&z[..n]);

    let kernel = defect.kernel();
    if kernel.cardinality() > bounds.max_derivation_solutions as u128 {
        return Err(Error::BoundExceeded {
            what: "module derivation enumeration",
            size: kernel.cardinality().min(usize::MAX as u128) as usize,
            bound: bounds.max_derivation_solutions,
        });
    }
    let mut out: Vec<ModuleDerivation> = kernel
        .elements()
        .into_iter()
        .map(|k| {
            let coords = hom.group().add(&particular, &k);
            let map = hom.to_map(&coords);
            ModuleDerivation::new(m.clone(), delta.clone(), map)
                .expect("solutions of the congruence system satisfy the law")
        })
        .collect();
    out.sort_by(|x, y| x.map.cmp(&y.map));
    Ok(out)
}

/// Result of the free/forgetful adjunction check: matched pairs
/// `(module morphism on the free module, plain map out of the base object)`.
pub struct AdjunctionTable {
    pub pairs: Vec<(ModuleMap, ModuleMap)>,
}

/// The bijection `EM(U M0, N) = C(M0, N)`, realized in both directions and
/// verified to round-trip; errors with a defect if any instance fails.
pub fn adjunction_bijection(
    algebra: &Algebra,
    m0: &FinModule,
    n: &EmModule,
    bounds: &Bounds,
) -> Result<AdjunctionTable> {
    let free = free_module(algebra, m0)?;
    let eta_m = eta(algebra, m0);
    let f_n = n.structure_map();

    let c_hom = HomGroup::new(m0, n.carrier())?;
    if c_hom.group().cardinality() > bounds.max_elements as u128 {
        return Err(Error::BoundExceeded {
            what: "adjunction table",
            size: c_hom.group().cardinality().min(usize::MAX as u128) as usize,
            bound: bounds.max_elements,
        });
    }
    let em = em_hom(&free, n)?;
    if em.count() != c_hom.group().cardinality() {
        return Err(Error::Defect(format!(
            "{}: side cardinalities differ: {} vs {}",
            anchor::ADJUNCTION,
            em.count(),
            c_hom.group().cardinality()
        )));
    }

    // plain map -> module morphism, then back
    for phi in c_hom.maps() {
        let h = f_n.compose(&lift_map(algebra, &phi));
        if !em.contains(&h) {
            return Err(Error::Defect(format!(
                "{}: transposed map is not a module morphism",
                anchor::ADJUNCTION
            )));
        }
        if h.compose(&eta_m) != phi {
            return Err(Error::Defect(format!(
                "{}: unit round trip failed",
                anchor::ADJUNCTION
            )));
        }
    }
    // module morphism -> plain map, then back
    let mut pairs = Vec::new();
    for h in em.maps() {
        let phi = h.compose(&eta_m);
        let h_again = f_n.compose(&lift_map(algebra, &phi));
        if h_again != h {
            return Err(Error::Defect(format!(
                "{}: counit round trip failed",
                anchor::ADJUNCTION
            )));
        }
        pairs.push((h, phi));
    }
    pairs.sort();
    Ok(AdjunctionTable { pairs })
}

/// Witness that the free module on the base object generates: a morphism
/// into `m` whose image is not contained in the proper submodule `n`.
pub fn check_generator_instance(m: &EmModule, n: &Submodule) -> Result<ModuleMap> {
    assert_eq!(n.ambient(), m.carrier(), "submodule of a different carrier");
    if n.is_full() {
        return Err(Error::NotProperSubmodule);
    }
    let x = m
        .carrier()
        .elements()
        .find(|x| !n.contains(x))
        .expect("a proper submodule misses some element");
    let a = m.algebra();
    let images: Vec<Elem> = (0..a.rank()).map(|j| m.action(j).apply(&x)).collect();
    let h = ModuleMap::from_images(a.carrier(), m.carrier().clone(), &images)?;
    debug_assert!(check_em_morphism(&regular(a), m, &h).is_ok());
    debug_assert!(!h.image().is_subset(n));
    Ok(h)
}

/// Is the subgroup closed under every basis action?
pub fn is_em_submodule(m: &EmModule, s: &Submodule) -> bool {
    (0..m.algebra().rank()).all(|i| {
        m.action(i)
            .push_forward(s)
            .expect("submodule of the carrier")
            .is_subset(s)
    })
}

/// All action-closed subgroups of the carrier, canonically sorted.
pub fn enumerate_em_submodules(m: &EmModule, bounds: &Bounds) -> Result<Vec<Submodule>> {
    Ok(enumerate_subgroups(m.carrier(), bounds)?
        .into_iter()
        .filter(|s| is_em_submodule(m, s))
        .collect())
}

/// An action-closed subgroup re-expressed as a standalone module with its
/// inclusion morphism.
pub struct EmSubmodule {
    pub module: EmModule,
    pub include: ModuleMap,
    pres: SubmodulePresentation,
}

pub fn em_submodule(m: &EmModule, s: &Submodule) -> Result<EmSubmodule> {
    if s.ambient() != m.carrier() {
        return Err(Error::AmbientMismatch);
    }
    if !is_em_submodule(m, s) {
        return Err(Error::InvalidModule("subgroup is not closed under the action".into()));
    }
    let pres = s.presentation();
    let t = pres.module().clone();
    let mut action = Vec::with_capacity(m.algebra().rank());
    for i in 0..m.algebra().rank() {
        let images: Vec<Elem> = (0..t.rank())
            .map(|b| {
                let inside = m.action(i).apply(&pres.embed.apply(&t.generator(b)));
                pres.express(&inside).expect("action closure keeps members inside")
            })
            .collect();
        action.push(ModuleMap::from_images(t.clone(), t.clone(), &images)?);
    }
    let module = EmModule::new(m.algebra().clone(), t, action)?;
    debug_assert_eq!(check_em_module(&module), Ok(()));
    let include = pres.embed.clone();
    Ok(EmSubmodule { module, include, pres })
}

impl EmSubmodule {
    /// Coordinates of an ambient element lying on the submodule.
    pub fn coords(&self, x: &[i64]) -> Result<Elem> {
        self.pres.express(x)
    }
}

/// Quotient by an action-closed subgroup, with projection and a lift.
pub struct EmQuotient {
    pub module: EmModule,
    pub proj: ModuleMap,
    qp: QuotientPresentation,
}

pub fn em_quotient(m: &EmModule, s: &Submodule) -> Result<EmQuotient> {
    if s.ambient() != m.carrier() {
        return Err(Error::AmbientMismatch);
    }
    if !is_em_submodule(m, s) {
        return Err(Error::InvalidModule("subgroup is not closed under the action".into()));
    }
    let qp = quotient(m.carrier(), s);
    let q = qp.module.clone();
    let mut action = Vec::with_capacity(m.algebra().rank());
    for i in 0..m.algebra().rank() {
        let images: Vec<Elem> = (0..q.rank())
            .map(|b| qp.proj.apply(&m.action(i).apply(&qp.lift(&q.generator(b)))))
            .collect();
        action.push(ModuleMap::from_images(q.clone(), q.clone(), &images)?);
    }
    let module = EmModule::new(m.algebra().clone(), q, action)?;
    debug_assert_eq!(check_em_module(&module), Ok(()));
    Ok(EmQuotient { module, proj: qp.proj.clone(), qp })
}

impl EmQuotient {
    /// A representative of a quotient class.
    pub fn lift(&self, q: &[i64]) -> Elem {
        self.qp.lift(q)
    }
}

/// A short exact sequence of modules over the monad.
pub struct ShortExactSequence {
    pub sub: EmModule,
    pub mid: EmModule,
    pub quo: EmModule,
    pub include: ModuleMap,
    pub project: ModuleMap,
}

impl ShortExactSequence {
    pub fn validate(&self) -> Result<()> {
        check_em_morphism(&self.sub, &self.mid, &self.include)
            .map_err(|v| Error::NotExact(format!("inclusion is not a morphism: {v}")))?;
        check_em_morphism(&self.mid, &self.quo, &self.project)
            .map_err(|v| Error::NotExact(format!("projection is not a morphism: {v}")))?;
        if !self.include.kernel().is_zero() {
            return Err(Error::NotExact("inclusion is not injective".into()));
        }
        if !self.project.image().is_full() {
            return Err(Error::NotExact("projection is not surjective".into()));
        }
        if self.project.kernel() != self.include.image() {
            return Err(Error::NotExact("middle homology does not vanish".into()));
        }
        Ok(())
    }
}
