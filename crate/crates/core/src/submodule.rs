//! Submodules of finite modules: canonical forms, lattice operations,
//! kernels and preimages, quotients and exhaustive subgroup enumeration.
//!
//! A submodule of `M = Z/d_1 x ... x Z/d_k` is identified with the integer
//! lattice of its coefficient vectors, which always contains
//! `diag(d_1, ..., d_k) Z^k`. The canonical form is the row-style Hermite
//! normal form of that lattice: a square upper-triangular basis matrix, so
//! equality of submodules is equality of matrices.

use std::collections::BTreeSet;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finmod::{cokernel, Elem, FinModule, ModuleMap};
use crate::linalg::{left_kernel, row_hnf, Mat, PreparedSolver};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule {
    ambient: FinModule,
    basis: Mat,
}

fn relation_diagonal(m: &FinModule) -> Mat {
    let k = m.rank();
    let mut d = Mat::zeros(k, k);
    for i in 0..k {
        d[(i, i)] = m.factor(i) as i128;
    }
    d
}

impl Submodule {
    /// Submodule generated by the given elements.
    pub fn from_generators(ambient: &FinModule, gens: &[Elem]) -> Submodule {
        let k = ambient.rank();
        let mut rows: Vec<Vec<i128>> = gens
            .iter()
            .map(|g| {
                assert_eq!(g.len(), k, "generator not in the ambient module");
                g.iter().map(|&v| v as i128).collect()
            })
            .collect();
        for i in 0..k {
            let mut row = vec![0i128; k];
            row[i] = ambient.factor(i) as i128;
            rows.push(row);
        }
        let basis = row_hnf(&Mat::from_rows(rows));
        debug_assert_eq!(basis.rows, k, "lattice containing diag(d) has full rank");
        Submodule { ambient: ambient.clone(), basis }
    }

    pub fn zero(ambient: &FinModule) -> Submodule {
        Submodule::from_generators(ambient, &[])
    }

    pub fn full(ambient: &FinModule) -> Submodule {
        let gens: Vec<Elem> = (0..ambient.rank()).map(|i| ambient.generator(i)).collect();
        Submodule::from_generators(ambient, &gens)
    }

    pub fn ambient(&self) -> &FinModule {
        &self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// Canonical generators, as ambient elements.
    pub fn generators(&self) -> Vec<Elem> {
        self.basis
            .rows_iter()
            .map(|row| self.ambient.reduce(row))
            .filter(|e| !self.ambient.is_zero_elem(e))
            .collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let k = self.ambient.rank();
        assert_eq!(x.len(), k, "element not in the ambient module");
        let mut rem: Vec<i128> = x.iter().map(|&v| v as i128).collect();
        for a in 0..k {
            let p = self.basis[(a, a)];
            if rem[a] % p != 0 {
                return false;
            }
            let q = rem[a] / p;
            if q != 0 {
                for c in a..k {
                    rem[c] -= q * self.basis[(a, c)];
                }
            }
        }
        rem.iter().all(|&v| v == 0)
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        assert_eq!(self.ambient, other.ambient, "submodules of different ambients");
        self.basis.rows_iter().all(|row| other.contains(&self.ambient.reduce(row)))
    }

    pub fn is_zero(&self) -> bool {
        self.cardinality() == 1
    }

    pub fn is_full(&self) -> bool {
        self.cardinality() == self.ambient.cardinality()
    }

    pub fn cardinality(&self) -> u128 {
        let mut index = 1u128;
        for a in 0..self.basis.rows {
            index *= self.basis[(a, a)] as u128;
        }
        self.ambient.cardinality() / index
    }

    /// Lattice join.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let basis = row_hnf(&self.basis.vstack(&other.basis));
        Ok(Submodule { ambient: self.ambient.clone(), basis })
    }

    /// Lattice meet.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        // pairs (u, w) with u*B1 = w*B2 parametrize the intersection
        let mut neg = other.basis.clone();
        for i in 0..neg.rows {
            for j in 0..neg.cols {
                neg[(i, j)] = -neg[(i, j)];
            }
        }
        let stacked = self.basis.vstack(&neg);
        let ker = left_kernel(&stacked);
        let k = self.ambient.rank();
        let gens: Vec<Elem> = (0..ker.rows)
            .map(|i| {
                let u = &ker.row(i)[..self.basis.rows];
                let mut v = vec![0i128; k];
                for (a, &coeff) in u.iter().enumerate() {
                    for c in 0..k {
                        v[c] += coeff * self.basis[(a, c)];
                    }
                }
                self.ambient.reduce(&v)
            })
            .collect();
        Ok(Submodule::from_generators(&self.ambient, &gens))
    }

    /// All elements, in the canonical order of the abstract presentation.
    pub fn elements(&self) -> Vec<Elem> {
        let pres = self.presentation();
        let out: Vec<Elem> =
            pres.module().elements().map(|t| pres.embed.apply(&t)).collect();
        out
    }

    /// Abstract form of this submodule: a [`FinModule`] together with an
    /// embedding onto the submodule and coordinates for its members.
    pub fn presentation(&self) -> SubmodulePresentation {
        let k = self.ambient.rank();
        // relations: coefficient vectors u with u * basis inside diag(d) Z^k
        let diag = relation_diagonal(&self.ambient);
        let mut neg = diag.clone();
        for i in 0..k {
            neg[(i, i)] = -neg[(i, i)];
        }
        let stacked = self.basis.vstack(&neg);
        let ker = left_kernel(&stacked);
        let rel_rows: Vec<Vec<i128>> = (0..ker.rows).map(|i| ker.row(i)[..k].to_vec()).collect();
        let relations = if rel_rows.is_empty() {
            Mat::zeros(0, k)
        } else {
            Mat::from_rows(rel_rows)
        };
        let pres = cokernel(k, &relations, self.ambient.modulus());
        let images: Vec<Elem> = (0..pres.module.rank())
            .map(|i| {
                let y = pres.lift(&pres.module.generator(i));
                let mut v = vec![0i128; k];
                for (a, &coeff) in y.iter().enumerate() {
                    for c in 0..k {
                        v[c] += coeff * self.basis[(a, c)];
                    }
                }
                self.ambient.reduce(&v)
            })
            .collect();
        let embed = ModuleMap::from_images(pres.module.clone(), self.ambient.clone(), &images)
            .expect("submodule embedding is well defined");
        let solver = PreparedSolver::new(&self.basis.transpose().hstack(&diag));
        SubmodulePresentation { submodule: self.clone(), pres, embed, solver }
    }
}

/// A submodule re-expressed as a standalone [`FinModule`] with an embedding.
pub struct SubmodulePresentation {
    submodule: Submodule,
    pres: crate::finmod::CokernelPresentation,
    pub embed: ModuleMap,
    solver: PreparedSolver,
}

impl SubmodulePresentation {
    pub fn module(&self) -> &FinModule {
        &self.pres.module
    }

    /// Coordinates of an ambient element that lies in the submodule.
    pub fn express(&self, x: &[i64]) -> Result<Elem> {
        let b: Vec<i128> = x.iter().map(|&v| v as i128).collect();
        let z = self.solver.solve(&b).ok_or(Error::AmbientMismatch)?;
        let y = &z[..self.submodule.basis.rows];
        Ok(self.pres.project(y))
    }
}

/// Quotient of the ambient module by a submodule, with the projection and an
/// integer section of it.
pub struct QuotientPresentation {
    pub module: FinModule,
    pub proj: ModuleMap,
    pres: crate::finmod::CokernelPresentation,
}

impl QuotientPresentation {
    /// An ambient representative of a quotient class.
    pub fn lift(&self, q: &[i64]) -> Elem {
        let ambient = self.proj.domain();
        ambient.reduce(&self.pres.lift(q))
    }
}

/// Cokernel `M/S` in invariant-factor form via Smith reduction, with a
/// surjective projection whose kernel is `S`.
pub fn quotient(m: &FinModule, s: &Submodule) -> QuotientPresentation {
    assert_eq!(s.ambient(), m, "submodule of a different ambient");
    let pres = cokernel(m.rank(), s.basis(), m.modulus());
    let proj = ModuleMap::new(m.clone(), pres.module.clone(), pres.projection_rows())
        .expect("quotient projection is well defined");
    QuotientPresentation { module: pres.module.clone(), proj, pres }
}

impl ModuleMap {
    /// Set-theoretic image, in canonical form.
    pub fn image(&self) -> Submodule {
        let cols: Vec<Elem> = (0..self.domain().rank()).map(|b| self.column(b)).collect();
        Submodule::from_generators(self.codomain(), &cols)
    }

    /// Set-theoretic kernel, in canonical form.
    pub fn kernel(&self) -> Submodule {
        self.preimage(&Submodule::zero(self.codomain()))
            .expect("zero submodule lives in the codomain")
    }

    /// Preimage of a submodule of the codomain, in canonical form.
    pub fn preimage(&self, s: &Submodule) -> Result<Submodule> {
        if s.ambient() != self.codomain() {
            return Err(Error::AmbientMismatch);
        }
        let k = self.domain().rank();
        let l = self.codomain().rank();
        // x with H x = (combination of S generators): right kernel of [H | -B^T]
        let h = self.to_mat();
        let mut bt = s.basis().transpose();
        for i in 0..bt.rows {
            for j in 0..bt.cols {
                bt[(i, j)] = -bt[(i, j)];
            }
        }
        let aug = h.hstack(&bt);
        debug_assert_eq!(aug.rows, l);
        let ker = left_kernel(&aug.transpose());
        let gens: Vec<Elem> = (0..ker.rows)
            .map(|i| self.domain().reduce(&ker.row(i)[..k]))
            .collect();
        Ok(Submodule::from_generators(self.domain(), &gens))
    }

    /// Image of a submodule of the domain under this map (the restriction
    /// convention `f(L)`).
    pub fn push_forward(&self, s: &Submodule) -> Result<Submodule> {
        if s.ambient() != self.domain() {
            return Err(Error::AmbientMismatch);
        }
        let gens: Vec<Elem> = s
            .basis()
            .rows_iter()
            .map(|row| self.apply(&self.domain().reduce(row)))
            .collect();
        Ok(Submodule::from_generators(self.codomain(), &gens))
    }
}

thread_local! {
    static SUBGROUP_MEMO: std::cell::RefCell<std::collections::BTreeMap<FinModule, Vec<Submodule>>> =
        std::cell::RefCell::new(std::collections::BTreeMap::new());
}

/// Complete, duplicate-free enumeration of all subgroups (equivalently all
/// `Z/m`-submodules) of `m`, canonically sorted. Results are memoized: the
/// enumeration is a pure function of the module.
pub fn enumerate_subgroups(m: &FinModule, bounds: &Bounds) -> Result<Vec<Submodule>> {
    let card = m.cardinality();
    if card > bounds.max_subgroup_ambient as u128 {
        return Err(Error::BoundExceeded {
            what: "subgroup enumeration",
            size: card.min(usize::MAX as u128) as usize,
            bound: bounds.max_subgroup_ambient,
        });
    }
    if let Some(hit) = SUBGROUP_MEMO.with(|memo| memo.borrow().get(m).cloned()) {
        return Ok(hit);
    }
    let result = enumerate_subgroups_uncached(m);
    SUBGROUP_MEMO.with(|memo| memo.borrow_mut().insert(m.clone(), result.clone()));
    Ok(result)
}

fn enumerate_subgroups_uncached(m: &FinModule) -> Vec<Submodule> {
    let elements: Vec<Elem> = m.elements().collect();
    let mut seen: BTreeSet<Submodule> = BTreeSet::new();
    let mut queue: Vec<Submodule> = vec![Submodule::zero(m)];
    seen.insert(queue[0].clone());
    while let Some(s) = queue.pop() {
        for x in &elements {
            if s.contains(x) {
                continue;
            }
            let mut gens = s.generators();
            gens.push(x.clone());
            let bigger = Submodule::from_generators(m, &gens);
            if seen.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> FinModule {
        FinModule::base(4)
    }

    fn z2z2() -> FinModule {
        FinModule::new(2, vec![2, 2]).unwrap()
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let m = z2z2();
        let s = Submodule::from_generators(&m, &[vec![1, 0], vec![1, 1]]);
        let again = Submodule::from_generators(&m, &s.generators());
        assert_eq!(s, again);
    }

    #[test]
    fn canonical_form_decides_equality_of_element_sets() {
        let m = z4();
        let a = Submodule::from_generators(&m, &[vec![2]]);
        let b = Submodule::from_generators(&m, &[vec![2], vec![2]]);
        assert_eq!(a, b);
        assert_eq!(a.elements(), vec![vec![0], vec![2]]);
    }

    #[test]
    fn kernel_image_of_multiplication_by_two() {
        let m = z4();
        let f = ModuleMap::new(m.clone(), m.clone(), vec![vec![2]]).unwrap();
        let two = Submodule::from_generators(&m, &[vec![2]]);
        assert_eq!(f.kernel(), two);
        assert_eq!(f.image(), two);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let m = z4();
        let id = ModuleMap::identity(&m);
        assert!(id.kernel().is_zero());
        let s = Submodule::from_generators(&m, &[vec![2]]);
        assert_eq!(id.preimage(&s).unwrap(), s);
        let zero = ModuleMap::zero(&m, &m);
        assert!(zero.kernel().is_full());
        assert!(zero.image().is_zero());
    }

    #[test]
    fn preimage_rejects_wrong_ambient() {
        let m = z4();
        let other = z2z2();
        let f = ModuleMap::identity(&m);
        let s = Submodule::zero(&other);
        assert_eq!(f.preimage(&s), Err(Error::AmbientMismatch));
    }

    #[test]
    fn sum_and_intersection_in_klein_four() {
        let m = z2z2();
        let a = Submodule::from_generators(&m, &[vec![1, 0]]);
        let b = Submodule::from_generators(&m, &[vec![0, 1]]);
        assert!(a.sum(&b).unwrap().is_full());
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn quotient_of_z4_by_two_torsion() {
        let m = z4();
        let s = Submodule::from_generators(&m, &[vec![2]]);
        let q = quotient(&m, &s);
        assert_eq!(q.module.factors(), &[2]);
        assert_eq!(q.proj.kernel(), s);
        // projection is surjective: both classes are hit
        let hits: BTreeSet<Elem> = m.elements().map(|x| q.proj.apply(&x)).collect();
        assert_eq!(hits.len(), 2);
    }

    #[test]
    fn quotient_by_zero_and_by_everything() {
        let m = z2z2();
        let q0 = quotient(&m, &Submodule::zero(&m));
        assert_eq!(q0.module.cardinality(), 4);
        let q1 = quotient(&m, &Submodule::full(&m));
        assert!(q1.module.is_zero_module());
    }

    #[test]
    fn subgroup_enumeration_counts() {
        let bounds = Bounds::default();
        assert_eq!(enumerate_subgroups(&z4(), &bounds).unwrap().len(), 3);
        assert_eq!(enumerate_subgroups(&z2z2(), &bounds).unwrap().len(), 5);
        let zero = FinModule::zero(2);
        assert_eq!(enumerate_subgroups(&zero, &bounds).unwrap().len(), 1);
    }

    #[test]
    fn subgroup_enumeration_respects_bound() {
        let bounds = Bounds { max_subgroup_ambient: 3, ..Bounds::default() };
        let err = enumerate_subgroups(&z4(), &bounds).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { bound: 3, size: 4, .. }));
    }

    #[test]
    fn presentation_round_trips() {
        let m = FinModule::new(4, vec![2, 4]).unwrap();
        let s = Submodule::from_generators(&m, &[vec![1, 2]]);
        let pres = s.presentation();
        for x in s.elements() {
            let t = pres.express(&x).unwrap();
            assert_eq!(pres.embed.apply(&t), x);
        }
        assert_eq!(pres.module().cardinality(), s.cardinality());
    }
}
