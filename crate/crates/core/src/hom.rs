//! The group of additive maps between two finite modules, together with an
//! explicit bijective indexing of its elements as matrices.
//!
//! `Hom(M, N)` for `M = (+) Z/d_i` and `N = (+) Z/e_j` is generated by the
//! elementary maps sending the `i`-th generator to `(e_j / gcd(d_i, e_j))`
//! times the `j`-th generator; the coefficient of that map is well defined
//! modulo `gcd(d_i, e_j)`. Smith reduction of those orders produces the
//! invariant-factor form of the Hom group.

use crate::error::{Error, Result};
use crate::finmod::{cokernel, CokernelPresentation, Elem, FinModule, ModuleMap};
use crate::linalg::Mat;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub struct HomGroup {
    source: FinModule,
    target: FinModule,
    pres: CokernelPresentation,
    gcds: Vec<u64>,
}

impl HomGroup {
    pub fn new(source: &FinModule, target: &FinModule) -> Result<HomGroup> {
        if source.modulus() != target.modulus() {
            return Err(Error::ModulusMismatch {
                left: source.modulus(),
                right: target.modulus(),
            });
        }
        let (k, l) = (source.rank(), target.rank());
        let n = k * l;
        let mut gcds = vec![0u64; n];
        let mut relations = Mat::zeros(n, n);
        for i in 0..k {
            for j in 0..l {
                let g = gcd(source.factor(i), target.factor(j));
                gcds[i * l + j] = g;
                relations[(i * l + j, i * l + j)] = g as i128;
            }
        }
        let pres = cokernel(n, &relations, source.modulus());
        Ok(HomGroup { source: source.clone(), target: target.clone(), pres, gcds })
    }

    /// The Hom group in invariant-factor form.
    pub fn group(&self) -> &FinModule {
        &self.pres.module
    }

    pub fn source(&self) -> &FinModule {
        &self.source
    }

    pub fn target(&self) -> &FinModule {
        &self.target
    }

    /// The additive map indexed by an element of [`HomGroup::group`].
    pub fn to_map(&self, h: &[i64]) -> ModuleMap {
        let (k, l) = (self.source.rank(), self.target.rank());
        let c = self.pres.lift(h);
        let rows: Vec<Vec<i64>> = (0..l)
            .map(|j| {
                let e = self.target.factor(j) as i128;
                (0..k)
                    .map(|i| {
                        let g = self.gcds[i * l + j] as i128;
                        let scale = e / g;
                        ((c[i * l + j] * scale).rem_euclid(e)) as i64
                    })
                    .collect()
            })
            .collect();
        ModuleMap::new(self.source.clone(), self.target.clone(), rows)
            .expect("indexed hom is well defined")
    }

    /// The index of an additive map; inverse of [`HomGroup::to_map`].
    pub fn from_map(&self, f: &ModuleMap) -> Elem {
        assert_eq!(f.domain(), &self.source, "map with wrong source");
        assert_eq!(f.codomain(), &self.target, "map with wrong target");
        let (k, l) = (self.source.rank(), self.target.rank());
        let mut raw = vec![0i128; k * l];
        for i in 0..k {
            for j in 0..l {
                let e = self.target.factor(j) as i128;
                let g = self.gcds[i * l + j] as i128;
                let scale = e / g;
                let entry = f.entry(j, i) as i128;
                debug_assert_eq!(entry % scale, 0, "well-defined maps divide the scale");
                raw[i * l + j] = entry / scale;
            }
        }
        self.pres.project(&raw)
    }

    /// Every additive map, indexed by the canonical element order.
    pub fn maps(&self) -> impl Iterator<Item = ModuleMap> + '_ {
        self.group().elements().map(|h| self.to_map(&h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_of_cyclic_groups_is_the_gcd() {
        // Hom(Z/2, Z/4) over Z/4 is Z/2 with the nonzero map 1 -> 2
        let z2 = FinModule::new(4, vec![2]).unwrap();
        let z4 = FinModule::base(4);
        let hom = HomGroup::new(&z2, &z4).unwrap();
        assert_eq!(hom.group().factors(), &[2]);
        let maps: Vec<ModuleMap> = hom.maps().collect();
        assert_eq!(maps.len(), 2);
        assert!(maps.iter().any(|f| f.apply(&[1]) == vec![2]));
        assert!(maps.iter().any(|f| f.is_zero_map()));
    }

    #[test]
    fn hom_of_z4_endomorphisms() {
        let z4 = FinModule::base(4);
        let hom = HomGroup::new(&z4, &z4).unwrap();
        assert_eq!(hom.group().factors(), &[4]);
    }

    #[test]
    fn hom_from_klein_four_to_z2() {
        let v = FinModule::new(2, vec![2, 2]).unwrap();
        let z2 = FinModule::base(2);
        let hom = HomGroup::new(&v, &z2).unwrap();
        assert_eq!(hom.group().cardinality(), 4);
        assert_eq!(hom.group().factors(), &[2, 2]);
    }

    #[test]
    fn indexing_round_trips() {
        let m = FinModule::new(4, vec![2, 4]).unwrap();
        let n = FinModule::new(4, vec![4]).unwrap();
        let hom = HomGroup::new(&m, &n).unwrap();
        for h in hom.group().elements() {
            let f = hom.to_map(&h);
            assert_eq!(hom.from_map(&f), h);
        }
        // distinct indices give distinct maps
        let all: std::collections::BTreeSet<ModuleMap> = hom.maps().collect();
        assert_eq!(all.len() as u128, hom.group().cardinality());
    }

    #[test]
    fn rejects_modulus_mismatch() {
        let a = FinModule::base(2);
        let b = FinModule::base(4);
        assert!(HomGroup::new(&a, &b).is_err());
    }
}
