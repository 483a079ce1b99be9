//! Finite free algebras over `Z/m` given by structure constants, and their
//! derivations.
//!
//! An [`Algebra`] is free of rank `r` as a `Z/m`-module, with basis products
//! recorded in a structure-constant table. Its underlying module (the
//! carrier of the regular representation) is `k^r` with `k = Z/m`.

use crate::error::{anchor, Error, LawReport, Result, Violation};
use crate::finmod::{fmt_elem, Elem, FinModule, ModuleMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    modulus: u64,
    rank: usize,
    unit: Elem,
    table: Vec<Vec<Elem>>,
}

impl Algebra {
    pub fn new(modulus: u64, unit: Vec<i64>, table: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModule(format!("modulus {modulus} must be at least 2")));
        }
        let rank = unit.len();
        if rank == 0 {
            return Err(Error::InvalidModule("algebra rank must be at least 1".into()));
        }
        if table.len() != rank
            || table.iter().any(|row| row.len() != rank)
            || table.iter().flatten().any(|p| p.len() != rank)
        {
            return Err(Error::InvalidModule(format!(
                "structure constants must form an {rank}x{rank} table of vectors of length {rank}"
            )));
        }
        let m = modulus as i128;
        let red = |v: &[i64]| -> Elem { v.iter().map(|&x| (x as i128).rem_euclid(m) as i64).collect() };
        Ok(Algebra {
            modulus,
            rank,
            unit: red(&unit),
            table: table.iter().map(|row| row.iter().map(|p| red(p)).collect()).collect(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn one(&self) -> Elem {
        self.unit.clone()
    }

    /// The algebra as a module over `k`: the free module `k^r`.
    pub fn carrier(&self) -> FinModule {
        FinModule::base(self.modulus).power(self.rank)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Elem {
        &self.table[i][j]
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        e
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Elem {
        let mut out = vec![0i128; self.rank];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let coeff = ai as i128 * bj as i128;
                for (l, &c) in self.table[i][j].iter().enumerate() {
                    out[l] += coeff * c as i128;
                }
            }
        }
        self.carrier().reduce(&out)
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.carrier().elements().collect()
    }

    /// Left multiplication `x -> a*x` as a map on the carrier.
    pub fn left_mul_map(&self, a: &[i64]) -> ModuleMap {
        let carrier = self.carrier();
        let images: Vec<Elem> = (0..self.rank).map(|j| self.mul(a, &self.basis_elem(j))).collect();
        ModuleMap::from_images(carrier.clone(), carrier, &images)
            .expect("multiplication is well defined on the carrier")
    }

    /// Right multiplication `x -> x*a` as a map on the carrier.
    pub fn right_mul_map(&self, a: &[i64]) -> ModuleMap {
        let carrier = self.carrier();
        let images: Vec<Elem> = (0..self.rank).map(|j| self.mul(&self.basis_elem(j), a)).collect();
        ModuleMap::from_images(carrier.clone(), carrier, &images)
            .expect("multiplication is well defined on the carrier")
    }
}

/// Associativity and both unit identities on all basis combinations.
pub fn check_monad_laws(a: &Algebra) -> LawReport {
    for i in 0..a.rank {
        for j in 0..a.rank {
            for l in 0..a.rank {
                let lhs = a.mul(a.basis_product(i, j), &a.basis_elem(l));
                let rhs = a.mul(&a.basis_elem(i), a.basis_product(j, l));
                if lhs != rhs {
                    return Err(Violation {
                        anchor: anchor::MONAD_LAWS,
                        law: "associativity",
                        indices: vec![i, j, l],
                        lhs: fmt_elem(&lhs),
                        rhs: fmt_elem(&rhs),
                    });
                }
            }
        }
    }
    for i in 0..a.rank {
        let e = a.basis_elem(i);
        let left = a.mul(&a.unit, &e);
        if left != e {
            return Err(Violation {
                anchor: anchor::MONAD_LAWS,
                law: "left unit",
                indices: vec![i],
                lhs: fmt_elem(&left),
                rhs: fmt_elem(&e),
            });
        }
        let right = a.mul(&e, &a.unit);
        if right != e {
            return Err(Violation {
                anchor: anchor::MONAD_LAWS,
                law: "right unit",
                indices: vec![i],
                lhs: fmt_elem(&right),
                rhs: fmt_elem(&e),
            });
        }
    }
    Ok(())
}

/// A derivation candidate on the algebra, stored as the matrix of `d` on the
/// basis (column `j` is `d(e_j)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDerivation {
    rank: usize,
    matrix: Vec<Elem>,
}

impl AlgebraDerivation {
    pub fn new(algebra: &Algebra, rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = algebra.rank();
        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidMap(format!("derivation matrix must be {r}x{r}")));
        }
        let m = algebra.modulus() as i128;
        let matrix = rows
            .iter()
            .map(|row| row.iter().map(|&v| (v as i128).rem_euclid(m) as i64).collect())
            .collect();
        Ok(AlgebraDerivation { rank: r, matrix })
    }

    pub fn zero(algebra: &Algebra) -> Self {
        AlgebraDerivation { rank: algebra.rank(), matrix: vec![vec![0; algebra.rank()]; algebra.rank()] }
    }

    /// The inner derivation `ad(c): a -> c*a - a*c`.
    pub fn inner(algebra: &Algebra, c: &[i64]) -> Self {
        let carrier = algebra.carrier();
        let cols: Vec<Elem> = (0..algebra.rank())
            .map(|j| {
                let e = algebra.basis_elem(j);
                carrier.sub(&algebra.mul(c, &e), &algebra.mul(&e, c))
            })
            .collect();
        let matrix = (0..algebra.rank())
            .map(|a| (0..algebra.rank()).map(|j| cols[j][a]).collect())
            .collect();
        AlgebraDerivation { rank: algebra.rank(), matrix }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, a: usize, j: usize) -> i64 {
        self.matrix[a][j]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|row| row.iter().all(|&v| v == 0))
    }

    pub fn apply(&self, algebra: &Algebra, a: &[i64]) -> Elem {
        let out: Vec<i128> = (0..self.rank)
            .map(|l| {
                self.matrix[l]
                    .iter()
                    .zip(a)
                    .map(|(&m, &v)| m as i128 * v as i128)
                    .sum()
            })
            .collect();
        algebra.carrier().reduce(&out)
    }

    /// The derivation as a map on the algebra carrier.
    pub fn as_map(&self, algebra: &Algebra) -> ModuleMap {
        let carrier = algebra.carrier();
        ModuleMap::new(carrier.clone(), carrier, self.matrix.clone())
            .expect("derivation matrix is well defined on the free carrier")
    }
}

/// The Leibniz identity on all basis pairs.
pub fn check_leibniz(algebra: &Algebra, d: &AlgebraDerivation) -> LawReport {
    let carrier = algebra.carrier();
    for i in 0..algebra.rank() {
        for j in 0..algebra.rank() {
            let lhs = d.apply(algebra, algebra.basis_product(i, j));
            let rhs = carrier.add(
                &algebra.mul(&algebra.basis_elem(i), &d.apply(algebra, &algebra.basis_elem(j))),
                &algebra.mul(&d.apply(algebra, &algebra.basis_elem(i)), &algebra.basis_elem(j)),
            );
            if lhs != rhs {
                return Err(Violation {
                    anchor: anchor::DERIVATION,
                    law: "Leibniz rule",
                    indices: vec![i, j],
                    lhs: fmt_elem(&lhs),
                    rhs: fmt_elem(&rhs),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dual_numbers_pass_the_monad_laws() {
        let a = fixtures::dual_numbers();
        assert_eq!(check_monad_laws(&a), Ok(()));
    }

    #[test]
    fn broken_unit_is_witnessed() {
        // alter the table of the dual numbers so that x*x = 1; the unit laws
        // survive but associativity breaks at (x, x, x)
        let a = Algebra::new(
            2,
            vec![1, 0],
            vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 1], vec![1, 0]],
            ],
        )
        .unwrap();
        assert_eq!(check_monad_laws(&a), Ok(()));
        // now break the unit row itself
        let broken = Algebra::new(
            2,
            vec![1, 0],
            vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 0], vec![1, 0]],
            ],
        )
        .unwrap();
        let err = check_monad_laws(&broken).unwrap_err();
        assert_eq!(err.anchor, crate::error::anchor::MONAD_LAWS);
    }

    #[test]
    fn z4_passes() {
        let a = fixtures::z4();
        assert_eq!(check_monad_laws(&a), Ok(()));
    }

    #[test]
    fn d_dx_satisfies_leibniz() {
        let a = fixtures::dual_numbers();
        let d = fixtures::dual_numbers_ddx();
        assert_eq!(check_leibniz(&a, &d), Ok(()));
    }

    #[test]
    fn d_of_one_equal_one_is_rejected() {
        let a = fixtures::z4();
        let d = AlgebraDerivation::new(&a, vec![vec![1]]).unwrap();
        let err = check_leibniz(&a, &d).unwrap_err();
        assert_eq!(err.anchor, crate::error::anchor::DERIVATION);
        assert_eq!(err.indices, vec![0, 0]);
    }

    #[test]
    fn inner_derivation_satisfies_leibniz() {
        let a = fixtures::upper_triangular();
        let d = AlgebraDerivation::inner(&a, &[1, 0, 0]);
        assert_eq!(check_leibniz(&a, &d), Ok(()));
        assert_eq!(d, fixtures::upper_triangular_ad_e11());
    }

    #[test]
    fn multiplication_tables_act_correctly() {
        let a = fixtures::f2xf2();
        assert_eq!(a.mul(&[1, 0], &[1, 0]), vec![1, 0]);
        assert_eq!(a.mul(&[1, 0], &[0, 1]), vec![0, 0]);
        assert_eq!(a.mul(&a.one(), &[1, 1]), vec![1, 1]);
        let left = a.left_mul_map(&[1, 0]);
        assert_eq!(left.apply(&[1, 1]), vec![1, 0]);
    }
}
