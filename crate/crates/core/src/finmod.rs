//! Finite `Z/m`-modules in invariant-factor form and their additive maps.
//!
//! A [`FinModule`] is a product `Z/d_1 x ... x Z/d_k` with `d_1 | d_2 | ...`
//! and every `d_i` dividing the ambient modulus `m`. Elements are coefficient
//! vectors reduced modulo the factors. These are the objects of the base
//! category; maps between them are integer matrices modulo the codomain
//! factors.

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::linalg::{smith, Mat};

/// Coefficient vector of a module element, reduced modulo the factors.
pub type Elem = Vec<i64>;

pub fn fmt_elem(x: &[i64]) -> String {
    let body: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", body.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinModule {
    modulus: u64,
    factors: Vec<u64>,
}

impl FinModule {
    pub fn new(modulus: u64, factors: Vec<u64>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModule(format!("modulus {modulus} must be at least 2")));
        }
        for &d in &factors {
            if d < 2 {
                return Err(Error::InvalidModule(format!("invariant factor {d} must exceed 1")));
            }
            if modulus % d != 0 {
                return Err(Error::InvalidModule(format!(
                    "invariant factor {d} does not divide the modulus {modulus}"
                )));
            }
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidModule(format!(
                    "invariant factors must form a divisibility chain: {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(FinModule { modulus, factors })
    }

    /// The zero module over `Z/m`.
    pub fn zero(modulus: u64) -> Self {
        FinModule { modulus, factors: Vec::new() }
    }

    /// The ground ring `k = Z/m` as a module over itself.
    pub fn base(modulus: u64) -> Self {
        FinModule { modulus, factors: vec![modulus] }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> u64 {
        self.factors[i]
    }

    pub fn cardinality(&self) -> u128 {
        self.factors.iter().map(|&d| d as u128).product()
    }

    pub fn is_zero_module(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn reduce(&self, v: &[i128]) -> Elem {
        assert_eq!(v.len(), self.rank(), "coordinate count mismatch");
        v.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| x.rem_euclid(d as i128) as i64)
            .collect()
    }

    pub fn reduce_i64(&self, v: &[i64]) -> Elem {
        let wide: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        self.reduce(&wide)
    }

    pub fn zero_elem(&self) -> Elem {
        vec![0; self.rank()]
    }

    pub fn generator(&self, i: usize) -> Elem {
        let mut e = self.zero_elem();
        e[i] = 1;
        e
    }

    pub fn is_element(&self, x: &[i64]) -> bool {
        x.len() == self.rank()
            && x.iter().zip(&self.factors).all(|(&v, &d)| 0 <= v && (v as u64) < d)
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Elem {
        let sum: Vec<i128> = x.iter().zip(y).map(|(&a, &b)| a as i128 + b as i128).collect();
        self.reduce(&sum)
    }

    pub fn sub(&self, x: &[i64], y: &[i64]) -> Elem {
        let diff: Vec<i128> = x.iter().zip(y).map(|(&a, &b)| a as i128 - b as i128).collect();
        self.reduce(&diff)
    }

    pub fn neg(&self, x: &[i64]) -> Elem {
        let n: Vec<i128> = x.iter().map(|&a| -(a as i128)).collect();
        self.reduce(&n)
    }

    pub fn scalar_mul(&self, c: i64, x: &[i64]) -> Elem {
        let s: Vec<i128> = x.iter().map(|&a| c as i128 * a as i128).collect();
        self.reduce(&s)
    }

    pub fn is_zero_elem(&self, x: &[i64]) -> bool {
        x.iter().all(|&v| v == 0)
    }

    /// All elements, last coordinate varying fastest. Unbounded; callers that
    /// honor enumeration bounds go through [`FinModule::enumerate_elements`].
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let card = self.cardinality();
        assert!(card <= usize::MAX as u128, "module too large to enumerate");
        (0..card as usize).map(move |mut idx| {
            let mut e = self.zero_elem();
            for i in (0..self.rank()).rev() {
                let d = self.factors[i] as usize;
                e[i] = (idx % d) as i64;
                idx /= d;
            }
            e
        })
    }

    pub fn enumerate_elements(&self, bounds: &Bounds) -> Result<Vec<Elem>> {
        let card = self.cardinality();
        if card > bounds.max_elements as u128 {
            return Err(Error::BoundExceeded {
                what: "element enumeration",
                size: card.min(usize::MAX as u128) as usize,
                bound: bounds.max_elements,
            });
        }
        Ok(self.elements().collect())
    }

    /// The direct power `M^r`, laid out so that copy `j` of factor `i` sits
    /// at slot `i*r + j`; this keeps the invariant factors in chain order.
    pub fn power(&self, r: usize) -> FinModule {
        let mut factors = Vec::with_capacity(self.rank() * r);
        for &d in &self.factors {
            factors.extend(std::iter::repeat(d).take(r));
        }
        FinModule { modulus: self.modulus, factors }
    }

    /// Slot of (factor `i`, copy `j`) in the [`FinModule::power`] layout.
    pub fn power_slot(i: usize, j: usize, r: usize) -> usize {
        i * r + j
    }
}

/// An additive map between finite modules, stored as an integer matrix with
/// column `b` the image of the `b`-th canonical generator of the domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleMap {
    domain: FinModule,
    codomain: FinModule,
    matrix: Vec<Elem>,
}

impl ModuleMap {
    pub fn new(domain: FinModule, codomain: FinModule, rows: Vec<Vec<i64>>) -> Result<Self> {
        if domain.modulus() != codomain.modulus() {
            return Err(Error::ModulusMismatch {
                left: domain.modulus(),
                right: codomain.modulus(),
            });
        }
        if rows.len() != codomain.rank() || rows.iter().any(|r| r.len() != domain.rank()) {
            return Err(Error::InvalidMap(format!(
                "matrix must be {}x{}",
                codomain.rank(),
                domain.rank()
            )));
        }
        let matrix: Vec<Elem> = rows
            .iter()
            .enumerate()
            .map(|(a, row)| {
                let e = codomain.factor(a) as i128;
                row.iter().map(|&v| (v as i128).rem_euclid(e) as i64).collect()
            })
            .collect();
        // well-definedness: the order of each generator kills its image
        for b in 0..domain.rank() {
            let d = domain.factor(b) as i128;
            for a in 0..codomain.rank() {
                let e = codomain.factor(a) as i128;
                if (d * matrix[a][b] as i128) % e != 0 {
                    return Err(Error::InvalidMap(format!(
                        "column {b} is not killed by the generator order {d}"
                    )));
                }
            }
        }
        Ok(ModuleMap { domain, codomain, matrix })
    }

    /// Map given by the images of the domain generators.
    pub fn from_images(domain: FinModule, codomain: FinModule, images: &[Elem]) -> Result<Self> {
        assert_eq!(images.len(), domain.rank(), "one image per generator");
        let rows: Vec<Vec<i64>> = (0..codomain.rank())
            .map(|a| images.iter().map(|im| im[a]).collect())
            .collect();
        ModuleMap::new(domain, codomain, rows)
    }

    pub fn identity(m: &FinModule) -> Self {
        let rows: Vec<Vec<i64>> =
            (0..m.rank()).map(|a| (0..m.rank()).map(|b| i64::from(a == b)).collect()).collect();
        ModuleMap::new(m.clone(), m.clone(), rows).expect("identity map is well defined")
    }

    pub fn zero(domain: &FinModule, codomain: &FinModule) -> Self {
        let rows = vec![vec![0; domain.rank()]; codomain.rank()];
        ModuleMap::new(domain.clone(), codomain.clone(), rows).expect("zero map is well defined")
    }

    pub fn domain(&self) -> &FinModule {
        &self.domain
    }

    pub fn codomain(&self) -> &FinModule {
        &self.codomain
    }

    pub fn entry(&self, a: usize, b: usize) -> i64 {
        self.matrix[a][b]
    }

    pub fn rows(&self) -> &[Elem] {
        &self.matrix
    }

    /// Image of the `b`-th domain generator.
    pub fn column(&self, b: usize) -> Elem {
        self.matrix.iter().map(|row| row[b]).collect()
    }

    pub fn apply(&self, x: &[i64]) -> Elem {
        assert_eq!(x.len(), self.domain.rank(), "element not in the domain");
        let out: Vec<i128> = (0..self.codomain.rank())
            .map(|a| {
                self.matrix[a]
                    .iter()
                    .zip(x)
                    .map(|(&h, &v)| h as i128 * v as i128)
                    .sum::<i128>()
            })
            .collect();
        self.codomain.reduce(&out)
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &ModuleMap) -> ModuleMap {
        assert_eq!(
            inner.codomain, self.domain,
            "composition requires matching middle module"
        );
        let rows: Vec<Vec<i64>> = (0..self.codomain.rank())
            .map(|a| {
                (0..inner.domain.rank())
                    .map(|b| {
                        let acc: i128 = (0..self.domain.rank())
                            .map(|c| self.matrix[a][c] as i128 * inner.matrix[c][b] as i128)
                            .sum();
                        (acc % self.codomain.factor(a) as i128) as i64
                    })
                    .collect()
            })
            .collect();
        ModuleMap::new(inner.domain.clone(), self.codomain.clone(), rows)
            .expect("composite of well-defined maps is well defined")
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(self.domain, other.domain);
        assert_eq!(self.codomain, other.codomain);
        let rows: Vec<Vec<i64>> = (0..self.codomain.rank())
            .map(|a| {
                (0..self.domain.rank())
                    .map(|b| self.matrix[a][b] + other.matrix[a][b])
                    .collect()
            })
            .collect();
        ModuleMap::new(self.domain.clone(), self.codomain.clone(), rows)
            .expect("sum of well-defined maps is well defined")
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(self.domain, other.domain);
        assert_eq!(self.codomain, other.codomain);
        let rows: Vec<Vec<i64>> = (0..self.codomain.rank())
            .map(|a| {
                (0..self.domain.rank())
                    .map(|b| self.matrix[a][b] - other.matrix[a][b])
                    .collect()
            })
            .collect();
        ModuleMap::new(self.domain.clone(), self.codomain.clone(), rows)
            .expect("difference of well-defined maps is well defined")
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix.iter().all(|row| row.iter().all(|&v| v == 0))
    }

    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zeros(self.codomain.rank(), self.domain.rank());
        for a in 0..self.codomain.rank() {
            for b in 0..self.domain.rank() {
                m[(a, b)] = self.matrix[a][b] as i128;
            }
        }
        m
    }
}

/// `Z^n` modulo a relation lattice, brought to invariant-factor form, with an
/// explicit projection and an integer section of it.
pub struct CokernelPresentation {
    pub module: FinModule,
    /// `module.rank x n`: row `i` gives the `i`-th coordinate of the class map.
    project: Vec<Vec<i64>>,
    /// `n x module.rank`: integer lift of each module generator.
    section: Vec<Vec<i128>>,
}

impl CokernelPresentation {
    pub fn project(&self, x: &[i128]) -> Elem {
        let out: Vec<i128> = self
            .project
            .iter()
            .map(|row| row.iter().zip(x).map(|(&p, &v)| p as i128 * v).sum())
            .collect();
        self.module.reduce(&out)
    }

    pub fn project_i64(&self, x: &[i64]) -> Elem {
        let wide: Vec<i128> = x.iter().map(|&v| v as i128).collect();
        self.project(&wide)
    }

    pub fn lift(&self, q: &[i64]) -> Vec<i128> {
        assert_eq!(q.len(), self.module.rank());
        (0..self.section.len())
            .map(|a| self.section[a].iter().zip(q).map(|(&s, &v)| s * v as i128).sum())
            .collect()
    }

    /// Projection as a map out of a rank-`n` module with the given factors.
    pub fn projection_rows(&self) -> Vec<Vec<i64>> {
        self.project.clone()
    }
}

/// Present `Z^n / (rowspan(relations) + m Z^n)` in invariant-factor form.
pub fn cokernel(n: usize, relations: &Mat, modulus: u64) -> CokernelPresentation {
    assert_eq!(relations.cols, n, "relation rows must have length n");
    let mut scaled = Mat::zeros(n, n);
    for i in 0..n {
        scaled[(i, i)] = modulus as i128;
    }
    let full = relations.vstack(&scaled);
    let snf = smith(&full);
    // x lies in the lattice iff x*V == 0 mod diag(s); keep the coordinates
    // with s_i > 1
    let kept: Vec<usize> = (0..n).filter(|&i| snf.s[(i, i)] > 1).collect();
    let factors: Vec<u64> = kept.iter().map(|&i| snf.s[(i, i)] as u64).collect();
    let module = FinModule::new(modulus, factors).expect("smith chain is a valid factor chain");
    let project: Vec<Vec<i64>> = kept
        .iter()
        .map(|&i| {
            let s = snf.s[(i, i)];
            (0..n).map(|a| (snf.v[(a, i)].rem_euclid(s)) as i64).collect()
        })
        .collect();
    let section: Vec<Vec<i128>> =
        (0..n).map(|a| kept.iter().map(|&i| snf.v_inv[(i, a)]).collect()).collect();
    CokernelPresentation { module, project, section }
}
