//! Built-in algebras, derivations and module corpora used by the test and
//! verification suites.

use crate::algebra::{Algebra, AlgebraDerivation};
use crate::bounds::Bounds;
use crate::em::{
    em_quotient, em_submodule, enumerate_em_submodules, free_module, regular, EmModule,
    ShortExactSequence,
};
use crate::error::Result;
use crate::finmod::FinModule;
use crate::submodule::Submodule;

/// Dual numbers over F2: basis `{1, x}` with `x^2 = 0`.
pub fn dual_numbers() -> Algebra {
    Algebra::new(
        2,
        vec![1, 0],
        vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![0, 0]],
        ],
    )
    .expect("dual numbers are a valid algebra")
}

/// `d/dx` on the dual numbers: `1 -> 0`, `x -> 1`.
pub fn dual_numbers_ddx() -> AlgebraDerivation {
    AlgebraDerivation::new(&dual_numbers(), vec![vec![0, 1], vec![0, 0]])
        .expect("d/dx has the right shape")
}

/// Upper-triangular 2x2 matrices over F2: basis `{e11, e12, e22}`.
pub fn upper_triangular() -> Algebra {
    let z = vec![0, 0, 0];
    let e11 = vec![1, 0, 0];
    let e12 = vec![0, 1, 0];
    let e22 = vec![0, 0, 1];
    Algebra::new(
        2,
        vec![1, 0, 1],
        vec![
            vec![e11.clone(), e12.clone(), z.clone()],
            vec![z.clone(), z.clone(), e12.clone()],
            vec![z.clone(), z.clone(), e22.clone()],
        ],
    )
    .expect("upper triangular matrices are a valid algebra")
}

/// The inner derivation `ad(e11)` on the upper-triangular algebra.
pub fn upper_triangular_ad_e11() -> AlgebraDerivation {
    AlgebraDerivation::inner(&upper_triangular(), &[1, 0, 0])
}

/// `Z/4` as a rank-one algebra over itself.
pub fn z4() -> Algebra {
    Algebra::new(4, vec![1], vec![vec![vec![1]]]).expect("Z/4 is a valid algebra")
}

/// The split ring `F2 x F2` with its orthogonal idempotent basis.
pub fn f2xf2() -> Algebra {
    Algebra::new(
        2,
        vec![1, 1],
        vec![
            vec![vec![1, 0], vec![0, 0]],
            vec![vec![0, 0], vec![0, 1]],
        ],
    )
    .expect("F2 x F2 is a valid algebra")
}

/// A named verification scenario: the algebra, its available derivations,
/// a module corpus and the base objects fed to the adjunction checks.
pub struct Fixture {
    pub name: &'static str,
    pub algebra: Algebra,
    pub derivations: Vec<AlgebraDerivation>,
    pub corpus: Vec<(String, EmModule)>,
    pub base_objects: Vec<(String, FinModule)>,
}

fn build_corpus(algebra: &Algebra, bounds: &Bounds) -> Result<Vec<(String, EmModule)>> {
    let reg = regular(algebra);
    let mut corpus = vec![("A".to_string(), reg.clone())];
    for (i, ideal) in enumerate_em_submodules(&reg, bounds)?.iter().enumerate() {
        let q = em_quotient(&reg, ideal)?;
        corpus.push((format!("A/I{i}"), q.module));
    }
    let plane = FinModule::base(algebra.modulus()).power(2);
    corpus.push(("free(k^2)".to_string(), free_module(algebra, &plane)?));
    Ok(corpus)
}

fn build_base_objects(modulus: u64) -> Vec<(String, FinModule)> {
    let mut out = vec![
        ("0".to_string(), FinModule::zero(modulus)),
        ("k".to_string(), FinModule::base(modulus)),
        ("k^2".to_string(), FinModule::base(modulus).power(2)),
    ];
    if modulus == 4 {
        out.push((
            "Z/2".to_string(),
            FinModule::new(4, vec![2]).expect("Z/2 is a valid Z/4-module"),
        ));
    }
    out
}

fn make(
    name: &'static str,
    algebra: Algebra,
    named_derivation: Option<AlgebraDerivation>,
    bounds: &Bounds,
) -> Result<Fixture> {
    let mut derivations = vec![AlgebraDerivation::zero(&algebra)];
    if let Some(d) = named_derivation {
        if !d.is_zero() {
            derivations.push(d);
        }
    }
    let corpus = build_corpus(&algebra, bounds)?;
    let base_objects = build_base_objects(algebra.modulus());
    Ok(Fixture { name, algebra, derivations, corpus, base_objects })
}

/// The four standard fixtures.
pub fn all() -> Vec<Fixture> {
    let bounds = Bounds::default();
    vec![
        make("dual_numbers", dual_numbers(), Some(dual_numbers_ddx()), &bounds)
            .expect("dual number fixture builds"),
        make(
            "upper_triangular",
            upper_triangular(),
            Some(upper_triangular_ad_e11()),
            &bounds,
        )
        .expect("upper triangular fixture builds"),
        make("z4", z4(), None, &bounds).expect("Z/4 fixture builds"),
        make("f2xf2", f2xf2(), None, &bounds).expect("F2 x F2 fixture builds"),
    ]
}

/// The short exact sequence `0 -> S -> M -> M/S -> 0` for an action-closed
/// subgroup.
pub fn submodule_ses(m: &EmModule, s: &Submodule) -> Result<ShortExactSequence> {
    let sub = em_submodule(m, s)?;
    let quo = em_quotient(m, s)?;
    let ses = ShortExactSequence {
        sub: sub.module,
        mid: m.clone(),
        quo: quo.module,
        include: sub.include,
        project: quo.proj,
    };
    ses.validate()?;
    Ok(ses)
}
