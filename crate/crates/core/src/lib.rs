//! Exact verification machinery for torsion theories and localization over
//! finite algebras.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: integer matrices, Hermite and Smith normal forms;
//! - [`finmod`] / [`submodule`] / [`hom`]: finite `Z/m`-modules, their
//!   submodule lattices, quotients and Hom groups;
//! - [`algebra`] / [`em`]: finite free algebras, the induced monad and its
//!   modules, law checking and derivations;
//! - [`torsion`]: left-ideal lattices, Gabriel filters, torsion radicals and
//!   the invariance/differentiality checks;
//! - [`quotients`]: modules of quotients, the canonical map into them and
//!   the unique extension of derivations.
//!
//! All arithmetic is exact; every enumeration is bounded and deterministic.

pub mod algebra;
pub mod bounds;
pub mod em;
pub mod error;
pub mod finmod;
pub mod fixtures;
pub mod hom;
pub mod linalg;
pub mod quotients;
pub mod submodule;
pub mod torsion;

pub use algebra::{check_leibniz, check_monad_laws, Algebra, AlgebraDerivation};
pub use bounds::Bounds;
pub use em::{
    adjunction_bijection, check_derivation, check_em_module, check_em_morphism,
    check_generator_instance, check_module_derivation, em_hom, em_quotient, em_submodule,
    enumerate_em_submodules, enumerate_module_derivations, free_module, regular, EmModule,
    EmQuotient, EmSubmodule, ModuleDerivation, ShortExactSequence,
};
pub use error::{anchor, Error, LawReport, Result, Violation};
pub use finmod::{Elem, FinModule, ModuleMap};
pub use hom::HomGroup;
pub use quotients::{
    check_h_left_exact, check_lift, colimit_hom, extend_derivation, extend_derivation_general,
    extend_with_choice, induced_map, min_ideal, module_of_quotients, valid_invariant_choices,
    verify_unique_lift, GeneralExtension, LiftIndex, QuotientModule, RawColimit, UniqueLift,
};
pub use submodule::{enumerate_subgroups, quotient, Submodule};
pub use torsion::{
    annihilator, check_delta_invariance, check_differential, delta_invariant_ideal,
    differential_on_radical, enumerate_gabriel_filters, enumerate_left_ideals,
    gabriel_filter_of_radical, is_gabriel_filter, is_torsion, torsion_radical, torsion_theory,
    GabrielFilter, TorsionClass, TorsionTheory,
};
