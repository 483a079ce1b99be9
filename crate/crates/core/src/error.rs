//! Error and law-report types shared across the crate.

/// A failed law check: which law, the basis/generator indices it failed at,
/// and both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Identifier of the law in the standard numbering, e.g. `"Eq. 2.1"`.
    pub anchor: &'static str,
    /// Short label of the identity that failed, e.g. `"associativity"`.
    pub law: &'static str,
    /// Indices of the basis elements / generators witnessing the failure.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} ({}) violated at {:?}: {} != {}",
            self.anchor, self.law, self.indices, self.lhs, self.rhs
        )
    }
}

/// Outcome of a single law check: pass, or the first violation found under
/// the canonical iteration order.
pub type LawReport = std::result::Result<(), Violation>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("value does not live in the expected ambient module")]
    AmbientMismatch,
    #[error("invalid module description: {0}")]
    InvalidModule(String),
    #[error("invalid map description: {0}")]
    InvalidMap(String),
    #[error("size limit exceeded: {what} has size {size}, bound is {bound}")]
    BoundExceeded { what: &'static str, size: usize, bound: usize },
    #[error("ideal is not a member of the filter")]
    NotInFilter,
    #[error("not a proper submodule")]
    NotProperSubmodule,
    #[error("source module is not torsion free")]
    NotTorsionFree,
    #[error("invalid derivation: {0}")]
    InvalidDerivation(Violation),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("internal invariant violated: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Anchor tags used in law reports. The values are the equation and theorem
/// numbers of the standard write-up of this material, kept stable so reports
/// can be grepped and diffed.
pub mod anchor {
    pub const MONAD_LAWS: &str = "Eq. 2.1";
    pub const EM_MODULE: &str = "Eq. 2.2";
    pub const FREE_FUNCTOR: &str = "Eq. 2.3";
    pub const ADJUNCTION: &str = "Eq. 2.4";
    pub const RADICAL: &str = "Eq. 2.5";
    pub const TORSION_CLASSES: &str = "Eq. 2.6";
    pub const FILTER_OF_RADICAL: &str = "Eq. 2.7";
    pub const FILTER_AXIOMS: &str = "Prop 2.2";
    pub const GENERATORS: &str = "Prop 3.1";
    pub const DERIVATION: &str = "Eq. 3.1";
    pub const INVARIANT_IDEAL: &str = "Eq. 3.2";
    pub const TORSION_MEMBERSHIP: &str = "Eq. 3.3";
    pub const TORSION_SUBOBJECT: &str = "Eq. 3.4";
    pub const MODULE_DERIVATION: &str = "Eq. 3.5";
    pub const DELTA_INVARIANCE: &str = "Thm 3.4";
    pub const DIFFERENTIAL: &str = "Def 3.6";
    pub const ALL_DIFFERENTIAL: &str = "Thm 3.7";
    pub const QUOTIENT_MODULE: &str = "Eq. 4.1";
    pub const CANONICAL_MAP: &str = "Eq. 4.2";
    pub const EXTENSION: &str = "Lemma 4.1";
    pub const EXTENSION_MAP: &str = "Eq. 4.8";
    pub const LIFT: &str = "Eq. 4.9";
    pub const EXTENSION_IS_DERIVATION: &str = "Thm 4.3";
    pub const UNIQUE_LIFT: &str = "Thm 4.4";
    pub const GENERAL_LIFT: &str = "Eq. 4.12";
    pub const GENERAL_UNIQUE_LIFT: &str = "Thm 4.5";
    pub const LEFT_EXACT: &str = "§4";
}
