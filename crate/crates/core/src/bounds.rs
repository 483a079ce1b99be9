//! Enumeration bounds. Exceeding a bound is an error, never silent
//! truncation: the exhaustive oracles must be total or fail loudly.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest module whose elements may be listed exhaustively.
    pub max_elements: usize,
    /// Largest ambient module for subgroup / ideal lattice enumeration.
    pub max_subgroup_ambient: usize,
    /// Largest ideal lattice for which all upward-closed candidate
    /// collections are tested during filter enumeration.
    pub max_ideal_lattice: usize,
    /// Largest solution set enumerated when solving the module-derivation
    /// law; solution sets are cosets in an endomorphism group and can exceed
    /// the carrier size.
    pub max_derivation_solutions: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_elements: 4096,
            max_subgroup_ambient: 256,
            max_ideal_lattice: 20,
            max_derivation_solutions: 1 << 17,
        }
    }
}
