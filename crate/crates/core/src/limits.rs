use serde::{Deserialize, Serialize};

/// Resource ceilings shared by the exhaustive kernels.
///
/// Exceeding any of these is reported as [`Error::Ceiling`](crate::Error::Ceiling),
/// never as a silently truncated result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest field cardinality `p^m` that may be constructed.
    pub field_size: u64,
    /// Largest number of candidate tuples scanned by point enumeration.
    pub max_points: u64,
    /// Largest number of messages visited by exhaustive distance search.
    pub max_codewords: u64,
    /// Largest number of S-pairs Buchberger's algorithm may process.
    pub gb_pair_limit: usize,
    /// Largest number of monomials enumerated for footprint checks.
    pub max_monomials: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            field_size: 1 << 16,
            max_points: 100_000_000,
            max_codewords: 1 << 24,
            gb_pair_limit: 500_000,
            max_monomials: 5_000_000,
        }
    }
}
