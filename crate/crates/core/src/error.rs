// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial vanishes at t = 1")]
    ValueAtOneIsZero,
    #[error("polynomial is not a power of an irreducible polynomial")]
    NotPrimePower,
    #[error("polynomial has a root at zero")]
    RootAtZero,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("degree {0} exceeds the supported factorization degree")]
    UnsupportedDegree(usize),
    #[error("dimension {dim} is smaller than the exterior power {power}")]
    DimensionTooSmall { dim: usize, power: usize },
    #[error("requested dimension {requested} exceeds the guard {limit}")]
    ResourceGuard { requested: usize, limit: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("block violates its kind condition: {0}")]
    InvalidKindCondition(String),
    #[error("pairing numerator is not coprime to the prime")]
    PairingNotCoprime,
    #[error("prime is not irreducible over Q")]
    NotIrreducible,
    #[error("annihilator normalization failed: {0}")]
    NormalizationFailure(String),
    #[error("class index is not sorted")]
    NotSorted,
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("division by zero in number field")]
    DivisionByZero,
    #[error("element belongs to a different ring")]
    RingMismatch,
    #[error("permutation is not in the stabilizer of the class")]
    NotInStabilizer,
    #[error("element belongs to a different module")]
    ModuleMismatch,
    #[error("linking {0} is incompatible with the pairing of its labels")]
    IncompatibleLinkings(String),
    #[error("root is not a root of its prime or is 0 or 1")]
    InvalidRoot,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal cross-check failed: {0}")]
    Internal(String),
}
