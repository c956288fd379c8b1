use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least 2, got {0}")]
    ExponentTooSmall(u32),
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("cyclic group order must be positive")]
    EmptyGroup,
    #[error("group order overflows u64")]
    OrderOverflow,
    #[error("element (s^{a} r^{b}) is not canonical for this group")]
    NonCanonical { a: u8, b: u64 },
    #[error("operation requires the group G(k,p)")]
    NotSemidihedral,
    #[error("graphs have different vertex labels")]
    LabelMismatch,
    #[error("matrix order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("matrix dimensions do not conform: {0}")]
    Dimension(&'static str),
    #[error("interpolated coefficient of x^{0} is not an integer")]
    NonIntegral(usize),
    #[error("every sample point made the lower-right block singular")]
    AllPointsSingular,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("multiplicities sum to {got}, expected {expected}")]
    MultiplicitySum { got: u64, expected: u64 },
}
