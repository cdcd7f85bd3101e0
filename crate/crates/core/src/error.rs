use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of order {q} exceeds the cap {cap}")]
    FieldTooLarge { q: String, cap: u64 },
    #[error("no primitive polynomial of degree {m} over F_{p} found")]
    NoPrimitivePolynomialFound { p: u64, m: u32 },
    #[error("invalid field parameters: {0}")]
    InvalidParameters(String),
    #[error("the zero element has no coset index")]
    ZeroElement,
    #[error("{divisor} does not divide {of}")]
    NotADivisor { divisor: String, of: String },
    #[error("operation needs discrete-log tables, which were not built for this field")]
    TablesUnavailable,

    #[error("Gaussian periods are not all exact integers")]
    InexactPeriods,
    #[error("period certificate failed: {0}")]
    CertificateFailed(String),

    #[error("Γ({k},{q}) is directed: needs q even or k | (q-1)/2")]
    DirectedGraph { k: u64, q: String },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("spectrum is not exact")]
    InexactSpectrum,
    #[error("spectrum does not have exactly three distinct eigenvalues")]
    NotSrg,
    #[error("spectrum is not that of a semiprimitive graph: {0}")]
    NotSemiprimitiveSpectrum(String),
    #[error("Ihara zeta is degenerate for degree {0} <= 2")]
    DegenerateDegree(String),
    #[error("oracle paths disagree: {0}")]
    OracleDisagreement(String),
    #[error("closed form mismatch: {0}")]
    ClosedFormMismatch(String),
    #[error("spectrum invariant violated: {0}")]
    InvariantViolated(String),

    #[error("({k}, {p}^{m}) is not a semiprimitive pair")]
    NotSemiprimitive { k: u64, p: u64, m: u32 },
    #[error("m = {0} is odd")]
    OddM(u32),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("q = {0} is too small")]
    QTooSmall(String),
    #[error("q = 9 is excluded")]
    ExcludedQ,
    #[error("no solution to the representation problem: {0}")]
    NoSolution(String),
    #[error("inexact division in {what}")]
    InexactDivision { what: &'static str },

    #[error("bridge inapplicable: N = gcd((q-1)/(p-1), k) = {n_gcd} differs from k = {k}")]
    BridgeInapplicable { k: u64, n_gcd: u64 },
    #[error("invalid weight distribution: {0}")]
    InvalidWeights(String),
}

pub type Result<T> = std::result::Result<T, Error>;
