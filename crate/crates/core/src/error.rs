use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate quadratic: leading coefficient is zero")]
    DegenerateQuadratic,
    #[error("division by zero{0}")]
    DivisionByZero(String),
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(String, String),
    #[error("singular curve (discriminant is zero)")]
    SingularCurve,
    #[error("bad reduction at p = {0}")]
    BadReduction(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {0} is inert (p is not 1 mod 4)")]
    InertPrime(u64),
    #[error("degenerate quartic (Jacobian discriminant is zero)")]
    DegenerateQuartic,
    #[error("pole: {0}")]
    Pole(String),
    #[error("on-shell point: P(u, lambda) vanishes")]
    OnShell,
    #[error("degenerate Gram matrix: zero diagonal entry at lambda = 0")]
    DegenerateGram,
    #[error("singular locus: {0} vanishes")]
    SingularLocus(&'static str),
    #[error("Hasse bound violated: a_p = {a_p}, p = {p}")]
    HasseViolation { a_p: i64, p: u64 },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("branch cut: {0}")]
    BranchCut(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not implemented: {0}")]
    NotImplemented(String),
    #[error("coupling b = sqrt({0}) is irrational")]
    IrrationalCoupling(String),
    #[error("curve {0} has no Weierstrass model")]
    MissingModel(String),
    #[error("catalogue: {0}")]
    Catalogue(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
