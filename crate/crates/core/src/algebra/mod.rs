//! Exact coefficient rings, exponent monoids with quotient rules, sparse monoid-ring
//! polynomials, Smith normal form and factorization.

mod coeff;
mod monoid;
mod poly;
mod snf;

pub use coeff::{Coeff, Gaussian};
pub use monoid::{render_exp, same_sig, Axis, Domain, MonoidElem, MonoidSig, PrimeBlock, Rule, Sig, SigBuilder};
pub use poly::{MRPoly, Specialization};
pub use snf::{factorize, smith_normal_form, IntMatrix, Smith};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("signature error: {0}")]
    Signature(String),
    #[error("unknown axis {0}")]
    UnknownAxis(String),
    #[error("missing assignment for {0}")]
    MissingAssignment(String),
    #[error("inversion error: {0}")]
    Inversion(String),
    #[error("coefficient mode error: {0}")]
    Mode(String),
    #[error("quotient rule not respected: {0}")]
    RuleViolation(String),
}

/// Integer-coefficient polynomial, the default home of invariants.
pub type ZPoly = MRPoly<BigInt>;
/// Rational-coefficient polynomial.
pub type QPoly = MRPoly<BigRational>;
/// Gaussian-integer-coefficient polynomial.
pub type GPoly = MRPoly<Gaussian>;

/// Polynomial ring on natural-exponent generators with the given names.
pub fn poly_ring(names: &[&str]) -> Sig {
    MonoidSig::builder().naturals(names.iter().copied()).build().expect("generator names are distinct")
}
