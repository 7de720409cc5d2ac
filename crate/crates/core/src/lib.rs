//! Exact computations with the fusion categories `C(g, q, l)` attached to the
//! exceptional Lie types G2, F4, E6, E7 and E8 at roots of unity.
//!
//! Everything that feeds a decision is computed in exact arithmetic: elements
//! of cyclotomic fields are vectors of big rationals in the power basis, root
//! system data is integral, and the braid-image verdicts are derived from
//! eigenvalue spectra without ever rounding. Floating point appears only in
//! [`cyclo::CycloNumber::embed`], which exists for display and numeric
//! cross-checks.
//!
//! The crate is organised around the pipeline
//!
//! * [`cyclo`] — the field `Q(zeta_N)`,
//! * [`rootdata`] / [`freudenthal`] — exceptional root systems and weight
//!   multiplicities,
//! * [`category`] — alcove label sets, q-numbers, Frobenius–Perron dimensions
//!   and the weak-integrality classifier,
//! * [`fusion`] — classical and truncated tensor decompositions,
//! * [`braid`] — twists and braiding eigenvalue spectra,
//! * [`finiteness`] — the projective-order decision cascade and the per-case
//!   analysis pipeline,
//! * [`matrixrep`] — the explicit 4-dimensional braid matrices used to settle
//!   the cases the cascade leaves open.

pub mod braid;
pub mod category;
pub mod cyclo;
pub mod finiteness;
pub mod freudenthal;
pub mod fusion;
pub mod laurent;
pub mod linalg;
pub mod matrixrep;
pub mod rootdata;

use std::fmt;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Laurent polynomials with integer coefficients.
pub type IntLaurent = laurent::LaurentPoly<Int>;
/// Laurent polynomials with rational coefficients.
pub type RatLaurent = laurent::LaurentPoly<Rat>;
/// Square matrices over a cyclotomic field.
pub type CycloMatrix = linalg::Matrix<cyclo::CycloNumber>;

pub use cyclo::CycloNumber;
pub use rootdata::{Algebra, RootSystem, Weight};

/// Errors surfaced by the public operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("galois exponent {j} is not coprime to the conductor {n}")]
    GaloisNotCoprime { j: u64, n: u64 },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight system of {weight} has {dim} weights, exceeding the bound {bound}")]
    SizeBound { weight: Weight, dim: u64, bound: u64 },
    #[error("ell = {0} is too small: the alcove is empty")]
    EmptyAlcove(u64),
    #[error("weight {0} is outside the alcove")]
    OutsideAlcove(Weight),
    #[error("tensor square is not multiplicity-free")]
    NotMultiplicityFree,
    #[error("negative accumulated multiplicity at {0} in a truncated decomposition")]
    NegativeMultiplicity(Weight),
    #[error("ell = {ell} is below the stable range for {algebra} (needs {min})")]
    StableRange { algebra: Algebra, ell: u64, min: u64 },
    #[error("braiding exponent {0} is not half-integral")]
    BadExponent(String),
    #[error("irreducibility evidence is required")]
    MissingEvidence,
    #[error("spectrum size {0} is outside 2..=5")]
    BadDimension(usize),
    #[error("spectrum does not match the matrix family: {0}")]
    SpectrumMismatch(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Internal red-flag errors signal an implementation bug rather than bad
    /// input; the CLI maps them to a distinct exit code.
    pub fn is_red_flag(&self) -> bool {
        matches!(
            self,
            Error::NegativeMultiplicity(_) | Error::SpectrumMismatch(_) | Error::Internal(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Euler's totient, by trial division.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Greatest common divisor of two non-negative integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Least common multiple.
pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Newtype wrapper printing a slice of integers as `[a, b, c]`.
pub(crate) struct DisplayVec<'a>(pub &'a [i64]);

impl fmt::Display for DisplayVec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
