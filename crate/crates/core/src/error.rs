use core::fmt;

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    ZeroDenominator,
    ZeroPrecision,
    /// Operands live in different rings `Z/p^k`.
    RingMismatch {
        left: (u64, usize),
        right: (u64, usize),
    },
    DigitOutOfRange { digit: u64, p: u64 },
    NotAUnit,
    EmptySequence,
    LengthMismatch { left: usize, right: usize },
    ModulusTooSmall(BigUint),
    ModulusAboveBound { modulus: u64, bound: u64 },
    DivisionByZeroPolynomial,
    NotMonic,
    DegreeExceedsPrime { degree: usize, p: u64 },
    /// `f(a)` is not divisible by `p^level`.
    NotARoot { level: u32 },
    /// `f'(a)` vanishes mod `p`, so the lift is not unique.
    SingularRoot { residue: BigUint },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::ZeroPrecision => f.write_str("precision must be at least 1"),
            Error::RingMismatch { left, right } => write!(
                f,
                "operands differ in prime or precision: Z/{}^{} vs Z/{}^{}",
                left.0, left.1, right.0, right.1
            ),
            Error::DigitOutOfRange { digit, p } => {
                write!(f, "digit {digit} is outside [0, {p})")
            }
            Error::NotAUnit => f.write_str("not a unit"),
            Error::EmptySequence => f.write_str("sequence is empty"),
            Error::LengthMismatch { left, right } => {
                write!(f, "sequence lengths differ: {left} vs {right}")
            }
            Error::ModulusTooSmall(m) => write!(f, "modulus {m} is smaller than 2"),
            Error::ModulusAboveBound { modulus, bound } => {
                write!(f, "modulus {modulus} exceeds the exhaustive-search bound {bound}")
            }
            Error::DivisionByZeroPolynomial => f.write_str("division by the zero polynomial"),
            Error::NotMonic => f.write_str("polynomial is not monic modulo p"),
            Error::DegreeExceedsPrime { degree, p } => {
                write!(f, "degree {degree} exceeds p = {p}")
            }
            Error::NotARoot { level } => write!(f, "not a root at level {level}"),
            Error::SingularRoot { residue } => {
                write!(f, "singular root {residue}: no unique lift")
            }
        }
    }
}

impl core::error::Error for Error {}
