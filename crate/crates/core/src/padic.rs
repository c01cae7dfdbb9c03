//! Valuations, exact p-adic norms, truncated p-adic integers and coherent
//! residue sequences.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{pow, reduce};
use crate::{Error, Prime, Result};

/// `ν_p(n)` for an integer `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    /// The valuation of zero.
    Infinite,
}

/// `ν_p(a/b)`, which may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RatValuation {
    Finite(i64),
    Infinite,
}

/// Exponent of the largest power of `p` dividing `n`; [`Valuation::Infinite`] for `n = 0`.
pub fn vp_int(n: &BigInt, p: Prime) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p.get());
    let mut m = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(e);
        }
        m = q;
        e += 1;
    }
}

pub fn vp_rat(numerator: &BigInt, denominator: &BigInt, p: Prime) -> Result<RatValuation> {
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(match (vp_int(numerator, p), vp_int(denominator, p)) {
        (Valuation::Infinite, _) => RatValuation::Infinite,
        (Valuation::Finite(a), Valuation::Finite(b)) => RatValuation::Finite(a as i64 - b as i64),
        (Valuation::Finite(_), Valuation::Infinite) => unreachable!("nonzero denominator"),
    })
}

/// An exact p-adic absolute value, stored as `p^exponent`.
///
/// Values with the same prime compare by exponent; values over different
/// primes fall back to comparing the exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PadicNorm {
    Zero,
    Power { p: Prime, exponent: i64 },
}

impl PadicNorm {
    pub fn from_valuation(v: RatValuation, p: Prime) -> Self {
        match v {
            RatValuation::Infinite => PadicNorm::Zero,
            RatValuation::Finite(e) => PadicNorm::Power { p, exponent: -e },
        }
    }

    pub fn to_rational(&self) -> BigRational {
        match *self {
            PadicNorm::Zero => BigRational::zero(),
            PadicNorm::Power { p, exponent } => {
                let power = BigInt::from(pow(p.get(), exponent.unsigned_abs() as u32));
                if exponent >= 0 {
                    BigRational::from_integer(power)
                } else {
                    BigRational::new(BigInt::one(), power)
                }
            }
        }
    }
}

impl Ord for PadicNorm {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PadicNorm::Zero, PadicNorm::Zero) => Ordering::Equal,
            (PadicNorm::Zero, _) => Ordering::Less,
            (_, PadicNorm::Zero) => Ordering::Greater,
            (
                PadicNorm::Power { p, exponent: a },
                PadicNorm::Power { p: q, exponent: b },
            ) if p == q => a.cmp(b),
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

impl PartialOrd for PadicNorm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PadicNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicNorm::Zero => f.write_str("0"),
            PadicNorm::Power { p, exponent } => write!(f, "{p}^{exponent}"),
        }
    }
}

/// `|a/b|_p = p^{-ν_p(a/b)}`, with `|0|_p = 0`.
pub fn abs_p(numerator: &BigInt, denominator: &BigInt, p: Prime) -> Result<PadicNorm> {
    vp_rat(numerator, denominator, p).map(|v| PadicNorm::from_valuation(v, p))
}

/// `|x|_p` for an exact rational.
pub fn norm_of(x: &BigRational, p: Prime) -> PadicNorm {
    abs_p(x.numer(), x.denom(), p).expect("BigRational has a nonzero denominator")
}

/// A p-adic integer known modulo `p^k`, stored as base-`p` digits
/// `a_0, ..., a_{k-1}` with `0 <= a_i < p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicInt {
    p: Prime,
    digits: Vec<u64>,
}

impl PadicInt {
    pub fn from_int(n: &BigInt, p: Prime, precision: u32) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        let residue = reduce(n, &pow(p.get(), precision));
        Ok(Self::from_residue(residue, p, precision))
    }

    pub fn from_digits(p: Prime, digits: Vec<u64>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::ZeroPrecision);
        }
        if let Some(&digit) = digits.iter().find(|&&d| d >= p.get()) {
            return Err(Error::DigitOutOfRange { digit, p: p.get() });
        }
        Ok(PadicInt { p, digits })
    }

    // `residue` must already lie in [0, p^precision).
    pub(crate) fn from_residue(mut residue: BigUint, p: Prime, precision: u32) -> Self {
        let base = BigUint::from(p.get());
        let digits = (0..precision)
            .map(|_| {
                let (q, r) = residue.div_rem(&base);
                residue = q;
                u64::try_from(&r).expect("digit below p")
            })
            .collect();
        PadicInt { p, digits }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.digits.len() as u32
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn modulus(&self) -> BigUint {
        pow(self.p.get(), self.precision())
    }

    /// `Σ a_i p^i` as an integer in `[0, p^k)`.
    pub fn value(&self) -> BigUint {
        let base = BigUint::from(self.p.get());
        self.digits
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &d| acc * &base + d)
    }

    pub fn is_unit(&self) -> bool {
        self.digits[0] != 0
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b, _| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b, m| a + m - b)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b, _| a * b)
    }

    /// Multiplicative inverse modulo `p^k`; fails with [`Error::NotAUnit`] when `a_0 = 0`.
    pub fn invert(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let m = self.modulus();
        let inverse = mod_inverse(&self.value(), &m).ok_or(Error::NotAUnit)?;
        Ok(Self::from_residue(inverse, self.p, self.precision()))
    }

    fn combine(
        &self,
        other: &Self,
        op: impl FnOnce(BigUint, BigUint, &BigUint) -> BigUint,
    ) -> Result<Self> {
        if self.p != other.p || self.digits.len() != other.digits.len() {
            return Err(Error::RingMismatch {
                left: (self.p.get(), self.digits.len()),
                right: (other.p.get(), other.digits.len()),
            });
        }
        let m = self.modulus();
        let r = op(self.value(), other.value(), &m) % &m;
        Ok(Self::from_residue(r, self.p, self.precision()))
    }
}

impl fmt::Display for PadicInt {
    /// Digits most significant first, e.g. `...244 (5-adic, k=3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("...")?;
        for (i, d) in self.digits.iter().rev().enumerate() {
            if i > 0 && self.p.get() > 10 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, " ({}-adic, k={})", self.p, self.digits.len())
    }
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&m).to_biguint()
}

/// Which compatibility condition a residue sequence `x_1, x_2, ...` must meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// `x_{n+1} ≡ x_n (mod p^n)`: term `x_n` is a residue mod `p^n` and the
    /// sequence is a point of the inverse limit of `Z/p^n`.
    #[default]
    Standard,
    /// `x_{n+1} ≡ x_n (mod p^{n+1})`, the literal reading of the digit-sequence
    /// definition when the first term is labelled `x_1`. One power stricter.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coherence {
    Coherent,
    /// Zero-based index of the first term that disagrees with its predecessor.
    BrokenAt(usize),
}

impl Coherence {
    pub fn is_coherent(self) -> bool {
        self == Coherence::Coherent
    }
}

/// Checks each adjacent pair of `terms`. Terms are plain integers; only
/// their differences matter.
///
/// Under [`Convention::Standard`] the term at zero-based index `i >= 1` must agree
/// with its predecessor modulo `p^i`, so `(2, 5, 14)` is 3-adically coherent
/// and `(2, 5, 15)` breaks at index 2.
pub fn check_coherent(terms: &[BigInt], p: Prime, convention: Convention) -> Result<Coherence> {
    if terms.is_empty() {
        return Err(Error::EmptySequence);
    }
    let shift = match convention {
        Convention::Standard => 0,
        Convention::Literal => 1,
    };
    for (i, pair) in terms.windows(2).enumerate() {
        let index = i + 1;
        let m = pow(p.get(), index as u32 + shift);
        if !reduce(&(&pair[1] - &pair[0]), &m).is_zero() {
            return Ok(Coherence::BrokenAt(index));
        }
    }
    Ok(Coherence::Coherent)
}

/// A validated coherent sequence under the standard convention: `x_n` is
/// known modulo `p^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherentSequence {
    p: Prime,
    terms: Vec<BigInt>,
}

impl CoherentSequence {
    pub fn new(p: Prime, terms: Vec<BigInt>) -> Result<Self, CoherenceError> {
        match check_coherent(&terms, p, Convention::Standard) {
            Ok(Coherence::Coherent) => Ok(CoherentSequence { p, terms }),
            Ok(Coherence::BrokenAt(i)) => Err(CoherenceError::BrokenAt(i)),
            Err(e) => Err(CoherenceError::Invalid(e)),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// The element of `Z/p^N` this sequence determines, `N` = number of terms.
    pub fn to_padic(&self) -> PadicInt {
        let last = self.terms.last().expect("nonempty by construction");
        PadicInt::from_int(last, self.p, self.terms.len() as u32).expect("N >= 1")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoherenceError {
    BrokenAt(usize),
    Invalid(Error),
}

impl fmt::Display for CoherenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoherenceError::BrokenAt(i) => write!(f, "sequence is not coherent at index {i}"),
            CoherenceError::Invalid(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for CoherenceError {}
