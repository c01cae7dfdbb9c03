//! Integer polynomials and polynomials over `F_p`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::arith::{reduce, reduce_u64};
use crate::{Error, Prime, Result};

/// A polynomial with integer coefficients, constant term first.
///
/// Always in canonical form: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c x^n`
    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(BigInt::one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative `Σ i c_i x^{i-1}`.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value `f(x)`.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f(x) mod m` in `[0, m)` by Horner's rule, reducing every intermediate.
    pub fn eval_mod(&self, x: &BigInt, m: &BigUint) -> Result<BigUint> {
        if *m < BigUint::from(2u8) {
            return Err(Error::ModulusTooSmall(m.clone()));
        }
        let x = reduce(x, m);
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| (acc * &x + reduce(c, m)) % m))
    }

    pub fn reduce_mod_p(&self, p: Prime) -> FpPoly {
        FpPoly::new(p, self.coeffs.iter().map(|c| reduce_u64(c, p.get())).collect())
    }

    /// The remainder of `f mod p` on division by `x^p - x` over `F_p`.
    ///
    /// It has degree `< p` and exactly the same roots in `F_p` as `f`. A zero
    /// result means every residue is a root.
    pub fn fermat_reduce(&self, p: Prime) -> FpPoly {
        self.reduce_mod_p(p).fermat_reduce()
    }

    /// Tests whether `f mod p` divides `x^p - x`; see [`FpPoly::divides_xp_minus_x`].
    pub fn divides_xp_minus_x(&self, p: Prime) -> Result<RootCountCertificate> {
        self.reduce_mod_p(p).divides_xp_minus_x()
    }
}

impl From<&FpPoly> for IntPoly {
    fn from(f: &FpPoly) -> Self {
        IntPoly::new(f.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;

            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Writes terms highest degree first with implicit multiplication, e.g.
/// `x^2 - 7x + 2`. The output re-parses to the same polynomial.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|c| (c.is_negative(), c.abs())))
    }
}

fn write_terms<C>(f: &mut fmt::Formatter<'_>, terms: impl DoubleEndedIterator<Item = (bool, C)> + ExactSizeIterator) -> fmt::Result
where
    C: fmt::Display + Zero + One + PartialEq,
{
    if terms.len() == 0 {
        return f.write_str("0");
    }
    let mut first = true;
    for (degree, (negative, magnitude)) in terms.enumerate().rev() {
        if magnitude.is_zero() {
            continue;
        }
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if degree == 0 || !magnitude.is_one() {
            write!(f, "{magnitude}")?;
        }
        match degree {
            0 => {}
            1 => f.write_str("x")?,
            _ => write!(f, "x^{degree}")?,
        }
    }
    Ok(())
}

/// A polynomial over `F_p`, coefficients canonical residues in `[0, p)`,
/// constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: Prime,
    coeffs: Vec<u64>,
}

/// Outcome of dividing `x^p - x` by a monic `f` over `F_p`.
///
/// `divides` holds exactly when `f ≡ 0 (mod p)` has `deg f` distinct
/// solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCountCertificate {
    pub divides: bool,
    pub quotient: FpPoly,
    pub remainder: FpPoly,
}

impl FpPoly {
    /// Reduces each coefficient mod `p` and strips trailing zeros.
    pub fn new(p: Prime, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p.get()).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: Prime) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: Prime) -> Self {
        Self::new(p, vec![1])
    }

    /// `x^p - x`
    pub fn xp_minus_x(p: Prime) -> Self {
        let mut coeffs = vec![0; p.get() as usize + 1];
        coeffs[1] = p.get() - 1;
        coeffs[p.get() as usize] = 1;
        FpPoly { p, coeffs }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p.get();
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| p.add(p.mul(acc, x), c))
    }

    /// Scales by the inverse of the leading coefficient. `None` for zero.
    ///
    /// Same roots as `self`, so a polynomial whose leading coefficient is a
    /// unit can be certified with [`FpPoly::divides_xp_minus_x`] after this.
    pub fn to_monic(&self) -> Option<Self> {
        let lead = *self.coeffs.last()?;
        let inv = self.p.inv(lead);
        Some(FpPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| self.p.mul(c, inv)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let at = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Ok(Self::new(
            self.p,
            (0..n)
                .map(|i| self.p.add(at(&self.coeffs, i), at(&other.coeffs, i)))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let at = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Ok(Self::new(
            self.p,
            (0..n)
                .map(|i| self.p.sub(at(&self.coeffs, i), at(&other.coeffs, i)))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p));
        }
        let p = self.p;
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = p.add(coeffs[i + j], p.mul(a, b));
            }
        }
        Ok(Self::new(p, coeffs))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPolynomial);
        };
        let p = self.p;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(p), self.clone()));
        }
        let lead_inv = p.inv(divisor.coeffs[dd]);
        let mut quot = vec![0; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = p.mul(rem[shift + dd], lead_inv);
            quot[shift] = c;
            if c == 0 {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = p.sub(rem[shift + i], p.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    /// Remainder modulo `x^p - x`. Returned unchanged when already of degree `< p`.
    pub fn fermat_reduce(&self) -> Self {
        if self.coeffs.len() <= self.p.get() as usize {
            return self.clone();
        }
        self.divmod(&Self::xp_minus_x(self.p))
            .expect("x^p - x is nonzero over the same field")
            .1
    }

    /// Divides `x^p - x` by `self`, which must be monic of degree at most `p`.
    pub fn divides_xp_minus_x(&self) -> Result<RootCountCertificate> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let degree = self.coeffs.len() - 1;
        if degree as u64 > self.p.get() {
            return Err(Error::DegreeExceedsPrime { degree, p: self.p.get() });
        }
        let (quotient, remainder) = Self::xp_minus_x(self.p).divmod(self)?;
        Ok(RootCountCertificate {
            divides: remainder.is_zero(),
            quotient,
            remainder,
        })
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::RingMismatch {
                left: (self.p.get(), 1),
                right: (other.p.get(), 1),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|&c| (false, BigInt::from(c))))
    }
}
