//! Oracles shared by the integration tests. Everything here evaluates
//! polynomials directly with machine integers and never calls into the
//! root-finding or lifting code it is used to check.
#![allow(dead_code)]

use padic_dyn::poly::IntPoly;
use padic_dyn::{BigInt, Prime};
use rand::Rng;
use std::ops::RangeInclusive;

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn small_coeffs(f: &IntPoly) -> Vec<i128> {
    f.coeffs()
        .iter()
        .map(|c| i128::try_from(c).expect("test polynomials have small coefficients"))
        .collect()
}

/// `f(x) mod m` in `[0, m)` by Horner with `i128`.
pub fn eval_i128(coeffs: &[i128], x: i128, m: i128) -> i128 {
    coeffs
        .iter()
        .rev()
        .fold(0i128, |acc, &c| (acc * x + c).rem_euclid(m))
}

/// Residues `x ∈ [0, m)` with `f(x) ≡ target (mod m)`.
pub fn scan(f: &IntPoly, target: i128, m: i128) -> Vec<i128> {
    let c = small_coeffs(f);
    (0..m)
        .filter(|&x| eval_i128(&c, x, m) == target.rem_euclid(m))
        .collect()
}

/// Roots of a polynomial over `F_p` given by its residue coefficients.
pub fn fp_roots(coeffs: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| {
            coeffs
                .iter()
                .rev()
                .fold(0u128, |acc, &c| (acc * x as u128 + c as u128) % p as u128)
                == 0
        })
        .collect()
}

pub fn random_poly(rng: &mut impl Rng, degrees: RangeInclusive<usize>, bound: i64) -> IntPoly {
    let degree = rng.gen_range(degrees);
    let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    if coeffs[degree] == 0 {
        coeffs[degree] = 1;
    }
    IntPoly::from_i64s(&coeffs)
}

pub fn random_monic(rng: &mut impl Rng, degrees: RangeInclusive<usize>, bound: i64) -> IntPoly {
    let degree = rng.gen_range(degrees);
    let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    coeffs.push(1);
    IntPoly::from_i64s(&coeffs)
}

pub fn big(n: i128) -> BigInt {
    BigInt::from(n)
}

pub const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
