//! Backward dynamics of integer polynomials over the p-adic integers.
//!
//! The crate is `no_std` and only needs an allocator. It provides
//!
//! * p-adic valuations and exact norms, fixed-precision p-adic integers and
//!   coherent residue sequences ([`padic`]),
//! * integer polynomials and polynomials over `F_p`, including reduction
//!   modulo `x^p - x` and the root-count certificate for `x^p - x` ([`poly`]),
//! * root finding modulo a prime and an exhaustive congruence solver used as
//!   an oracle ([`congruence`]),
//! * single-step and iterated Hensel lifting of simple roots ([`hensel`]),
//! * preimage trees, forward orbits and the two sequence metrics
//!   ([`backward`]).
//!
//! ```
//! use padic_dyn::{hensel::hensel_lift, poly::IntPoly, Prime};
//!
//! let p = Prime::new(7).unwrap();
//! let f = IntPoly::from_i64s(&[-2, 0, 1]); // x^2 - 2
//! let root = hensel_lift(&f, &3.into(), 3, p).unwrap();
//! let ladder: Vec<u64> = root.ladder().iter().map(|a| a.try_into().unwrap()).collect();
//! assert_eq!(ladder, [3, 10, 108]);
//! ```
#![no_std]

extern crate alloc;

mod arith;
pub mod backward;
pub mod congruence;
mod error;
pub mod hensel;
pub mod padic;
pub mod poly;
mod prime;

pub use error::Error;
pub use prime::Prime;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
