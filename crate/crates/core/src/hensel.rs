//! Hensel lifting of simple roots, one power of `p` at a time.
//!
//! Given `f(a) ≡ 0 (mod p^j)` with `f'(a) ≢ 0 (mod p)`, write the lift as
//! `a + t p^j`. Expanding `f(a + t p^j) ≡ f(a) + t p^j f'(a) (mod p^{j+1})`
//! leaves the linear congruence `t f'(a) ≡ -f(a)/p^j (mod p)`, which has
//! exactly one solution `t` in `[0, p)`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{pow, reduce, to_bigint};
use crate::padic::PadicInt;
use crate::poly::IntPoly;
use crate::{Error, Prime, Result};

/// Lifts a root of `f` modulo `p^level` to the unique root modulo
/// `p^{level+1}` congruent to it, returned in `[0, p^{level+1})`.
///
/// `a` is reduced modulo `p^level` first. Fails with [`Error::NotARoot`]
/// when `p^level ∤ f(a)` and with [`Error::SingularRoot`] when `p | f'(a)`.
pub fn hensel_step(f: &IntPoly, a: &BigUint, level: u32, p: Prime) -> Result<BigUint> {
    if level == 0 {
        return Err(Error::ZeroPrecision);
    }
    let pj = pow(p.get(), level);
    let a = a % &pj;
    let next = &pj * p.get();
    let a_int = to_bigint(&a);

    let value = f.eval_mod(&a_int, &next)?;
    if !(&value % &pj).is_zero() {
        return Err(Error::NotARoot { level });
    }
    let derivative = u64::try_from(f.derivative().eval_mod(&a_int, &BigUint::from(p.get()))?)
        .expect("residue below p");
    if derivative == 0 {
        return Err(Error::SingularRoot { residue: a });
    }
    // value < p^{j+1} and p^j | value, so the quotient is f(a)/p^j mod p
    let quotient = u64::try_from(&value / &pj).expect("quotient below p");
    let t = p.mul(p.sub(0, quotient), p.inv(derivative));
    Ok(a + pj * t)
}

/// A simple root of `f(x) ≡ target` lifted to precision `p^k`, with every
/// intermediate residue kept.
///
/// `ladder()[j - 1]` is the root modulo `p^j`; consecutive entries agree
/// modulo the smaller power, so the ladder is a coherent sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedRoot {
    p: Prime,
    polynomial: IntPoly,
    target: BigInt,
    ladder: Vec<BigUint>,
}

impl LiftedRoot {
    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.polynomial
    }

    pub fn target(&self) -> &BigInt {
        &self.target
    }

    pub fn ladder(&self) -> &[BigUint] {
        &self.ladder
    }

    pub fn precision(&self) -> u32 {
        self.ladder.len() as u32
    }

    /// The root modulo `p^k`.
    pub fn root(&self) -> &BigUint {
        self.ladder.last().expect("ladder has at least one entry")
    }

    pub fn to_padic(&self) -> PadicInt {
        PadicInt::from_residue(self.root().clone(), self.p, self.precision())
    }

    /// The ladder as plain integers, ready for [`crate::padic::check_coherent`].
    pub fn terms(&self) -> Vec<BigInt> {
        self.ladder.iter().map(to_bigint).collect()
    }
}

/// Lifts a simple root `seed` of `f` modulo `p` to precision `p^k`.
pub fn hensel_lift(f: &IntPoly, seed: &BigInt, k: u32, p: Prime) -> Result<LiftedRoot> {
    lift_preimage(f, &BigInt::zero(), seed, k, p)
}

/// Lifts a simple solution `seed` of `f(x) ≡ target (mod p)` to precision `p^k`.
pub fn lift_preimage(
    f: &IntPoly,
    target: &BigInt,
    seed: &BigInt,
    k: u32,
    p: Prime,
) -> Result<LiftedRoot> {
    if k == 0 {
        return Err(Error::ZeroPrecision);
    }
    let g = f - &IntPoly::constant(target.clone());
    let first = reduce(seed, &BigUint::from(p.get()));
    let first_int = to_bigint(&first);
    let p_big = BigUint::from(p.get());
    if !g.eval_mod(&first_int, &p_big)?.is_zero() {
        return Err(Error::NotARoot { level: 1 });
    }
    if g.derivative().eval_mod(&first_int, &p_big)?.is_zero() {
        return Err(Error::SingularRoot { residue: first });
    }

    let mut ladder = Vec::with_capacity(k as usize);
    ladder.push(first);
    for level in 1..k {
        let next = hensel_step(&g, ladder.last().unwrap(), level, p)?;
        ladder.push(next);
    }
    Ok(LiftedRoot {
        p,
        polynomial: f.clone(),
        target: target.clone(),
        ladder,
    })
}
