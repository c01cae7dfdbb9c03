use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::One;

/// Least nonnegative residue of `n` modulo `m`.
pub(crate) fn reduce(n: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from_biguint(Sign::Plus, m.clone());
    n.mod_floor(&m)
        .to_biguint()
        .expect("mod_floor with a positive modulus is nonnegative")
}

pub(crate) fn reduce_u64(n: &BigInt, m: u64) -> u64 {
    let r = reduce(n, &BigUint::from(m));
    u64::try_from(&r).expect("residue below a u64 modulus")
}

pub(crate) fn pow(p: u64, k: u32) -> BigUint {
    let mut acc = BigUint::one();
    let base = BigUint::from(p);
    for _ in 0..k {
        acc *= &base;
    }
    acc
}

pub(crate) fn to_bigint(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}
