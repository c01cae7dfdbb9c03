//! Solving `f(x) ≡ c` modulo a prime, and an exhaustive solver for any modulus.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::reduce_u64;
use crate::poly::IntPoly;
use crate::{Error, Prime, Result};

/// Largest modulus [`solve_congruence_bruteforce`] will scan.
pub const DEFAULT_ORACLE_BOUND: u64 = 10_000_000;

/// A solution of `f(x) ≡ c (mod p)` with `f'` evaluated at it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootModP {
    pub residue: u64,
    /// `true` iff `derivative_residue == 0`; such roots do not lift uniquely.
    pub singular: bool,
    pub derivative_residue: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    /// Sorted ascending by residue.
    pub roots: Vec<RootModP>,
    /// `f - c` vanishes identically as a function on `F_p`, so every residue
    /// is a root.
    pub all_residues: bool,
}

impl RootSet {
    pub fn residues(&self) -> impl Iterator<Item = u64> + '_ {
        self.roots.iter().map(|r| r.residue)
    }

    pub fn nonsingular(&self) -> impl Iterator<Item = &RootModP> {
        self.roots.iter().filter(|r| !r.singular)
    }

    pub fn singular(&self) -> impl Iterator<Item = &RootModP> {
        self.roots.iter().filter(|r| r.singular)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// All `a ∈ [0, p)` with `f(a) ≡ target (mod p)`.
///
/// `f - target` is reduced modulo `x^p - x` first, then every residue is
/// tried. Singularity is judged with the derivative of the original `f`.
pub fn roots_mod_p(f: &IntPoly, target: &BigInt, p: Prime) -> RootSet {
    let shifted = f - &IntPoly::constant(target.clone());
    let reduced = shifted.fermat_reduce(p);
    let derivative = f.derivative().reduce_mod_p(p);
    let all_residues = reduced.is_zero();
    let roots = (0..p.get())
        .filter(|&a| reduced.eval(a) == 0)
        .map(|a| {
            let d = derivative.eval(a);
            RootModP {
                residue: a,
                singular: d == 0,
                derivative_residue: d,
            }
        })
        .collect();
    RootSet { roots, all_residues }
}

/// Every `x ∈ [0, m)` with `f(x) ≡ target (mod m)`, by evaluating at each
/// residue. `m` may be composite. Rejects `m` above [`DEFAULT_ORACLE_BOUND`].
pub fn solve_congruence_bruteforce(f: &IntPoly, target: &BigInt, m: u64) -> Result<Vec<u64>> {
    solve_congruence_bruteforce_bounded(f, target, m, DEFAULT_ORACLE_BOUND)
}

pub fn solve_congruence_bruteforce_bounded(
    f: &IntPoly,
    target: &BigInt,
    m: u64,
    bound: u64,
) -> Result<Vec<u64>> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m.into()));
    }
    if m > bound {
        return Err(Error::ModulusAboveBound { modulus: m, bound });
    }
    let coeffs: Vec<u128> = f.coeffs().iter().map(|c| reduce_u64(c, m) as u128).collect();
    let target = reduce_u64(target, m) as u128;
    let m = m as u128;
    Ok((0..m)
        .filter(|&x| coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % m) == target)
        .map(|x| x as u64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn root(residue: u64, derivative_residue: u64) -> RootModP {
        RootModP {
            residue,
            singular: derivative_residue == 0,
            derivative_residue,
        }
    }

    #[test]
    fn square_roots_of_two_mod_seven() {
        let roots = roots_mod_p(&poly(&[0, 0, 1]), &2.into(), p(7));
        assert_eq!(roots.roots, [root(3, 6), root(4, 1)]);
        assert!(!roots.all_residues);
    }

    #[test]
    fn fermat_obstruction() {
        // x^3 - x + 1 has no roots mod 3
        assert!(roots_mod_p(&poly(&[1, -1, 0, 1]), &0.into(), p(3)).is_empty());
    }

    #[test]
    fn singular_root() {
        let roots = roots_mod_p(&poly(&[0, 0, 1]), &0.into(), p(5));
        assert_eq!(roots.roots, [root(0, 0)]);
        assert_eq!(roots.singular().count(), 1);
    }

    #[test]
    fn degenerate_everything_is_a_root() {
        // 5x^2 + 5x + 3 ≡ 3 (mod 5) identically
        let roots = roots_mod_p(&poly(&[3, 5, 5]), &3.into(), p(5));
        assert!(roots.all_residues);
        assert_eq!(roots.len(), 5);
        assert!(roots.roots.iter().all(|r| r.singular));

        // x^3 - x vanishes on F_3 but its derivative 3x^2 - 1 ≡ 2 does not
        let roots = roots_mod_p(&poly(&[0, -1, 0, 1]), &0.into(), p(3));
        assert!(roots.all_residues);
        assert_eq!(roots.nonsingular().count(), 3);
    }

    #[test]
    fn high_degree_uses_original_derivative() {
        // f = x^7 + x over F_3 reduces to 2x; f' = 7x^6 + 1 ≡ x^6 + 1
        let f = poly(&[0, 1, 0, 0, 0, 0, 0, 1]);
        let roots = roots_mod_p(&f, &0.into(), p(3));
        assert_eq!(roots.roots, [root(0, 1)]);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            solve_congruence_bruteforce(&poly(&[2, -7, 1]), &0.into(), 10).unwrap(),
            [3, 4, 8, 9]
        );
        assert_eq!(
            solve_congruence_bruteforce(&poly(&[1, 0, 1]), &0.into(), 5).unwrap(),
            [2, 3]
        );
        assert_eq!(solve_congruence_bruteforce(&poly(&[0, 1]), &0.into(), 12).unwrap(), [0]);
        assert_eq!(
            solve_congruence_bruteforce(&poly(&[0, 1]), &0.into(), 1),
            Err(Error::ModulusTooSmall(1u8.into()))
        );
        assert_eq!(
            solve_congruence_bruteforce(&poly(&[0, 1]), &0.into(), DEFAULT_ORACLE_BOUND + 1),
            Err(Error::ModulusAboveBound {
                modulus: DEFAULT_ORACLE_BOUND + 1,
                bound: DEFAULT_ORACLE_BOUND
            })
        );
        assert_eq!(
            solve_congruence_bruteforce_bounded(&poly(&[0, 1]), &3.into(), 100, 50),
            Err(Error::ModulusAboveBound { modulus: 100, bound: 50 })
        );
    }
}
