//! Modular arithmetic helpers for the circulant-style constructions.
//!
//! The routines are generic over the integer type so callers can work in
//! `i64` for graph parameters and in `i128` or `BigInt` when checking
//! identities that would overflow.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{PrimInt, Signed};

use crate::error::{Error, Result};

/// Representative of `x` in `0..n`.
pub fn normalize<T: Integer + Clone>(x: T, n: T) -> T {
    x.mod_floor(&n)
}

/// The `t` in `0..n` with `k * t ≡ 1 (mod n)`, or `None` when `gcd(k, n) ≠ 1`.
pub fn mod_inverse<T>(k: T, n: T) -> Option<T>
where
    T: Integer + Signed + Clone,
{
    if n <= T::zero() {
        return None;
    }
    let ext = normalize(k, n.clone()).extended_gcd(&n);
    ext.gcd.is_one().then(|| normalize(ext.x, n))
}

/// Trial division; parameters here stay small.
pub fn is_prime<T: PrimInt + Integer>(p: T) -> bool {
    let two = T::one() + T::one();
    if p < two {
        return false;
    }
    let mut d = two;
    while d * d <= p {
        if p.is_multiple_of(&d) {
            return false;
        }
        d = d + T::one();
    }
    true
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Quadratic residues `{x² mod p : 1 ≤ x < p}` of an odd prime.
pub fn squares_mod(p: u64) -> Result<BTreeSet<u64>> {
    check_odd_prime(p)?;
    Ok((1..p).map(|x| x * x % p).collect())
}

/// Nonzero residues that are not squares.
pub fn nonsquares_mod(p: u64) -> Result<BTreeSet<u64>> {
    let squares = squares_mod(p)?;
    Ok((1..p).filter(|x| !squares.contains(x)).collect())
}

/// Whether `set` is closed under multiplication mod `p` (a finite nonempty
/// closed subset of a group is a subgroup).
pub fn is_multiplicative_subgroup(p: u64, set: &BTreeSet<u64>) -> bool {
    !set.is_empty()
        && set.iter().all(|&s| s % p != 0)
        && set
            .iter()
            .all(|&a| set.iter().all(|&b| set.contains(&(a * b % p))))
}

/// Side conditions under which `T(p, S, S, aS, aS)` is semisymmetric:
/// `S` is a nontrivial subgroup of the units, `a ∉ S`, `a² ∈ S`,
/// `S ≠ x + aS` for every `x`, and `S ≠ x + S` for every `x ≠ 0`.
///
/// Only the arithmetic is evaluated; semisymmetry itself is not certified.
pub fn check_semisym_conditions(p: u64, set: &BTreeSet<u64>, a: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if set.is_empty() || set.iter().any(|&s| s == 0 || s >= p) {
        return Err(Error::InvalidResidue(format!(
            "subset must be nonempty and lie in 1..{p}"
        )));
    }
    if a == 0 || a >= p {
        return Err(Error::InvalidResidue(format!("a = {a} must lie in 1..{p}")));
    }
    let nontrivial = set.len() > 1 && is_multiplicative_subgroup(p, set);
    if !nontrivial || set.contains(&a) || !set.contains(&(a * a % p)) {
        return Ok(false);
    }
    let translate = |x: u64, scale: u64| -> BTreeSet<u64> {
        set.iter().map(|&s| (x + scale * s) % p).collect()
    };
    let no_scaled_translate = (0..p).all(|x| translate(x, a) != *set);
    let no_translate = (1..p).all(|x| translate(x, 1) != *set);
    Ok(no_scaled_translate && no_translate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(5i64, 18), Some(11));
        assert_eq!(mod_inverse(2i64, 4), None);
        assert_eq!(mod_inverse(1i64, 7), Some(1));
        assert_eq!(mod_inverse(-2i64, 9), Some(4));
        assert_eq!(mod_inverse(13i128, 42), Some(13));
    }

    #[test]
    fn inverse_matches_brute_force() {
        for n in 1i64..60 {
            for k in 0..n {
                let brute = (0..n).find(|t| (k * t).mod_floor(&n) == 1 % n);
                assert_eq!(mod_inverse(k, n), brute, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn primes() {
        let small: Vec<u32> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(-7i32));
    }

    #[test]
    fn residues() {
        assert_eq!(squares_mod(5).unwrap(), set(&[1, 4]));
        assert_eq!(nonsquares_mod(5).unwrap(), set(&[2, 3]));
        assert_eq!(squares_mod(7).unwrap(), set(&[1, 2, 4]));
        assert_eq!(squares_mod(9), Err(Error::NotPrime(9)));
        assert_eq!(squares_mod(2), Err(Error::NotPrime(2)));
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let s = squares_mod(p).unwrap();
            assert_eq!(s.len() as u64, (p - 1) / 2);
            assert!(is_multiplicative_subgroup(p, &s));
        }
    }

    #[test]
    fn semisym_conditions() {
        assert_eq!(check_semisym_conditions(5, &set(&[1, 4]), 2), Ok(true));
        assert_eq!(check_semisym_conditions(5, &set(&[1, 4]), 4), Ok(false));
        assert_eq!(check_semisym_conditions(5, &set(&[1, 2]), 3), Ok(false));
        assert!(check_semisym_conditions(6, &set(&[1]), 5).is_err());
        assert!(check_semisym_conditions(5, &set(&[0]), 2).is_err());
        assert!(check_semisym_conditions(5, &set(&[1, 4]), 5).is_err());
    }
}
