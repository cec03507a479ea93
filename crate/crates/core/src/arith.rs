//! Exact integer primitives: gcd, modular products and powers, trial-division
//! factorization and divisor enumeration.
//!
//! Every residue returned here lies in `[0, n)`. Inputs outside that range
//! are reduced first, so `a`, `a + n` and `a - n` all name the same residue.

use std::fmt;

use crate::error::{Error, Result};
use crate::int::{lit, UInt};

/// Greatest common divisor by Euclid's algorithm, with `gcd(0, b) = b`.
pub fn gcd<T: UInt>(a: T, b: T) -> Result<T> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdUndefined);
    }
    Ok(gcd_unchecked(a, b))
}

#[inline]
pub(crate) fn gcd_unchecked<T: UInt>(mut a: T, mut b: T) -> T {
    while !b.is_zero() {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// `true` when `gcd(a, b) = 1`.
pub fn coprime<T: UInt>(a: T, b: T) -> bool {
    gcd_unchecked(a, b).is_one()
}

fn check_modulus<T: UInt>(n: T) -> Result<()> {
    if n.is_zero() {
        Err(Error::InvalidModulus)
    } else {
        Ok(())
    }
}

/// Canonical representative of `a` in `[0, n)`.
pub fn reduce<T: UInt>(a: T, n: T) -> Result<T> {
    check_modulus(n)?;
    Ok(a % n)
}

/// Canonical representative in `[0, n)` of a signed integer.
pub fn reduce_signed<T: UInt>(a: i128, n: T) -> Result<T> {
    check_modulus(n)?;
    let n = n.to_u128_lossless();
    let r = if a >= 0 {
        (a as u128) % n
    } else {
        let m = a.unsigned_abs() % n;
        if m == 0 {
            0
        } else {
            n - m
        }
    };
    Ok(T::try_from_u128(r).expect("reduced residue is below the modulus"))
}

/// `(a + b) mod n` for residues already in `[0, n)`.
#[inline]
pub(crate) fn add_mod_unchecked<T: UInt>(a: T, b: T, n: T) -> T {
    let gap = n - b;
    if a >= gap {
        a - gap
    } else {
        a + b
    }
}

/// `(a + b) mod n` without overflow.
pub fn add_mod<T: UInt>(a: T, b: T, n: T) -> Result<T> {
    check_modulus(n)?;
    Ok(add_mod_unchecked(a % n, b % n, n))
}

#[inline]
pub(crate) fn mul_mod_unchecked<T: UInt>(a: T, b: T, n: T) -> T {
    T::narrow((a.widen() * b.widen()) % n.widen())
}

/// `(a * b) mod n`, formed from the exact double-width product.
pub fn mul_mod<T: UInt>(a: T, b: T, n: T) -> Result<T> {
    check_modulus(n)?;
    Ok(mul_mod_unchecked(a % n, b % n, n))
}

#[inline]
pub(crate) fn pow_mod_unchecked<T: UInt>(base: T, mut exp: T, n: T) -> T {
    let mut base = base % n;
    let mut acc = T::one() % n;
    while !exp.is_zero() {
        if (exp & T::one()).is_one() {
            acc = mul_mod_unchecked(acc, base, n);
        }
        exp = exp >> 1;
        if !exp.is_zero() {
            base = mul_mod_unchecked(base, base, n);
        }
    }
    acc
}

/// `x^e mod n` by square-and-multiply. `x^0` is `1 mod n` for every `x`,
/// including `x ≡ 0`.
pub fn mod_pow<T: UInt>(x: T, e: T, n: T) -> Result<T> {
    check_modulus(n)?;
    Ok(pow_mod_unchecked(x, e, n))
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
///
/// Fails with [`Error::NotCoprime`] when no inverse exists. Modulo 1 every
/// residue is 0, and 0 is returned.
pub fn mod_inverse<T: UInt>(a: T, n: T) -> Result<T> {
    check_modulus(n)?;
    let a = a % n;
    let g = gcd_unchecked(a, n);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            value: a.to_u128_lossless(),
            modulus: n.to_u128_lossless(),
            divisor: g.to_u128_lossless(),
        });
    }
    if n.is_one() {
        return Ok(T::zero());
    }
    // Bezout coefficients for `a` only; they stay within (-n, n).
    let (mut r0, mut r1) = (n.to_u128_lossless() as i128, a.to_u128_lossless() as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    reduce_signed(s0, n)
}

/// Deterministic primality test by trial division.
pub fn is_prime<T: UInt>(n: T) -> bool {
    let two: T = lit(2);
    let three: T = lit(3);
    if n < two {
        return false;
    }
    if n < lit(4) {
        return true;
    }
    if (n % two).is_zero() || (n % three).is_zero() {
        return false;
    }
    let mut p: T = lit(5);
    while p <= n / p {
        if (n % p).is_zero() || (n % (p + two)).is_zero() {
            return false;
        }
        p = p + lit(6);
    }
    true
}

/// Prime factorization `n = p1^e1 * p2^e2 * ...` with strictly increasing
/// primes and positive exponents. The factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization<T> {
    n: T,
    factors: Vec<(T, u32)>,
}

impl<T: UInt> Factorization<T> {
    pub fn n(&self) -> T {
        self.n
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(T, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = T> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the prime powers back together; `None` on overflow.
    pub fn product(&self) -> Option<T> {
        self.factors.iter().try_fold(T::one(), |acc, &(p, e)| {
            (0..e).try_fold(acc, |acc, _| acc.checked_mul(&p))
        })
    }

    /// Number of positive divisors, `∏ (e + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(_, e)| u64::from(e) + 1)
            .product()
    }
}

impl<T: UInt> fmt::Display for Factorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `n` by trial division by 2, 3 and then `6k ± 1` up to `√n`.
pub fn factorize<T: UInt>(n: T) -> Result<Factorization<T>> {
    if n.is_zero() {
        return Err(Error::ZeroInput { what: "n" });
    }
    let original = n;
    let mut n = n;
    let mut factors = Vec::new();

    let mut strip = |n: &mut T, p: T| {
        let mut e = 0u32;
        while (*n % p).is_zero() {
            *n = *n / p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };

    strip(&mut n, lit(2));
    strip(&mut n, lit(3));
    let mut p: T = lit(5);
    while p <= n / p {
        strip(&mut n, p);
        let q = p + lit(2);
        if q > n / q {
            break;
        }
        strip(&mut n, q);
        p = match p.checked_add(&lit(6)) {
            Some(next) => next,
            None => break,
        };
    }
    if n > T::one() {
        factors.push((n, 1));
    }

    Ok(Factorization {
        n: original,
        factors,
    })
}

/// All positive divisors of `n` in ascending order.
pub fn divisors<T: UInt>(n: T) -> Result<Vec<T>> {
    Ok(divisors_of(&factorize(n)?))
}

/// Ascending divisors generated from an existing factorization.
pub fn divisors_of<T: UInt>(factorization: &Factorization<T>) -> Vec<T> {
    let mut out = vec![T::one()];
    for &(p, e) in factorization.factors() {
        let len = out.len();
        let mut power = T::one();
        for _ in 0..e {
            power = power * p;
            for i in 0..len {
                out.push(out[i] * power);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(5u64, 6).unwrap(), 1);
        assert_eq!(gcd(7u64, 7).unwrap(), 7);
        assert_eq!(gcd(12u64, 18).unwrap(), 6);
        assert_eq!(gcd(0u64, 9).unwrap(), 9);
        assert_eq!(gcd(9u64, 0).unwrap(), 9);
        assert_eq!(gcd(0u64, 0), Err(Error::GcdUndefined));
    }

    #[test]
    fn gcd_12_18_matches_common_divisor_scan() {
        let brute = (1..=12u64).filter(|d| 12 % d == 0 && 18 % d == 0).max();
        assert_eq!(brute, Some(6));
    }

    #[test]
    fn mul_mod_examples() {
        assert_eq!(mul_mod(8u64, 2, 15).unwrap(), 1);
        assert_eq!(mul_mod(0u64, 12345, 99).unwrap(), 0);
        assert_eq!(mul_mod(3u64, 4, 0), Err(Error::InvalidModulus));
    }

    #[test]
    fn mul_mod_uses_exact_product() {
        let (a, b, n) = (1u64 << 31, 1u64 << 31, (1u64 << 62) + 1);
        let oracle = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(n);
        let got = mul_mod(a, b, n).unwrap();
        assert_eq!(BigUint::from(got), oracle);

        let (a, b, n) = (u64::MAX - 1, u64::MAX - 2, u64::MAX);
        let oracle = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(n);
        assert_eq!(BigUint::from(mul_mod(a, b, n).unwrap()), oracle);
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(2u64, 4, 15).unwrap(), 1);
        assert_eq!(mod_pow(9u64, 0, 7).unwrap(), 1);
        assert_eq!(mod_pow(2u64, 11, 23).unwrap(), 1);
        assert_eq!(mod_pow(0u64, 0, 5).unwrap(), 1);
        assert_eq!(mod_pow(0u64, 0, 1).unwrap(), 0);
        assert_eq!(mod_pow(17u64, 3, 0), Err(Error::InvalidModulus));
    }

    #[test]
    fn overshooting_bases_reduce() {
        assert_eq!(
            mod_pow(17u64, 4, 15).unwrap(),
            mod_pow(2u64, 4, 15).unwrap()
        );
        assert_eq!(reduce_signed(-13i128, 15u64).unwrap(), 2);
        assert_eq!(reduce_signed(-15i128, 15u64).unwrap(), 0);
        assert_eq!(reduce_signed(32i128, 15u64).unwrap(), 2);
    }

    #[test]
    fn add_mod_near_width_limit() {
        assert_eq!(
            add_mod(u64::MAX - 1, u64::MAX - 1, u64::MAX).unwrap(),
            u64::MAX - 2
        );
        assert_eq!(add_mod(250u8, 10, 255).unwrap(), 5);
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(5u64, 6).unwrap(), 5);
        assert_eq!(mod_inverse(7u64, 15).unwrap(), 13);
        assert_eq!(mod_inverse(3u64, 1).unwrap(), 0);
        assert!(matches!(
            mod_inverse(4u64, 6),
            Err(Error::NotCoprime { divisor: 2, .. })
        ));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(
            factorize(360u64).unwrap().factors(),
            &[(2, 3), (3, 2), (5, 1)]
        );
        assert!(factorize(1u64).unwrap().is_empty());
        assert_eq!(factorize(9991u64).unwrap().factors(), &[(97, 1), (103, 1)]);
        assert_eq!(factorize(0u64), Err(Error::ZeroInput { what: "n" }));
        assert_eq!(factorize(360u64).unwrap().to_string(), "2^3 * 3^2 * 5");
    }

    #[test]
    fn factorize_9991_matches_trial_division_scan() {
        let small: Vec<u64> = (2..=99u64)
            .filter(|p| (2..*p).all(|q| p % q != 0))
            .filter(|p| 9991 % p == 0)
            .collect();
        assert_eq!(small, vec![97]);
        assert_eq!(9991 / 97, 103);
    }

    #[test]
    fn factorize_large_values() {
        // largest prime below 2^64 and a semiprime near 10^12
        let p = 18_446_744_073_709_551_557u64;
        assert_eq!(factorize(p).unwrap().factors(), &[(p, 1)]);
        let f = factorize(999_983u64 * 1_000_003).unwrap();
        assert_eq!(f.factors(), &[(999_983, 1), (1_000_003, 1)]);
        assert_eq!(
            factorize(u8::MAX).unwrap().factors(),
            &[(3, 1), (5, 1), (17, 1)]
        );
        assert_eq!(factorize(251u8).unwrap().factors(), &[(251, 1)]);
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(12u64).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1u64).unwrap(), vec![1]);
        assert_eq!(divisors(30u64).unwrap(), vec![1, 2, 3, 5, 6, 10, 15, 30]);
        assert_eq!(divisors(0u64), Err(Error::ZeroInput { what: "n" }));
        for n in [12u64, 30] {
            let scan: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), scan);
        }
    }

    #[test]
    fn primality_by_trial_division() {
        let primes: Vec<u32> = (0..60u32).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    proptest! {
        #[test]
        fn gcd_is_greatest_common_divisor(a in 1u64..=10_000, b in 1u64..=10_000) {
            let g = gcd(a, b).unwrap();
            prop_assert_eq!(a % g, 0);
            prop_assert_eq!(b % g, 0);
            for k in (g + 1)..=a.min(b) {
                prop_assert!(a % k != 0 || b % k != 0);
            }
        }

        #[test]
        fn mod_pow_matches_repeated_multiplication(n in 1u64..=1000, x in 0u64..1000, e in 0u64..=64) {
            let x = x % n;
            let mut acc = 1 % n;
            for _ in 0..e {
                acc = mul_mod(acc, x, n).unwrap();
            }
            prop_assert_eq!(mod_pow(x, e, n).unwrap(), acc);
        }

        #[test]
        fn factorization_reconstructs(n in 1u64..=10_000) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.product(), Some(n));
            prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            for &(p, e) in f.factors() {
                prop_assert!(is_prime(p));
                prop_assert!(e >= 1);
            }
            prop_assert_eq!(divisors(n).unwrap().len() as u64, f.divisor_count());
        }

        #[test]
        fn widths_agree(a in any::<u32>(), b in any::<u32>(), n in 1u32..) {
            let narrow = mul_mod(a, b, n).unwrap();
            let wide = mul_mod(u64::from(a), u64::from(b), u64::from(n)).unwrap();
            prop_assert_eq!(u64::from(narrow), wide);
        }
    }
}
