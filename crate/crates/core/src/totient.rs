//! Euler's totient, the list of totatives, and a brute-force counting oracle.

use crate::arith::{factorize, gcd_unchecked, Factorization};
use crate::error::{Error, Result};
use crate::int::{from_usize, to_usize, UInt};

/// Largest `n` accepted by [`totient_bruteforce`].
pub const TOTIENT_ORACLE_BOUND: u64 = 1_000_000;

/// The residues in `[0, n)` coprime to `n`, ascending.
///
/// For `n = 1` the single residue class `{0}` is the one totative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TotativeSet<T> {
    n: T,
    parts: Vec<T>,
}

impl<T: UInt> TotativeSet<T> {
    pub fn n(&self) -> T {
        self.n
    }

    pub fn parts(&self) -> &[T] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, r: T) -> bool {
        self.parts.binary_search(&r).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = T> + '_ {
        self.parts.iter().copied()
    }

    /// Whether `α ↦ n − α` maps the set onto itself.
    pub fn is_complement_symmetric(&self) -> bool {
        if self.n.is_one() {
            return true;
        }
        self.parts
            .iter()
            .zip(self.parts.iter().rev())
            .all(|(&lo, &hi)| lo + hi == self.n)
    }
}

impl<T> IntoIterator for TotativeSet<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.parts.into_iter()
    }
}

/// `φ(n) = ∏ p^(e−1)(p − 1)` over the prime factorization of `n`.
pub fn totient<T: UInt>(n: T) -> Result<T> {
    Ok(totient_of(&factorize(n)?))
}

/// Totient from an existing factorization.
pub fn totient_of<T: UInt>(factorization: &Factorization<T>) -> T {
    factorization
        .factors()
        .iter()
        .fold(T::one(), |acc, &(p, e)| {
            let mut term = p - T::one();
            for _ in 1..e {
                term = term * p;
            }
            acc * term
        })
}

/// Enumerates the totatives of `n` by striking out multiples of each prime
/// factor.
pub fn totatives<T: UInt>(n: T) -> Result<TotativeSet<T>> {
    let factorization = factorize(n)?;
    if n.is_one() {
        return Ok(TotativeSet {
            n,
            parts: vec![T::zero()],
        });
    }
    let size = to_usize(n);
    let mut coprime = vec![true; size];
    for p in factorization.primes() {
        let p = to_usize(p);
        for k in (0..size).step_by(p) {
            coprime[k] = false;
        }
    }
    let parts = coprime
        .iter()
        .enumerate()
        .filter(|(_, &keep)| keep)
        .map(|(k, _)| from_usize(k))
        .collect();
    Ok(TotativeSet { n, parts })
}

/// Counts `k ∈ [0, n)` with `gcd(k, n) = 1` by direct scan.
///
/// Independent of the factorization route; refuses `n` above
/// [`TOTIENT_ORACLE_BOUND`].
pub fn totient_bruteforce<T: UInt>(n: T) -> Result<T> {
    if n.is_zero() {
        return Err(Error::ZeroInput { what: "n" });
    }
    if n.to_u128_lossless() > u128::from(TOTIENT_ORACLE_BOUND) {
        return Err(Error::OracleBoundExceeded {
            n: n.to_u128_lossless(),
            bound: u128::from(TOTIENT_ORACLE_BOUND),
        });
    }
    let mut count = T::zero();
    let mut k = T::zero();
    while k < n {
        if gcd_unchecked(k, n).is_one() {
            count = count + T::one();
        }
        k = k + T::one();
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;
    use proptest::prelude::*;

    #[test]
    fn totient_examples() {
        assert_eq!(totient(360u64).unwrap(), 96);
        assert_eq!(totient(1u64).unwrap(), 1);
        assert_eq!(totient(60u64).unwrap(), 16);
        assert_eq!(totient(19u64).unwrap(), 18);
        assert_eq!(totient(0u64), Err(Error::ZeroInput { what: "n" }));
    }

    #[test]
    fn small_table() {
        let expected = [1u64, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18];
        let got: Vec<u64> = (2..=19u64).map(|n| totient(n).unwrap()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn totatives_examples() {
        assert_eq!(totatives(12u64).unwrap().parts(), &[1, 5, 7, 11]);
        assert_eq!(
            totatives(15u64).unwrap().parts(),
            &[1, 2, 4, 7, 8, 11, 13, 14]
        );
        assert_eq!(totatives(1u64).unwrap().parts(), &[0]);
        assert_eq!(
            totatives(35u64).unwrap().parts(),
            &[
                1, 2, 3, 4, 6, 8, 9, 11, 12, 13, 16, 17, 18, 19, 22, 23, 24, 26, 27, 29, 31, 32,
                33, 34
            ]
        );
        assert!(totatives(0u64).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(totient_bruteforce(12u64).unwrap(), 4);
        assert_eq!(totient_bruteforce(2u64).unwrap(), 1);
        assert_eq!(totient_bruteforce(1u64).unwrap(), 1);
        assert_eq!(totient_bruteforce(9991u64).unwrap(), 9792);
        assert_eq!(9792, (97 - 1) * (103 - 1));
        assert!(matches!(
            totient_bruteforce(1_000_001u64),
            Err(Error::OracleBoundExceeded { .. })
        ));
    }

    #[test]
    fn oracle_equivalence_to_ten_thousand() {
        for n in 1..=10_000u32 {
            assert_eq!(
                totient(n).unwrap(),
                totient_bruteforce(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn prime_power_law() {
        for p in (2..=50u64).filter(|&p| is_prime(p)) {
            for m in 1..=6u32 {
                let pm = p.pow(m);
                if pm > 1_000_000_000 {
                    break;
                }
                assert_eq!(totient(pm).unwrap(), p.pow(m - 1) * (p - 1));
            }
        }
    }

    #[test]
    fn prime_law() {
        for p in (2..=10_000u64).filter(|&p| is_prime(p)) {
            assert_eq!(totient(p).unwrap(), p - 1);
        }
    }

    #[test]
    fn complement_symmetry() {
        for n in 2..=2000u64 {
            let set = totatives(n).unwrap();
            assert!(set.is_complement_symmetric(), "n = {n}");
            assert!(set.iter().all(|a| set.contains(n - a)));
            assert_eq!(set.len() as u64, totient(n).unwrap());
            assert!(set.contains(1));
        }
    }

    proptest! {
        #[test]
        fn multiplicative_on_coprime_pairs(a in 1u64..=10_000, b in 1u64..=10_000) {
            prop_assume!(crate::arith::coprime(a, b));
            prop_assert_eq!(totient(a * b).unwrap(), totient(a).unwrap() * totient(b).unwrap());
        }

        #[test]
        fn totatives_are_coprime(n in 1u64..=5000) {
            let set = totatives(n).unwrap();
            for a in set.iter() {
                prop_assert!(crate::arith::coprime(a, n));
            }
        }
    }
}
