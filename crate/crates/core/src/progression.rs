//! Residues of arithmetic progressions `a, a + d, …, a + (n−1)d` modulo `n`.
//!
//! When `gcd(d, n) = 1` one period of the progression is a complete residue
//! system, exactly `φ(n)` of its terms are coprime to `n`, and every residue
//! `r` is hit by a computable term index.

use num_traits::{CheckedAdd, CheckedMul};

use crate::arith::{add_mod_unchecked, coprime, gcd_unchecked, mod_inverse, mul_mod_unchecked};
use crate::error::{Error, Result};
use crate::int::{to_usize, UInt};

/// One period of `a + k·d mod n` for `k = 0, …, n−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgressionTrace<T> {
    a: T,
    d: T,
    n: T,
    residues: Vec<T>,
}

impl<T: UInt> ProgressionTrace<T> {
    pub fn first_term(&self) -> T {
        self.a
    }

    pub fn difference(&self) -> T {
        self.d
    }

    pub fn modulus(&self) -> T {
        self.n
    }

    /// `residues()[k] = (a + k·d) mod n`.
    pub fn residues(&self) -> &[T] {
        &self.residues
    }

    /// Whether the period hits every residue in `[0, n)` exactly once.
    pub fn is_complete_system(&self) -> bool {
        let mut seen = vec![false; self.residues.len()];
        for &r in &self.residues {
            let slot = &mut seen[to_usize(r)];
            if *slot {
                return false;
            }
            *slot = true;
        }
        true
    }

    /// First pair of term indices `μ < ν` whose residues coincide.
    pub fn first_collision(&self) -> Option<(usize, usize)> {
        let mut first_seen = vec![usize::MAX; self.residues.len()];
        for (k, &r) in self.residues.iter().enumerate() {
            let slot = &mut first_seen[to_usize(r)];
            if *slot != usize::MAX {
                return Some((*slot, k));
            }
            *slot = k;
        }
        None
    }

    /// Number of terms in the period coprime to `n`.
    pub fn coprime_terms(&self) -> usize {
        self.residues
            .iter()
            .filter(|&&r| coprime(r, self.n))
            .count()
    }
}

/// A term index `ν` and quotient `μ` with `a + ν·d = μ·n + r` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSolution<T: UInt> {
    pub a: T,
    pub d: T,
    pub n: T,
    pub r: T,
    pub nu: T,
    pub mu: T::Wide,
}

impl<T: UInt> CongruenceSolution<T> {
    /// The term `a + ν·d`, exact in the double-width type.
    pub fn term(&self) -> T::Wide {
        self.a.widen() + self.nu.widen() * self.d.widen()
    }

    /// Checks `a + ν·d = μ·n + r` in exact arithmetic and `ν < n`.
    pub fn identity_holds(&self) -> bool {
        self.nu < self.n
            && self
                .mu
                .checked_mul(&self.n.widen())
                .and_then(|m| m.checked_add(&self.r.widen()))
                == Some(self.term())
    }
}

fn check_inputs<T: UInt>(d: T, n: T) -> Result<()> {
    if n.is_zero() {
        return Err(Error::InvalidModulus);
    }
    if d.is_zero() {
        return Err(Error::ZeroInput { what: "difference" });
    }
    Ok(())
}

/// Traces one full period of the progression with first term `a` and
/// difference `d` modulo `n`. Term indexing starts at `k = 0`.
pub fn progression_residues<T: UInt>(a: T, d: T, n: T) -> Result<ProgressionTrace<T>> {
    check_inputs(d, n)?;
    let size = to_usize(n);
    let step = d % n;
    let mut residues = Vec::with_capacity(size);
    let mut r = a % n;
    for _ in 0..size {
        residues.push(r);
        r = add_mod_unchecked(r, step, n);
    }
    Ok(ProgressionTrace { a, d, n, residues })
}

/// Counts `k ∈ [0, n)` with `gcd((a + k·d) mod n, n) = 1`.
pub fn count_coprime_terms<T: UInt>(a: T, d: T, n: T) -> Result<T> {
    check_inputs(d, n)?;
    let step = d % n;
    let mut r = a % n;
    let mut count = T::zero();
    let mut k = T::zero();
    while k < n {
        if gcd_unchecked(r, n).is_one() {
            count = count + T::one();
        }
        r = add_mod_unchecked(r, step, n);
        k = k + T::one();
    }
    Ok(count)
}

/// Finds the unique `ν ∈ [0, n)` with `a + ν·d ≡ r (mod n)` through the
/// inverse of `d`, along with the exact quotient `μ`.
///
/// `r` is reduced into `[0, n)` first. Requires `gcd(d, n) = 1`.
pub fn solve_progression_congruence<T: UInt>(
    a: T,
    d: T,
    n: T,
    r: T,
) -> Result<CongruenceSolution<T>> {
    check_inputs(d, n)?;
    let r = r % n;
    let inverse = mod_inverse(d, n).map_err(|_| Error::NotCoprime {
        value: d.to_u128_lossless(),
        modulus: n.to_u128_lossless(),
        divisor: gcd_unchecked(d, n).to_u128_lossless(),
    })?;
    // ν ≡ (r − a)·d⁻¹
    let negated_a = (n - a % n) % n;
    let shift = add_mod_unchecked(r, negated_a, n);
    let nu = mul_mod_unchecked(shift, inverse, n);
    let term = a.widen() + nu.widen() * d.widen();
    let mu = (term - r.widen()) / n.widen();
    Ok(CongruenceSolution { a, d, n, r, nu, mu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn residues_examples() {
        let trace = progression_residues(4u64, 5, 6).unwrap();
        assert_eq!(trace.residues(), &[4, 3, 2, 1, 0, 5]);
        assert!(trace.is_complete_system());

        let trace = progression_residues(0u64, 1, 5).unwrap();
        assert_eq!(trace.residues(), &[0, 1, 2, 3, 4]);

        let trace = progression_residues(7u64, 4, 6).unwrap();
        assert_eq!(trace.residues(), &[1, 5, 3, 1, 5, 3]);
        assert!(!trace.is_complete_system());
        assert_eq!(trace.first_collision(), Some((0, 3)));
    }

    #[test]
    fn residues_of_7_4_6_match_direct_evaluation() {
        let direct: Vec<u64> = (0..6u64).map(|k| (7 + 4 * k) % 6).collect();
        assert_eq!(
            progression_residues(7u64, 4, 6).unwrap().residues(),
            &direct[..]
        );
    }

    #[test]
    fn residues_errors() {
        assert_eq!(progression_residues(1u64, 1, 0), Err(Error::InvalidModulus));
        assert_eq!(
            progression_residues(1u64, 0, 5),
            Err(Error::ZeroInput { what: "difference" })
        );
    }

    #[test]
    fn coprime_count_examples() {
        assert_eq!(count_coprime_terms(4u64, 5, 6).unwrap(), 2);
        assert_eq!(count_coprime_terms(0u64, 1, 12).unwrap(), 4);
        assert_eq!(count_coprime_terms(3u64, 3, 9).unwrap(), 0);
        let scan = (0..9u64)
            .filter(|k| crate::arith::coprime((3 + 3 * k) % 9, 9))
            .count();
        assert_eq!(scan, 0);
        assert_eq!(progression_residues(4u64, 5, 6).unwrap().coprime_terms(), 2);
    }

    #[test]
    fn solve_examples() {
        let s = solve_progression_congruence(4u64, 5, 6, 0).unwrap();
        assert_eq!((s.nu, s.mu, s.term()), (4, 4, 24));

        let s = solve_progression_congruence(0u64, 1, 7, 3).unwrap();
        assert_eq!((s.nu, s.mu), (3, 0));

        let s = solve_progression_congruence(10u64, 7, 15, 1).unwrap();
        assert_eq!((s.nu, s.mu), (3, 2));
        let scan = (0..15u64).find(|k| (10 + 7 * k) % 15 == 1);
        assert_eq!(scan, Some(3));
        assert!(s.identity_holds());
    }

    #[test]
    fn solve_rejects_shared_divisor() {
        assert_eq!(
            solve_progression_congruence(1u64, 4, 6, 1),
            Err(Error::NotCoprime {
                value: 4,
                modulus: 6,
                divisor: 2
            })
        );
    }

    #[test]
    fn solve_modulus_one() {
        let s = solve_progression_congruence(5u64, 3, 1, 0).unwrap();
        assert_eq!((s.nu, s.mu), (0, 5));
        assert!(s.identity_holds());
    }

    #[test]
    fn solve_at_width_limit() {
        let n = u64::MAX;
        let s = solve_progression_congruence(u64::MAX - 1, u64::MAX - 1, n, 3).unwrap();
        assert!(s.identity_holds());
    }

    proptest! {
        #[test]
        fn solver_matches_scan(n in 1u64..=300, d in 1u64..=300, a in 0u64..1000, r in 0u64..300) {
            prop_assume!(crate::arith::coprime(d, n));
            let r = r % n;
            let s = solve_progression_congruence(a, d, n, r).unwrap();
            prop_assert!(s.identity_holds());
            let scan = (0..n).find(|k| (a + k * d) % n == r).unwrap();
            prop_assert_eq!(s.nu, scan);
        }

        #[test]
        fn period_repeats(n in 1u64..=50, d in 1u64..100, a in 0u64..100) {
            let trace = progression_residues(a, d, n).unwrap();
            for k in 0..3 * n {
                let here = (a + k * d) % n;
                let later = (a + (k + n) * d) % n;
                prop_assert_eq!(here, later);
                prop_assert_eq!(trace.residues()[(k % n) as usize], here);
            }
        }
    }
}
