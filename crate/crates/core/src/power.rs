//! Power residues `x⁰, x¹, x², … mod N` of a base coprime to `N`.
//!
//! The residues of the powers run through distinct values until the first
//! one that returns to 1; their count is the multiplicative order `ν`. The
//! residues form a subgroup `R` of the totatives, closed under products,
//! and the totatives split into `m` cosets `α·R` of equal size, so that
//! `m·ν = φ(N)`. Raising to `φ(N)` therefore always leaves remainder 1.

use crate::arith::{
    divisors_of, factorize, gcd_unchecked, is_prime, mul_mod_unchecked, pow_mod_unchecked,
};
use crate::error::{Error, Result};
use crate::int::{from_usize, to_usize, UInt};
use crate::totient::{totatives, totient_of, TotativeSet};

/// Largest modulus accepted by [`order_bruteforce`].
pub const ORDER_ORACLE_BOUND: u64 = 100_000;

/// Reduces `x` modulo `n` and requires it to be a unit.
fn unit_base<T: UInt>(x: T, n: T) -> Result<T> {
    if n.is_zero() {
        return Err(Error::InvalidModulus);
    }
    let x = x % n;
    let g = gcd_unchecked(x, n);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            value: x.to_u128_lossless(),
            modulus: n.to_u128_lossless(),
            divisor: g.to_u128_lossless(),
        });
    }
    Ok(x)
}

/// The residues of `x⁰, …, x^(ν−1)` modulo `N`; `x^ν` is the first power
/// to return to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerTrace<T> {
    x: T,
    n: T,
    cycle: Vec<T>,
}

impl<T: UInt> PowerTrace<T> {
    /// The base, reduced into `[0, N)`.
    pub fn base(&self) -> T {
        self.x
    }

    pub fn modulus(&self) -> T {
        self.n
    }

    pub fn cycle(&self) -> &[T] {
        &self.cycle
    }

    /// The multiplicative order `ν`.
    pub fn order(&self) -> T {
        from_usize(self.cycle.len())
    }

    /// `x^ν mod N`, the residue following the cycle.
    pub fn next_power(&self) -> T {
        let last = *self.cycle.last().expect("cycle is never empty");
        mul_mod_unchecked(last, self.x, self.n)
    }

    /// Cycle residues in ascending order.
    pub fn sorted_residues(&self) -> Vec<T> {
        let mut out = self.cycle.clone();
        out.sort_unstable();
        out
    }
}

/// Partition of the totatives of `N` into cosets of the subgroup generated
/// by `x`.
///
/// `cosets()[0]` is the subgroup itself. Each further coset is generated by
/// the smallest totative not yet covered; every coset is stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetDecomposition<T> {
    x: T,
    n: T,
    cosets: Vec<Vec<T>>,
    representatives: Vec<T>,
}

impl<T: UInt> CosetDecomposition<T> {
    pub fn base(&self) -> T {
        self.x
    }

    pub fn modulus(&self) -> T {
        self.n
    }

    /// The power residues of `x`, ascending.
    pub fn subgroup(&self) -> &[T] {
        &self.cosets[0]
    }

    pub fn cosets(&self) -> &[Vec<T>] {
        &self.cosets
    }

    /// Generator of each coset: 1 for the subgroup, then the smallest
    /// uncovered totative at the time each coset was formed.
    pub fn representatives(&self) -> &[T] {
        &self.representatives
    }

    /// The order `ν`, i.e. the size of every coset.
    pub fn order(&self) -> T {
        from_usize(self.cosets[0].len())
    }

    /// The number of cosets `m`.
    pub fn index(&self) -> T {
        from_usize(self.cosets.len())
    }

    /// Index of the coset holding `r`, if `r` is a totative.
    pub fn coset_of(&self, r: T) -> Option<usize> {
        self.cosets
            .iter()
            .position(|coset| coset.binary_search(&r).is_ok())
    }
}

/// The unit group modulo `N`: its totatives together with `φ(N)` and the
/// ascending divisors of `φ(N)`. Reuse one instance when querying many
/// bases against the same modulus.
#[derive(Debug, Clone)]
pub struct UnitGroup<T> {
    n: T,
    phi: T,
    phi_divisors: Vec<T>,
    totatives: TotativeSet<T>,
}

impl<T: UInt> UnitGroup<T> {
    pub fn new(n: T) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::InvalidModulus);
        }
        let phi = totient_of(&factorize(n)?);
        let phi_divisors = divisors_of(&factorize(phi)?);
        Ok(Self {
            n,
            phi,
            phi_divisors,
            totatives: totatives(n)?,
        })
    }

    pub fn modulus(&self) -> T {
        self.n
    }

    pub fn totient(&self) -> T {
        self.phi
    }

    pub fn totatives(&self) -> &TotativeSet<T> {
        &self.totatives
    }

    /// Least `ν ≥ 1` with `x^ν ≡ 1`, searched over the ascending divisors
    /// of `φ(N)`.
    pub fn order(&self, x: T) -> Result<T> {
        let x = unit_base(x, self.n)?;
        let one = T::one() % self.n;
        let order = self
            .phi_divisors
            .iter()
            .copied()
            .find(|&d| pow_mod_unchecked(x, d, self.n) == one)
            .expect("x^φ(N) ≡ 1 for every unit x");
        Ok(order)
    }

    /// Lists the powers of `x` until the residue returns to 1.
    pub fn trace(&self, x: T) -> Result<PowerTrace<T>> {
        let x = unit_base(x, self.n)?;
        let one = T::one() % self.n;
        let mut cycle = vec![one];
        let mut current = mul_mod_unchecked(one, x, self.n);
        while current != one {
            cycle.push(current);
            current = mul_mod_unchecked(current, x, self.n);
        }
        Ok(PowerTrace {
            x,
            n: self.n,
            cycle,
        })
    }

    pub fn cosets(&self, x: T) -> Result<CosetDecomposition<T>> {
        Ok(self.cosets_of_trace(&self.trace(x)?))
    }

    /// Builds the coset partition from an already computed trace.
    pub fn cosets_of_trace(&self, trace: &PowerTrace<T>) -> CosetDecomposition<T> {
        let n = self.n;
        let mut covered = vec![false; to_usize(n)];
        let subgroup = trace.sorted_residues();
        for &r in &subgroup {
            covered[to_usize(r)] = true;
        }
        let mut cosets = vec![subgroup];
        let mut representatives = vec![T::one() % n];
        for alpha in self.totatives.iter() {
            if covered[to_usize(alpha)] {
                continue;
            }
            let mut coset: Vec<T> = cosets[0]
                .iter()
                .map(|&r| mul_mod_unchecked(alpha, r, n))
                .collect();
            for &c in &coset {
                covered[to_usize(c)] = true;
            }
            coset.sort_unstable();
            cosets.push(coset);
            representatives.push(alpha);
        }
        CosetDecomposition {
            x: trace.x,
            n,
            cosets,
            representatives,
        }
    }

    /// `x^φ(N) mod N` as a witness.
    pub fn euler_fermat(&self, x: T) -> Result<FermatWitness<T>> {
        let x = unit_base(x, self.n)?;
        Ok(FermatWitness {
            x,
            n: self.n,
            exponent: self.phi,
            residue: pow_mod_unchecked(x, self.phi, self.n),
        })
    }

    /// `x^φ(N)` and `y^φ(N)` modulo `N` as a witness.
    pub fn power_difference(&self, x: T, y: T) -> Result<DifferenceWitness<T>> {
        let x = unit_base(x, self.n)?;
        let y = unit_base(y, self.n)?;
        Ok(DifferenceWitness {
            x,
            y,
            n: self.n,
            exponent: self.phi,
            x_residue: pow_mod_unchecked(x, self.phi, self.n),
            y_residue: pow_mod_unchecked(y, self.phi, self.n),
        })
    }
}

/// Least `ν ≥ 1` with `x^ν ≡ 1 (mod N)`.
pub fn multiplicative_order<T: UInt>(x: T, n: T) -> Result<T> {
    unit_base(x, n)?;
    UnitGroup::new(n)?.order(x)
}

/// Order by stepping through `x, x², …` until the residue is 1.
///
/// Independent oracle for [`multiplicative_order`]; refuses moduli above
/// [`ORDER_ORACLE_BOUND`].
pub fn order_bruteforce<T: UInt>(x: T, n: T) -> Result<T> {
    let x = unit_base(x, n)?;
    if n.to_u128_lossless() > u128::from(ORDER_ORACLE_BOUND) {
        return Err(Error::OracleBoundExceeded {
            n: n.to_u128_lossless(),
            bound: u128::from(ORDER_ORACLE_BOUND),
        });
    }
    let one = T::one() % n;
    let mut current = x;
    let mut steps = T::one();
    while current != one {
        current = mul_mod_unchecked(current, x, n);
        steps = steps + T::one();
    }
    Ok(steps)
}

pub fn power_trace<T: UInt>(x: T, n: T) -> Result<PowerTrace<T>> {
    unit_base(x, n)?;
    UnitGroup::new(n)?.trace(x)
}

pub fn coset_decomposition<T: UInt>(x: T, n: T) -> Result<CosetDecomposition<T>> {
    unit_base(x, n)?;
    UnitGroup::new(n)?.cosets(x)
}

/// Residue of `x^e mod N`, checked against 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FermatWitness<T> {
    pub x: T,
    pub n: T,
    pub exponent: T,
    pub residue: T,
}

impl<T: UInt> FermatWitness<T> {
    /// Whether `N` divides `x^e − 1`.
    pub fn holds(&self) -> bool {
        self.residue == T::one() % self.n
    }
}

/// Residues of `x^e` and `y^e` modulo `N`, checked for equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DifferenceWitness<T> {
    pub x: T,
    pub y: T,
    pub n: T,
    pub exponent: T,
    pub x_residue: T,
    pub y_residue: T,
}

impl<T: UInt> DifferenceWitness<T> {
    /// Whether `N` divides `x^e − y^e`.
    pub fn holds(&self) -> bool {
        self.x_residue == self.y_residue
    }
}

/// Products of power residues that fell outside the power residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosureWitness<T> {
    pub x: T,
    pub n: T,
    pub subgroup: Vec<T>,
    /// `(a, b, a·b mod N)` for every escaping product.
    pub counterexamples: Vec<(T, T, T)>,
}

impl<T: UInt> ClosureWitness<T> {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Whether `N | x^φ(N) − 1`; the residue is returned as witness.
pub fn euler_fermat_holds<T: UInt>(x: T, n: T) -> Result<FermatWitness<T>> {
    unit_base(x, n)?;
    let phi = totient_of(&factorize(n)?);
    let x = x % n;
    Ok(FermatWitness {
        x,
        n,
        exponent: phi,
        residue: pow_mod_unchecked(x, phi, n),
    })
}

/// Whether `N | x^φ(N) − y^φ(N)` for two units `x`, `y`.
pub fn power_difference_divisible<T: UInt>(x: T, y: T, n: T) -> Result<DifferenceWitness<T>> {
    unit_base(x, n)?;
    unit_base(y, n)?;
    let phi = totient_of(&factorize(n)?);
    let (x, y) = (x % n, y % n);
    Ok(DifferenceWitness {
        x,
        y,
        n,
        exponent: phi,
        x_residue: pow_mod_unchecked(x, phi, n),
        y_residue: pow_mod_unchecked(y, phi, n),
    })
}

/// Multiplies every pair of power residues of `x` and records any product
/// that is not itself a power residue.
pub fn subgroup_closure_check<T: UInt>(x: T, n: T) -> Result<ClosureWitness<T>> {
    let trace = power_trace(x, n)?;
    Ok(closure_of_trace(&trace))
}

pub(crate) fn closure_of_trace<T: UInt>(trace: &PowerTrace<T>) -> ClosureWitness<T> {
    let n = trace.modulus();
    let mut member = vec![false; to_usize(n)];
    for &r in trace.cycle() {
        member[to_usize(r)] = true;
    }
    let subgroup = trace.sorted_residues();
    let mut counterexamples = Vec::new();
    for &a in &subgroup {
        for &b in &subgroup {
            let product = mul_mod_unchecked(a, b, n);
            if !member[to_usize(product)] {
                counterexamples.push((a, b, product));
            }
        }
    }
    ClosureWitness {
        x: trace.base(),
        n,
        subgroup,
        counterexamples,
    }
}

/// Moduli built from distinct primes `p, q, r` together with an exponent
/// `e` such that `x^e − 1` is divisible by the modulus for every `x`
/// coprime to it. Each exponent is `φ` of its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivisibilityForm<T> {
    /// `p | x^(p−1) − 1`
    Prime { p: T },
    /// `pq | x^((p−1)(q−1)) − 1`
    TwoPrimes { p: T, q: T },
    /// `p³ | x^(p²(p−1)) − 1`
    PrimeCube { p: T },
    /// `p²q | x^(p(p−1)(q−1)) − 1`
    SquareTimesPrime { p: T, q: T },
    /// `pqr | x^((p−1)(q−1)(r−1)) − 1`
    ThreePrimes { p: T, q: T, r: T },
}

impl<T: UInt> DivisibilityForm<T> {
    /// The five forms for the distinct primes `p, q, r`.
    pub fn table(p: T, q: T, r: T) -> Result<[Self; 5]> {
        for (i, &v) in [p, q, r].iter().enumerate() {
            if !is_prime(v) {
                return Err(Error::NotPrime {
                    value: v.to_u128_lossless(),
                });
            }
            if [p, q, r][..i].contains(&v) {
                return Err(Error::RepeatedPrime {
                    value: v.to_u128_lossless(),
                });
            }
        }
        let table = [
            Self::Prime { p },
            Self::TwoPrimes { p, q },
            Self::PrimeCube { p },
            Self::SquareTimesPrime { p, q },
            Self::ThreePrimes { p, q, r },
        ];
        for form in &table {
            form.modulus()?;
            form.exponent()?;
        }
        Ok(table)
    }

    pub fn modulus(&self) -> Result<T> {
        let product = |factors: &[T]| {
            factors
                .iter()
                .try_fold(T::one(), |acc, f| acc.checked_mul(f))
                .ok_or(Error::Overflow { what: "modulus" })
        };
        match *self {
            Self::Prime { p } => Ok(p),
            Self::TwoPrimes { p, q } => product(&[p, q]),
            Self::PrimeCube { p } => product(&[p, p, p]),
            Self::SquareTimesPrime { p, q } => product(&[p, p, q]),
            Self::ThreePrimes { p, q, r } => product(&[p, q, r]),
        }
    }

    pub fn exponent(&self) -> Result<T> {
        let one = T::one();
        let product = |factors: &[T]| {
            factors
                .iter()
                .try_fold(T::one(), |acc, f| acc.checked_mul(f))
                .ok_or(Error::Overflow { what: "exponent" })
        };
        match *self {
            Self::Prime { p } => Ok(p - one),
            Self::TwoPrimes { p, q } => product(&[p - one, q - one]),
            Self::PrimeCube { p } => product(&[p, p, p - one]),
            Self::SquareTimesPrime { p, q } => product(&[p, p - one, q - one]),
            Self::ThreePrimes { p, q, r } => product(&[p - one, q - one, r - one]),
        }
    }

    /// Evaluates `x^e mod modulus`; `x` must be coprime to the modulus.
    pub fn check(&self, x: T) -> Result<FermatWitness<T>> {
        let n = self.modulus()?;
        let exponent = self.exponent()?;
        let x = unit_base(x, n)?;
        Ok(FermatWitness {
            x,
            n,
            exponent,
            residue: pow_mod_unchecked(x, exponent, n),
        })
    }
}
