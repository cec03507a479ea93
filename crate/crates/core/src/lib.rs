//! Totients, totatives, arithmetic-progression residue systems,
//! multiplicative orders, power-residue cosets and Euler-Fermat checks.
//!
//! Every operation is generic over an unsigned machine integer ([`UInt`]:
//! `u8` through `u64`). Products of two residues are formed exactly in the
//! double-width companion type. The aliases below fix the width to `u64`
//! (and `u32`) for everyday use.

pub mod arith;
pub mod error;
pub mod int;
pub mod power;
pub mod progression;
pub mod totient;
pub mod verify;

pub use arith::{
    add_mod, coprime, divisors, divisors_of, factorize, gcd, is_prime, mod_inverse, mod_pow,
    mul_mod, reduce, reduce_signed,
};
pub use error::{Error, Result};
pub use int::UInt;
pub use power::{
    coset_decomposition, euler_fermat_holds, multiplicative_order, order_bruteforce,
    power_difference_divisible, power_trace, subgroup_closure_check, DivisibilityForm,
    ORDER_ORACLE_BOUND,
};
pub use progression::{count_coprime_terms, progression_residues, solve_progression_congruence};
pub use totient::{totatives, totient, totient_bruteforce, totient_of, TOTIENT_ORACLE_BOUND};

pub type Factorization = arith::Factorization<u64>;
pub type TotativeSet = totient::TotativeSet<u64>;
pub type ProgressionTrace = progression::ProgressionTrace<u64>;
pub type CongruenceSolution = progression::CongruenceSolution<u64>;
pub type PowerTrace = power::PowerTrace<u64>;
pub type CosetDecomposition = power::CosetDecomposition<u64>;
pub type UnitGroup = power::UnitGroup<u64>;
pub type FermatWitness = power::FermatWitness<u64>;
pub type DifferenceWitness = power::DifferenceWitness<u64>;
pub type ClosureWitness = power::ClosureWitness<u64>;

pub type Factorization32 = arith::Factorization<u32>;
pub type TotativeSet32 = totient::TotativeSet<u32>;
pub type ProgressionTrace32 = progression::ProgressionTrace<u32>;
pub type CongruenceSolution32 = progression::CongruenceSolution<u32>;
pub type PowerTrace32 = power::PowerTrace<u32>;
pub type CosetDecomposition32 = power::CosetDecomposition<u32>;
pub type UnitGroup32 = power::UnitGroup<u32>;
