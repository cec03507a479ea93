//! Exhaustive and seeded sweeps that check every theorem-level invariant
//! over a range of moduli.
//!
//! Sweeps fan out across moduli with rayon; results are gathered back in
//! modulus order, so a report is identical for identical inputs no matter
//! how the work was scheduled. Randomized suites derive one generator per
//! modulus from the run seed.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{coprime, is_prime, mul_mod_unchecked};
use crate::error::{Error, Result};
use crate::power::{closure_of_trace, order_bruteforce, DivisibilityForm, UnitGroup};
use crate::progression::{count_coprime_terms, progression_residues};
use crate::totient::{totatives, totient, totient_bruteforce, TOTIENT_ORACLE_BOUND};

/// Default seed for randomized suites.
pub const DEFAULT_SEED: u64 = 271;

/// Moduli up to this bound are also checked against the brute-force order.
pub const ORDER_ORACLE_SWEEP: u64 = 500;

/// Progressions up to this modulus get the periodicity spot-check.
pub const PERIODICITY_SWEEP: u64 = 50;

/// Seeded coprime pairs per run of the multiplicativity suite.
pub const MULTIPLICATIVITY_PAIRS: usize = 500;

/// Seeded bases per modulus in the Euler-Fermat suite.
pub const BASES_PER_MODULUS: usize = 20;

/// Seeded bases per divisibility form.
pub const BASES_PER_FORM: usize = 50;

/// Prime triples feeding the divisibility-form table.
pub const FORM_PRIMES: [(u64, u64, u64); 4] = [(3, 5, 7), (2, 3, 5), (5, 7, 11), (7, 11, 13)];

/// A named group of invariant checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Progressions with coprime difference are complete residue systems.
    T1,
    /// Such progressions have `φ(n)` terms coprime to `n`.
    T2,
    /// `φ(p^m) = p^(m−1)(p−1)` and `φ(p) = p − 1`.
    T3,
    /// `φ(pq) = (p−1)(q−1)`.
    T4,
    /// `φ(AB) = φ(A)φ(B)` for coprime `A`, `B`.
    T5,
    /// Totatives are closed under `α ↦ n − α`.
    Complement,
    /// `φ` agrees with the brute-force count.
    Oracle,
    /// Power residues of a unit are units.
    T6,
    /// Powers are distinct until the first return to 1; order agrees with the oracle.
    T7,
    /// Power residues are closed under multiplication.
    T8,
    /// Cosets partition the totatives into classes of size `ν`.
    T9,
    /// `ν` divides `φ(N)`.
    T10,
    /// `x^φ(N) ≡ 1`, the divisibility forms, and `x^φ(N) ≡ y^φ(N)`.
    T11,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::T1,
        Suite::T2,
        Suite::T3,
        Suite::T4,
        Suite::T5,
        Suite::Complement,
        Suite::Oracle,
        Suite::T6,
        Suite::T7,
        Suite::T8,
        Suite::T9,
        Suite::T10,
        Suite::T11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::T1 => "t1",
            Suite::T2 => "t2",
            Suite::T3 => "t3",
            Suite::T4 => "t4",
            Suite::T5 => "t5",
            Suite::Complement => "complement",
            Suite::Oracle => "oracle",
            Suite::T6 => "t6",
            Suite::T7 => "t7",
            Suite::T8 => "t8",
            Suite::T9 => "t9",
            Suite::T10 => "t10",
            Suite::T11 => "t11",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == lower)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest modulus (or operand bound) swept.
    pub max_n: u64,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(max_n: u64) -> Self {
        Self {
            max_n,
            seed: DEFAULT_SEED,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// A failed check together with the inputs and residues that exhibit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub suite: Suite,
    pub check: &'static str,
    pub inputs: Vec<(&'static str, u64)>,
    pub witness: Vec<u64>,
    /// Error text when an operation failed outright on valid inputs.
    pub error: Option<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}:", self.suite, self.check)?;
        for (name, value) in &self.inputs {
            write!(f, " {name}={value}")?;
        }
        write!(f, " witness={:?}", self.witness)?;
        if let Some(error) = &self.error {
            write!(f, " error={error}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: SweepConfig,
    /// Number of individual cases checked.
    pub cases: u64,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn check(
        &mut self,
        ok: bool,
        suite: Suite,
        check: &'static str,
        inputs: impl FnOnce() -> Vec<(&'static str, u64)>,
        witness: impl FnOnce() -> Vec<u64>,
    ) {
        self.cases += 1;
        if !ok {
            self.violations.push(Violation {
                suite,
                check,
                inputs: inputs(),
                witness: witness(),
                error: None,
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.violations.extend(other.violations);
        self
    }
}

/// An operation error inside a sweep over valid inputs counts as a violation.
fn internal(suite: Suite, check: &'static str, n: u64, err: &Error) -> Violation {
    Violation {
        suite,
        check,
        inputs: vec![("n", n)],
        witness: Vec::new(),
        error: Some(err.to_string()),
    }
}

/// Runs `per_modulus` for every modulus in `range`, in parallel, keeping
/// modulus order in the merged result.
fn sweep<F>(range: std::ops::RangeInclusive<u64>, per_modulus: F) -> Tally
where
    F: Fn(u64) -> Tally + Sync + Send,
{
    range
        .into_par_iter()
        .map(per_modulus)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn modulus_rng(seed: u64, salt: u64, n: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(salt.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ n);
    rng
}

/// Draws a unit modulo `n` uniformly from `[1, n)` (or 0 when `n = 1`).
fn random_unit(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    loop {
        let x = rng.gen_range(1..n);
        if coprime(x, n) {
            return x;
        }
    }
}

/// Runs one suite up to `config.max_n`.
pub fn run_suite(suite: Suite, config: &SweepConfig) -> Result<SuiteReport> {
    if config.max_n < 2 {
        return Err(Error::BelowMinimum {
            what: "max_n",
            min: 2,
        });
    }
    let tally = match suite {
        Suite::T1 => progression_sweep(config.max_n, true),
        Suite::T2 => progression_sweep(config.max_n, false),
        Suite::T3 => prime_power_sweep(config.max_n),
        Suite::T4 => two_prime_sweep(config.max_n),
        Suite::T5 => multiplicativity_sweep(config.max_n, config.seed),
        Suite::Complement => complement_sweep(config.max_n),
        Suite::Oracle => oracle_sweep(config.max_n),
        Suite::T6 | Suite::T7 | Suite::T10 => unit_trace_sweep(suite, config.max_n),
        Suite::T8 => closure_sweep(config.max_n),
        Suite::T9 => coset_sweep(config.max_n),
        Suite::T11 => euler_fermat_sweep(config.max_n, config.seed),
    };
    Ok(SuiteReport {
        suite,
        config: *config,
        cases: tally.cases,
        violations: tally.violations,
    })
}

/// Runs several suites in the order given.
pub fn run_suites(suites: &[Suite], config: &SweepConfig) -> Result<Vec<SuiteReport>> {
    suites.iter().map(|&s| run_suite(s, config)).collect()
}

fn progression_sweep(max_n: u64, permutation: bool) -> Tally {
    let suite = if permutation { Suite::T1 } else { Suite::T2 };
    sweep(1..=max_n, |n| {
        let mut tally = Tally::default();
        let phi = match totient(n) {
            Ok(phi) => phi,
            Err(e) => {
                tally.violations.push(internal(suite, "totient", n, &e));
                return tally;
            }
        };
        for d in (1..n).filter(|&d| coprime(d, n)) {
            for a in [0, 1, n + 3] {
                let inputs = || vec![("a", a), ("d", d), ("n", n)];
                if permutation {
                    let trace = match progression_residues(a, d, n) {
                        Ok(trace) => trace,
                        Err(e) => {
                            tally.violations.push(internal(suite, "trace", n, &e));
                            continue;
                        }
                    };
                    tally.check(
                        trace.is_complete_system(),
                        suite,
                        "permutation",
                        inputs,
                        || trace.residues().to_vec(),
                    );
                    let collision = trace.first_collision();
                    tally.check(collision.is_none(), suite, "distinct", inputs, || {
                        collision
                            .map(|(i, j)| vec![i as u64, j as u64])
                            .unwrap_or_default()
                    });
                    if n <= PERIODICITY_SWEEP {
                        for k in 0..3 * n {
                            let here = ((a as u128 + k as u128 * d as u128) % n as u128) as u64;
                            let later =
                                ((a as u128 + (k + n) as u128 * d as u128) % n as u128) as u64;
                            tally.check(here == later, suite, "periodic", inputs, || {
                                vec![k, here, later]
                            });
                        }
                    }
                } else {
                    match count_coprime_terms(a, d, n) {
                        Ok(count) => {
                            tally.check(count == phi, suite, "coprime_count", inputs, || {
                                vec![count, phi]
                            })
                        }
                        Err(e) => tally.violations.push(internal(suite, "count", n, &e)),
                    }
                }
            }
        }
        tally
    })
}

fn prime_power_sweep(max_n: u64) -> Tally {
    let mut tally = Tally::default();
    for p in (2..=50u64).filter(|&p| is_prime(p)) {
        for m in 1..=6u32 {
            let pm = p.pow(m);
            if pm > 1_000_000_000 {
                break;
            }
            let expected = p.pow(m - 1) * (p - 1);
            let got = totient(pm).unwrap_or(0);
            tally.check(
                got == expected,
                Suite::T3,
                "prime_power",
                || vec![("p", p), ("m", u64::from(m))],
                || vec![got, expected],
            );
        }
    }
    tally.merge(sweep(2..=max_n, |p| {
        let mut tally = Tally::default();
        if is_prime(p) {
            let got = totient(p).unwrap_or(0);
            tally.check(
                got == p - 1,
                Suite::T3,
                "prime",
                || vec![("p", p)],
                || vec![got],
            );
        }
        tally
    }))
}

fn two_prime_sweep(max_n: u64) -> Tally {
    sweep(2..=max_n, |p| {
        let mut tally = Tally::default();
        if !is_prime(p) {
            return tally;
        }
        let mut q = p + 1;
        while q <= max_n / p {
            if is_prime(q) {
                let got = totient(p * q).unwrap_or(0);
                let expected = (p - 1) * (q - 1);
                tally.check(
                    got == expected,
                    Suite::T4,
                    "two_primes",
                    || vec![("p", p), ("q", q)],
                    || vec![got, expected],
                );
            }
            q += 1;
        }
        tally
    })
}

fn multiplicativity_sweep(max_n: u64, seed: u64) -> Tally {
    let mut rng = modulus_rng(seed, 5, 0);
    let mut tally = Tally::default();
    let mut drawn = 0;
    while drawn < MULTIPLICATIVITY_PAIRS {
        let a = rng.gen_range(1..=max_n);
        let b = rng.gen_range(1..=max_n);
        if !coprime(a, b) {
            continue;
        }
        drawn += 1;
        let joint = totient(a * b).unwrap_or(0);
        let split = totient(a).unwrap_or(0) * totient(b).unwrap_or(0);
        tally.check(
            joint == split,
            Suite::T5,
            "multiplicative",
            || vec![("a", a), ("b", b)],
            || vec![joint, split],
        );
    }
    tally
}

fn complement_sweep(max_n: u64) -> Tally {
    sweep(2..=max_n, |n| {
        let mut tally = Tally::default();
        match totatives(n) {
            Ok(set) => {
                for alpha in set.iter() {
                    tally.check(
                        set.contains(n - alpha),
                        Suite::Complement,
                        "complement",
                        || vec![("n", n), ("alpha", alpha)],
                        || vec![n - alpha],
                    );
                }
            }
            Err(e) => tally
                .violations
                .push(internal(Suite::Complement, "totatives", n, &e)),
        }
        tally
    })
}

fn oracle_sweep(max_n: u64) -> Tally {
    sweep(1..=max_n.min(TOTIENT_ORACLE_BOUND), |n| {
        let mut tally = Tally::default();
        let fast = totient(n).unwrap_or(0);
        let slow = totient_bruteforce(n).unwrap_or(0);
        tally.check(
            fast == slow,
            Suite::Oracle,
            "bruteforce",
            || vec![("n", n)],
            || vec![fast, slow],
        );
        tally
    })
}

fn unit_trace_sweep(suite: Suite, max_n: u64) -> Tally {
    sweep(2..=max_n, move |n| {
        let mut tally = Tally::default();
        let group = match UnitGroup::new(n) {
            Ok(group) => group,
            Err(e) => {
                tally.violations.push(internal(suite, "unit_group", n, &e));
                return tally;
            }
        };
        let phi = group.totient();
        for x in group.totatives().iter() {
            let inputs = || vec![("x", x), ("n", n)];
            let (trace, order) = match (group.trace(x), group.order(x)) {
                (Ok(trace), Ok(order)) => (trace, order),
                (Err(e), _) | (_, Err(e)) => {
                    tally.violations.push(internal(suite, "order", n, &e));
                    continue;
                }
            };
            match suite {
                Suite::T6 => {
                    let stray: Vec<u64> = trace
                        .cycle()
                        .iter()
                        .copied()
                        .filter(|&r| !coprime(r, n))
                        .collect();
                    tally.check(stray.is_empty(), suite, "coprime_residues", inputs, || {
                        stray
                    });
                }
                Suite::T7 => {
                    let mut seen = vec![false; n as usize];
                    let mut repeat = None;
                    for &r in trace.cycle() {
                        if std::mem::replace(&mut seen[r as usize], true) {
                            repeat = Some(r);
                            break;
                        }
                    }
                    tally.check(
                        repeat.is_none() && trace.cycle()[0] == 1 && trace.next_power() == 1,
                        suite,
                        "first_repeat_is_one",
                        inputs,
                        || trace.cycle().to_vec(),
                    );
                    tally.check(trace.order() == order, suite, "trace_order", inputs, || {
                        vec![trace.order(), order]
                    });
                    if n <= ORDER_ORACLE_SWEEP {
                        let brute = order_bruteforce(x, n).unwrap_or(0);
                        tally.check(brute == order, suite, "order_oracle", inputs, || {
                            vec![order, brute]
                        });
                    }
                }
                Suite::T10 => {
                    tally.check(phi % order == 0, suite, "order_divides_phi", inputs, || {
                        vec![order, phi]
                    });
                }
                _ => unreachable!("not a trace suite"),
            }
        }
        tally
    })
}

fn closure_sweep(max_n: u64) -> Tally {
    sweep(2..=max_n, |n| {
        let mut tally = Tally::default();
        let group = match UnitGroup::new(n) {
            Ok(group) => group,
            Err(e) => {
                tally
                    .violations
                    .push(internal(Suite::T8, "unit_group", n, &e));
                return tally;
            }
        };
        let mut checked = HashSet::new();
        for x in group.totatives().iter() {
            let trace = match group.trace(x) {
                Ok(trace) => trace,
                Err(e) => {
                    tally.violations.push(internal(Suite::T8, "trace", n, &e));
                    continue;
                }
            };
            // The check depends only on the residue set; each set is multiplied out once.
            if !checked.insert(trace.sorted_residues()) {
                tally.cases += 1;
                continue;
            }
            let witness = closure_of_trace(&trace);
            tally.check(
                witness.holds(),
                Suite::T8,
                "closed_under_products",
                || vec![("x", x), ("n", n)],
                || {
                    witness
                        .counterexamples
                        .iter()
                        .flat_map(|&(a, b, p)| [a, b, p])
                        .collect()
                },
            );
        }
        tally
    })
}

fn coset_sweep(max_n: u64) -> Tally {
    sweep(2..=max_n, |n| {
        let mut tally = Tally::default();
        let group = match UnitGroup::new(n) {
            Ok(group) => group,
            Err(e) => {
                tally
                    .violations
                    .push(internal(Suite::T9, "unit_group", n, &e));
                return tally;
            }
        };
        let phi = group.totient();
        let mut checked = HashSet::new();
        for x in group.totatives().iter() {
            let inputs = || vec![("x", x), ("n", n)];
            let trace = match group.trace(x) {
                Ok(trace) => trace,
                Err(e) => {
                    tally.violations.push(internal(Suite::T9, "trace", n, &e));
                    continue;
                }
            };
            let order = trace.order();
            // The decomposition depends only on the residue set.
            if !checked.insert(trace.sorted_residues()) {
                tally.cases += 1;
                continue;
            }
            let decomposition = group.cosets_of_trace(&trace);
            let index = decomposition.index();

            let sizes_ok = decomposition
                .cosets()
                .iter()
                .all(|c| c.len() as u64 == order);
            tally.check(sizes_ok, Suite::T9, "equal_sizes", inputs, || {
                decomposition
                    .cosets()
                    .iter()
                    .map(|c| c.len() as u64)
                    .collect()
            });

            let mut union: Vec<u64> = decomposition.cosets().concat();
            union.sort_unstable();
            tally.check(
                union == group.totatives().parts(),
                Suite::T9,
                "partition",
                inputs,
                || union.clone(),
            );

            tally.check(
                index * order == phi,
                Suite::T9,
                "index_times_order",
                inputs,
                || vec![index, order, phi],
            );

            // A residue times a non-residue stays in the non-residue's coset.
            let mut owner = vec![usize::MAX; n as usize];
            for (i, coset) in decomposition.cosets().iter().enumerate() {
                for &c in coset {
                    owner[c as usize] = i;
                }
            }
            for (i, coset) in decomposition.cosets().iter().enumerate().skip(1) {
                for &alpha in coset {
                    for &r in decomposition.subgroup() {
                        let product = mul_mod_unchecked(alpha, r, n);
                        let lands = owner[product as usize];
                        tally.check(lands == i, Suite::T9, "non_residue_product", inputs, || {
                            vec![alpha, r, product]
                        });
                    }
                }
            }
        }
        tally
    })
}

fn euler_fermat_sweep(max_n: u64, seed: u64) -> Tally {
    let moduli = sweep(2..=max_n, |n| {
        let mut tally = Tally::default();
        let group = match UnitGroup::new(n) {
            Ok(group) => group,
            Err(e) => {
                tally
                    .violations
                    .push(internal(Suite::T11, "unit_group", n, &e));
                return tally;
            }
        };
        let mut rng = modulus_rng(seed, 11, n);
        for _ in 0..BASES_PER_MODULUS {
            let x = random_unit(&mut rng, n);
            match group.euler_fermat(x) {
                Ok(w) => tally.check(
                    w.holds(),
                    Suite::T11,
                    "euler_fermat",
                    || vec![("x", x), ("n", n)],
                    || vec![w.exponent, w.residue],
                ),
                Err(e) => tally
                    .violations
                    .push(internal(Suite::T11, "euler_fermat", n, &e)),
            }
        }
        for _ in 0..BASES_PER_MODULUS {
            let x = random_unit(&mut rng, n);
            let y = random_unit(&mut rng, n);
            match group.power_difference(x, y) {
                Ok(w) => tally.check(
                    w.holds(),
                    Suite::T11,
                    "power_difference",
                    || vec![("x", x), ("y", y), ("n", n)],
                    || vec![w.exponent, w.x_residue, w.y_residue],
                ),
                Err(e) => tally
                    .violations
                    .push(internal(Suite::T11, "power_difference", n, &e)),
            }
        }
        tally
    });

    let mut forms = Tally::default();
    let mut rng = modulus_rng(seed, 57, 0);
    for &(p, q, r) in &FORM_PRIMES {
        let table = DivisibilityForm::table(p, q, r).expect("form primes are distinct primes");
        for form in table {
            let modulus = form.modulus().expect("form moduli fit in u64");
            for _ in 0..BASES_PER_FORM {
                let x = loop {
                    let x = rng.gen_range(1..=1_000_000_000u64);
                    if coprime(x, modulus) {
                        break x;
                    }
                };
                match form.check(x) {
                    Ok(w) => forms.check(
                        w.holds(),
                        Suite::T11,
                        "divisibility_form",
                        || vec![("x", x), ("modulus", modulus), ("exponent", w.exponent)],
                        || vec![w.residue],
                    ),
                    Err(e) => forms.violations.push(internal(
                        Suite::T11,
                        "divisibility_form",
                        modulus,
                        &e,
                    )),
                }
            }
        }
    }
    moduli.merge(forms)
}
