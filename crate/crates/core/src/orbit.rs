//! Conjugation of full cycles by the rotation `a -> a + 1 (mod n)`.
//!
//! The rotation action splits `C_n` into orbits whose sizes divide `n`. The
//! fixed points are exactly the shifts `a -> a + r` with `gcd(r, n) = 1`,
//! which are also exactly the cycles with one cyclic descent. Every other
//! orbit contributes a multiple of `Φ_n(q)` to `f_{n-1}(q)`, so summing the
//! orbit contributions modulo `Φ_n(q)` only sees the shifts.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::bigpoly::{cyclotomic, Polynomial};
use crate::error::Error;
use crate::numth::{euler_phi, gcd};
use crate::permstat::{
    cycle_from_arrangement, des_bar, enumerate_cycles, is_full_cycle, maj_bar, Permutation,
};
use crate::report::CongruenceReport;

/// Lemma checks switch from exhaustive sweeps to sampling at this size.
pub const EXHAUSTIVE_LIMIT: usize = 10;
pub const DEFAULT_SAMPLES: usize = 100_000;
pub const DEFAULT_SEED: u64 = 0x0051_5749_4c53_4f4e;

/// `τ ∘ σ ∘ τ⁻¹` with `τ(a) = a + 1`, so the result sends `a + 1` to
/// `σ(a) + 1`, wrapping `n + 1` to `1`.
pub fn conjugate_by_rotation(p: &Permutation) -> Permutation {
    let n = p.len() as u32;
    let mut images = vec![0u32; n as usize];
    for a in 1..=n {
        images[(a % n) as usize] = p.apply(a) % n + 1;
    }
    Permutation::new(images).expect("conjugate of a permutation is a permutation")
}

/// The shift `a -> a + r (mod n)` on `{1..n}`.
pub fn shift_permutation(r: usize, n: usize) -> Permutation {
    assert!(n >= 2 && (1..n).contains(&r), "shift needs 1 <= r < n");
    let images = (1..=n).map(|a| ((a - 1 + r) % n + 1) as u32).collect();
    Permutation::new(images).expect("shifts are bijections")
}

/// One rotation orbit of `C_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Lexicographically smallest member in one-line notation.
    pub rep: Permutation,
    pub size: usize,
    pub rep_maj_bar: u64,
    pub rep_des_bar: u64,
}

impl OrbitRecord {
    /// Sum of `q^{maj_bar + k(des_bar - 1) mod n}` over `k = 0..size`. Because
    /// `q^n ≡ 1 (mod Φ_n(q))` this is congruent to the orbit's contribution to
    /// `f_{n-1}(q)`, and its degree stays below `n`.
    pub fn exponent_sum(&self) -> Polynomial {
        let n = self.rep.len() as u64;
        let mut counts = vec![0u64; n as usize];
        for k in 0..self.size as u64 {
            let e = (self.rep_maj_bar + k * (self.rep_des_bar - 1)) % n;
            counts[e as usize] += 1;
        }
        Polynomial::from_counts(&counts)
    }
}

/// Follows the rotation action from `p` back to itself.
pub fn orbit_of(p: &Permutation) -> Result<OrbitRecord, Error> {
    if p.len() < 2 || !is_full_cycle(p) {
        return Err(Error::NotAFullCycle(p.to_string()));
    }
    let mut rep = p.clone();
    let mut size = 1;
    let mut cur = conjugate_by_rotation(p);
    while &cur != p {
        if cur < rep {
            rep = cur.clone();
        }
        size += 1;
        cur = conjugate_by_rotation(&cur);
    }
    Ok(OrbitRecord {
        rep_maj_bar: maj_bar(&rep),
        rep_des_bar: des_bar(&rep),
        rep,
        size,
    })
}

/// All orbits of `C_n`, sorted by representative.
pub fn orbit_census(n: usize) -> Vec<OrbitRecord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in enumerate_cycles(n) {
        let rec = orbit_of(&c).expect("enumerated cycles are full cycles");
        if seen.insert(rec.rep.clone()) {
            out.push(rec);
        }
    }
    out.sort_by(|a, b| a.rep.cmp(&b.rep));
    out
}

fn transfer_holds(sigma: &Permutation) -> bool {
    let n = sigma.len() as u64;
    let t = conjugate_by_rotation(sigma);
    let des = des_bar(sigma);
    if des_bar(&t) != des {
        return false;
    }
    // maj_bar(Tσ) - maj_bar(σ) - des_bar(σ) + 1 ≡ 0 (mod n)
    (maj_bar(&t) + 1 + 2 * n * n - maj_bar(sigma) - des).is_multiple_of(n)
}

fn random_cycle(n: usize, rng: &mut StdRng) -> Permutation {
    let mut arrangement: Vec<u32> = (2..=n as u32).collect();
    arrangement.shuffle(rng);
    cycle_from_arrangement(&arrangement)
}

/// Checks that rotation preserves the cyclic descent count and shifts the
/// cyclic major index by `des_bar - 1` modulo `n`. The residue counts
/// counterexamples.
///
/// Exhaustive below [`EXHAUSTIVE_LIMIT`], otherwise [`DEFAULT_SAMPLES`]
/// random cycles from a fixed seed.
pub fn verify_lemma_transfer(n: usize) -> CongruenceReport {
    if n < EXHAUSTIVE_LIMIT {
        let started = Instant::now();
        let bad = enumerate_cycles(n).filter(|c| !transfer_holds(c)).count();
        CongruenceReport::new(
            "lemma-transfer",
            [("n", n as i64)],
            Polynomial::constant(bad as i64),
            Polynomial::zero(),
        )
        .timed(started)
    } else {
        verify_lemma_transfer_sampled(n, DEFAULT_SAMPLES, DEFAULT_SEED)
    }
}

pub fn verify_lemma_transfer_sampled(n: usize, samples: usize, seed: u64) -> CongruenceReport {
    assert!(n >= 2);
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(seed);
    let bad = (0..samples)
        .filter(|_| !transfer_holds(&random_cycle(n, &mut rng)))
        .count();
    CongruenceReport::new(
        "lemma-transfer",
        [("n", n as i64), ("samples", samples as i64)],
        Polynomial::constant(bad as i64),
        Polynomial::zero(),
    )
    .timed(started)
}

/// The three sets compared by [`verify_lemma_fixed_and_des1`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointSets {
    pub fixed: BTreeSet<Permutation>,
    pub single_descent: BTreeSet<Permutation>,
    pub coprime_shifts: BTreeSet<Permutation>,
}

impl FixedPointSets {
    pub fn compute(n: usize) -> Self {
        let mut fixed = BTreeSet::new();
        let mut single_descent = BTreeSet::new();
        for c in enumerate_cycles(n) {
            if conjugate_by_rotation(&c) == c {
                fixed.insert(c.clone());
            }
            if des_bar(&c) == 1 {
                single_descent.insert(c);
            }
        }
        let coprime_shifts = (1..n)
            .filter(|&r| gcd(r as u64, n as u64) == 1)
            .map(|r| shift_permutation(r, n))
            .collect();
        Self {
            fixed,
            single_descent,
            coprime_shifts,
        }
    }

    /// Elements not shared by all three sets.
    pub fn mismatches(&self) -> usize {
        let union: BTreeSet<_> = self
            .fixed
            .iter()
            .chain(&self.single_descent)
            .chain(&self.coprime_shifts)
            .collect();
        union
            .into_iter()
            .filter(|p| {
                !(self.fixed.contains(p)
                    && self.single_descent.contains(p)
                    && self.coprime_shifts.contains(p))
            })
            .count()
    }
}

/// Checks that the rotation-fixed cycles, the cycles with one cyclic descent
/// and the coprime shifts coincide, and that there are `φ(n)` of them.
///
/// The residue is `|fixed| + m q` where `m` counts elements missing from at
/// least one of the three sets; the expected value is the constant `φ(n)`.
pub fn verify_lemma_fixed_and_des1(n: usize) -> CongruenceReport {
    let started = Instant::now();
    let sets = FixedPointSets::compute(n);
    let residue = Polynomial::from_i64s(&[sets.fixed.len() as i64, sets.mismatches() as i64]);
    CongruenceReport::new(
        "lemma-fixed",
        [("n", n as i64)],
        residue,
        Polynomial::constant(euler_phi(n as u64) as i64),
    )
    .timed(started)
}

/// Each orbit of `C_n` with its contribution reduced modulo `Φ_n(q)`.
pub fn orbit_residues(n: usize) -> Vec<(OrbitRecord, Polynomial)> {
    let phi = cyclotomic(n as u64);
    orbit_census(n)
        .into_iter()
        .map(|rec| {
            let r = rec
                .exponent_sum()
                .rem(&phi)
                .expect("cyclotomic polynomials are monic");
            (rec, r)
        })
        .collect()
}

/// `f_{n-1}(q) mod Φ_n(q)` computed orbit by orbit. Fails if an orbit of size
/// greater than one leaves a nonzero residue.
pub fn f_mod_phi_via_orbits(n: usize) -> Result<Polynomial, Error> {
    assert!(n >= 2, "f_mod_phi_via_orbits needs n >= 2");
    let phi = cyclotomic(n as u64);
    let mut total = Polynomial::zero();
    for (rec, residue) in orbit_residues(n) {
        if rec.size > 1 && !residue.is_zero() {
            return Err(Error::OrbitSumNonzero {
                rep: rec.rep.to_string(),
                size: rec.size,
                residue: residue.to_string(),
            });
        }
        total += &residue;
    }
    Ok(total.rem(&phi).expect("cyclotomic polynomials are monic"))
}
