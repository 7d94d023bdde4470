//! Permutations in one-line notation, the descent statistics `maj`, `inv`,
//! cyclic `maj`/`des`, and enumeration of `S_n` and of the full cycles `C_n`.

use std::fmt;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;

use crate::bigpoly::Polynomial;
use crate::error::Error;
use crate::qcalc::q_factorial;
use crate::report::CongruenceReport;

/// A permutation of `{1..n}` in one-line notation: `images[i - 1] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// Caller guarantees `images` is a bijection on `1..=n`.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as u32).collect(),
        }
    }

    pub fn reverse(n: usize) -> Self {
        Self {
            images: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

pub fn maj(p: &Permutation) -> u64 {
    maj_of(&p.images)
}

pub fn inv(p: &Permutation) -> u64 {
    let s = &p.images;
    let mut count = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                count += 1;
            }
        }
    }
    count
}

/// Major index with the comparison wrapped around: position `n` is a descent
/// when `σ(n) > σ(1)`.
pub fn maj_bar(p: &Permutation) -> u64 {
    assert!(p.len() >= 2, "maj_bar needs n >= 2");
    let n = p.len();
    let wrap = if p.images[n - 1] > p.images[0] { n as u64 } else { 0 };
    maj(p) + wrap
}

/// Number of cyclic descents.
pub fn des_bar(p: &Permutation) -> u64 {
    assert!(p.len() >= 2, "des_bar needs n >= 2");
    let s = &p.images;
    let n = s.len();
    (0..n).filter(|&i| s[i] > s[(i + 1) % n]).count() as u64
}

fn maj_of(s: &[u32]) -> u64 {
    s.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

/// All four statistics of one permutation; needs `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatBundle {
    pub maj: u64,
    pub inv: u64,
    pub maj_bar: u64,
    pub des_bar: u64,
}

impl StatBundle {
    pub fn of(p: &Permutation) -> Self {
        Self {
            maj: maj(p),
            inv: inv(p),
            maj_bar: maj_bar(p),
            des_bar: des_bar(p),
        }
    }
}

pub fn is_full_cycle(p: &Permutation) -> bool {
    let n = p.len();
    if n == 0 {
        return false;
    }
    let mut x = 1;
    for step in 1..=n {
        x = p.apply(x);
        if x == 1 {
            return step == n;
        }
    }
    false
}

/// One-line notation of the cycle `(1, a_2, ..., a_n)`.
fn cycle_images(arrangement: &[u32], out: &mut Vec<u32>) {
    let n = arrangement.len() + 1;
    out.clear();
    out.resize(n, 0);
    let mut prev = 1u32;
    for &a in arrangement {
        out[prev as usize - 1] = a;
        prev = a;
    }
    out[prev as usize - 1] = 1;
}

/// Converts a cycle `(1, a_2, ..., a_n)` given as the arrangement
/// `(a_2, ..., a_n)` of `{2..n}` into a permutation.
pub fn cycle_from_arrangement(arrangement: &[u32]) -> Permutation {
    let mut images = Vec::new();
    cycle_images(arrangement, &mut images);
    Permutation::from_images_unchecked(images)
}

/// Every permutation of `{1..n}`, in lexicographic order.
pub fn enumerate_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(Permutation::from_images_unchecked)
}

/// Every full cycle of `{1..n}`, one per arrangement `(a_2, ..., a_n)` of
/// `{2..n}`. Yields `(n-1)!` permutations.
pub fn enumerate_cycles(n: usize) -> impl Iterator<Item = Permutation> {
    assert!(n >= 2, "enumerate_cycles needs n >= 2");
    (2..=n as u32)
        .permutations(n - 1)
        .map(|arr| cycle_from_arrangement(&arr))
}

/// The cycles whose arrangement starts with `first`, i.e. those with
/// `σ(1) = first`. These shards partition `C_n` over `first in 2..=n`.
pub fn enumerate_cycles_with_first(n: usize, first: u32) -> impl Iterator<Item = Permutation> {
    assert!(n >= 2 && (2..=n as u32).contains(&first));
    (2..=n as u32)
        .filter(move |&v| v != first)
        .permutations(n - 2)
        .map(move |mut rest| {
            rest.insert(0, first);
            cycle_from_arrangement(&rest)
        })
}

/// Histogram of `maj` over the cycles with `σ(1) = first`.
fn maj_counts_for_shard(n: usize, first: u32) -> Vec<u64> {
    let mut counts = vec![0u64; n * (n - 1) / 2 + 1];
    let mut images = Vec::with_capacity(n);
    let rest: Vec<u32> = (2..=n as u32).filter(|&v| v != first).collect();
    let mut arrangement = Vec::with_capacity(n - 1);
    for tail in rest.iter().copied().permutations(n - 2) {
        arrangement.clear();
        arrangement.push(first);
        arrangement.extend_from_slice(&tail);
        cycle_images(&arrangement, &mut images);
        counts[maj_of(&images) as usize] += 1;
    }
    counts
}

fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `f_n(q) = sum over σ in C_{n+1} of q^{maj σ}`.
///
/// Enumeration is sharded by `σ(1)` across the current rayon pool. Counts are
/// machine words: `n!` overflows `u64` only past `n = 20`, far beyond what can
/// be enumerated.
pub fn f_poly(n: usize) -> Polynomial {
    assert!(n >= 1, "f_poly needs n >= 1");
    let m = n + 1;
    let counts = (2..=m as u32)
        .into_par_iter()
        .map(|first| maj_counts_for_shard(m, first))
        .reduce(|| vec![0u64; m * (m - 1) / 2 + 1], merge_counts);
    Polynomial::from_counts(&counts)
}

/// [`f_poly`] on a dedicated pool of `jobs` threads. The result does not
/// depend on `jobs`.
pub fn f_poly_with_jobs(n: usize, jobs: usize) -> Polynomial {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| f_poly(n))
}

/// Sequential reference: collect all cycles first, then sum monomials.
pub fn f_poly_materialized(n: usize) -> Polynomial {
    let cycles: Vec<Permutation> = enumerate_cycles(n + 1).collect();
    cycles
        .iter()
        .map(|c| Polynomial::monomial(1, maj(c) as usize))
        .sum()
}

/// Generating polynomials of `maj` and `inv` over `S_n`.
pub fn mahonian_polys(n: usize) -> (Polynomial, Polynomial) {
    let top = n * n.saturating_sub(1) / 2 + 1;
    let mut by_maj = vec![0u64; top];
    let mut by_inv = vec![0u64; top];
    for p in enumerate_permutations(n) {
        by_maj[maj(&p) as usize] += 1;
        by_inv[inv(&p) as usize] += 1;
    }
    (Polynomial::from_counts(&by_maj), Polynomial::from_counts(&by_inv))
}

/// Checks `sum q^maj = [n]_q! = sum q^inv` over `S_n`.
///
/// The report's residue is the first of the two generating polynomials that
/// disagrees with `[n]_q!`, or the `maj` polynomial when both agree, so the
/// report passes exactly when all three coincide.
pub fn check_mahonian(n: usize) -> CongruenceReport {
    let started = Instant::now();
    let (by_maj, by_inv) = mahonian_polys(n);
    let expected = q_factorial(n);
    let residue = if by_maj != expected { by_maj } else { by_inv };
    CongruenceReport::new("mahonian", [("n", n as i64)], residue, expected).timed(started)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numth::factorial;
    use num_bigint::BigInt;
    use std::collections::HashSet;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn maj_and_inv_examples() {
        assert_eq!(maj(&Permutation::identity(5)), 0);
        assert_eq!(inv(&Permutation::identity(5)), 0);
        assert_eq!(maj(&perm(&[2, 3, 1])), 2);
        assert_eq!(inv(&perm(&[2, 3, 1])), 2);
        for n in 1..8u64 {
            let r = Permutation::reverse(n as usize);
            assert_eq!(maj(&r), n * (n - 1) / 2);
            assert_eq!(inv(&r), n * (n - 1) / 2);
        }
    }

    #[test]
    fn cyclic_statistics_examples() {
        let s = perm(&[2, 3, 1]);
        assert_eq!((maj_bar(&s), des_bar(&s)), (2, 1));
        // [3,1,2] is the shift by 2: σ(3) = 2 < σ(1) = 3, no wrap descent
        let s = perm(&[3, 1, 2]);
        assert_eq!(maj(&s), 1);
        assert_eq!((maj_bar(&s), des_bar(&s)), (1, 1));
        // σ(3) = 2 > σ(1) = 1 wraps, adding n to maj
        let s = perm(&[1, 3, 2]);
        assert_eq!(maj(&s), 2);
        assert_eq!((maj_bar(&s), des_bar(&s)), (5, 2));
        let single = Permutation::identity(1);
        assert_eq!((maj(&single), inv(&single)), (0, 0));
    }

    #[test]
    fn cyclic_statistics_relations() {
        for n in 2..=7 {
            for p in enumerate_permutations(n) {
                let st = StatBundle::of(&p);
                assert_eq!(st.maj_bar % n as u64, st.maj % n as u64);
                let wraps = p.images()[n - 1] > p.images()[0];
                assert_eq!(st.maj_bar, st.maj + if wraps { n as u64 } else { 0 });
                if is_full_cycle(&p) {
                    assert!(st.des_bar >= 1);
                }
            }
        }
    }

    #[test]
    fn full_cycle_examples() {
        assert!(!is_full_cycle(&Permutation::identity(3)));
        assert!(is_full_cycle(&perm(&[2, 3, 4, 1])));
        assert!(!is_full_cycle(&perm(&[2, 1, 4, 3])));
        assert!(is_full_cycle(&Permutation::identity(1)));
    }

    #[test]
    fn cycle_enumeration_examples() {
        let c2: Vec<_> = enumerate_cycles(2).collect();
        assert_eq!(c2, vec![perm(&[2, 1])]);
        let c3: HashSet<_> = enumerate_cycles(3).collect();
        assert_eq!(c3, HashSet::from([perm(&[2, 3, 1]), perm(&[3, 1, 2])]));
        let c6: Vec<_> = enumerate_cycles(6).collect();
        assert_eq!(c6.len(), 120);
        assert!(c6.iter().all(is_full_cycle));
    }

    #[test]
    fn cycle_enumeration_matches_filtered_symmetric_group() {
        for n in 2..=7 {
            let direct: HashSet<_> = enumerate_cycles(n).collect();
            let filtered: HashSet<_> = enumerate_permutations(n).filter(is_full_cycle).collect();
            assert_eq!(direct, filtered);
        }
    }

    #[test]
    fn enumeration_counts() {
        for n in 1..=8 {
            let all: HashSet<_> = enumerate_permutations(n).collect();
            assert_eq!(BigInt::from(all.len()), factorial(n as u64));
        }
        for n in 2..=10 {
            let count = enumerate_cycles(n).count();
            assert_eq!(BigInt::from(count), factorial(n as u64 - 1));
        }
        let c7: HashSet<_> = enumerate_cycles(7).collect();
        assert_eq!(c7.len(), 720);
    }

    #[test]
    fn shards_partition_cycles() {
        let n = 6;
        let mut union = HashSet::new();
        for first in 2..=n as u32 {
            for c in enumerate_cycles_with_first(n, first) {
                assert_eq!(c.apply(1), first);
                assert!(union.insert(c));
            }
        }
        assert_eq!(union, enumerate_cycles(n).collect());
    }

    #[test]
    fn f_poly_examples() {
        assert_eq!(f_poly(1), Polynomial::q());
        assert_eq!(f_poly(2), Polynomial::from_i64s(&[0, 1, 1]));
        assert_eq!(f_poly(3), Polynomial::from_i64s(&[0, 1, 1, 2, 1, 1]));
    }

    #[test]
    fn f_poly_value_at_one_is_factorial() {
        for n in 1..=9 {
            assert_eq!(f_poly(n).eval_at_one(), factorial(n as u64));
        }
    }

    #[test]
    fn f_poly_is_independent_of_enumeration_strategy() {
        for n in 1..=7 {
            let streamed = f_poly(n);
            assert_eq!(streamed, f_poly_materialized(n));
            assert_eq!(streamed, f_poly_with_jobs(n, 1));
            assert_eq!(streamed, f_poly_with_jobs(n, 3));
        }
    }

    #[test]
    fn mahonian_examples() {
        assert!(check_mahonian(1).passed());
        let (by_maj, by_inv) = mahonian_polys(3);
        assert_eq!(by_maj, Polynomial::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(by_inv, by_maj);
        for n in 1..=8 {
            let r = check_mahonian(n);
            assert!(r.passed(), "{}", r.to_text());
        }
    }
}
