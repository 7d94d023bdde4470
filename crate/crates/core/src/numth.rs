//! Elementary number theory: factorization, divisors, Möbius and totient
//! functions, integer binomials and Ramanujan sums.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bigpoly::{cyclotomic, Polynomial};

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorizations for `1..=limit`, sorted by prime.
#[derive(Clone, Debug)]
pub struct FactorizationTable {
    entries: Vec<Vec<(u64, u32)>>,
}

impl FactorizationTable {
    /// Builds the table with a smallest-prime-factor sieve.
    pub fn new(limit: u64) -> Self {
        let limit = limit as usize;
        let mut spf = vec![0usize; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                for j in (i..=limit).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i;
                    }
                }
            }
        }
        let mut entries = vec![Vec::new(); limit + 1];
        for (n, entry) in entries.iter_mut().enumerate().skip(2) {
            let mut m = n;
            while m > 1 {
                let p = spf[m];
                let mut e = 0;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                entry.push((p as u64, e));
            }
        }
        Self { entries }
    }

    pub fn limit(&self) -> u64 {
        self.entries.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<&[(u64, u32)]> {
        if n == 0 {
            return None;
        }
        self.entries.get(n as usize).map(Vec::as_slice)
    }
}

type FactorMemo = Mutex<HashMap<u64, Vec<(u64, u32)>>>;

fn factor_memo() -> &'static FactorMemo {
    static MEMO: OnceLock<FactorMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Factorization of `n >= 1` by trial division, memoized. `factorize(1)` is
/// empty.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize needs n >= 1");
    if let Some(f) = factor_memo().lock().unwrap().get(&n) {
        return f.clone();
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    factor_memo().lock().unwrap().insert(n, out.clone());
    out
}

/// Sorted divisors of `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Integers in `1..=n` coprime to `n`.
pub fn totatives(n: u64) -> Vec<u64> {
    (1..=n).filter(|&r| gcd(r, n) == 1).collect()
}

/// The Ramanujan sum `c_n(k)` via `sum_{d | gcd(n, k)} d * μ(n / d)`.
///
/// `k` may be negative or zero; `gcd(n, 0) = n`.
pub fn ramanujan_sum(n: u64, k: i64) -> i64 {
    assert!(n >= 1, "ramanujan_sum needs n >= 1");
    let g = gcd(n, k.unsigned_abs());
    divisors(g)
        .into_iter()
        .map(|d| d as i64 * mobius(n / d))
        .sum()
}

/// `sum_{r totative of n} q^r` reduced modulo `Φ_n(q)`. Evaluates to the
/// constant `μ(n)`.
pub fn totative_q_sum_residue(n: u64) -> Polynomial {
    assert!(n >= 2, "totative_q_sum_residue needs n >= 2");
    let sum: Polynomial = totatives(n)
        .into_iter()
        .map(|r| Polynomial::monomial(1, r as usize))
        .sum();
    sum.rem(&cyclotomic(n)).expect("cyclotomic polynomials are monic")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
    }

    #[test]
    fn small_functions() {
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(gcd(0, 9), 9);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigInt::one()];
        for n in 1..=40u64 {
            let mut next = vec![BigInt::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize]);
            }
        }
    }

    #[test]
    fn table_recomposes_and_agrees_with_trial_division() {
        let table = FactorizationTable::new(2000);
        assert_eq!(table.limit(), 2000);
        assert_eq!(table.get(0), None);
        assert_eq!(table.get(1), Some(&[][..]));
        for n in 1..=2000u64 {
            let f = table.get(n).unwrap();
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            assert_eq!(f, factorize(n).as_slice());
        }
    }

    #[test]
    fn mobius_sums_to_indicator() {
        for n in 1..=200 {
            let s: i64 = divisors(n).into_iter().map(mobius).sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn totient_sums_to_n() {
        for n in 1..=200 {
            let s: u64 = divisors(n).into_iter().map(euler_phi).sum();
            assert_eq!(s, n);
        }
    }

    /// Direct evaluation of `sum_r cos(2 pi k r / n)`; the sine parts cancel
    /// because `r -> n - r` permutes the totatives.
    fn ramanujan_by_cosines(n: u64, k: i64) -> i64 {
        let s: f64 = totatives(n)
            .into_iter()
            .map(|r| (2.0 * std::f64::consts::PI * (k as f64) * (r as f64) / n as f64).cos())
            .sum();
        let rounded = s.round();
        assert!((s - rounded).abs() < 1e-6);
        rounded as i64
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(1, 5), 1);
        assert_eq!(ramanujan_sum(1, 0), 1);
        assert_eq!(ramanujan_sum(6, 2), -1);
        assert_eq!(ramanujan_sum(6, 0), 2);
        assert_eq!(ramanujan_sum(6, -2), -1);
        for n in 1..=50 {
            assert_eq!(ramanujan_sum(n, 1), mobius(n));
        }
    }

    #[test]
    fn ramanujan_against_cosine_oracle() {
        for n in 1..=40u64 {
            for k in -3..=(2 * n as i64) {
                assert_eq!(ramanujan_sum(n, k), ramanujan_by_cosines(n, k), "c_{n}({k})");
            }
        }
    }

    #[test]
    fn ramanujan_depends_on_gcd_only() {
        for n in 1..=50u64 {
            for k in 0..=2 * n {
                assert_eq!(ramanujan_sum(n, k as i64), ramanujan_sum(n, gcd(k, n) as i64));
            }
        }
    }

    #[test]
    fn totative_residue_examples() {
        assert_eq!(totative_q_sum_residue(2), Polynomial::constant(-1));
        assert_eq!(totative_q_sum_residue(4), Polynomial::zero());
        // 30 = 2 * 3 * 5, so μ(30) = -1
        assert_eq!(totative_q_sum_residue(30), Polynomial::constant(-1));
        for n in 2..=100 {
            assert_eq!(totative_q_sum_residue(n), Polynomial::constant(mobius(n)), "n = {n}");
        }
    }
}
