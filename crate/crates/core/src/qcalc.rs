//! q-integers, q-factorials and Gaussian binomials, with verifiers for the
//! q-Lucas, q-Fermat and Chapman–Pan congruences.

use std::time::Instant;

use num_bigint::BigInt;

use crate::bigpoly::{cyclotomic, Polynomial};
use crate::error::Error;
use crate::numth::{binomial, gcd, is_prime};
use crate::report::{CongruenceReport, Relation};

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_integer(n: usize) -> Polynomial {
    Polynomial::from_coeffs(vec![BigInt::from(1); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> Polynomial {
    (1..=n).map(q_integer).product()
}

/// Gaussian binomial coefficient; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> Polynomial {
    if k > n {
        return Polynomial::zero();
    }
    QBinomialTable::new(n).get(n, k)
}

/// All Gaussian binomials `[n choose k]_q` with `n <= max_n`, built row by
/// row from `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    rows: Vec<Vec<Polynomial>>,
}

impl QBinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one()]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(Polynomial::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k].shift(k));
            }
            row.push(Polynomial::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Panics if `n` exceeds the table size.
    pub fn get(&self, n: usize, k: usize) -> Polynomial {
        assert!(n <= self.max_n(), "q-binomial table only reaches n = {}", self.max_n());
        if k > n {
            Polynomial::zero()
        } else {
            self.rows[n][k].clone()
        }
    }
}

/// Parameters of `[an+b choose cn+d]_q ≡ C(a,c) [b choose d]_q (mod Φ_n(q))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QLucasInstance {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub n: u64,
}

impl QLucasInstance {
    pub fn new(a: u64, b: u64, c: u64, d: u64, n: u64) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidLucasInstance(format!("n = {n} must be at least 2")));
        }
        if b >= n || d >= n {
            return Err(Error::InvalidLucasInstance(format!(
                "digits b = {b}, d = {d} must be below n = {n}"
            )));
        }
        Ok(Self { a, b, c, d, n })
    }

    pub fn top(&self) -> u64 {
        self.a * self.n + self.b
    }

    pub fn bottom(&self) -> u64 {
        self.c * self.n + self.d
    }
}

fn lucas_report(inst: &QLucasInstance, lhs: Polynomial, rhs_small: Polynomial) -> CongruenceReport {
    let phi = cyclotomic(inst.n);
    let rhs = rhs_small.scale(&binomial(inst.a, inst.c));
    let monic = "cyclotomic polynomials are monic";
    CongruenceReport::new(
        "lucas",
        [
            ("a", inst.a as i64),
            ("b", inst.b as i64),
            ("c", inst.c as i64),
            ("d", inst.d as i64),
            ("n", inst.n as i64),
        ],
        lhs.rem(&phi).expect(monic),
        rhs.rem(&phi).expect(monic),
    )
}

/// Compares both sides of the q-Lucas congruence modulo `Φ_n(q)`.
pub fn check_q_lucas(inst: &QLucasInstance) -> CongruenceReport {
    let started = Instant::now();
    let table = QBinomialTable::new(inst.top() as usize);
    lucas_report(
        inst,
        table.get(inst.top() as usize, inst.bottom() as usize),
        table.get(inst.b as usize, inst.d as usize),
    )
    .timed(started)
}

/// Same as [`check_q_lucas`] but reads binomials from a prebuilt table.
pub fn check_q_lucas_with(table: &QBinomialTable, inst: &QLucasInstance) -> CongruenceReport {
    let started = Instant::now();
    lucas_report(
        inst,
        table.get(inst.top() as usize, inst.bottom() as usize),
        table.get(inst.b as usize, inst.d as usize),
    )
    .timed(started)
}

/// Every instance with `a, c <= ac_max` and `b, d < n`, in
/// `(a, b, c, d)` lexicographic order.
pub fn q_lucas_instances(n: u64, ac_max: u64) -> impl Iterator<Item = QLucasInstance> {
    (0..=ac_max).flat_map(move |a| {
        (0..n).flat_map(move |b| {
            (0..=ac_max).flat_map(move |c| {
                (0..n).map(move |d| QLucasInstance { a, b, c, d, n })
            })
        })
    })
}

/// Product of `[a]_{q^k}` for `k = 1..n-1`, reduced modulo `Φ_n(q)`; must be 1
/// when `gcd(a, n) = 1`.
pub fn check_q_fermat(a: u64, n: u64) -> Result<CongruenceReport, Error> {
    if n < 2 {
        return Err(Error::OutOfRange("n", format!("{n} < 2")));
    }
    if a == 0 {
        return Err(Error::OutOfRange("a", "must be positive".into()));
    }
    let g = gcd(a, n);
    if g != 1 {
        return Err(Error::NotCoprime { a, n, gcd: g });
    }
    let started = Instant::now();
    let phi = cyclotomic(n);
    let base = q_integer(a as usize);
    let mut acc = Polynomial::one();
    for k in 1..n as usize {
        acc = (&acc * &base.substitute_power(k))
            .rem(&phi)
            .expect("cyclotomic polynomials are monic");
    }
    Ok(CongruenceReport::new(
        "fermat",
        [("a", a as i64), ("n", n as i64)],
        acc,
        Polynomial::one(),
    )
    .timed(started))
}

/// `prod_{k=1}^{p-1} [k]_{q^k}` modulo `[p]_q`, for a prime `p > 3`.
pub fn chapman_pan_residue(p: u64) -> Result<Polynomial, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::OutOfRange("p", format!("{p} must exceed 3")));
    }
    let modulus = q_integer(p as usize);
    let mut acc = Polynomial::one();
    for k in 1..p as usize {
        acc = (&acc * &q_integer(k).substitute_power(k))
            .rem(&modulus)
            .expect("q-integers are monic");
    }
    Ok(acc)
}

/// For `p ≡ 3 (mod 4)` the residue must be `-1`. For `p ≡ 1 (mod 4)` the
/// congruence fails, and the report passes iff the residue differs from `-1`.
pub fn check_chapman_pan(p: u64) -> Result<CongruenceReport, Error> {
    let started = Instant::now();
    let residue = chapman_pan_residue(p)?;
    let relation = if p % 4 == 3 { Relation::Eq } else { Relation::Ne };
    Ok(CongruenceReport::with_relation(
        "chapman-pan",
        [("p", p as i64)],
        residue,
        Polynomial::constant(-1),
        relation,
    )
    .timed(started))
}
