//! The q-Wilson congruence `f_{n-1}(q) ≡ μ(n) (mod Φ_n(q))`, checked by
//! brute-force enumeration and by the rotation-orbit reduction.

use std::time::Instant;

use crate::bigpoly::{cyclotomic, Polynomial};
use crate::error::Error;
use crate::numth::{mobius, totative_q_sum_residue};
use crate::orbit::f_mod_phi_via_orbits;
use crate::permstat::f_poly;
use crate::report::CongruenceReport;

/// `f_{n-1}(q) mod Φ_n(q)` given `f_{n-1}(q)`.
pub fn wilson_residue_from(n: u64, f_prev: &Polynomial) -> Polynomial {
    assert!(n >= 2, "the congruence is stated for n >= 2");
    f_prev
        .rem(&cyclotomic(n))
        .expect("cyclotomic polynomials are monic")
}

/// Enumerates `C_n` and reduces `f_{n-1}(q)` modulo `Φ_n(q)`.
pub fn wilson_residue(n: u64) -> Polynomial {
    wilson_residue_from(n, &f_poly(n as usize - 1))
}

pub fn check_wilson(n: u64) -> CongruenceReport {
    let started = Instant::now();
    let f = f_poly(n as usize - 1);
    check_wilson_from(n, &f).timed(started)
}

/// Checks the congruence for an already computed `f_{n-1}(q)`, for example
/// one read from the cache.
pub fn check_wilson_from(n: u64, f_prev: &Polynomial) -> CongruenceReport {
    let started = Instant::now();
    CongruenceReport::new(
        "wilson",
        [("n", n as i64)],
        wilson_residue_from(n, f_prev),
        Polynomial::constant(mobius(n)),
    )
    .timed(started)
}

pub fn check_wilson_orbits(n: u64) -> Result<CongruenceReport, Error> {
    let started = Instant::now();
    let residue = f_mod_phi_via_orbits(n as usize)?;
    Ok(CongruenceReport::new(
        "wilson-orbits",
        [("n", n as i64)],
        residue,
        Polynomial::constant(mobius(n)),
    )
    .timed(started))
}

/// `f_{p-1}(q) mod [p]_q` must be `-1` for prime `p`; `Φ_p = [p]_q`.
pub fn check_wilson_prime(p: u64) -> Result<CongruenceReport, Error> {
    if !crate::numth::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let started = Instant::now();
    let modulus = crate::qcalc::q_integer(p as usize);
    let residue = f_poly(p as usize - 1)
        .rem(&modulus)
        .expect("q-integers are monic");
    Ok(
        CongruenceReport::new("wilson-prime", [("p", p as i64)], residue, Polynomial::constant(-1))
            .timed(started),
    )
}

/// `sum_{gcd(r,n)=1} q^r mod Φ_n(q)` against `μ(n)`.
pub fn check_totative_sum(n: u64) -> CongruenceReport {
    let started = Instant::now();
    CongruenceReport::new(
        "totative-sum",
        [("n", n as i64)],
        totative_q_sum_residue(n),
        Polynomial::constant(mobius(n)),
    )
    .timed(started)
}

/// `c_n(1)` against `μ(n)`, both as constants.
pub fn check_ramanujan_sum(n: u64) -> CongruenceReport {
    let started = Instant::now();
    CongruenceReport::new(
        "ramanujan-sum",
        [("n", n as i64)],
        Polynomial::constant(crate::numth::ramanujan_sum(n, 1)),
        Polynomial::constant(mobius(n)),
    )
    .timed(started)
}
