//! Splits the full cycles of {1..n} into rotation orbits and reduces
//! f_{n-1}(q) modulo Φ_n(q) one orbit at a time.
//!
//!     cargo run --example orbit_method -- 6

use qwilson::numth::{euler_phi, mobius};
use qwilson::orbit::{f_mod_phi_via_orbits, orbit_residues, verify_lemma_transfer};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);

    let orbits = orbit_residues(n);
    let fixed: Vec<_> = orbits.iter().filter(|(rec, _)| rec.size == 1).collect();
    println!("C_{n}: {} orbits, {} fixed points (φ({n}) = {})", orbits.len(), fixed.len(), euler_phi(n as u64));
    for (rec, residue) in &fixed {
        println!("  fixed {}  maj_bar = {}  contributes {residue}", rec.rep, rec.rep_maj_bar);
    }

    let mut by_size = std::collections::BTreeMap::new();
    for (rec, residue) in &orbits {
        let entry = by_size.entry(rec.size).or_insert((0usize, 0usize));
        entry.0 += 1;
        if residue.is_zero() {
            entry.1 += 1;
        }
    }
    for (h, (count, zero)) in by_size {
        println!("  size {h:>2}: {count:>5} orbits, {zero:>5} with zero residue");
    }

    let transfer = verify_lemma_transfer(n);
    println!("rotation transfer law: {}", transfer.status);
    let total = f_mod_phi_via_orbits(n).unwrap();
    println!("f_{}(q) mod Φ_{n}(q) = {total}   (μ({n}) = {})", n - 1, mobius(n as u64));
}
