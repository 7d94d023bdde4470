//! The q-Fermat product and the Chapman–Pan product of q-integers.

use qwilson::numth::gcd;
use qwilson::qcalc::{chapman_pan_residue, check_q_fermat, q_factorial, q_integer};

fn main() {
    println!("q-Fermat, prod_k [a]_(q^k) mod Φ_n(q):");
    for n in [5u64, 9, 12] {
        let residues: Vec<String> = (1..=12)
            .filter(|&a| gcd(a, n) == 1)
            .map(|a| format!("a={a}:{}", check_q_fermat(a, n).unwrap().residue))
            .collect();
        println!("  n = {n:>2}  {}", residues.join(" "));
    }

    println!("Chapman–Pan, prod_k [k]_(q^k) mod [p]_q:");
    for p in [5u64, 7, 11, 13, 17, 19, 23] {
        println!("  p = {p:>2} (p mod 4 = {})  {}", p % 4, chapman_pan_residue(p).unwrap());
    }

    println!("the plain q-factorial has no such residue: [6]_q! mod [7]_q = {}",
        q_factorial(6).rem(&q_integer(7)).unwrap());
}
