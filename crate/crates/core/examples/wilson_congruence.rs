//! Brute-force check of f_{n-1}(q) ≡ μ(n) (mod Φ_n(q)).
//!
//!     cargo run --release --example wilson_congruence -- 11

use qwilson::bigpoly::cyclotomic;
use qwilson::numth::mobius;
use qwilson::permstat::f_poly;
use qwilson::wilson::check_wilson_prime;

fn main() {
    let max: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);

    println!("{:>3}  {:>5}  {:<28} residue", "n", "μ(n)", "Φ_n(q)");
    for n in 2..=max {
        let f = f_poly(n as usize - 1);
        let phi = cyclotomic(n);
        let residue = f.rem(&phi).unwrap();
        let mark = if residue.as_constant() == Some(mobius(n).into()) { "ok" } else { "MISMATCH" };
        println!("{n:>3}  {:>5}  {:<28} {residue}  {mark}", mobius(n), phi.to_string());
    }

    println!();
    println!("f_4(q) = {}", f_poly(4));
    for p in [2, 3, 5, 7] {
        let r = check_wilson_prime(p).unwrap();
        println!("f_{}(q) mod [{p}]_q = {}", p - 1, r.residue);
    }
}
