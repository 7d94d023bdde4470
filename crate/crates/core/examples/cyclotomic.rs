//! Cyclotomic polynomials by exact division, and the identity
//! prod_{d | n} Φ_d(q) = q^n - 1.

use qwilson::bigpoly::{cyclotomic, Polynomial};
use qwilson::numth::divisors;

fn main() {
    for n in 1..=12 {
        println!("Φ_{n:<2} = {}", cyclotomic(n));
    }

    let phi = cyclotomic(105);
    let big: Vec<usize> = (0..phi.coeffs().len())
        .filter(|&i| phi.coeff(i) == (-2).into())
        .collect();
    println!("Φ_105 has degree {} and coefficient -2 at q^{big:?}", phi.degree());

    let n = 36;
    let prod: Polynomial = divisors(n).into_iter().map(cyclotomic).product();
    println!("prod over d | {n} of Φ_d = {prod}");

    let (quot, rem) = Polynomial::from_i64s(&[0, 0, 1]).divmod(&cyclotomic(4)).unwrap();
    println!("q^2 = ({quot}) * Φ_4 + ({rem})");
}
