//! The sum of q^r over totatives r of n is the constant μ(n) modulo Φ_n(q),
//! matching the Ramanujan sum c_n(1).

use qwilson::numth::{mobius, ramanujan_sum, totative_q_sum_residue};

fn main() {
    for n in 2..=30 {
        let residue = totative_q_sum_residue(n);
        let ck: Vec<i64> = (0..n as i64).map(|k| ramanujan_sum(n, k)).collect();
        println!("n = {n:>2}  μ = {:>2}  residue = {residue:>2}  c_n(0..n) = {ck:?}", mobius(n));
    }
}
