//! maj and inv are equidistributed over S_n with generating function [n]_q!.

use qwilson::permstat::{enumerate_permutations, mahonian_polys, StatBundle};
use qwilson::qcalc::q_factorial;

fn main() {
    for p in enumerate_permutations(3) {
        let s = StatBundle::of(&p);
        println!("{p}  maj={} inv={} maj_bar={} des_bar={}", s.maj, s.inv, s.maj_bar, s.des_bar);
    }
    for n in 1..=7 {
        let (by_maj, by_inv) = mahonian_polys(n);
        let same = by_maj == q_factorial(n) && by_inv == by_maj;
        println!("n = {n}: {} ({})", by_maj, if same { "= [n]_q! = inv" } else { "MISMATCH" });
    }
}
