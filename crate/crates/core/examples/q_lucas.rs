//! Gaussian binomials and the q-Lucas congruence modulo Φ_n(q).

use qwilson::qcalc::{check_q_lucas, check_q_lucas_with, q_binomial, q_lucas_instances, QBinomialTable, QLucasInstance};

fn main() {
    println!("[6 choose 3]_q = {}", q_binomial(6, 3));

    let inst = QLucasInstance::new(2, 3, 1, 1, 5).unwrap();
    let r = check_q_lucas(&inst);
    println!(
        "[{} choose {}]_q mod Φ_5 = {}, C(2,1) [3 choose 1]_q mod Φ_5 = {}",
        inst.top(),
        inst.bottom(),
        r.residue,
        r.expected
    );

    let table = QBinomialTable::new(3 * 12 + 11);
    for n in 2..=12 {
        let (total, passed) = q_lucas_instances(n, 3)
            .map(|i| check_q_lucas_with(&table, &i).passed())
            .fold((0, 0), |(t, p), ok| (t + 1, p + usize::from(ok)));
        println!("n = {n:>2}: {passed}/{total} instances hold");
    }
}
