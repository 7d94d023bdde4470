//! Computing f_n(q) once and reading it back from the on-disk cache, then
//! emitting reports as JSON and CSV.

use std::time::Instant;

use qwilson::cache::FCache;
use qwilson::permstat::f_poly;
use qwilson::wilson::check_wilson_from;

fn main() {
    let dir = std::env::temp_dir().join("qwilson-example-cache");
    let mut cache = FCache::new(&dir);

    let started = Instant::now();
    let f9 = cache.get_or_compute(9, || f_poly(9)).unwrap();
    println!("f_9 ready in {:?} ({} terms), stored at {}", started.elapsed(), f9.coeffs().len(), cache.path_for(9).display());

    let started = Instant::now();
    let again = FCache::new(&dir).load(9).unwrap().expect("just stored");
    println!("reloaded in {:?}, identical: {}", started.elapsed(), again == f9);

    let report = check_wilson_from(10, &f9);
    println!("{}", report.to_json());
    println!("{}\n{}", report.csv_header(), report.to_csv_row());
}
