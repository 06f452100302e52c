use std::time::Instant;
use rs_even::{ExponentialOracle, Factored};

fn main() {
    let r = Factored::new(40).unwrap();
    let t = Instant::now();
    let oracle = ExponentialOracle::new(&r, 3).unwrap();
    println!("build: {:?}", t.elapsed());
    let t = Instant::now();
    let mut acc = 0i64;
    for n in 1..=4000u64 {
        acc += i64::try_from(oracle.eval(n).unwrap()).unwrap();
    }
    let dt = t.elapsed();
    println!("4000 evals at N=64000: {:?} ({:.1} ns/term), acc={acc}", dt, dt.as_nanos() as f64 / (4000.0 * 64000.0));
}
