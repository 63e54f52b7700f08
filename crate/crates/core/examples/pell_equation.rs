// Fundamental solutions of u² − d·v² = 1 and the stream generated from them.
//
//     cargo run --example pell_equation

use diophant::{fundamental_solution, pell_stream};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for d in [2, 3, 13, 61, 109] {
        let d = BigInt::from(d);
        let f = fundamental_solution(&d)?;
        println!("d = {d}: fundamental {f}");
    }
    let d = BigInt::from(6);
    println!("first solutions for d = {d}:");
    for s in pell_stream(&d)?.take(5) {
        assert_eq!(s.norm(), BigInt::from(1));
        println!("  n={}: {s}", s.index);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
