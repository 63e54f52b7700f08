// x² − d·y² = c² through (c·uₙ, c·vₙ).
//
//     cargo run --example scaled_pell_family

use diophant::scaled_pell_family;
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (d, c) = (BigInt::from(2), BigInt::from(3));
    let family = scaled_pell_family(&d, &c)?;
    println!("{}", family.equation());
    for (n, term) in family.terms().take(5).enumerate() {
        assert!(family.equation().is_satisfied_by(&term));
        println!("  n={n}: {term}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
