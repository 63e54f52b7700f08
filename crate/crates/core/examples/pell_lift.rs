// Lifting a particular solution of a·x² − b·y² = c through u² − ab·v² = 1.
//
//     cargo run --example pell_lift

use diophant::{find_particular_solution, normalize, pell_lift_family, Equation};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let eq = Equation::new(2, 3, 5);
    let normalized = normalize(&eq)?;
    let seed = find_particular_solution(&normalized, &BigInt::from(100)).ok_or("no seed")?;
    let family = pell_lift_family(&normalized, &seed)?;
    println!(
        "{eq}: seed {seed}, Pell modulus {}, fundamental {}",
        family.pell_modulus(),
        family.fundamental()
    );
    for (pell, term) in family.lifted_terms().take(5) {
        // a·xₙ² − b·yₙ² = (a·x₀² − b·y₀²)(uₙ² − ab·vₙ²)
        let lhs = normalized.equation().form_value(&term);
        println!("  (u, v) = {pell}  →  {term}   a·x² − b·y² = {lhs}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
