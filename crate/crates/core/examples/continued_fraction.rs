// The periodic continued fraction of √d and its convergents.
//
//     cargo run --example continued_fraction -- 13

use diophant::cf_sqrt;
use num_bigint::BigInt;

pub fn expand(d: &BigInt, shown: usize) -> Result<(), Box<dyn std::error::Error>> {
    let cf = cf_sqrt(d)?;
    println!("{cf}  (period length {})", cf.period().len());
    for c in cf.convergents().take(shown) {
        let norm = &c.numerator * &c.numerator - d * &c.denominator * &c.denominator;
        println!(
            "  h{0}/k{0} = {1}/{2}   h² − d·k² = {norm}",
            c.index, c.numerator, c.denominator
        );
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for d in [2, 7, 13] {
        expand(&BigInt::from(d), 6)?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(d) => expand(&d.parse()?, 10),
        None => run_example(),
    }
}
