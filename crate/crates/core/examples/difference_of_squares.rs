// x² − y² = c: the mod-4 criterion and factor-pair solutions.
//
//     cargo run --example difference_of_squares

use diophant::{diffsq_solvable, solve_diff_squares, Domain, SolutionSet};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for c in [15, 6, -8, -15, 0] {
        let c = BigInt::from(c);
        println!("c = {c}: solvable over Z: {}", diffsq_solvable(&c));
        for domain in [Domain::Integers, Domain::Naturals] {
            match solve_diff_squares(&c, domain) {
                SolutionSet::Finite(solutions) => {
                    let listed: Vec<_> = solutions.iter().map(ToString::to_string).collect();
                    println!("  over {domain}: {}", listed.join(" "));
                }
                SolutionSet::Empty(reason) => println!("  over {domain}: none ({reason})"),
                SolutionSet::DegenerateLine(line) => {
                    println!("  over {domain}: {}", line.description())
                }
                other => return Err(format!("unexpected {other:?}").into()),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
