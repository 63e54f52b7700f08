// a·x² − b·y² = c with ab = k²: every solution, by factoring a·c.
//
//     cargo run --example perfect_square_case

use diophant::{normalize, solve_perfect_square_case, Domain, Equation, ReducedDiffSquares};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b, c) in [(1, 4, 12), (4, 9, 7), (2, 8, 10), (2, 8, 30), (9, 1, -7)] {
        let eq = Equation::new(a, b, c);
        let normalized = normalize(&eq)?;
        let k = diophant::is_perfect_square(&(BigInt::from(a) * b)).ok_or("ab not square")?;
        let reduced = ReducedDiffSquares::new(normalized.equation(), &k);
        println!("{eq}  →  z² − t² = {} with k = {k}", reduced.rhs());
        for domain in [Domain::Naturals, Domain::Integers] {
            let set = solve_perfect_square_case(&normalized, domain)?;
            let listed: Vec<_> = set
                .finite_solutions()
                .ok_or("perfect-square case is finite")?
                .iter()
                .map(ToString::to_string)
                .collect();
            if listed.is_empty() {
                println!("  over {domain}: none");
            } else {
                println!("  over {domain}: {}", listed.join(" "));
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
