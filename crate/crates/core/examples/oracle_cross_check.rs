// Compare the solver with an exhaustive scan on small boxes.
//
//     cargo run --example oracle_cross_check

use diophant::oracle::{brute_force, pell_brute_force};
use diophant::{fundamental_solution, solve, Domain, Equation, SolveOptions};
use num_bigint::BigInt;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Nonsquare ab gives families, which are skipped below; keep their seed search short.
    let options = SolveOptions {
        search_bound: BigInt::from(50),
        ..SolveOptions::default()
    };
    let mut checked = 0;
    for a in 1..=6 {
        for b in 1..=6 {
            for c in -30i64..=30 {
                let eq = Equation::new(a, b, c);
                let set = solve(&eq, Domain::Integers, &options)?;
                let Some(listed) = set.finite_solutions() else {
                    continue;
                };
                let bound = (c.unsigned_abs() * a as u64).div_ceil(2) + 1;
                if listed != brute_force(&eq, bound, Domain::Integers).as_slice() {
                    return Err(format!("{eq}: solver and oracle disagree").into());
                }
                checked += 1;
            }
        }
    }
    println!("{checked} finite solution sets match the oracle");

    for d in [2, 13, 29] {
        let d = BigInt::from(d);
        let f = fundamental_solution(&d)?;
        let brute = pell_brute_force(&d, 10_000).ok_or("no solution by brute force")?;
        println!(
            "d = {d}: continued fraction {f}, brute force ({}, {})",
            brute.u, brute.v
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
