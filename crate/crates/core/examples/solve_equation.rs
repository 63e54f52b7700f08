// The front door: normalize, classify and solve whatever comes in.
//
//     cargo run --example solve_equation -- 2 3 5 n

use diophant::solver::SolutionSet;
use diophant::{classify, normalize, solve, Domain, Equation, SolveOptions};

fn report(eq: &Equation, domain: Domain) -> Result<(), Box<dyn std::error::Error>> {
    let options = SolveOptions::default();
    if let Ok(n) = normalize(eq) {
        println!(
            "{eq}: normalized {} as {}",
            n.equation(),
            classify(&n).name()
        );
    } else {
        println!("{eq}: definite or single-variable");
    }
    let set = solve(eq, domain, &options)?;
    match &set {
        SolutionSet::Finite(v) => {
            let listed: Vec<_> = v.iter().map(ToString::to_string).collect();
            println!("  {}", listed.join(" "));
        }
        SolutionSet::Families { families, .. } => {
            for f in families {
                let terms: Vec<_> = f.terms().take(3).map(|t| t.to_string()).collect();
                println!(
                    "  {} family from {}: {} …",
                    f.kind().as_str(),
                    f.seed(),
                    terms.join(" ")
                );
            }
        }
        SolutionSet::Empty(reason) => println!("  no solutions: {reason}"),
        SolutionSet::NoSeedWithinBound { bound } => {
            println!("  nothing with 0 <= x, y <= {bound}; unknown beyond")
        }
        SolutionSet::DegenerateLine(line) => println!("  {}", line.description()),
    }
    println!("  completeness: {}", set.completeness().as_str());
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b, c) in [
        (1, 1, 15),
        (1, 4, 12),
        (2, 3, 5),
        (1, 2, 9),
        (1, 3, 2),
        (4, 9, 0),
        (1, -1, 25),
    ] {
        report(&Equation::new(a, b, c), Domain::Naturals)?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() < 3 {
        return run_example();
    }
    let eq = Equation::new(
        args[0].parse::<num_bigint::BigInt>()?,
        args[1].parse::<num_bigint::BigInt>()?,
        args[2].parse::<num_bigint::BigInt>()?,
    );
    let domain = match args.get(3).map(String::as_str) {
        Some("z") => Domain::Integers,
        _ => Domain::Naturals,
    };
    report(&eq, domain)
}
