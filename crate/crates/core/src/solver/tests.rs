use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use super::*;
use crate::oracle::brute_force;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn pairs(v: &[(i64, i64)]) -> Vec<SolutionPair> {
    v.iter().map(|&(x, y)| SolutionPair::new(x, y)).collect()
}

fn norm(a: i64, b: i64, c: i64) -> NormalizedEquation {
    normalize(&Equation::new(a, b, c)).unwrap()
}

fn quick() -> SolveOptions {
    SolveOptions {
        search_bound: big(200),
        family_terms: 5,
    }
}

#[test]
fn normalize_examples() {
    let n = norm(2, 3, 5);
    assert_eq!(n.equation(), &Equation::new(2, 3, 5));
    assert!(!n.swap_xy() && !n.negate_applied());

    let n = norm(-2, -3, -5);
    assert_eq!(n.equation(), &Equation::new(2, 3, 5));
    assert!(n.negate_applied() && !n.swap_xy());

    // −3x² + 2y² = 5 becomes 2X² − 3Y² = 5 with X = y, Y = x; (1, 2) ↦ (2, 1).
    let n = norm(-3, -2, 5);
    assert_eq!(n.equation(), &Equation::new(2, 3, 5));
    assert!(n.negate_applied() && n.swap_xy());
    let p = SolutionPair::new(1, 2);
    assert!(n.original().is_satisfied_by(&p));
    assert!(n.equation().is_satisfied_by(&n.to_normalized(&p)));
}

#[test]
fn equation_display() {
    assert_eq!(Equation::new(2, 3, 5).to_string(), "2x^2 - 3y^2 = 5");
    assert_eq!(Equation::new(1, 1, -15).to_string(), "x^2 - y^2 = -15");
    assert_eq!(Equation::new(-3, -2, 5).to_string(), "-3x^2 + 2y^2 = 5");
    assert_eq!(Equation::new(0, 2, -8).to_string(), "-2y^2 = -8");
    assert_eq!(Equation::new(0, 0, 1).to_string(), "0 = 1");
}

#[test]
fn normalize_errors() {
    assert_eq!(
        normalize(&Equation::new(0, 0, 3)),
        Err(Error::DegenerateEquation)
    );
    assert!(matches!(
        normalize(&Equation::new(0, 2, 3)),
        Err(Error::NotNormalizable { .. })
    ));
    assert!(matches!(
        normalize(&Equation::new(2, -3, 3)),
        Err(Error::NotNormalizable { .. })
    ));
}

#[test]
fn classify_examples() {
    let n = norm(1, 1, 15);
    assert_eq!(classify(&n), EquationClass::PerfectSquareAB { k: big(1) });
    assert!(is_diff_squares(&n));
    assert_eq!(
        classify(&norm(1, 4, 12)),
        EquationClass::PerfectSquareAB { k: big(2) }
    );
    assert_eq!(
        classify(&norm(2, 3, 5)),
        EquationClass::NonSquareAB { modulus: big(6) }
    );
    assert_eq!(classify(&norm(2, 3, 0)), EquationClass::DegenerateZeroC);
}

#[test]
fn perfect_square_examples() {
    assert_eq!(
        solve_perfect_square_case(&norm(1, 4, 12), Domain::Naturals).unwrap(),
        SolutionSet::Finite(pairs(&[(4, 1)]))
    );
    assert_eq!(
        solve_perfect_square_case(&norm(4, 9, 7), Domain::Naturals).unwrap(),
        SolutionSet::Finite(pairs(&[(2, 1)]))
    );
    assert_eq!(
        solve_perfect_square_case(&norm(1, 1, 6), Domain::Integers).unwrap(),
        SolutionSet::Empty(EmptyReason::TwoModFour)
    );
    assert!(solve_perfect_square_case(&norm(2, 3, 5), Domain::Naturals).is_err());
}

#[test]
fn perfect_square_with_swap_maps_back() {
    // 4x² − y² = 12: normalized to y² − 4x² = −12.
    let n = norm(4, 1, 12);
    assert!(n.swap_xy());
    let set = solve_perfect_square_case(&n, Domain::Naturals).unwrap();
    assert_eq!(set, SolutionSet::Finite(pairs(&[(2, 2)])));
    assert_eq!(
        set.finite_solutions().unwrap(),
        brute_force(&Equation::new(4, 1, 12), 20, Domain::Naturals)
    );
}

#[test]
fn reduced_lift_needs_exact_division() {
    let eq = Equation::new(4, 9, 7);
    let r = ReducedDiffSquares::new(&eq, &big(6));
    assert_eq!(r.rhs(), &big(28));
    assert_eq!(
        r.lift(&SolutionPair::new(8, 6)),
        Some(SolutionPair::new(2, 1))
    );
    assert_eq!(r.lift(&SolutionPair::new(6, 4)), None);
}

#[test]
fn scaled_family_examples() {
    let f = scaled_pell_family(&big(2), &big(3)).unwrap();
    assert_eq!(f.term(0), SolutionPair::new(3, 0));
    assert_eq!(f.term(1), SolutionPair::new(9, 6));
    let f = scaled_pell_family(&big(6), &big(1)).unwrap();
    assert_eq!(f.term(1), SolutionPair::new(5, 2));
    assert!(scaled_pell_family(&big(4), &big(1)).is_err());
    assert!(scaled_pell_family(&big(2), &big(0)).is_err());
}

#[test]
fn particular_solution_examples() {
    assert_eq!(
        find_particular_solution(&norm(2, 3, 5), &big(10)),
        Some(SolutionPair::new(2, 1))
    );
    assert_eq!(
        find_particular_solution(&norm(1, 2, 1), &big(10)),
        Some(SolutionPair::new(1, 0))
    );
    assert_eq!(
        find_particular_solution(&norm(1, 3, -2), &big(10)),
        Some(SolutionPair::new(1, 1))
    );
    assert_eq!(find_particular_solution(&norm(1, 3, 2), &big(100)), None);
}

#[test]
fn pell_lift_examples() {
    let n = norm(2, 3, 5);
    let f = pell_lift_family(&n, &SolutionPair::new(2, 1)).unwrap();
    assert_eq!(f.pell_modulus(), &big(6));
    let terms: Vec<_> = f.terms().take(3).collect();
    assert_eq!(terms, pairs(&[(2, 1), (16, 13), (158, 129)]));
}

#[test]
fn pell_lift_contract() {
    let n = norm(2, 3, 5);
    assert!(matches!(
        pell_lift_family(&n, &SolutionPair::new(1, 1)),
        Err(Error::Contract(_))
    ));
    assert!(pell_lift_family(&norm(1, 4, 0), &SolutionPair::new(2, 1)).is_err());
    assert!(pell_lift_family(&norm(2, 3, 0), &SolutionPair::new(0, 0)).is_err());
}

#[test]
fn lift_with_modulus_a_would_fail() {
    // Lifting with u² − a·v² = 1 instead of ab breaks the equation once b ≠ 1.
    let (a, b) = (big(2), big(3));
    let (u, v) = (big(3), big(2)); // 3² − 2·2² = 1
    let (x0, y0) = (big(2), big(1));
    let x = &x0 * &u + &b * &y0 * &v;
    let y = &y0 * &u + &a * &x0 * &v;
    assert_ne!(&a * &x * &x - &b * &y * &y, big(5));
}

#[test]
fn solve_examples() {
    let opts = SolveOptions::default();
    assert_eq!(
        solve(&Equation::new(1, 1, 15), Domain::Naturals, &opts).unwrap(),
        SolutionSet::Finite(pairs(&[(4, 1), (8, 7)]))
    );
    assert_eq!(
        solve(&Equation::new(1, 4, 12), Domain::Naturals, &opts).unwrap(),
        SolutionSet::Finite(pairs(&[(4, 1)]))
    );
    let SolutionSet::Families { families, .. } =
        solve(&Equation::new(2, 3, 5), Domain::Naturals, &opts).unwrap()
    else {
        panic!("expected families");
    };
    assert_eq!(families[0].seed(), SolutionPair::new(2, 1));
    let first: Vec<_> = families[0].terms().take(3).collect();
    assert_eq!(first, pairs(&[(2, 1), (16, 13), (158, 129)]));
    assert!(solve(&Equation::new(0, 0, 1), Domain::Integers, &opts).is_err());
}

#[test]
fn second_class_gets_its_own_family() {
    // x² − 2y² = 7 has two classes of solutions: (3, 1) and (5, 3).
    let set = solve(&Equation::new(1, 2, 7), Domain::Naturals, &quick()).unwrap();
    let SolutionSet::Families { families, .. } = set else {
        panic!("expected families")
    };
    let seeds: Vec<_> = families.iter().map(FamilyDescriptor::seed).collect();
    assert_eq!(seeds, pairs(&[(3, 1), (5, 3)]));
}

#[test]
fn scaled_pell_reported_first_for_square_rhs() {
    let set = solve(&Equation::new(1, 2, 9), Domain::Naturals, &quick()).unwrap();
    let SolutionSet::Families { families, .. } = set else {
        panic!("expected families")
    };
    assert_eq!(families[0].kind(), FamilyKind::ScaledPell);
    assert_eq!(families[0].seed(), SolutionPair::new(3, 0));
    // (3, 0) itself is not repeated as a lifted seed.
    assert!(families[1..]
        .iter()
        .all(|f| f.seed() != SolutionPair::new(3, 0)));
    // All natural solutions up to 200 belong to some listed family.
    for p in brute_force(&Equation::new(1, 2, 9), 200, Domain::Naturals) {
        assert!(families.iter().any(|f| f.contains_natural(&p)), "{p}");
    }
}

#[test]
fn swapped_family_terms_satisfy_original() {
    let eq = Equation::new(3, 2, 10); // 3·2² − 2·1² = 10
    let set = solve(&eq, Domain::Naturals, &quick()).unwrap();
    let SolutionSet::Families { families, .. } = set else {
        panic!("expected families")
    };
    assert!(families.iter().all(|f| f.swap_xy()));
    assert_eq!(families[0].seed(), SolutionPair::new(2, 1));
    for t in families[0].terms().take(6) {
        assert!(eq.is_satisfied_by(&t), "{t}");
    }
}

#[test]
fn no_seed_is_not_emptiness() {
    let set = solve(&Equation::new(1, 3, 2), Domain::Naturals, &quick()).unwrap();
    assert_eq!(set, SolutionSet::NoSeedWithinBound { bound: big(200) });
    assert!(!set.is_complete());
}

#[test]
fn zero_rhs() {
    let opts = quick();
    assert_eq!(
        solve(&Equation::new(2, 3, 0), Domain::Integers, &opts).unwrap(),
        SolutionSet::Finite(pairs(&[(0, 0)]))
    );
    // 4x² = 9y²: 2x = ±3y.
    let SolutionSet::DegenerateLine(line) =
        solve(&Equation::new(4, 9, 0), Domain::Integers, &opts).unwrap()
    else {
        panic!("expected lines")
    };
    assert_eq!(
        line.points_within(6),
        brute_force(&Equation::new(4, 9, 0), 6, Domain::Integers)
    );
    // 8x² = 2y² → y = ±2x, after a swap.
    let SolutionSet::DegenerateLine(line) =
        solve(&Equation::new(8, 2, 0), Domain::Naturals, &opts).unwrap()
    else {
        panic!("expected lines")
    };
    assert_eq!(
        line.points_within(8),
        brute_force(&Equation::new(8, 2, 0), 8, Domain::Naturals)
    );
}

#[test]
fn single_variable_and_definite_cases() {
    let opts = quick();
    // −2y² = −8
    let SolutionSet::DegenerateLine(line) =
        solve(&Equation::new(0, 2, -8), Domain::Integers, &opts).unwrap()
    else {
        panic!()
    };
    assert_eq!(
        line,
        Degenerate::AnyX {
            y_values: vec![big(-2), big(2)],
            domain: Domain::Integers
        }
    );
    assert_eq!(
        solve(&Equation::new(3, 0, 5), Domain::Integers, &opts).unwrap(),
        SolutionSet::Empty(EmptyReason::NotRepresentable)
    );
    // x² + y² = 25
    assert_eq!(
        solve(&Equation::new(1, -1, 25), Domain::Naturals, &opts).unwrap(),
        SolutionSet::Finite(pairs(&[(0, 5), (3, 4), (4, 3), (5, 0)]))
    );
    // −x² − 2y² = 3 has nothing.
    assert_eq!(
        solve(&Equation::new(-1, 2, 3), Domain::Integers, &opts).unwrap(),
        SolutionSet::Empty(EmptyReason::NotRepresentable)
    );
}

/// Compares what `solve` reports with the oracle inside `[−bound, bound]²`.
fn agrees_with_oracle(eq: &Equation, domain: Domain, bound: u64) {
    let set = solve(eq, domain, &quick()).unwrap();
    let oracle = brute_force(eq, bound, domain);
    let reported: Vec<SolutionPair> = match &set {
        SolutionSet::Empty(_) | SolutionSet::Finite(_) => set
            .finite_solutions()
            .unwrap()
            .iter()
            .filter(|p| p.x.abs() <= big(bound as i64) && p.y.abs() <= big(bound as i64))
            .cloned()
            .collect(),
        SolutionSet::DegenerateLine(line) => line.points_within(bound as i64),
        SolutionSet::Families { families, .. } => {
            // every family term inside the box is an oracle solution
            for f in families {
                for t in f
                    .terms()
                    .take_while(|t| t.x.to_u64().is_some_and(|x| x <= bound))
                {
                    if t.y <= big(bound as i64) {
                        assert!(oracle.contains(&t), "{eq}: {t}");
                    }
                }
            }
            return;
        }
        SolutionSet::NoSeedWithinBound { .. } => {
            let cutoff = 200.min(bound);
            assert!(
                oracle
                    .iter()
                    .all(|p| p.x.abs() > big(cutoff as i64) || p.y.abs() > big(cutoff as i64)),
                "{eq}: oracle found a seed the search missed"
            );
            return;
        }
    };
    assert_eq!(reported, oracle, "{eq} over {domain}");
}

#[test]
fn round_trip_small_coefficients() {
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            if a == 0 || b == 0 {
                continue;
            }
            for c in -50i64..=50 {
                let eq = Equation::new(a, b, c);
                for domain in [Domain::Integers, Domain::Naturals] {
                    let set = solve(&eq, domain, &quick()).unwrap();
                    set.verify(&eq, 8).unwrap();
                }
            }
        }
    }
}

#[test]
fn oracle_agreement_small_coefficients() {
    for a in -4i64..=4 {
        for b in -4i64..=4 {
            for c in -12i64..=12 {
                if a == 0 && b == 0 {
                    continue;
                }
                for domain in [Domain::Integers, Domain::Naturals] {
                    agrees_with_oracle(&Equation::new(a, b, c), domain, 30);
                }
            }
        }
    }
}

#[test]
fn perfect_square_regime_is_complete_and_finite() {
    for a in 1i64..=10 {
        for b in 1i64..=10 {
            let ab = a * b;
            let Some(k) = is_perfect_square(&big(ab)) else {
                continue;
            };
            let k = k.to_i64().unwrap();
            for c in 1i64..=100 {
                let eq = Equation::new(a, b, c);
                let bound = ((a * c + 1) / (2 * a)).max((a * c + 1) / (2 * k)) as u64;
                for domain in [Domain::Naturals, Domain::Integers] {
                    let set = solve(&eq, domain, &quick()).unwrap();
                    let listed = set.finite_solutions().expect("finite regime");
                    assert_eq!(
                        listed,
                        brute_force(&eq, bound, domain),
                        "{eq} over {domain}"
                    );
                }
            }
        }
    }
}

#[test]
fn family_identity_two_factors() {
    for (a, b, c) in [(2, 3, 5), (1, 7, 2), (3, 5, -2), (1, 2, -1), (5, 6, 14)] {
        let n = norm(a, b, c);
        let seed = find_particular_solution(&n, &big(100)).unwrap();
        let f = pell_lift_family(&n, &seed).unwrap();
        let seed_value = n.equation().form_value(&seed);
        for (pell, term) in f.lifted_terms().take(6) {
            assert_eq!(seed_value, big(c));
            assert!(pell.norm().is_one());
            assert_eq!(pell.d, big(a * b));
            assert_eq!(n.equation().form_value(&term), &seed_value * pell.norm());
        }
    }
}

#[test]
fn regime_claims() {
    for a in 1i64..=6 {
        for b in 1i64..=6 {
            for c in 1i64..=20 {
                let eq = Equation::new(a, b, c);
                let set = solve(&eq, Domain::Naturals, &quick()).unwrap();
                match classify(&normalize(&eq).unwrap()) {
                    EquationClass::PerfectSquareAB { .. } => {
                        assert!(!matches!(set, SolutionSet::Families { .. }))
                    }
                    EquationClass::NonSquareAB { .. } => {
                        assert!(!matches!(set, SolutionSet::Finite(_)))
                    }
                    EquationClass::DegenerateZeroC => unreachable!(),
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn normalization_bijects_oracle_solutions(
        a in prop_oneof![-6i64..=-1, 1i64..=6],
        b_abs in 1i64..=6,
        c in -40i64..=40,
    ) {
        // same-sign coefficients only; opposite signs are not normalizable
        let b = if a < 0 { -b_abs } else { b_abs };
        let eq = Equation::new(a, b, c);
        let n = normalize(&eq).unwrap();
        prop_assert!(n.equation().a >= BigInt::one());
        prop_assert!(n.equation().a <= n.equation().b);
        let original = brute_force(&eq, 25, Domain::Integers);
        let mut mapped: Vec<_> = original.iter().map(|p| n.to_normalized(p)).collect();
        mapped.sort();
        prop_assert_eq!(mapped, brute_force(n.equation(), 25, Domain::Integers));
    }
}
