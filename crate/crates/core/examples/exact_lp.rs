//! The exact simplex on its own: a witness, an optimum, and a Farkas
//! certificate that a checker confirms without the solver.
//!
//!     cargo run --example exact_lp

use arrlab::lpcore::{check_certificate, solve_feasibility, FeasibilityResult, Relation, Row, StandardFormLP};
use arrlab::Rational;

fn row(coeffs: &[(usize, i64)], relation: Relation, rhs: i64) -> Row {
    Row::new(coeffs.iter().map(|&(j, c)| (j, Rational::from(c))), relation, Rational::from(rhs))
}

fn report(name: &str, lp: &StandardFormLP) {
    let result = solve_feasibility(lp);
    print!("{name}:\n{lp}");
    match &result {
        FeasibilityResult::Feasible { point } => println!("  feasible at {point:?}"),
        FeasibilityResult::Infeasible { multipliers } => println!("  infeasible, multipliers {multipliers:?}"),
        FeasibilityResult::Unbounded { point, ray } => println!("  unbounded from {point:?} along {ray:?}"),
    }
    println!("  check_certificate = {}\n", check_certificate(lp, &result));
}

fn main() {
    let mut lp = StandardFormLP::new(1);
    lp.add_row(row(&[(0, 1)], Relation::Ge, 2));
    lp.add_row(row(&[(0, 1)], Relation::Le, 1));
    report("contradictory bounds", &lp);

    let mut lp = StandardFormLP::new(2);
    lp.add_row(row(&[(0, 1), (1, 2)], Relation::Ge, 4));
    lp.add_row(row(&[(0, 3), (1, 1)], Relation::Ge, 6));
    lp.set_objective(vec![Rational::from(1), Rational::from(1)]);
    report("minimize x0 + x1", &lp);

    let mut lp = StandardFormLP::new(2);
    lp.add_row(row(&[(0, 1), (1, -1)], Relation::Le, 1));
    lp.set_objective(vec![Rational::from(0), Rational::from(-1)]);
    report("maximize x1", &lp);
}
