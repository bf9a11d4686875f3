//! Shrinking a constraint system with a symmetry. The 3 × 3 grid is mapped
//! to itself by the quarter turn about (1, 1); the induced permutation of
//! corners merges weight variables into orbits.
//!
//!     cargo run --example symmetry

use arrlab::builtins::builtin;
use arrlab::arrangement::{AnyArrangement, ParsedArrangement};
use arrlab::complex::CellComplex;
use arrlab::falk::{build_constraints, solve, Options, SolveOptions};
use arrlab::Rational;

fn main() {
    let AnyArrangement::Rational(ParsedArrangement::Lines(l)) = builtin("grid3").unwrap() else { unreachable!() };
    let c = CellComplex::build(&l);
    let two = Rational::from(2);
    // (x, y) ↦ (2 - y, x)
    let image = |v: usize| {
        let p = &c.vertices()[v];
        c.vertices().iter().position(|q| q.x == &two - &p.y && q.y == p.x).unwrap()
    };
    let face_of = |vs: Vec<usize>| {
        let mut vs = vs;
        vs.sort();
        c.bounded_faces().find(|(_, f)| {
            let mut w = f.vertices.clone();
            w.sort();
            w == vs
        }).unwrap().0
    };
    let perm: Vec<usize> = c
        .corners()
        .iter()
        .map(|k| {
            let face = face_of(c.faces()[k.face].vertices.iter().map(|&v| image(v)).collect());
            c.corner_id(image(k.vertex), face).unwrap()
        })
        .collect();

    let plain = build_constraints(&c, &Options::default()).unwrap();
    let options = Options { symmetry: vec![perm], ..Options::default() };
    let reduced = build_constraints(&c, &options).unwrap();
    println!("without symmetry: {} variables, {} rows", plain.n_vars(), plain.rows().len());
    println!("with the quarter turn: {} variables, {} rows\n{reduced}", reduced.n_vars(), reduced.rows().len());

    let solution = solve(&c, &SolveOptions { constraints: options, minimize_total: true }).unwrap();
    println!("feasible: {}, certificate ok: {}", solution.is_feasible(), solution.check());
}
