//! Searching for and verifying a Falk weight system on the deconed
//! icosidodecahedral arrangement.
//!
//!     cargo run --release --example falk_weights

use std::collections::BTreeMap;

use arrlab::complex::CellComplex;
use arrlab::falk::{solve, verify, Options, SolveOptions};

fn main() {
    let a = arrlab::icosidodecahedral();
    let c = CellComplex::build(&a.decone(a.default_decone_index()).unwrap());

    for equality in [false, true] {
        let options = SolveOptions {
            constraints: Options { equality_asphericity: equality, ..Options::default() },
            minimize_total: false,
        };
        let solution = solve(&c, &options).unwrap();
        let s = &solution.system;
        println!(
            "equality asphericity = {equality}: {} variables, {} + {} rows",
            s.n_vars(),
            s.n_asphericity(),
            s.n_admissibility()
        );
        let weights = solution.weights().expect("feasible");
        println!("  certificate re-check: {}", solution.check());
        print!("  verify: {}", verify(&c, &weights).unwrap());
        let mut histogram: BTreeMap<_, usize> = BTreeMap::new();
        for (_, v) in weights.iter() {
            *histogram.entry(v.clone()).or_default() += 1;
        }
        println!("  values: {}", histogram.iter().map(|(v, n)| format!("{v}×{n}")).collect::<Vec<_>>().join(" "));
        println!("  total weight {}", weights.total());
    }
}
