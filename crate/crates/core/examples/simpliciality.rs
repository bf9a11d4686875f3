//! Are all chambers of a central arrangement simplicial cones?
//!
//!     cargo run --example simpliciality

use arrlab::arrangement::{AnyArrangement, ParsedArrangement};
use arrlab::builtins::builtin;
use arrlab::complex::is_simplicial;

fn main() {
    for name in ["boolean3", "braid"] {
        let AnyArrangement::Rational(ParsedArrangement::Planes(a)) = builtin(name).unwrap() else { unreachable!() };
        println!("@{name}: simplicial = {}", is_simplicial(&a).unwrap().is_simplicial());
    }
    let s = is_simplicial(&arrlab::icosidodecahedral()).unwrap();
    let w = s.witness.expect("not simplicial");
    println!(
        "@icosidodecahedral: simplicial = false, chamber with {} walls (bounded = {}) after deconing at H{}",
        w.walls,
        w.bounded,
        s.decone_index + 1
    );
}
