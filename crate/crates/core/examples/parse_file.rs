//! The arrangement text format: parse, inspect, print back.
//!
//!     cargo run --example parse_file

use arrlab::arrangement::{AnyArrangement, ParsedArrangement};

const TEXT: &str = "\
# the braid arrangement in rank 3
field rational
plane 1 0 0
plane 0 1 0
plane 0 0 1
plane 1 -1 0
plane 1 0 -1
plane 0 1 -1
";

fn main() {
    let a = AnyArrangement::parse(TEXT).expect("valid file");
    if let AnyArrangement::Rational(ParsedArrangement::Planes(p)) = &a {
        println!("{} planes of rank {}", p.len(), p.rank());
        let l = p.decone(p.default_decone_index()).unwrap();
        println!("deconed at H1:\n{}", ParsedArrangement::Lines(l));
    }
    println!("round trip:\n{a}");

    for bad in ["field rational\nline 0 0 1\n", "field golden\nline 1 0 0\nplane 1 0 0\n", "line 1 0 0\n"] {
        println!("{:?} -> {}", bad, AnyArrangement::parse(bad).unwrap_err());
    }
}
