//! Does a Poincaré polynomial factor into linear factors over the integers?
//!
//!     cargo run --example integer_split

use arrlab::arrangement::icosidodecahedral;
use arrlab::poset::{splits_over_integers, Hyperplanes, IntPolynomial};

fn show(name: &str, p: &IntPolynomial) {
    match splits_over_integers(p) {
        Some(ds) => println!("{name}: {p} = {}", ds.iter().map(|d| format!("(1 + {d}t)")).collect::<String>()),
        None => println!("{name}: {p} has no integer split"),
    }
}

fn main() {
    show("braid", &IntPolynomial::from_i64s(&[1, 6, 11, 6]));
    show("icosidodecahedral", &icosidodecahedral().poincare_polynomial());
    let a = icosidodecahedral();
    show("deconed", &a.decone(a.default_decone_index()).unwrap().poincare_polynomial());
}
