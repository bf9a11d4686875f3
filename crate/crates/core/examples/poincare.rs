//! Intersection posets and Poincaré polynomials of the icosidodecahedral
//! arrangement, its deconing, and the coning identity.
//!
//!     cargo run --example poincare

use arrlab::arrangement::icosidodecahedral;
use arrlab::poset::{Hyperplanes, IntPolynomial};

fn main() {
    let a = icosidodecahedral();
    let poset = a.intersection_poset();
    println!("A: flats per rank {:?}", poset.rank_sizes());
    println!("pi(A, t) = {}", poset.poincare_polynomial());

    let l = a.decone(a.default_decone_index()).unwrap();
    let pl = l.poincare_polynomial();
    println!("L: {} lines, pi(L, t) = {pl}", l.len());
    let mut mult = std::collections::BTreeMap::new();
    for (flat, _) in l.intersection_poset().flats_of_rank(2) {
        *mult.entry(flat.hyperplanes.len()).or_insert(0) += 1;
    }
    println!("L: intersection points by multiplicity {mult:?}");

    let coned = IntPolynomial::from_i64s(&[1, 1]) * pl;
    println!("(1 + t) pi(L, t) = {coned}");
    assert_eq!(coned, a.poincare_polynomial());
}
