//! Falk circuits at a vertex whose link is an 8-cycle, evaluated on the
//! labels d, e, f, h, k, h, f, e = 1/5, 1/5, 2/5, 2/5, 1/5, 2/5, 2/5, 1/5.
//!
//!     cargo run --example circuits

use arrlab::complex::{CellComplex, LinkShape};
use arrlab::falk::{enumerate_circuits, evaluate_circuit, WeightSystem};
use arrlab::Rational;

fn main() {
    let a = arrlab::icosidodecahedral();
    let c = CellComplex::build(&a.decone(a.default_decone_index()).unwrap());
    let link = c.links().into_iter().find(|l| l.shape == LinkShape::Cycle && l.len() == 8).unwrap();
    let labels = &link.components[0].labels;
    println!("v{} (multiplicity {}), link corners {labels:?}", link.vertex, link.multiplicity);

    let values = [(1, 5), (1, 5), (2, 5), (2, 5), (1, 5), (2, 5), (2, 5), (1, 5)];
    let mut w = WeightSystem::new();
    for (&corner, &(p, q)) in labels.iter().zip(&values) {
        w.set(&c, corner, Rational::new(p, q).unwrap()).unwrap();
    }

    for circuit in enumerate_circuits(&link, link.multiplicity) {
        let sum = evaluate_circuit(&c, &w, &circuit).unwrap();
        println!("{circuit:<28} multiplicities {:?}  sum {sum}", circuit.multiplicities);
    }
}
