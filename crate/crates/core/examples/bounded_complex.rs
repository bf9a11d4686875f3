//! The bounded complex Γ of the deconed icosidodecahedral arrangement: cell
//! counts, polygon census and the table of vertex links.
//!
//!     cargo run --example bounded_complex

use arrlab::complex::CellComplex;
use arrlab::report::{link_table, GammaSummary};

fn main() {
    let a = arrlab::icosidodecahedral();
    let l = a.decone(a.default_decone_index()).unwrap();
    let c = CellComplex::build(&l);
    let g = GammaSummary::of(&c);
    println!("V = {}, E = {}, F = {}, corners = {}", g.vertices, g.edges, g.faces, g.corners);
    println!("Euler characteristic of Γ: {}", g.vertices as i64 - g.edges as i64 + g.faces as i64);
    println!("bounded faces by size: {:?}", g.face_census);
    println!("all faces (bounded and not): {}", c.faces().len());
    println!();
    print!("{}", link_table(&g.link_census));

    let v = (0..c.vertices().len()).find(|&v| c.vertices()[v].multiplicity() == 4).unwrap();
    let link = c.link(v);
    println!("\nlink at v{v}: {} with components {:?}", link.shape, link.components.iter().map(|p| &p.labels).collect::<Vec<_>>());
}
