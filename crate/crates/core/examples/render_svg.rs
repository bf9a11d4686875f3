//! SVG of the deconed icosidodecahedral arrangement with Γ shaded and the
//! solver's weights on the corners.
//!
//!     cargo run --release --example render_svg -- out.svg

use arrlab::complex::CellComplex;
use arrlab::falk::{solve, SolveOptions};
use arrlab::render::{render_svg, RenderOptions};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "icosidodecahedral.svg".into());
    let a = arrlab::icosidodecahedral();
    let l = a.decone(a.default_decone_index()).unwrap();
    let weights = solve(&CellComplex::build(&l), &SolveOptions::default()).unwrap().weights();
    let svg = render_svg(&l, &RenderOptions { gamma: true, weights });
    std::fs::write(&path, &svg).unwrap();
    println!("wrote {path} ({} bytes)", svg.len());
}
