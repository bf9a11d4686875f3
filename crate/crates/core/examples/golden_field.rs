//! Exact arithmetic in Q(√5): the golden ratio, conjugates, exact signs.
//!
//!     cargo run --example golden_field

use arrlab::{Field, GoldenScalar, Rational};

fn main() {
    let phi = GoldenScalar::phi();
    let psi = phi.inverse().unwrap();
    println!("phi        = {phi}   (tokens are a~b for a + b√5)");
    println!("1/phi      = {psi}");
    println!("phi^2      = {}", phi.clone() * phi.clone());
    println!("phi + 1    = {}", phi.clone() + GoldenScalar::one());
    println!("norm(phi)  = {}", phi.norm());
    println!("conj(phi)  = {}", phi.conjugate());

    // 2207/987 approximates φ² from below within 1e-6; the sign is still exact.
    let close: GoldenScalar = "2207/987".parse().unwrap();
    let phi2 = phi.clone() * phi;
    println!("phi^2 - 2207/987 has sign {:?} (as f64: {:e})", (phi2.clone() - close.clone()).signum(), (phi2 - close).to_f64());

    let third = Rational::new(1, 3).unwrap();
    let x = GoldenScalar::new(third.clone(), -third);
    println!("{x} is {:?} zero, ≈ {}", x.signum(), x.to_f64());
}
