use super::{CentralArrangement, CentralPlane, PlaneClass};
use crate::scalar::{Field, GoldenScalar};

/// The 16-plane icosidodecahedral arrangement over ℚ(√5).
///
/// Six edge planes are orthogonal to the icosahedral vertex axes
/// `(0, ±1, φ)`, `(±1, φ, 0)`, `(φ, 0, ±1)`; each cuts the icosidodecahedron
/// along a decagonal equator. Ten diagonal planes are orthogonal to the face
/// axes of the same icosahedron, `(±1, ±1, ±1)` (up to sign) and
/// `(0, ±φ, φ⁻¹)`, `(±φ, φ⁻¹, 0)`, `(φ⁻¹, 0, ±φ)`; each meets the
/// icosidodecahedron in a hexagon of pentagon diagonals. Planes are in
/// canonical order.
pub fn icosidodecahedral() -> CentralArrangement<GoldenScalar> {
    let phi = GoldenScalar::phi();
    let psi = phi.inverse().unwrap();
    let z = GoldenScalar::zero;
    let one = GoldenScalar::one;
    let m1 = || -GoldenScalar::one();

    let cyclic = |x: GoldenScalar, y: GoldenScalar| {
        [
            [z(), x.clone(), y.clone()],
            [x.clone(), y.clone(), z()],
            [y, z(), x],
        ]
    };

    let mut normals: Vec<([GoldenScalar; 3], PlaneClass)> = Vec::new();
    for s in [one(), m1()] {
        for n in cyclic(s, phi.clone()) {
            normals.push((n, PlaneClass::Edge));
        }
    }
    for n in [
        [one(), one(), one()],
        [one(), one(), m1()],
        [one(), m1(), one()],
        [m1(), one(), one()],
    ] {
        normals.push((n, PlaneClass::Diagonal));
    }
    for s in [phi.clone(), -phi.clone()] {
        for n in cyclic(s, psi.clone()) {
            normals.push((n, PlaneClass::Diagonal));
        }
    }

    let planes = normals
        .into_iter()
        .map(|(n, class)| (CentralPlane::new(n).expect("nonzero normal"), class))
        .collect();
    CentralArrangement::canonical(planes).expect("distinct planes")
}
