use super::CellComplex;
use crate::arrangement::CentralArrangement;
use crate::scalar::Field;
use crate::Error;

/// A chamber that is not a simplicial cone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    /// Face id in the complex of the deconing.
    pub face: usize,
    pub bounded: bool,
    /// Number of walls of the chamber cone.
    pub walls: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Simpliciality {
    /// Index of the plane the test deconed at.
    pub decone_index: usize,
    pub witness: Option<Witness>,
}

impl Simpliciality {
    pub fn is_simplicial(&self) -> bool {
        self.witness.is_none()
    }
}

/// Decides whether every chamber of a rank-3 central arrangement is a
/// simplicial cone.
///
/// Deconing at the last plane, a chamber becomes either a bounded face (walls
/// = its vertex count) or an unbounded face (walls = its boundary lines, plus
/// the line at infinity when the face's two rays are not parallel; a
/// half-strip only touches infinity in a point).
pub fn is_simplicial<F: Field>(a: &CentralArrangement<F>) -> Result<Simpliciality, Error> {
    let rank = a.rank();
    if rank < 3 {
        return Err(Error::RankTooSmall(rank));
    }
    let decone_index = a.len() - 1;
    let lines = a.decone(decone_index)?;
    let complex = CellComplex::build(&lines);
    let walls = |f: &super::Face| {
        if f.bounded {
            return f.vertices.len();
        }
        let rays: Vec<usize> = f
            .edges
            .iter()
            .map(|&e| complex.edges()[e])
            .filter(|e| !e.is_bounded())
            .map(|e| e.line)
            .collect();
        let at_infinity = match rays[..] {
            [r, s] => !lines.lines()[r].is_parallel(&lines.lines()[s]),
            _ => true,
        };
        f.lines.len() + usize::from(at_infinity)
    };
    let witness = complex
        .faces()
        .iter()
        .enumerate()
        .find(|(_, f)| walls(f) != 3)
        .map(|(face, f)| Witness { face, bounded: f.bounded, walls: walls(f) });
    Ok(Simpliciality { decone_index, witness })
}
