//! Affine line arrangements in the plane and central plane arrangements in
//! 3-space, with coning and deconing.

mod icosidodecahedral;
mod io;

use std::fmt;

pub use icosidodecahedral::icosidodecahedral;
pub use io::{parse_arrangement, AnyArrangement, ParsedArrangement};

use crate::scalar::Field;
use crate::Error;

/// The line `{ (x, y) : a·x + b·y = c }`, normalized so that the first nonzero
/// of `(a, b)` is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineLine<F> {
    a: F,
    b: F,
    c: F,
}

impl<F: Field> AffineLine<F> {
    pub fn new(a: F, b: F, c: F) -> Result<Self, Error> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::ZeroNormal);
        };
        let inv = lead.inverse()?;
        Ok(AffineLine { a: a * inv.clone(), b: b * inv.clone(), c: c * inv })
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    pub fn c(&self) -> &F {
        &self.c
    }

    /// Direction vector `(-b, a)`.
    pub fn direction(&self) -> (F, F) {
        (-self.b.clone(), self.a.clone())
    }

    pub fn contains(&self, x: &F, y: &F) -> bool {
        self.value_at(x, y).is_zero()
    }

    /// `a·x + b·y - c`.
    pub fn value_at(&self, x: &F, y: &F) -> F {
        self.a.clone() * x.clone() + self.b.clone() * y.clone() - self.c.clone()
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        self.cross(other).is_zero()
    }

    fn cross(&self, other: &Self) -> F {
        self.a.clone() * other.b.clone() - other.a.clone() * self.b.clone()
    }

    /// The unique common point, or `None` for parallel lines.
    pub fn intersection(&self, other: &Self) -> Option<(F, F)> {
        let det = self.cross(other);
        if det.is_zero() {
            return None;
        }
        let inv = det.inverse().ok()?;
        let x = (self.c.clone() * other.b.clone() - other.c.clone() * self.b.clone()) * inv.clone();
        let y = (self.a.clone() * other.c.clone() - other.a.clone() * self.c.clone()) * inv;
        Some((x, y))
    }

    /// Some point of the line (the one with the "free" coordinate zero).
    pub fn base_point(&self) -> (F, F) {
        if !self.a.is_zero() {
            (self.c.clone() * self.a.inverse().unwrap(), F::zero())
        } else {
            (F::zero(), self.c.clone() * self.b.inverse().unwrap())
        }
    }
}

impl<F: Field> fmt::Display for AffineLine<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {} {} {}", self.a, self.b, self.c)
    }
}

/// The plane `{ v : n·v = 0 }`, normalized so that the first nonzero
/// coordinate of `n` is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CentralPlane<F> {
    normal: [F; 3],
}

impl<F: Field> CentralPlane<F> {
    pub fn new(normal: [F; 3]) -> Result<Self, Error> {
        let lead = normal.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroNormal)?;
        let inv = lead.inverse()?;
        Ok(CentralPlane { normal: normal.map(|x| x * inv.clone()) })
    }

    pub fn normal(&self) -> &[F; 3] {
        &self.normal
    }

    pub fn contains(&self, v: &[F; 3]) -> bool {
        dot(&self.normal, v).is_zero()
    }
}

impl<F: Field> fmt::Display for CentralPlane<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.normal;
        write!(f, "plane {x} {y} {z}")
    }
}

pub(crate) fn dot<F: Field>(u: &[F; 3], v: &[F; 3]) -> F {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

pub(crate) fn cross3<F: Field>(u: &[F; 3], v: &[F; 3]) -> [F; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

/// Rank of a list of row vectors, by Gaussian elimination.
pub(crate) fn rank<F: Field, const N: usize>(rows: &[[F; N]]) -> usize {
    let mut m: Vec<[F; N]> = rows.to_vec();
    let mut r = 0;
    for col in 0..N {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].inverse().unwrap();
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone() * inv.clone();
                for k in 0..N {
                    let t = m[r][k].clone() * f.clone();
                    m[i][k] = m[i][k].clone() - t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Metadata on planes of a central arrangement. No algorithm depends on it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum PlaneClass {
    Edge,
    Diagonal,
    #[default]
    Unlabeled,
}

impl PlaneClass {
    pub fn label(self) -> Option<&'static str> {
        match self {
            PlaneClass::Edge => Some("edge"),
            PlaneClass::Diagonal => Some("diagonal"),
            PlaneClass::Unlabeled => None,
        }
    }
}

/// An ordered list of pairwise distinct affine lines.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LineArrangement<F> {
    lines: Vec<AffineLine<F>>,
}

impl<F: Field> LineArrangement<F> {
    /// Keeps the given order; fails on repeated lines.
    pub fn new(lines: Vec<AffineLine<F>>) -> Result<Self, Error> {
        for (i, l) in lines.iter().enumerate() {
            if lines[..i].contains(l) {
                return Err(Error::DuplicateHyperplane(l.to_string()));
            }
        }
        Ok(LineArrangement { lines })
    }

    /// Sorts lines lexicographically by normalized coefficients.
    pub fn canonical(mut lines: Vec<AffineLine<F>>) -> Result<Self, Error> {
        lines.sort();
        Self::new(lines)
    }

    pub fn empty() -> Self {
        LineArrangement { lines: Vec::new() }
    }

    pub fn lines(&self) -> &[AffineLine<F>] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// The arrangement with line `index` removed.
    pub fn deletion(&self, index: usize) -> Self {
        let mut lines = self.lines.clone();
        lines.remove(index);
        LineArrangement { lines }
    }

    /// Homogenizes `a·x + b·y = c` to `a·x + b·y - c·z = 0` and appends `z = 0`.
    pub fn cone(&self) -> CentralArrangement<F> {
        let mut planes: Vec<CentralPlane<F>> = self
            .lines
            .iter()
            .map(|l| CentralPlane::new([l.a.clone(), l.b.clone(), -l.c.clone()]).unwrap())
            .collect();
        planes.push(CentralPlane::new([F::zero(), F::zero(), F::one()]).unwrap());
        let classes = vec![PlaneClass::Unlabeled; planes.len()];
        CentralArrangement { planes, classes }
    }
}

/// An ordered list of pairwise distinct planes through the origin, each
/// carrying a [`PlaneClass`] label.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CentralArrangement<F> {
    planes: Vec<CentralPlane<F>>,
    classes: Vec<PlaneClass>,
}

impl<F: Field> CentralArrangement<F> {
    pub fn new(planes: Vec<CentralPlane<F>>) -> Result<Self, Error> {
        let classes = vec![PlaneClass::Unlabeled; planes.len()];
        Self::with_classes(planes, classes)
    }

    pub fn with_classes(planes: Vec<CentralPlane<F>>, classes: Vec<PlaneClass>) -> Result<Self, Error> {
        assert_eq!(planes.len(), classes.len());
        for (i, p) in planes.iter().enumerate() {
            if planes[..i].contains(p) {
                return Err(Error::DuplicateHyperplane(p.to_string()));
            }
        }
        Ok(CentralArrangement { planes, classes })
    }

    /// Sorts planes lexicographically by normalized normal, keeping labels
    /// attached.
    pub fn canonical(planes: Vec<(CentralPlane<F>, PlaneClass)>) -> Result<Self, Error> {
        let mut planes = planes;
        planes.sort_by(|x, y| x.0.cmp(&y.0));
        let (planes, classes) = planes.into_iter().unzip();
        Self::with_classes(planes, classes)
    }

    pub fn planes(&self) -> &[CentralPlane<F>] {
        &self.planes
    }

    pub fn classes(&self) -> &[PlaneClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    /// Dimension of the span of the normals.
    pub fn rank(&self) -> usize {
        let rows: Vec<[F; 3]> = self.planes.iter().map(|p| p.normal.clone()).collect();
        rank(&rows)
    }

    pub fn deletion(&self, index: usize) -> Self {
        let mut out = self.clone();
        out.planes.remove(index);
        out.classes.remove(index);
        out
    }

    /// Index of the first plane labeled [`PlaneClass::Edge`], falling back to 0.
    pub fn default_decone_index(&self) -> usize {
        self.classes.iter().position(|c| *c == PlaneClass::Edge).unwrap_or(0)
    }

    /// Sends plane `index` to `z = 0` by a linear change of coordinates and
    /// slices the remaining planes with `z = 1`.
    ///
    /// With `n` the chosen normal (first nonzero entry `n[k] = 1`), the new
    /// coordinates are taken along `u1, u2, e_k`, where `u1, u2` are the kernel
    /// basis of `n` from elimination on the pivot `k`. A plane `p` becomes the
    /// line `(p·u1)·x + (p·u2)·y = -(p·e_k)`. Remaining lines keep the plane
    /// order.
    pub fn decone(&self, index: usize) -> Result<LineArrangement<F>, Error> {
        let n = self
            .planes
            .get(index)
            .ok_or(Error::IndexOutOfRange { index, len: self.planes.len() })?
            .normal();
        let k = n.iter().position(|x| !x.is_zero()).expect("normalized");
        let unit = |i: usize| {
            let mut e = [F::zero(), F::zero(), F::zero()];
            e[i] = F::one();
            e
        };
        let kernel: Vec<[F; 3]> = (0..3)
            .filter(|&i| i != k)
            .map(|f| {
                let mut u = unit(f);
                u[k] = -n[f].clone();
                u
            })
            .collect();
        let ek = unit(k);
        let lines = self
            .planes
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, p)| {
                AffineLine::new(dot(&p.normal, &kernel[0]), dot(&p.normal, &kernel[1]), -dot(&p.normal, &ek))
            })
            .collect::<Result<Vec<_>, _>>()?;
        LineArrangement::new(lines)
    }
}
