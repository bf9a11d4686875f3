use std::collections::BTreeMap;
use std::fmt;

use super::CellComplex;
use crate::scalar::Field;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LinkShape {
    Cycle,
    Path,
    /// Two or more path components.
    Multipath,
}

impl fmt::Display for LinkShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkShape::Cycle => "cycle",
            LinkShape::Path => "path",
            LinkShape::Multipath => "multipath",
        })
    }
}

/// A connected piece of a link: Γ-edges `e_1, …, e_k` in counterclockwise
/// order, with `labels[i]` the corner joining `e_i` to `e_{i+1}` (and, on a
/// cycle, `labels[k-1]` joining `e_k` back to `e_1`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkComponent {
    pub edges: Vec<usize>,
    pub labels: Vec<usize>,
    pub cyclic: bool,
}

impl LinkComponent {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// The graph on Γ-edges at a vertex, two of them joined when they bound a
/// common bounded face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Link {
    pub vertex: usize,
    pub multiplicity: usize,
    pub shape: LinkShape,
    pub components: Vec<LinkComponent>,
}

impl Link {
    /// Number of link vertices over all components.
    pub fn len(&self) -> usize {
        self.components.iter().map(LinkComponent::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn n_edges(&self) -> usize {
        self.components.iter().map(|c| c.labels.len()).sum()
    }
}

impl<F: Field> CellComplex<F> {
    pub fn link(&self, v: usize) -> Link {
        let fan = self.fan(v);
        let n = fan.len();
        let bounded_edge = |i: usize| self.edges[fan[i % n].0].is_bounded();
        // Sector i lies between fan[i] and fan[i + 1].
        let joins = |i: usize| {
            let face = fan[i % n].1;
            self.faces[face].bounded && bounded_edge(i) && bounded_edge(i + 1)
        };
        let corner = |i: usize| self.corner_id(v, fan[i % n].1).expect("bounded face at vertex");
        let multiplicity = self.vertices[v].multiplicity();

        if (0..n).all(joins) {
            let component = LinkComponent {
                edges: fan.iter().map(|&(e, _)| e).collect(),
                labels: (0..n).map(corner).collect(),
                cyclic: true,
            };
            return Link { vertex: v, multiplicity, shape: LinkShape::Cycle, components: vec![component] };
        }

        let start = (0..n).find(|&i| !joins((i + n - 1) % n)).expect("some sector does not join");
        let mut components: Vec<LinkComponent> = Vec::new();
        let mut open = false;
        for i in start..start + n {
            if !bounded_edge(i) {
                open = false;
                continue;
            }
            if !open {
                components.push(LinkComponent { edges: Vec::new(), labels: Vec::new(), cyclic: false });
                open = true;
            }
            let current = components.last_mut().unwrap();
            current.edges.push(fan[i % n].0);
            if joins(i) {
                current.labels.push(corner(i));
            } else {
                open = false;
            }
        }
        let shape = if components.len() > 1 { LinkShape::Multipath } else { LinkShape::Path };
        Link { vertex: v, multiplicity, shape, components }
    }

    pub fn links(&self) -> Vec<Link> {
        (0..self.vertices.len()).map(|v| self.link(v)).collect()
    }

    /// Counts of `(shape, link length, multiplicity)` over all vertices.
    pub fn link_census(&self) -> BTreeMap<(LinkShape, usize, usize), usize> {
        let mut census = BTreeMap::new();
        for link in self.links() {
            *census.entry((link.shape, link.len(), link.multiplicity)).or_insert(0) += 1;
        }
        census
    }
}
