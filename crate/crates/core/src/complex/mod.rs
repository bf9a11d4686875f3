//! The planar cell complex of an affine line arrangement and its bounded
//! subcomplex Γ.
//!
//! Faces are found with a half-edge walk. Rays are capped by points on a
//! large circle, ordered by direction and (for parallel rays) by offset, with
//! arcs of the circle joining consecutive caps. Every face of that planar
//! graph except the outside of the circle is a face of the arrangement; the
//! ones touching an arc are unbounded.

mod link;
mod simplicial;

use std::cmp::Ordering;
use std::collections::BTreeMap;

pub use link::{Link, LinkComponent, LinkShape};
pub use simplicial::{is_simplicial, Simpliciality, Witness};

use crate::arrangement::LineArrangement;
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vertex<F> {
    pub x: F,
    pub y: F,
    /// Sorted indices of the lines through the vertex.
    pub lines: Vec<usize>,
}

impl<F> Vertex<F> {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeKind {
    /// Bounded segment between two vertices, `from < to`.
    Segment { from: usize, to: usize },
    /// Ray leaving a vertex.
    Ray { from: usize },
    /// A line carrying no vertex at all.
    Line,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub line: usize,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn is_bounded(&self) -> bool {
        matches!(self.kind, EdgeKind::Segment { .. })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    pub bounded: bool,
    /// Finite vertices on the boundary, counterclockwise. For a bounded face
    /// the walk starts at its smallest vertex id.
    pub vertices: Vec<usize>,
    /// Sorted edge ids on the boundary.
    pub edges: Vec<usize>,
    /// Sorted indices of the lines supporting boundary edges.
    pub lines: Vec<usize>,
}

/// A (vertex, bounded face) incidence.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Corner {
    pub vertex: usize,
    pub face: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Node {
    Vertex(usize),
    /// Cap of a ray on the bounding circle, by position in ccw order.
    Cap(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Carrier {
    Edge(usize),
    Arc { ccw: bool },
}

#[derive(Clone, Debug)]
struct Dart {
    origin: Node,
    target: Node,
    carrier: Carrier,
    face: usize,
}

/// Strata of the plane cut by a line arrangement.
///
/// Ids are deterministic: vertices sorted lexicographically by coordinates,
/// bounded edges by endpoint ids and listed before rays, bounded faces by
/// their sorted vertex lists and listed before unbounded faces.
#[derive(Clone, Debug)]
pub struct CellComplex<F> {
    vertices: Vec<Vertex<F>>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    darts: Vec<Dart>,
    /// Outgoing darts around each vertex, counterclockwise.
    rotation: Vec<Vec<usize>>,
    corners: Vec<Corner>,
    n_lines: usize,
}

/// `(x, y)` in the open upper half plane or on the positive x-axis → 0.
fn half<F: Field>(d: &(F, F)) -> u8 {
    let (x, y) = d;
    if y.signum() == Ordering::Greater || (y.is_zero() && x.signum() == Ordering::Greater) {
        0
    } else {
        1
    }
}

pub(crate) fn cross<F: Field>(u: &(F, F), v: &(F, F)) -> F {
    u.0.clone() * v.1.clone() - u.1.clone() * v.0.clone()
}

/// Counterclockwise order of nonzero directions starting at the positive
/// x-axis; exact, no trigonometry.
pub(crate) fn cmp_angle<F: Field>(u: &(F, F), v: &(F, F)) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| F::zero().cmp(&cross(u, v)))
}

impl<F: Field> CellComplex<F> {
    pub fn build(arrangement: &LineArrangement<F>) -> Self {
        let lines = arrangement.lines();

        let mut points: BTreeMap<(F, F), Vec<usize>> = BTreeMap::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if let Some(p) = lines[i].intersection(&lines[j]) {
                    let on = points.entry(p).or_default();
                    for k in [i, j] {
                        if !on.contains(&k) {
                            on.push(k);
                        }
                    }
                }
            }
        }
        let vertices: Vec<Vertex<F>> = points
            .into_iter()
            .map(|((x, y), mut on)| {
                on.sort_unstable();
                Vertex { x, y, lines: on }
            })
            .collect();

        // Vertices along each line, in the direction of the line.
        let mut along: Vec<Vec<usize>> = vec![Vec::new(); lines.len()];
        for (v, vx) in vertices.iter().enumerate() {
            for &l in &vx.lines {
                along[l].push(v);
            }
        }
        for (l, vs) in along.iter_mut().enumerate() {
            let (dx, dy) = lines[l].direction();
            let t = |v: usize| vertices[v].x.clone() * dx.clone() + vertices[v].y.clone() * dy.clone();
            vs.sort_by_cached_key(|&v| t(v));
        }

        // Rays carry whether they run along the line's direction.
        let mut raw_edges: Vec<(Edge, bool)> = Vec::new();
        for (l, vs) in along.iter().enumerate() {
            let (Some(&first), Some(&last)) = (vs.first(), vs.last()) else {
                raw_edges.push((Edge { line: l, kind: EdgeKind::Line }, true));
                continue;
            };
            raw_edges.push((Edge { line: l, kind: EdgeKind::Ray { from: first } }, false));
            for w in vs.windows(2) {
                let (from, to) = (w[0].min(w[1]), w[0].max(w[1]));
                raw_edges.push((Edge { line: l, kind: EdgeKind::Segment { from, to } }, true));
            }
            raw_edges.push((Edge { line: l, kind: EdgeKind::Ray { from: last } }, true));
        }
        raw_edges.sort_by_key(|(e, forward)| match e.kind {
            EdgeKind::Segment { from, to } => (0, from, to, e.line, false),
            EdgeKind::Ray { from } => (1, from, e.line, 0, *forward),
            EdgeKind::Line => (2, e.line, 0, 0, false),
        });
        let (edges, forward): (Vec<Edge>, Vec<bool>) = raw_edges.into_iter().unzip();

        let point = |v: usize| (vertices[v].x.clone(), vertices[v].y.clone());
        let sub = |p: (F, F), q: (F, F)| (p.0 - q.0, p.1 - q.1);
        let neg = |p: (F, F)| (-p.0, -p.1);

        // Ray caps: direction of travel, a point on the ray, the edge.
        struct Cap<F> {
            dir: (F, F),
            base: (F, F),
            edge: usize,
        }
        let mut caps: Vec<Cap<F>> = Vec::new();
        for (id, e) in edges.iter().enumerate() {
            let d = lines[e.line].direction();
            match e.kind {
                EdgeKind::Segment { .. } => {}
                EdgeKind::Ray { from } => {
                    let dir = if forward[id] { d } else { neg(d) };
                    caps.push(Cap { dir, base: point(from), edge: id });
                }
                EdgeKind::Line => {
                    let base = lines[e.line].base_point();
                    caps.push(Cap { dir: neg(d.clone()), base: base.clone(), edge: id });
                    caps.push(Cap { dir: d, base, edge: id });
                }
            }
        }
        caps.sort_by(|a, b| {
            cmp_angle(&a.dir, &b.dir).then_with(|| cross(&a.dir, &a.base).cmp(&cross(&b.dir, &b.base)))
        });

        // Darts come in twin pairs (2i, 2i + 1), each with the direction it
        // leaves a finite origin in.
        let mut darts: Vec<Dart> = Vec::new();
        let mut dirs: Vec<Option<(F, F)>> = Vec::new();
        let mut push_pair = |darts: &mut Vec<Dart>, a: Node, b: Node, carrier: Carrier, dab: Option<(F, F)>, dba: Option<(F, F)>, ccw_pair: bool| {
            let (c1, c2) = match carrier {
                Carrier::Arc { .. } => (Carrier::Arc { ccw: ccw_pair }, Carrier::Arc { ccw: !ccw_pair }),
                other => (other, other),
            };
            darts.push(Dart { origin: a, target: b, carrier: c1, face: usize::MAX });
            darts.push(Dart { origin: b, target: a, carrier: c2, face: usize::MAX });
            dirs.push(dab);
            dirs.push(dba);
        };
        let cap_of = |edge: usize, dir: &(F, F)| {
            caps.iter().position(|c| c.edge == edge && c.dir == *dir).expect("cap exists")
        };
        for (id, e) in edges.iter().enumerate() {
            match e.kind {
                EdgeKind::Segment { from, to } => {
                    let d = sub(point(to), point(from));
                    push_pair(&mut darts, Node::Vertex(from), Node::Vertex(to), Carrier::Edge(id), Some(d.clone()), Some(neg(d)), false);
                }
                EdgeKind::Ray { from } => {
                    let k = caps.iter().position(|c| c.edge == id).expect("cap exists");
                    let dir = caps[k].dir.clone();
                    push_pair(&mut darts, Node::Vertex(from), Node::Cap(k), Carrier::Edge(id), Some(dir), None, false);
                }
                EdgeKind::Line => {
                    let d = lines[e.line].direction();
                    let back = cap_of(id, &neg(d.clone()));
                    let fwd = cap_of(id, &d);
                    push_pair(&mut darts, Node::Cap(back), Node::Cap(fwd), Carrier::Edge(id), None, None, false);
                }
            }
        }
        let n_caps = caps.len();
        let first_arc = darts.len();
        for k in 0..n_caps {
            push_pair(&mut darts, Node::Cap(k), Node::Cap((k + 1) % n_caps), Carrier::Arc { ccw: true }, None, None, true);
        }

        // Rotation systems.
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
        let mut cap_rotation: Vec<[usize; 3]> = vec![[usize::MAX; 3]; n_caps];
        for (h, dart) in darts.iter().enumerate() {
            match (dart.origin, dart.carrier) {
                (Node::Vertex(v), _) => rotation[v].push(h),
                (Node::Cap(k), Carrier::Arc { ccw: true }) => cap_rotation[k][0] = h,
                (Node::Cap(k), Carrier::Arc { ccw: false }) => cap_rotation[k][2] = h,
                (Node::Cap(k), Carrier::Edge(_)) => cap_rotation[k][1] = h,
            }
        }
        for rot in rotation.iter_mut() {
            rot.sort_by(|&a, &b| cmp_angle(dirs[a].as_ref().unwrap(), dirs[b].as_ref().unwrap()));
        }
        debug_assert!(cap_rotation.iter().flatten().all(|&h| h != usize::MAX));

        let rot_of = |node: Node| -> &[usize] {
            match node {
                Node::Vertex(v) => &rotation[v],
                Node::Cap(k) => &cap_rotation[k],
            }
        };
        // Face to the left: leave the target along the dart just clockwise of
        // the twin.
        let next = |h: usize| {
            let twin = h ^ 1;
            let rot = rot_of(darts[h].target);
            let pos = rot.iter().position(|&x| x == twin).expect("twin in rotation");
            rot[(pos + rot.len() - 1) % rot.len()]
        };

        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; darts.len()];
        for start in 0..darts.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                cycle.push(h);
                h = next(h);
            }
            debug_assert_eq!(h, start);
            cycles.push(cycle);
        }

        // Drop the outside of the circle; describe the rest.
        let mut raw: Vec<(Face, Vec<usize>)> = Vec::new();
        for cycle in cycles {
            if cycle.iter().all(|&h| darts[h].carrier == Carrier::Arc { ccw: false }) {
                continue;
            }
            let bounded = cycle.iter().all(|&h| h < first_arc);
            let mut vs: Vec<usize> = cycle
                .iter()
                .filter_map(|&h| match darts[h].origin {
                    Node::Vertex(v) => Some(v),
                    Node::Cap(_) => None,
                })
                .collect();
            if bounded {
                let lo = vs.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i).unwrap_or(0);
                vs.rotate_left(lo);
            }
            let mut es: Vec<usize> = cycle
                .iter()
                .filter_map(|&h| match darts[h].carrier {
                    Carrier::Edge(e) => Some(e),
                    Carrier::Arc { .. } => None,
                })
                .collect();
            es.sort_unstable();
            es.dedup();
            let mut ls: Vec<usize> = es.iter().map(|&e| edges[e].line).collect();
            ls.sort_unstable();
            ls.dedup();
            raw.push((Face { bounded, vertices: vs, edges: es, lines: ls }, cycle));
        }
        raw.sort_by_cached_key(|(f, _)| {
            let mut vs = f.vertices.clone();
            vs.sort_unstable();
            (!f.bounded, vs, f.lines.clone())
        });

        let mut faces = Vec::with_capacity(raw.len());
        for (id, (face, cycle)) in raw.into_iter().enumerate() {
            for h in cycle {
                darts[h].face = id;
            }
            faces.push(face);
        }

        let mut corners: Vec<Corner> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.bounded)
            .flat_map(|(id, f)| f.vertices.iter().map(move |&v| Corner { vertex: v, face: id }))
            .collect();
        corners.sort();

        CellComplex { vertices, edges, faces, darts, rotation, corners, n_lines: lines.len() }
    }

    pub fn n_lines(&self) -> usize {
        self.n_lines
    }

    pub fn vertices(&self) -> &[Vertex<F>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Bounded edges of Γ; they occupy a prefix of the edge ids.
    pub fn bounded_edges(&self) -> impl Iterator<Item = (usize, &Edge)> {
        self.edges.iter().enumerate().filter(|(_, e)| e.is_bounded())
    }

    /// Bounded faces of Γ; they occupy a prefix of the face ids.
    pub fn bounded_faces(&self) -> impl Iterator<Item = (usize, &Face)> {
        self.faces.iter().enumerate().filter(|(_, f)| f.bounded)
    }

    pub fn n_bounded_faces(&self) -> usize {
        self.faces.iter().filter(|f| f.bounded).count()
    }

    pub fn n_bounded_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.is_bounded()).count()
    }

    /// All corners of Γ, sorted by (vertex, face); a corner's id is its
    /// position here.
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn corner_id(&self, vertex: usize, face: usize) -> Option<usize> {
        self.corners.binary_search(&Corner { vertex, face }).ok()
    }

    /// Number of faces of each polygon size among bounded faces.
    pub fn face_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for (_, f) in self.bounded_faces() {
            *census.entry(f.vertices.len()).or_insert(0) += 1;
        }
        census
    }

    /// Outgoing edges at `v`, counterclockwise, each with the face in the
    /// sector between it and the next edge.
    pub fn fan(&self, v: usize) -> Vec<(usize, usize)> {
        self.rotation[v]
            .iter()
            .map(|&h| {
                let Carrier::Edge(e) = self.darts[h].carrier else { unreachable!("arcs never touch vertices") };
                (e, self.darts[h].face)
            })
            .collect()
    }

    /// Centroid of a bounded face's vertices, approximately.
    pub fn face_centroid_f64(&self, face: usize) -> (f64, f64) {
        let vs = &self.faces[face].vertices;
        let n = vs.len().max(1) as f64;
        let (sx, sy) = vs.iter().fold((0.0, 0.0), |(sx, sy), &v| {
            (sx + self.vertices[v].x.to_f64(), sy + self.vertices[v].y.to_f64())
        });
        (sx / n, sy / n)
    }
}
