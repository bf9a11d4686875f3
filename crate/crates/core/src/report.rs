//! Plain-text reports shared by the command line and the examples.
//!
//! Every report is `key: value` lines in a fixed order so that output for
//! the same input is byte-identical between runs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arrangement::{AnyArrangement, CentralArrangement, LineArrangement, ParsedArrangement};
use crate::complex::{is_simplicial, CellComplex, LinkShape, Simpliciality};
use crate::factored::{find_factorization, Factorization};
use crate::falk::{self, SolveOptions};
use crate::poset::{splits_over_integers, Hyperplanes, IntPolynomial};
use crate::scalar::Field;
use crate::Result;

/// Counts describing Γ and its vertex links.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub corners: usize,
    /// Polygon size → number of bounded faces.
    pub face_census: BTreeMap<usize, usize>,
    /// `(shape, link length, multiplicity)` → number of vertices.
    pub link_census: BTreeMap<(LinkShape, usize, usize), usize>,
}

impl GammaSummary {
    pub fn of<F: Field>(c: &CellComplex<F>) -> Self {
        GammaSummary {
            vertices: c.vertices().len(),
            edges: c.n_bounded_edges(),
            faces: c.n_bounded_faces(),
            corners: c.corners().len(),
            face_census: c.face_census(),
            link_census: c.link_census(),
        }
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn or_none(s: String) -> String {
    if s.is_empty() {
        "none".into()
    } else {
        s
    }
}

fn census_line(g: &GammaSummary) -> String {
    or_none(join(g.link_census.iter().map(|((s, k, m), n)| format!("{s}/{k}/{m}:{n}")), " "))
}

fn faces_line(g: &GammaSummary) -> String {
    or_none(join(g.face_census.iter().map(|(k, n)| format!("{k}-gon:{n}")), " "))
}

/// Link vertices `1..=k` spelled out as one string.
fn spell(walk: &[usize]) -> String {
    let sep = if walk.iter().any(|&v| v > 9) { "," } else { "" };
    join(walk, sep)
}

/// The `j = 1` walk of each circuit type on a link of `k` vertices, or
/// `None` where the type does not apply.
pub fn representative_walks(k: usize, m: usize, cyclic: bool) -> [Option<Vec<usize>>; 4] {
    let up = |a: usize, b: usize| (a..=b).collect::<Vec<_>>();
    let down = |a: usize, b: usize| (b..=a).rev().collect::<Vec<_>>();
    let cat = |parts: Vec<Vec<usize>>| parts.concat();
    let i = cyclic.then(|| cat(vec![up(1, k), vec![1]]));
    let ii = (k > m + 1).then(|| cat(vec![up(1, m + 2), down(m + 1, 1)]));
    let iii = (k > m).then(|| cat(vec![up(1, m + 1), down(m, 1), up(2, m + 1), down(m, 1)]));
    let iv = (k > m).then(|| cat(vec![up(1, m + 1), vec![m, m + 1], down(m, 1), vec![2, 1]]));
    [i, ii, iii, iv]
}

/// One row per link shape: the link, `m`, the vertex count and a
/// representative circuit of each type.
pub fn link_table(census: &BTreeMap<(LinkShape, usize, usize), usize>) -> String {
    let mut rows = vec![["link".to_string(), "m".into(), "count".into(), "(i)".into(), "(ii)".into(), "(iii)".into(), "(iv)".into()]];
    for ((shape, k, m), n) in census {
        let link = match shape {
            LinkShape::Cycle => spell(&[(1..=*k).collect::<Vec<_>>(), vec![1]].concat()),
            LinkShape::Path => spell(&(1..=*k).collect::<Vec<_>>()),
            LinkShape::Multipath => format!("multipath({k})"),
        };
        let walks = if *shape == LinkShape::Multipath {
            std::array::from_fn(|_| "per component".to_string())
        } else {
            representative_walks(*k, *m, *shape == LinkShape::Cycle).map(|w| w.map_or("N/A".to_string(), |w| spell(&w)))
        };
        let [a, b, c, d] = walks;
        rows.push([link, m.to_string(), n.to_string(), a, b, c, d]);
    }
    let widths: Vec<usize> = (0..7).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap()).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Γ counts, censuses, the link table and the corner list.
pub fn gamma_report<F: Field>(c: &CellComplex<F>) -> String {
    let g = GammaSummary::of(c);
    let mut out = String::new();
    out.push_str(&format!("vertices: {}\nedges: {}\nfaces: {}\ncorners: {}\n", g.vertices, g.edges, g.faces, g.corners));
    out.push_str(&format!("face_census: {}\n", faces_line(&g)));
    out.push_str(&format!("link_census: {}\n\n", census_line(&g)));
    out.push_str(&link_table(&g.link_census));
    out.push_str("\ncorner  vertex  face\n");
    for (id, corner) in c.corners().iter().enumerate() {
        out.push_str(&format!("{id:<6}  v{:<5}  f{}\n", corner.vertex, corner.face));
    }
    out
}

/// Everything `arrlab analyze` prints.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub kind: &'static str,
    pub field: &'static str,
    pub hyperplanes: usize,
    pub rank: usize,
    pub poincare: IntPolynomial,
    /// `("cone", π)` for line input, `("decone", π)` for plane input.
    pub related: (&'static str, IntPolynomial),
    /// Plane removed to get the line arrangement, for plane input.
    pub decone_index: Option<usize>,
    pub split: Option<Vec<BigInt>>,
    /// `None` when the input is not a rank-3 central arrangement.
    pub simplicial: Option<Simpliciality>,
    pub factorization: Option<Factorization>,
    pub gamma: GammaSummary,
    pub falk_feasible: bool,
    pub falk_rows: usize,
}

fn analyze_lines<F: Field>(
    l: &LineArrangement<F>,
    central: Option<&CentralArrangement<F>>,
    decone_index: Option<usize>,
) -> Result<AnalysisReport> {
    let complex = CellComplex::build(l);
    let solution = falk::solve(&complex, &SolveOptions::default())?;
    let (kind, hyperplanes, rank, poincare, related, simplicial) = match central {
        Some(a) => (
            "planes",
            a.len(),
            a.rank(),
            a.poincare_polynomial(),
            ("decone", l.poincare_polynomial()),
            is_simplicial(a).ok(),
        ),
        None => {
            let p = l.poincare_polynomial();
            let rank = p.degree();
            ("lines", l.len(), rank, p, ("cone", l.cone().poincare_polynomial()), None)
        }
    };
    let split = splits_over_integers(&poincare);
    Ok(AnalysisReport {
        kind,
        field: F::NAME,
        hyperplanes,
        rank,
        poincare,
        related,
        decone_index,
        split,
        simplicial,
        factorization: find_factorization(l),
        gamma: GammaSummary::of(&complex),
        falk_feasible: solution.is_feasible(),
        falk_rows: solution.system.rows().len(),
    })
}

fn analyze_parsed<F: Field>(a: &ParsedArrangement<F>) -> Result<AnalysisReport> {
    match a {
        ParsedArrangement::Lines(l) => analyze_lines(l, None, None),
        ParsedArrangement::Planes(p) => {
            let index = p.default_decone_index();
            analyze_lines(&p.decone(index)?, Some(p), Some(index))
        }
    }
}

pub fn analyze(a: &AnyArrangement) -> Result<AnalysisReport> {
    match a {
        AnyArrangement::Rational(a) => analyze_parsed(a),
        AnyArrangement::Golden(a) => analyze_parsed(a),
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arrangement: {} {}, rank {}, field {}", self.hyperplanes, self.kind, self.rank, self.field)?;
        writeln!(f, "poincare: {}", self.poincare)?;
        if let Some(i) = self.decone_index {
            writeln!(f, "decone_at: H{}", i + 1)?;
        }
        writeln!(f, "poincare_{}: {}", self.related.0, self.related.1)?;
        match &self.split {
            Some(roots) => writeln!(f, "split: {}", join(roots, " "))?,
            None => writeln!(f, "split: none")?,
        }
        match &self.simplicial {
            None => writeln!(f, "simplicial: n/a")?,
            Some(s) => match &s.witness {
                None => writeln!(f, "simplicial: true")?,
                Some(w) => writeln!(
                    f,
                    "simplicial: false (chamber with {} walls: {} face f{} after deconing at H{})",
                    w.walls,
                    if w.bounded { "bounded" } else { "unbounded" },
                    w.face,
                    s.decone_index + 1
                )?,
            },
        }
        match &self.factorization {
            Some(fz) => writeln!(f, "factored: true ({})", fz.to_string().replace('\n', ", "))?,
            None => writeln!(f, "factored: false")?,
        }
        let g = &self.gamma;
        writeln!(f, "gamma: {} vertices, {} edges, {} faces, {} corners", g.vertices, g.edges, g.faces, g.corners)?;
        writeln!(f, "faces: {}", faces_line(g))?;
        writeln!(f, "links: {}", census_line(g))?;
        writeln!(f, "falk: {} ({} rows)", if self.falk_feasible { "FEASIBLE" } else { "INFEASIBLE" }, self.falk_rows)
    }
}

/// Flats rank by rank (with Möbius values if asked) and the Poincaré
/// polynomial.
pub fn poset_report<F: Field, A: Hyperplanes<F>>(a: &A, mobius: bool) -> String {
    let poset = a.intersection_poset();
    let mut out = String::new();
    for r in 0..=poset.rank() {
        let flats: Vec<_> = poset.flats_of_rank(r).collect();
        out.push_str(&format!("rank {r}: {} flats\n", flats.len()));
        for (flat, mu) in flats {
            let names = join(flat.hyperplanes.iter().map(|h| format!("H{}", h + 1)), ",");
            if mobius {
                out.push_str(&format!("  {{{names}}}  mu = {mu}\n"));
            } else {
                out.push_str(&format!("  {{{names}}}\n"));
            }
        }
    }
    out.push_str(&format!("poincare: {}\n", poset.poincare_polynomial()));
    out
}

/// The partition, or `NOT FACTORED` with the first failing propagation chain.
pub fn factor_report<F: Field>(l: &LineArrangement<F>) -> String {
    let search = crate::factored::factorization_search(l);
    match (&search.factorization, &search.first_failure) {
        (Some(fz), _) => format!("FACTORED\n{fz}\n"),
        (None, chain) => {
            let mut out = String::from("NOT FACTORED\n");
            if let Some(chain) = chain {
                out.push_str("first failing branch:\n");
                for step in chain {
                    out.push_str(&format!("  {step}\n"));
                }
            }
            out
        }
    }
}
