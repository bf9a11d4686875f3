//! Falk's weight test on the bounded complex Γ of a line arrangement.
//!
//! A weight system assigns a nonnegative rational to every corner of Γ. It
//! certifies the cone as K(π,1) when
//!
//! * (asphericity) the corners of each bounded face `f` sum to at most
//!   `d(f) − 2`, and
//! * (admissibility) at every vertex of multiplicity `m`, every circuit of the
//!   four prescribed types has label sum at least 2.
//!
//! Both conditions are linear in the weights, so the search for a weight
//! system is an exact LP feasibility problem handed to [`crate::lpcore`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::complex::{CellComplex, Link, LinkComponent, LinkShape};
use crate::lpcore::{self, FeasibilityResult, Relation, Row, StandardFormLP};
use crate::scalar::{Field, Rational};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Weight systems

/// Nonnegative weights keyed by corner id.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightSystem {
    values: BTreeMap<usize, Rational>,
}

impl WeightSystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every corner of `complex` at the same weight.
    pub fn constant<F: Field>(complex: &CellComplex<F>, value: Rational) -> Result<Self> {
        let mut w = Self::new();
        for id in 0..complex.corners().len() {
            w.set(complex, id, value.clone())?;
        }
        Ok(w)
    }

    pub fn set<F: Field>(&mut self, complex: &CellComplex<F>, corner: usize, value: Rational) -> Result<()> {
        let c = complex.corners().get(corner).ok_or(Error::IndexOutOfRange { index: corner, len: complex.corners().len() })?;
        if value.is_negative() {
            return Err(Error::NegativeWeight { vertex: c.vertex, face: c.face, value });
        }
        self.values.insert(corner, value);
        Ok(())
    }

    pub fn get(&self, corner: usize) -> Option<&Rational> {
        self.values.get(&corner)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.values.values().sum()
    }

    /// Fails with the first corner of `complex` lacking a weight.
    pub fn check_total<F: Field>(&self, complex: &CellComplex<F>) -> Result<()> {
        for (id, c) in complex.corners().iter().enumerate() {
            if !self.values.contains_key(&id) {
                return Err(Error::MissingCorner { vertex: c.vertex, face: c.face });
            }
        }
        Ok(())
    }

    /// Parses `corner <vertex> <face> = <rational>` lines; `#` starts a
    /// comment.
    pub fn parse<F: Field>(text: &str, complex: &CellComplex<F>) -> Result<Self> {
        let mut w = Self::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: &str| Error::Parse { line, message: message.to_string() };
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let [kw, v, f, eq, value] = tokens[..] else {
                return Err(err("expected `corner <vertex> <face> = <rational>`"));
            };
            if kw != "corner" || eq != "=" {
                return Err(err("expected `corner <vertex> <face> = <rational>`"));
            }
            let vertex: usize = v.parse().map_err(|_| err("bad vertex id"))?;
            let face: usize = f.parse().map_err(|_| err("bad face id"))?;
            let value: Rational = value.parse().map_err(|e: Error| err(&e.to_string()))?;
            let id = complex.corner_id(vertex, face).ok_or(Error::UnknownCorner { vertex, face })?;
            if w.values.contains_key(&id) {
                return Err(err("corner listed twice"));
            }
            w.set(complex, id, value)?;
        }
        Ok(w)
    }

    /// The weights file format, one corner per line in id order.
    pub fn to_text<F: Field>(&self, complex: &CellComplex<F>) -> String {
        let mut out = String::new();
        for (id, value) in &self.values {
            let c = complex.corners()[*id];
            out.push_str(&format!("corner {} {} = {}\n", c.vertex, c.face, value));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Circuits

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CircuitType {
    /// Once around a cycle.
    I,
    /// Out along `m + 1` edges and back.
    II,
    /// Twice out and back along `m` edges.
    III,
    /// Out and back along `m` edges with a bounce at each end.
    IV,
}

impl fmt::Display for CircuitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CircuitType::I => "i",
            CircuitType::II => "ii",
            CircuitType::III => "iii",
            CircuitType::IV => "iv",
        })
    }
}

/// A closed walk on one component of a vertex link, recorded by how often it
/// crosses each link edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Circuit {
    pub vertex: usize,
    pub component: usize,
    pub kind: CircuitType,
    /// Index of the first link edge of the walk's window.
    pub start: usize,
    /// Traversal count per link edge of the component.
    pub multiplicities: Vec<u32>,
    /// Corner id labelling each link edge of the component.
    pub corners: Vec<usize>,
}

impl Circuit {
    pub fn step_count(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// `(corner, multiplicity)` for the edges actually used.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.corners.iter().zip(&self.multiplicities).filter(|(_, &m)| m > 0).map(|(&c, &m)| (c, m))
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "circuit v{} ({}) j={}", self.vertex, self.kind, self.start + 1)?;
        if self.component > 0 {
            write!(f, " component {}", self.component)?;
        }
        Ok(())
    }
}

fn component_circuits(vertex: usize, index: usize, comp: &LinkComponent, m: usize) -> Vec<Circuit> {
    let k = comp.len();
    let n_edges = comp.labels.len();
    let mut out: Vec<Circuit> = Vec::new();
    let mut push = |kind: CircuitType, start: usize, mults: Vec<u32>| {
        if !out.iter().any(|c| c.kind == kind && c.multiplicities == mults) {
            out.push(Circuit { vertex, component: index, kind, start, multiplicities: mults, corners: comp.labels.clone() });
        }
    };
    // Multiplicity vector of a window of consecutive edges from `start`.
    let window = |start: usize, weights: &[u32]| {
        let mut v = vec![0u32; n_edges];
        for (i, w) in weights.iter().enumerate() {
            v[(start + i) % n_edges] += w;
        }
        v
    };
    let starts = |width: usize| if comp.cyclic { 0..k } else { 0..(k + 1).saturating_sub(width + 1) };

    if comp.cyclic {
        push(CircuitType::I, 0, vec![1; n_edges]);
    }
    if k > m + 1 {
        for j in starts(m + 1) {
            push(CircuitType::II, j, window(j, &vec![2; m + 1]));
        }
    }
    if k > m {
        for j in starts(m) {
            push(CircuitType::III, j, window(j, &vec![4; m]));
        }
        let mut shape = vec![2; m];
        shape[0] = 4;
        shape[m - 1] = 4;
        for j in starts(m) {
            push(CircuitType::IV, j, window(j, &shape));
        }
    }
    out
}

/// All circuits of the four types at the link's vertex, `m` being its
/// multiplicity. Path components are handled independently.
pub fn enumerate_circuits(link: &Link, m: usize) -> Vec<Circuit> {
    link.components
        .iter()
        .enumerate()
        .flat_map(|(i, comp)| component_circuits(link.vertex, i, comp, m))
        .collect()
}

/// `Σ multiplicity × weight` over the circuit's link edges.
pub fn evaluate_circuit<F: Field>(complex: &CellComplex<F>, weights: &WeightSystem, c: &Circuit) -> Result<Rational> {
    let mut sum = Rational::zero();
    for (corner, mult) in c.terms() {
        let w = weights.get(corner).ok_or_else(|| {
            let cc = complex.corners()[corner];
            Error::MissingCorner { vertex: cc.vertex, face: cc.face }
        })?;
        sum += &(w * &Rational::from(mult as i64));
    }
    Ok(sum)
}

// ---------------------------------------------------------------------------
// Constraint systems

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    Asphericity { face: usize },
    Admissibility { vertex: usize, component: usize, kind: CircuitType, start: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Asphericity { face } => write!(f, "face f{face}"),
            Provenance::Admissibility { vertex, component, kind, start } => {
                write!(f, "circuit v{vertex} ({kind}) j={}", start + 1)?;
                if *component > 0 {
                    write!(f, " component {component}")?;
                }
                Ok(())
            }
        }
    }
}

/// `Σ coeffs · x (relation) rhs` over the system's variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstraintRow {
    /// Sorted by variable, all nonzero.
    pub coeffs: Vec<(usize, i64)>,
    pub relation: Relation,
    pub rhs: i64,
    /// Every source that produced this row, first one first.
    pub provenance: Vec<Provenance>,
}

impl ConstraintRow {
    pub fn is_asphericity(&self) -> bool {
        matches!(self.provenance[0], Provenance::Asphericity { .. })
    }

    fn to_lp_row(&self) -> Row {
        Row::new(
            self.coeffs.iter().map(|&(j, c)| (j, Rational::from(c))),
            self.relation,
            Rational::from(self.rhs),
        )
    }
}

impl fmt::Display for ConstraintRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|(j, c)| format!("{c}*x{j}")).collect();
        write!(f, "{} {} {}", terms.join(" + "), self.relation, self.rhs)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Require every face sum to equal `d(f) − 2`.
    pub equality_asphericity: bool,
    /// Corner permutations; variables become their orbits.
    pub symmetry: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstraintSystem {
    /// Each variable is a sorted orbit of corner ids.
    variables: Vec<Vec<usize>>,
    var_of: Vec<usize>,
    rows: Vec<ConstraintRow>,
    warnings: Vec<String>,
}

impl ConstraintSystem {
    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[Vec<usize>] {
        &self.variables
    }

    pub fn variable_of(&self, corner: usize) -> usize {
        self.var_of[corner]
    }

    pub fn rows(&self) -> &[ConstraintRow] {
        &self.rows
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn n_asphericity(&self) -> usize {
        self.rows.iter().filter(|r| r.is_asphericity()).count()
    }

    pub fn n_admissibility(&self) -> usize {
        self.rows.len() - self.n_asphericity()
    }

    pub fn to_lp(&self) -> StandardFormLP {
        let mut lp = StandardFormLP::new(self.n_vars());
        for r in &self.rows {
            lp.add_row(r.to_lp_row());
        }
        lp
    }

    /// Left-hand side of a row at the given weights.
    pub fn lhs(&self, row: &ConstraintRow, weights: &WeightSystem) -> Option<Rational> {
        // Under symmetry a variable's value is read from its first corner.
        let mut sum = Rational::zero();
        for &(j, c) in &row.coeffs {
            sum += &(weights.get(self.variables[j][0])? * &Rational::from(c));
        }
        Some(sum)
    }

    /// Expands a point of the LP into a weight system on all corners.
    pub fn weights_from_point(&self, point: &[Rational]) -> WeightSystem {
        let mut w = WeightSystem::new();
        for (var, orbit) in self.variables.iter().enumerate() {
            for &c in orbit {
                w.values.insert(c, point[var].clone());
            }
        }
        w
    }
}

impl fmt::Display for ConstraintSystem {
    /// One row per line, `<coeff>*x<var> + ... <rel> <rhs>  # <source>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# variables: {}", self.n_vars())?;
        if self.variables.iter().any(|o| o.len() > 1) {
            for (j, orbit) in self.variables.iter().enumerate() {
                let cs: Vec<String> = orbit.iter().map(|c| c.to_string()).collect();
                writeln!(f, "# x{j} = corners {}", cs.join(" "))?;
            }
        }
        writeln!(f, "# asphericity rows: {}", self.n_asphericity())?;
        writeln!(f, "# admissibility rows: {}", self.n_admissibility())?;
        for w in &self.warnings {
            writeln!(f, "# warning: {w}")?;
        }
        for r in &self.rows {
            let sources: Vec<String> = r.provenance.iter().map(|p| p.to_string()).collect();
            writeln!(f, "{r}  # {}", sources.join("; "))?;
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Corner-level rows before any orbit reduction.
fn raw_rows<F: Field>(complex: &CellComplex<F>, equality: bool) -> (Vec<(Vec<(usize, i64)>, Relation, i64, Provenance)>, Vec<String>) {
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for (fid, face) in complex.bounded_faces() {
        let coeffs = face.vertices.iter().map(|&v| (complex.corner_id(v, fid).expect("corner of bounded face"), 1)).collect();
        let relation = if equality { Relation::Eq } else { Relation::Le };
        rows.push((coeffs, relation, face.vertices.len() as i64 - 2, Provenance::Asphericity { face: fid }));
    }
    for link in complex.links() {
        if link.shape == LinkShape::Multipath {
            warnings.push(format!(
                "link at v{} is disconnected ({} components); circuits generated per component",
                link.vertex,
                link.components.len()
            ));
        }
        for c in enumerate_circuits(&link, link.multiplicity) {
            let coeffs = c.terms().map(|(corner, m)| (corner, m as i64)).collect();
            let p = Provenance::Admissibility { vertex: c.vertex, component: c.component, kind: c.kind, start: c.start };
            rows.push((coeffs, Relation::Ge, 2, p));
        }
    }
    (rows, warnings)
}

fn check_symmetry<F: Field>(complex: &CellComplex<F>, perm: &[usize]) -> Result<()> {
    let corners = complex.corners();
    let n = corners.len();
    let bad = |m: String| Err(Error::InvalidSymmetry(m));
    if perm.len() != n {
        return bad(format!("permutation has length {}, expected {n}", perm.len()));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return bad("not a permutation of corner ids".into());
        }
    }
    let mut vmap: HashMap<usize, usize> = HashMap::new();
    let mut fmap: HashMap<usize, usize> = HashMap::new();
    for (i, c) in corners.iter().enumerate() {
        let d = corners[perm[i]];
        if *vmap.entry(c.vertex).or_insert(d.vertex) != d.vertex || *fmap.entry(c.face).or_insert(d.face) != d.face {
            return bad(format!("corner {i} breaks vertex/face incidence"));
        }
    }
    let injective = |m: &HashMap<usize, usize>| {
        let mut targets: Vec<usize> = m.values().copied().collect();
        targets.sort_unstable();
        targets.windows(2).all(|w| w[0] != w[1])
    };
    if !injective(&vmap) || !injective(&fmap) {
        return bad("vertices or faces are merged".into());
    }
    for (v, w) in &vmap {
        if complex.vertices()[*v].multiplicity() != complex.vertices()[*w].multiplicity() {
            return bad(format!("v{v} and v{w} have different multiplicities"));
        }
    }
    for (f, g) in &fmap {
        if complex.faces()[*f].vertices.len() != complex.faces()[*g].vertices.len() {
            return bad(format!("f{f} and f{g} have different sizes"));
        }
    }
    Ok(())
}

/// Asphericity and admissibility rows for `complex`, deduplicated.
pub fn build_constraints<F: Field>(complex: &CellComplex<F>, options: &Options) -> Result<ConstraintSystem> {
    let n = complex.corners().len();
    let (raw, warnings) = raw_rows(complex, options.equality_asphericity);

    for perm in &options.symmetry {
        check_symmetry(complex, perm)?;
        // The admissibility rows must be permuted among themselves as well.
        let key = |coeffs: &[(usize, i64)], map: &dyn Fn(usize) -> usize| {
            let mut v: Vec<(usize, i64)> = coeffs.iter().map(|&(c, k)| (map(c), k)).collect();
            v.sort_unstable();
            v
        };
        let originals: std::collections::HashSet<Vec<(usize, i64)>> =
            raw.iter().map(|(c, ..)| key(c, &|x| x)).collect();
        if raw.iter().any(|(c, ..)| !originals.contains(&key(c, &|x| perm[x]))) {
            return Err(Error::InvalidSymmetry("permutation does not preserve the circuits".into()));
        }
    }

    let mut parent: Vec<usize> = (0..n).collect();
    for perm in &options.symmetry {
        for (i, &p) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, p));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut var_of = vec![0; n];
    let mut variables: Vec<Vec<usize>> = Vec::new();
    let mut root_var: HashMap<usize, usize> = HashMap::new();
    for c in 0..n {
        let r = find(&mut parent, c);
        let var = *root_var.entry(r).or_insert_with(|| {
            variables.push(Vec::new());
            variables.len() - 1
        });
        variables[var].push(c);
        var_of[c] = var;
    }

    let mut rows: Vec<ConstraintRow> = Vec::new();
    let mut index: HashMap<(Vec<(usize, i64)>, Relation, i64), usize> = HashMap::new();
    for (coeffs, relation, rhs, provenance) in raw {
        let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
        for (c, k) in coeffs {
            *merged.entry(var_of[c]).or_insert(0) += k;
        }
        let coeffs: Vec<(usize, i64)> = merged.into_iter().filter(|(_, k)| *k != 0).collect();
        match index.get(&(coeffs.clone(), relation, rhs)) {
            Some(&i) => rows[i].provenance.push(provenance),
            None => {
                index.insert((coeffs.clone(), relation, rhs), rows.len());
                rows.push(ConstraintRow { coeffs, relation, rhs, provenance: vec![provenance] });
            }
        }
    }
    Ok(ConstraintSystem { variables, var_of, rows, warnings })
}

// ---------------------------------------------------------------------------
// Verification and search

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub row: ConstraintRow,
    pub lhs: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        if self.passed() {
            return writeln!(f, "PASS ({} rows checked)", self.checked);
        }
        writeln!(f, "FAIL ({} of {} rows violated)", self.violations.len(), self.checked)?;
        for v in &self.violations {
            writeln!(f, "  {}: lhs = {}, need {} {}", v.row.provenance[0], v.lhs, v.row.relation, v.row.rhs)?;
        }
        Ok(())
    }
}

/// Checks a total weight system against every asphericity and admissibility
/// row.
pub fn verify<F: Field>(complex: &CellComplex<F>, weights: &WeightSystem) -> Result<VerifyReport> {
    weights.check_total(complex)?;
    let system = build_constraints(complex, &Options::default())?;
    let mut violations = Vec::new();
    for row in system.rows() {
        let lhs = system.lhs(row, weights).expect("weights are total");
        let rhs = Rational::from(row.rhs);
        let ok = match row.relation {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        };
        if !ok {
            violations.push(Violation { row: row.clone(), lhs });
        }
    }
    Ok(VerifyReport { checked: system.rows().len(), violations, warnings: system.warnings().to_vec() })
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub constraints: Options,
    /// Minimize the total weight instead of stopping at the first feasible
    /// point.
    pub minimize_total: bool,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub system: ConstraintSystem,
    pub lp: StandardFormLP,
    pub result: FeasibilityResult,
}

impl Solution {
    pub fn is_feasible(&self) -> bool {
        self.result.is_feasible()
    }

    pub fn weights(&self) -> Option<WeightSystem> {
        self.result.point().map(|p| self.system.weights_from_point(p))
    }

    /// Farkas multipliers per row of `system` when infeasible.
    pub fn certificate(&self) -> Option<&[Rational]> {
        match &self.result {
            FeasibilityResult::Infeasible { multipliers } => Some(multipliers),
            _ => None,
        }
    }

    /// Independent re-check of the witness or the infeasibility certificate.
    pub fn check(&self) -> bool {
        lpcore::check_certificate(&self.lp, &self.result)
    }
}

/// Searches for a weight system with exact LP. Infeasibility only says that
/// this sufficient test fails.
pub fn solve<F: Field>(complex: &CellComplex<F>, options: &SolveOptions) -> Result<Solution> {
    let system = build_constraints(complex, &options.constraints)?;
    let mut lp = system.to_lp();
    if options.minimize_total {
        lp.set_objective(system.variables.iter().map(|o| Rational::from(o.len() as i64)).collect());
    }
    let result = lpcore::solve_feasibility(&lp);
    Ok(Solution { system, lp, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{AffineLine, LineArrangement};

    fn complex(ls: &[(i64, i64, i64)]) -> CellComplex<Rational> {
        let lines = ls.iter().map(|&(a, b, c)| AffineLine::new(a.into(), b.into(), c.into()).unwrap()).collect();
        CellComplex::build(&LineArrangement::new(lines).unwrap())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn cycle(k: usize) -> Link {
        Link {
            vertex: 0,
            multiplicity: k / 2,
            shape: LinkShape::Cycle,
            components: vec![LinkComponent { edges: (0..k).collect(), labels: (0..k).collect(), cyclic: true }],
        }
    }

    fn path(k: usize) -> Link {
        Link {
            vertex: 0,
            multiplicity: 2,
            shape: LinkShape::Path,
            components: vec![LinkComponent { edges: (0..k).collect(), labels: (0..k - 1).collect(), cyclic: false }],
        }
    }

    fn by_kind(cs: &[Circuit], kind: CircuitType) -> Vec<Vec<u32>> {
        cs.iter().filter(|c| c.kind == kind).map(|c| c.multiplicities.clone()).collect()
    }

    #[test]
    fn four_cycle_double_point() {
        let cs = enumerate_circuits(&cycle(4), 2);
        assert_eq!(by_kind(&cs, CircuitType::I), vec![vec![1, 1, 1, 1]]);
        let ii = by_kind(&cs, CircuitType::II);
        assert_eq!(ii.len(), 4);
        assert!(ii.contains(&vec![2, 2, 2, 0]));
        assert!(ii.contains(&vec![2, 0, 2, 2]));
        assert!(by_kind(&cs, CircuitType::III).contains(&vec![4, 4, 0, 0]));
        assert_eq!(by_kind(&cs, CircuitType::III), by_kind(&cs, CircuitType::IV));
    }

    #[test]
    fn short_paths() {
        assert!(enumerate_circuits(&path(2), 2).is_empty());
        let cs = enumerate_circuits(&path(3), 2);
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.start == 0 && c.multiplicities == vec![4, 4]));
        assert_eq!(by_kind(&cs, CircuitType::III).len(), 1);
        assert_eq!(by_kind(&cs, CircuitType::IV).len(), 1);
    }

    #[test]
    fn six_path_quadruple_point() {
        let mut link = path(6);
        link.multiplicity = 4;
        let cs = enumerate_circuits(&link, 4);
        assert_eq!(by_kind(&cs, CircuitType::II), vec![vec![2, 2, 2, 2, 2]]);
        assert_eq!(by_kind(&cs, CircuitType::III), vec![vec![4, 4, 4, 4, 0], vec![0, 4, 4, 4, 4]]);
        assert_eq!(by_kind(&cs, CircuitType::IV), vec![vec![4, 2, 2, 4, 0], vec![0, 4, 2, 2, 4]]);
    }

    #[test]
    fn step_counts() {
        for c in enumerate_circuits(&cycle(8), 4) {
            let expected = match c.kind {
                CircuitType::I => 8,
                CircuitType::II => 10,
                CircuitType::III => 16,
                CircuitType::IV => 12,
            };
            assert_eq!(c.step_count(), expected);
        }
    }

    #[test]
    fn generic_triangle_system() {
        let c = complex(&[(1, 0, 0), (0, 1, 0), (1, 1, 1)]);
        let s = build_constraints(&c, &Options::default()).unwrap();
        assert_eq!(s.rows().len(), 1);
        assert_eq!(s.rows()[0].to_string(), "1*x0 + 1*x1 + 1*x2 <= 1");
        let zero = WeightSystem::constant(&c, Rational::zero()).unwrap();
        assert!(verify(&c, &zero).unwrap().passed());
        let sol = solve(&c, &SolveOptions::default()).unwrap();
        assert!(sol.is_feasible() && sol.check());
    }

    #[test]
    fn weights_file_round_trip() {
        let c = complex(&[(1, 0, 0), (0, 1, 0), (1, 1, 1)]);
        let mut w = WeightSystem::new();
        for id in 0..3 {
            w.set(&c, id, q(id as i64, 3)).unwrap();
        }
        let text = w.to_text(&c);
        assert_eq!(WeightSystem::parse(&text, &c).unwrap(), w);
        assert!(matches!(WeightSystem::parse("corner 9 0 = 1", &c), Err(Error::UnknownCorner { .. })));
        assert!(matches!(WeightSystem::parse("corner 0 0 = -1", &c), Err(Error::NegativeWeight { .. })));
        assert!(matches!(WeightSystem::parse("corner 0 0 1", &c), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn missing_corner_is_an_error() {
        let c = complex(&[(1, 0, 0), (0, 1, 0), (1, 1, 1)]);
        assert!(matches!(verify(&c, &WeightSystem::new()), Err(Error::MissingCorner { .. })));
    }

    #[test]
    fn bad_symmetry_rejected() {
        let c = complex(&[(1, 0, 0), (0, 1, 0), (1, 1, 1)]);
        let opts = |p: Vec<usize>| Options { symmetry: vec![p], ..Options::default() };
        assert!(build_constraints(&c, &opts(vec![0, 1])).is_err());
        assert!(build_constraints(&c, &opts(vec![0, 0, 1])).is_err());
        // Rotating the triangle's corners keeps the incidence pattern.
        let s = build_constraints(&c, &opts(vec![1, 2, 0])).unwrap();
        assert_eq!(s.n_vars(), 1);
        assert_eq!(s.rows()[0].to_string(), "3*x0 <= 1");
    }
}
