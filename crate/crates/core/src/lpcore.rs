//! Exact linear feasibility over the rationals.
//!
//! Two-phase tableau simplex with Bland's rule. Every variable is
//! implicitly nonnegative. Results carry a certificate that
//! [`check_certificate`] re-verifies with plain arithmetic: a feasible point,
//! or Farkas multipliers `λ` such that combining the rows (each `≤` row first
//! rewritten as `≥`) gives `Σλ·a ≤ 0` coefficientwise and `Σλ·b > 0`, which no
//! nonnegative `x` can satisfy.

use std::collections::HashMap;
use std::fmt;

use crate::scalar::{Field, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

/// `Σ coeffs · x  (relation)  rhs`, with sparse coefficients sorted by
/// variable and free of zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Row {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Row {
    pub fn new(coeffs: impl IntoIterator<Item = (usize, Rational)>, relation: Relation, rhs: Rational) -> Self {
        let mut merged: Vec<(usize, Rational)> = Vec::new();
        let mut sorted: Vec<(usize, Rational)> = coeffs.into_iter().collect();
        sorted.sort_by_key(|(j, _)| *j);
        for (j, c) in sorted {
            match merged.last_mut() {
                Some((k, acc)) if *k == j => *acc += &c,
                _ => merged.push((j, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Row { coeffs: merged, relation, rhs }
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().map(|(j, c)| c * &x[*j]).sum()
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

impl fmt::Display for Row {
    /// `2*x3 + 1*x7 >= 2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, (j, c)) in self.coeffs.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, _) => write!(f, "{c}*x{j}")?,
                (_, false) => write!(f, " + {c}*x{j}")?,
                (_, true) => write!(f, " - {}*x{j}", -c)?,
            }
        }
        write!(f, " {} {}", self.relation, self.rhs)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardFormLP {
    n_vars: usize,
    rows: Vec<Row>,
    index: HashMap<Row, usize>,
    objective: Option<Vec<Rational>>,
}

impl StandardFormLP {
    pub fn new(n_vars: usize) -> Self {
        StandardFormLP { n_vars, rows: Vec::new(), index: HashMap::new(), objective: None }
    }

    /// Adds a row unless an identical one exists; returns its index.
    pub fn add_row(&mut self, row: Row) -> usize {
        assert!(row.coeffs.iter().all(|(j, _)| *j < self.n_vars), "variable out of range");
        if let Some(&i) = self.index.get(&row) {
            return i;
        }
        self.rows.push(row.clone());
        self.index.insert(row, self.rows.len() - 1);
        self.rows.len() - 1
    }

    /// Minimize `Σ c·x` once feasible.
    pub fn set_objective(&mut self, c: Vec<Rational>) {
        assert_eq!(c.len(), self.n_vars);
        self.objective = Some(c);
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn objective(&self) -> Option<&[Rational]> {
        self.objective.as_deref()
    }
}

impl fmt::Display for StandardFormLP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars {}", self.n_vars)?;
        if let Some(c) = &self.objective {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| format!("{c}*x{j}"))
                .collect();
            writeln!(f, "minimize {}", terms.join(" + "))?;
        }
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FeasibilityResult {
    /// A point satisfying every row (optimal when an objective was given).
    Feasible { point: Vec<Rational> },
    /// Nonnegative multipliers per row (free on equality rows).
    Infeasible { multipliers: Vec<Rational> },
    /// Feasible, but the objective decreases without bound along `ray`.
    Unbounded { point: Vec<Rational>, ray: Vec<Rational> },
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, FeasibilityResult::Infeasible { .. })
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            FeasibilityResult::Feasible { point } | FeasibilityResult::Unbounded { point, .. } => Some(point),
            FeasibilityResult::Infeasible { .. } => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Column {
    Var,
    Slack,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is minus the objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    kinds: Vec<Column>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.kinds.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].inverse().expect("pivot is nonzero");
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |target: &mut Vec<Rational>| {
            if target[c].is_zero() {
                return;
            }
            let factor = target[c].clone();
            for &j in &nonzero {
                let t = &factor * &pivot_row[j];
                target[j] -= &t;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Bland's rule iterations; `Err(column)` when that column is unbounded.
    fn optimize(&mut self, allowed: impl Fn(usize) -> bool) -> Result<(), usize> {
        let rhs = self.width();
        loop {
            let Some(enter) = (0..self.width()).find(|&j| allowed(j) && self.cost[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return Err(enter),
            }
        }
    }

    fn point(&self, n_vars: usize) -> Vec<Rational> {
        let rhs = self.width();
        let mut x = vec![Rational::zero(); n_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n_vars {
                x[b] = self.rows[i][rhs].clone();
            }
        }
        x
    }
}

/// Decides feasibility of `lp`, optimizing its objective when present.
/// Deterministic: identical input gives identical output.
pub fn solve_feasibility(lp: &StandardFormLP) -> FeasibilityResult {
    let n = lp.n_vars;
    let m = lp.rows.len();

    // Normalize to nonnegative right-hand sides.
    let signs: Vec<bool> = lp.rows.iter().map(|r| r.rhs.is_negative()).collect();
    let relations: Vec<Relation> = lp
        .rows
        .iter()
        .zip(&signs)
        .map(|(r, &flip)| match (r.relation, flip) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (rel, _) => rel,
        })
        .collect();

    let mut kinds = vec![Column::Var; n];
    let mut slack_of = vec![None; m];
    let mut art_of = vec![None; m];
    for (i, rel) in relations.iter().enumerate() {
        if *rel != Relation::Eq {
            slack_of[i] = Some(kinds.len());
            kinds.push(Column::Slack);
        }
    }
    for (i, rel) in relations.iter().enumerate() {
        if *rel != Relation::Le {
            art_of[i] = Some(kinds.len());
            kinds.push(Column::Artificial);
        }
    }
    let width = kinds.len();

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (i, r) in lp.rows.iter().enumerate() {
        let mut row = vec![Rational::zero(); width + 1];
        for (j, c) in &r.coeffs {
            row[*j] = if signs[i] { -c } else { c.clone() };
        }
        row[width] = r.rhs.abs();
        if let Some(s) = slack_of[i] {
            row[s] = Rational::from(if relations[i] == Relation::Le { 1 } else { -1 });
        }
        match art_of[i] {
            Some(a) => {
                row[a] = Rational::one();
                basis.push(a);
            }
            None => basis.push(slack_of[i].unwrap()),
        }
        rows.push(row);
    }

    // Phase 1: minimize the sum of artificials.
    let mut cost = vec![Rational::zero(); width + 1];
    for (j, k) in kinds.iter().enumerate() {
        if *k == Column::Artificial {
            cost[j] = Rational::one();
        }
    }
    for (i, row) in rows.iter().enumerate() {
        if art_of[i].is_some() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    cost[j] -= x;
                }
            }
        }
    }
    let mut t = Tableau { rows, cost, basis, kinds };
    t.optimize(|_| true).expect("phase 1 is bounded below by zero");

    let phase1_value = -&t.cost[width];
    if phase1_value.is_positive() {
        // Row duals from the identity columns: y = 1 - r for artificials,
        // y = -r for ≤ slacks.
        let multipliers = (0..m)
            .map(|i| {
                let y = match art_of[i] {
                    Some(a) => &Rational::one() - &t.cost[a],
                    None => -&t.cost[slack_of[i].unwrap()],
                };
                let y = if signs[i] { -y } else { y };
                if lp.rows[i].relation == Relation::Le {
                    -y
                } else {
                    y
                }
            })
            .collect();
        return FeasibilityResult::Infeasible { multipliers };
    }

    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and inert from here on.
    for r in 0..m {
        if t.kinds[t.basis[r]] == Column::Artificial {
            if let Some(c) = (0..width).find(|&j| t.kinds[j] != Column::Artificial && !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }

    let Some(objective) = &lp.objective else {
        return FeasibilityResult::Feasible { point: t.point(n) };
    };

    // Phase 2.
    let mut cost = vec![Rational::zero(); width + 1];
    cost[..n].clone_from_slice(objective);
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n && !objective[b].is_zero() {
            let f = objective[b].clone();
            for (j, x) in t.rows[i].iter().enumerate() {
                if !x.is_zero() {
                    cost[j] -= &(&f * x);
                }
            }
        }
    }
    t.cost = cost;
    let kinds = t.kinds.clone();
    match t.optimize(|j| kinds[j] != Column::Artificial) {
        Ok(()) => FeasibilityResult::Feasible { point: t.point(n) },
        Err(enter) => {
            let mut ray = vec![Rational::zero(); n];
            if enter < n {
                ray[enter] = Rational::one();
            }
            for (i, &b) in t.basis.iter().enumerate() {
                if b < n {
                    ray[b] = -&t.rows[i][enter];
                }
            }
            FeasibilityResult::Unbounded { point: t.point(n), ray }
        }
    }
}

/// Re-checks a result against `lp` using only the rows and the certificate.
pub fn check_certificate(lp: &StandardFormLP, result: &FeasibilityResult) -> bool {
    let feasible_point = |x: &[Rational]| {
        x.len() == lp.n_vars && x.iter().all(|v| !v.is_negative()) && lp.rows.iter().all(|r| r.is_satisfied(x))
    };
    match result {
        FeasibilityResult::Feasible { point } => feasible_point(point),
        FeasibilityResult::Unbounded { point, ray } => {
            let Some(c) = &lp.objective else { return false };
            let homogeneous_ok = lp.rows.iter().all(|r| {
                let d = r.lhs(ray);
                match r.relation {
                    Relation::Le => !d.is_positive(),
                    Relation::Ge => !d.is_negative(),
                    Relation::Eq => d.is_zero(),
                }
            });
            let descent: Rational = c.iter().zip(ray).map(|(a, b)| a * b).sum();
            feasible_point(point)
                && ray.len() == lp.n_vars
                && ray.iter().all(|v| !v.is_negative())
                && homogeneous_ok
                && descent.is_negative()
        }
        FeasibilityResult::Infeasible { multipliers } => {
            if multipliers.len() != lp.rows.len() {
                return false;
            }
            let mut combined = vec![Rational::zero(); lp.n_vars];
            let mut rhs = Rational::zero();
            for (row, lambda) in lp.rows.iter().zip(multipliers) {
                if row.relation != Relation::Eq && lambda.is_negative() {
                    return false;
                }
                let lambda = if row.relation == Relation::Le { -lambda } else { lambda.clone() };
                for (j, c) in &row.coeffs {
                    combined[*j] += &(&lambda * c);
                }
                rhs += &(&lambda * &row.rhs);
            }
            combined.iter().all(|c| !c.is_positive()) && rhs.is_positive()
        }
    }
}
