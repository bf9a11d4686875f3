//! Two-part factorizations of affine line arrangements.
//!
//! A factorization splits the lines into nonempty parts Π₁, Π₂ such that
//! lines in different parts always meet, and at every intersection point one
//! of the parts contributes exactly one line. The second condition is read
//! literally: at a double point with both lines in the same part the counts
//! are (2, 0) and the point is violated.

use std::fmt;

use crate::arrangement::LineArrangement;
use crate::poset::Hyperplanes;
use crate::scalar::Field;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Part {
    One,
    Two,
}


impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::One => "Π1",
            Part::Two => "Π2",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    parts: Vec<Part>,
}

impl Factorization {
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn part(&self, p: Part) -> Vec<usize> {
        (0..self.parts.len()).filter(|&i| self.parts[i] == p).collect()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |p| self.part(p).iter().map(|i| format!("H{}", i + 1)).collect::<Vec<_>>().join(" ");
        write!(f, "Π1 = {{{}}}\nΠ2 = {{{}}}", names(Part::One), names(Part::Two))
    }
}

/// Checks both conditions from scratch, plus nonemptiness of the parts.
pub fn is_factorization<F: Field>(l: &LineArrangement<F>, parts: &[Part]) -> bool {
    let lines = l.lines();
    if parts.len() != lines.len() || !parts.contains(&Part::One) || !parts.contains(&Part::Two) {
        return false;
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if parts[i] != parts[j] && lines[i].intersection(&lines[j]).is_none() {
                return false;
            }
        }
    }
    l.intersection_poset().flats_of_rank(2).all(|(flat, _)| {
        let ones = flat.hyperplanes.iter().filter(|&&h| parts[h] == Part::One).count();
        let twos = flat.hyperplanes.len() - ones;
        ones == 1 || twos == 1
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Reason {
    /// Two parallel lines must share a part.
    Parallel(usize, usize),
    /// The lines through an intersection point.
    Point(Vec<usize>),
    /// A part came out empty.
    EmptyPart,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Parallel(i, j) => write!(f, "H{} ∥ H{}", i + 1, j + 1),
            Reason::Point(ls) => {
                let names: Vec<String> = ls.iter().map(|i| format!("H{}", i + 1)).collect();
                write!(f, "point {{{}}} of multiplicity {}", names.join(", "), ls.len())
            }
            Reason::EmptyPart => f.write_str("a part is empty"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Step {
    Assume { line: usize, part: Part },
    Forced { line: usize, part: Part, reason: Reason },
    Conflict { reason: Reason },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Assume { line, part } => write!(f, "assume H{} ∈ {part}", line + 1),
            Step::Forced { line, part, reason } => write!(f, "H{} ∈ {part}  by {reason}", line + 1),
            Step::Conflict { reason } => write!(f, "contradiction at {reason}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorSearch {
    pub factorization: Option<Factorization>,
    /// The propagation chain that ended in the first contradiction, if any.
    pub first_failure: Option<Vec<Step>>,
}

enum Constraint {
    Parallel(usize, usize),
    Point(Vec<usize>),
}

/// Whether counts `(ones, twos)` with `free` lines still open can end with one
/// side equal to 1.
fn completable(ones: usize, twos: usize, free: usize) -> bool {
    (ones <= 1 && ones + free >= 1) || (twos <= 1 && twos + free >= 1)
}

struct Search<'a> {
    constraints: &'a [Constraint],
    trace: Vec<Step>,
    first_failure: Option<Vec<Step>>,
}

impl Search<'_> {
    fn fail(&mut self, reason: Reason) {
        if self.first_failure.is_none() {
            let mut chain = self.trace.clone();
            chain.push(Step::Conflict { reason });
            self.first_failure = Some(chain);
        }
    }

    /// Unit propagation to a fixpoint; false on contradiction.
    fn propagate(&mut self, parts: &mut [Option<Part>]) -> bool {
        loop {
            let mut changed = false;
            for c in self.constraints {
                match c {
                    &Constraint::Parallel(i, j) => match (parts[i], parts[j]) {
                        (Some(a), Some(b)) if a != b => {
                            self.fail(Reason::Parallel(i, j));
                            return false;
                        }
                        (Some(a), None) | (None, Some(a)) => {
                            let line = if parts[i].is_none() { i } else { j };
                            parts[line] = Some(a);
                            self.trace.push(Step::Forced { line, part: a, reason: Reason::Parallel(i, j) });
                            changed = true;
                        }
                        _ => {}
                    },
                    Constraint::Point(ls) => {
                        let ones = ls.iter().filter(|&&h| parts[h] == Some(Part::One)).count();
                        let twos = ls.iter().filter(|&&h| parts[h] == Some(Part::Two)).count();
                        let free: Vec<usize> = ls.iter().copied().filter(|&h| parts[h].is_none()).collect();
                        if !completable(ones, twos, free.len()) {
                            self.fail(Reason::Point(ls.clone()));
                            return false;
                        }
                        if let [line] = free[..] {
                            let ok_one = completable(ones + 1, twos, 0);
                            let ok_two = completable(ones, twos + 1, 0);
                            let part = match (ok_one, ok_two) {
                                (true, false) => Part::One,
                                (false, true) => Part::Two,
                                _ => continue,
                            };
                            parts[line] = Some(part);
                            self.trace.push(Step::Forced { line, part, reason: Reason::Point(ls.clone()) });
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, parts: &mut Vec<Option<Part>>) -> Option<Vec<Part>> {
        if !self.propagate(parts) {
            return None;
        }
        match parts.iter().position(Option::is_none) {
            None => {
                let full: Vec<Part> = parts.iter().map(|p| p.unwrap()).collect();
                if full.contains(&Part::One) && full.contains(&Part::Two) {
                    Some(full)
                } else {
                    self.fail(Reason::EmptyPart);
                    None
                }
            }
            Some(line) => {
                for part in [Part::One, Part::Two] {
                    let saved_parts = parts.clone();
                    let saved_trace = self.trace.len();
                    parts[line] = Some(part);
                    self.trace.push(Step::Assume { line, part });
                    if let Some(found) = self.run(parts) {
                        return Some(found);
                    }
                    *parts = saved_parts;
                    self.trace.truncate(saved_trace);
                }
                None
            }
        }
    }
}

/// Exhaustive backtracking search with unit propagation. The first line is
/// placed in Π₁, which loses nothing since swapping parts preserves a
/// factorization.
pub fn factorization_search<F: Field>(l: &LineArrangement<F>) -> FactorSearch {
    let lines = l.lines();
    let mut constraints = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i].is_parallel(&lines[j]) {
                constraints.push(Constraint::Parallel(i, j));
            }
        }
    }
    for (flat, _) in l.intersection_poset().flats_of_rank(2) {
        constraints.push(Constraint::Point(flat.hyperplanes.clone()));
    }
    // Double points propagate fastest.
    constraints.sort_by_key(|c| match c {
        Constraint::Parallel(..) => 0,
        Constraint::Point(ls) => ls.len(),
    });

    let mut search = Search { constraints: &constraints, trace: Vec::new(), first_failure: None };
    let mut parts = vec![None; lines.len()];
    let found = if lines.len() < 2 {
        search.fail(Reason::EmptyPart);
        None
    } else {
        parts[0] = Some(Part::One);
        search.trace.push(Step::Assume { line: 0, part: Part::One });
        search.run(&mut parts)
    };
    FactorSearch {
        factorization: found.map(|parts| Factorization { parts }),
        first_failure: search.first_failure,
    }
}

pub fn find_factorization<F: Field>(l: &LineArrangement<F>) -> Option<Factorization> {
    factorization_search(l).factorization
}
