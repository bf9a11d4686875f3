//! Text format for arrangements.
//!
//! ```text
//! # comment
//! field golden
//! plane 0 1 1/2~1/2 edge
//! plane 1 1 1
//! ```
//!
//! The first non-comment line names the field (`rational` or `golden`). Every
//! other line is `line a b c` (the line a·x + b·y = c) or `plane n1 n2 n3
//! [edge|diagonal]`; one kind per file. `#` starts a comment. Hyperplanes
//! keep file order.

use std::fmt;

use super::{AffineLine, CentralArrangement, CentralPlane, LineArrangement, PlaneClass};
use crate::scalar::{Field, GoldenScalar, Rational};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParsedArrangement<F> {
    Lines(LineArrangement<F>),
    Planes(CentralArrangement<F>),
}

/// An arrangement over whichever field its file declares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyArrangement {
    Rational(ParsedArrangement<Rational>),
    Golden(ParsedArrangement<GoldenScalar>),
}

impl AnyArrangement {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let (line_no, field) = header(text)?;
        match field {
            "rational" => Ok(AnyArrangement::Rational(parse_arrangement(text)?)),
            "golden" => Ok(AnyArrangement::Golden(parse_arrangement(text)?)),
            other => Err(Error::Parse { line: line_no, message: format!("unknown field `{other}`") }),
        }
    }
}

impl fmt::Display for AnyArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyArrangement::Rational(a) => a.fmt(f),
            AnyArrangement::Golden(a) => a.fmt(f),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn header(text: &str) -> Result<(usize, &str), Error> {
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        return match (toks.next(), toks.next(), toks.next()) {
            (Some("field"), Some(name), None) => Ok((i + 1, name)),
            _ => Err(Error::Parse { line: i + 1, message: "expected `field rational` or `field golden`".into() }),
        };
    }
    Err(Error::Parse { line: 1, message: "empty arrangement file".into() })
}

/// Parses an arrangement whose header must name the field `F`.
pub fn parse_arrangement<F: Field>(text: &str) -> Result<ParsedArrangement<F>, Error> {
    let (header_line, field) = header(text)?;
    if field != F::NAME {
        return Err(Error::Parse {
            line: header_line,
            message: format!("expected field `{}`, found `{field}`", F::NAME),
        });
    }

    let mut lines = Vec::new();
    let mut planes: Vec<(CentralPlane<F>, PlaneClass)> = Vec::new();
    for (i, raw) in text.lines().enumerate().skip(header_line) {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let scalar = |t: &str| t.parse::<F>().map_err(|e| err(e.to_string()));
        match toks[0] {
            "line" => {
                if !planes.is_empty() {
                    return Err(err("cannot mix `line` and `plane` entries".into()));
                }
                if toks.len() != 4 {
                    return Err(err(format!("`line` takes 3 coefficients, got {}", toks.len() - 1)));
                }
                let l = AffineLine::new(scalar(toks[1])?, scalar(toks[2])?, scalar(toks[3])?)
                    .map_err(|e| err(e.to_string()))?;
                if lines.contains(&l) {
                    return Err(err(format!("duplicate hyperplane {l}")));
                }
                lines.push(l);
            }
            "plane" => {
                if !lines.is_empty() {
                    return Err(err("cannot mix `line` and `plane` entries".into()));
                }
                let class = match toks.len() {
                    4 => PlaneClass::Unlabeled,
                    5 => match toks[4] {
                        "edge" => PlaneClass::Edge,
                        "diagonal" => PlaneClass::Diagonal,
                        other => return Err(err(format!("unknown plane label `{other}`"))),
                    },
                    n => return Err(err(format!("`plane` takes 3 coefficients, got {}", n - 1))),
                };
                let p = CentralPlane::new([scalar(toks[1])?, scalar(toks[2])?, scalar(toks[3])?])
                    .map_err(|e| err(e.to_string()))?;
                if planes.iter().any(|(q, _)| *q == p) {
                    return Err(err(format!("duplicate hyperplane {p}")));
                }
                planes.push((p, class));
            }
            other => return Err(err(format!("unexpected keyword `{other}`"))),
        }
    }

    if !planes.is_empty() {
        let (planes, classes) = planes.into_iter().unzip();
        Ok(ParsedArrangement::Planes(CentralArrangement::with_classes(planes, classes)?))
    } else {
        Ok(ParsedArrangement::Lines(LineArrangement::new(lines)?))
    }
}

impl<F: Field> fmt::Display for ParsedArrangement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", F::NAME)?;
        match self {
            ParsedArrangement::Lines(a) => {
                for l in a.lines() {
                    writeln!(f, "{l}")?;
                }
            }
            ParsedArrangement::Planes(a) => {
                for (p, class) in a.planes().iter().zip(a.classes()) {
                    match class.label() {
                        Some(label) => writeln!(f, "{p} {label}")?,
                        None => writeln!(f, "{p}")?,
                    }
                }
            }
        }
        Ok(())
    }
}
