//! Intersection posets, Möbius functions and Poincaré polynomials.
//!
//! Flats are identified by the set of hyperplanes containing them; that set
//! is closed, so inclusion of flats (reverse order) is inclusion of index
//! sets. Geometry is only used to discover which sets occur.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arrangement::{cross3, AffineLine, CentralArrangement, CentralPlane, LineArrangement};
use crate::scalar::Field;

/// Geometric description of a flat.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Carrier<F> {
    /// The whole space (intersection over the empty set).
    Ambient,
    Line(AffineLine<F>),
    Plane(CentralPlane<F>),
    Point(F, F),
    /// A line through the origin, given by a direction vector.
    Axis([F; 3]),
    Origin,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flat<F> {
    pub rank: usize,
    /// Sorted indices of the hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
    pub carrier: Carrier<F>,
}

impl<F> Flat<F> {
    /// `self ≤ other` in reverse inclusion.
    pub fn le(&self, other: &Flat<F>) -> bool {
        is_subset(&self.hyperplanes, &other.hyperplanes)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

#[derive(Clone, Debug)]
pub struct IntersectionPoset<F> {
    flats: Vec<Flat<F>>,
    mobius: Vec<BigInt>,
}

impl<F: Field> IntersectionPoset<F> {
    /// Flats sorted by rank then by hyperplane set; Möbius values come from
    /// the interval recursion `μ(V) = 1`, `μ(X) = -Σ_{Y < X} μ(Y)`.
    fn from_flats(mut flats: Vec<Flat<F>>) -> Self {
        flats.sort_by(|x, y| (x.rank, &x.hyperplanes).cmp(&(y.rank, &y.hyperplanes)));
        let mut mobius: Vec<BigInt> = Vec::with_capacity(flats.len());
        for (i, x) in flats.iter().enumerate() {
            let mu = if i == 0 {
                BigInt::one()
            } else {
                -flats[..i]
                    .iter()
                    .zip(&mobius)
                    .filter(|(y, _)| y.rank < x.rank && y.le(x))
                    .map(|(_, m)| m.clone())
                    .sum::<BigInt>()
            };
            mobius.push(mu);
        }
        IntersectionPoset { flats, mobius }
    }

    pub fn flats(&self) -> &[Flat<F>] {
        &self.flats
    }

    pub fn mobius(&self) -> &[BigInt] {
        &self.mobius
    }

    pub fn rank(&self) -> usize {
        self.flats.iter().map(|f| f.rank).max().unwrap_or(0)
    }

    /// Number of flats of each rank, starting at rank 0.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.rank() + 1];
        for f in &self.flats {
            sizes[f.rank] += 1;
        }
        sizes
    }

    pub fn flats_of_rank(&self, rank: usize) -> impl Iterator<Item = (&Flat<F>, &BigInt)> {
        self.flats.iter().zip(&self.mobius).filter(move |(f, _)| f.rank == rank)
    }

    /// `Σ μ(X)(-t)^{rank X}`.
    pub fn poincare_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.rank() + 1];
        for (f, mu) in self.flats.iter().zip(&self.mobius) {
            if f.rank % 2 == 0 {
                coeffs[f.rank] += mu;
            } else {
                coeffs[f.rank] -= mu;
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// The hyperplane sets of all flats, sorted; two arrangements with equal
    /// signatures (after relabeling) have isomorphic posets.
    pub fn signature(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.flats.iter().map(|f| f.hyperplanes.clone()).collect();
        sets.sort();
        sets
    }
}

/// Anything with an intersection poset.
pub trait Hyperplanes<F: Field> {
    fn intersection_poset(&self) -> IntersectionPoset<F>;

    fn poincare_polynomial(&self) -> IntPolynomial {
        self.intersection_poset().poincare_polynomial()
    }
}

impl<F: Field> Hyperplanes<F> for LineArrangement<F> {
    fn intersection_poset(&self) -> IntersectionPoset<F> {
        let lines = self.lines();
        let mut flats = vec![Flat { rank: 0, hyperplanes: vec![], carrier: Carrier::Ambient }];
        for (i, l) in lines.iter().enumerate() {
            flats.push(Flat { rank: 1, hyperplanes: vec![i], carrier: Carrier::Line(l.clone()) });
        }
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
        for ((x, y), mut on) in points {
            on.sort_unstable();
            flats.push(Flat { rank: 2, hyperplanes: on, carrier: Carrier::Point(x, y) });
        }
        IntersectionPoset::from_flats(flats)
    }
}

impl<F: Field> Hyperplanes<F> for CentralArrangement<F> {
    fn intersection_poset(&self) -> IntersectionPoset<F> {
        let planes = self.planes();
        let mut flats = vec![Flat { rank: 0, hyperplanes: vec![], carrier: Carrier::Ambient }];
        for (i, p) in planes.iter().enumerate() {
            flats.push(Flat { rank: 1, hyperplanes: vec![i], carrier: Carrier::Plane(p.clone()) });
        }
        let mut axes: BTreeMap<Vec<usize>, [F; 3]> = BTreeMap::new();
        for i in 0..planes.len() {
            for j in i + 1..planes.len() {
                let dir = cross3(planes[i].normal(), planes[j].normal());
                let on: Vec<usize> = (0..planes.len()).filter(|&k| planes[k].contains(&dir)).collect();
                axes.entry(on).or_insert(dir);
            }
        }
        for (on, dir) in axes {
            flats.push(Flat { rank: 2, hyperplanes: on, carrier: Carrier::Axis(dir) });
        }
        if self.rank() == 3 {
            flats.push(Flat { rank: 3, hyperplanes: (0..planes.len()).collect(), carrier: Carrier::Origin });
        }
        IntersectionPoset::from_flats(flats)
    }
}

/// A polynomial in `t` with integer coefficients, constant term first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `∏ (1 + d·t)`.
    pub fn from_linear_factors(ds: &[BigInt]) -> Self {
        ds.iter().fold(IntPolynomial::from_i64s(&[1]), |p, d| {
            p * IntPolynomial::new(vec![BigInt::one(), d.clone()])
        })
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPolynomial::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    /// Formats as `1 + 15t + 60t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Finds positive integers `d₁ ≤ … ≤ d_k` with `p = ∏(1 + dᵢ·t)`, or `None`.
///
/// Candidates are the multisets of positive divisors of the leading
/// coefficient whose product equals it; each is expanded and compared.
pub fn splits_over_integers(p: &IntPolynomial) -> Option<Vec<BigInt>> {
    if p.coeffs.first() != Some(&BigInt::one()) {
        return None;
    }
    let k = p.degree();
    let lead = p.coeffs[k].clone();
    if !lead.is_positive() {
        return None;
    }
    let divisors = positive_divisors(&lead);
    let mut chosen = Vec::with_capacity(k);
    search_factors(p, &divisors, 0, &lead, k, &mut chosen)
}

fn search_factors(
    p: &IntPolynomial,
    divisors: &[BigInt],
    from: usize,
    remaining: &BigInt,
    slots: usize,
    chosen: &mut Vec<BigInt>,
) -> Option<Vec<BigInt>> {
    if slots == 0 {
        return (remaining.is_one() && IntPolynomial::from_linear_factors(chosen) == *p)
            .then(|| chosen.clone());
    }
    for (i, d) in divisors.iter().enumerate().skip(from) {
        if !remaining.is_multiple_of(d) {
            continue;
        }
        // Remaining factors are all ≥ d.
        if num_traits::pow(d.clone(), slots) > *remaining {
            break;
        }
        chosen.push(d.clone());
        if let Some(found) = search_factors(p, divisors, i, &(remaining / d), slots - 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            let q = n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
