//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls into the code paths it is used to check: feasibility
//! is decided by Fourier–Motzkin elimination, Poincaré polynomials by
//! Whitney's subset sum, circuit shapes by literally walking the link.

#![allow(dead_code)]

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use arrlab::arrangement::{AffineLine, CentralArrangement, CentralPlane, LineArrangement};
use arrlab::lpcore::{Relation, StandardFormLP};
use arrlab::poset::IntPolynomial;
use arrlab::{Field, Rational};

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Arrangements

pub fn lines(ls: &[(i64, i64, i64)]) -> LineArrangement<Rational> {
    LineArrangement::new(ls.iter().map(|&(a, b, c)| AffineLine::new(q(a), q(b), q(c)).unwrap()).collect()).unwrap()
}

pub fn planes(ns: &[[i64; 3]]) -> CentralArrangement<Rational> {
    CentralArrangement::new(ns.iter().map(|n| CentralPlane::new(n.map(q)).unwrap()).collect()).unwrap()
}

/// Up to `max` distinct lines with coefficients in `-r..=r`; repeated lines
/// are dropped, so the result may be shorter.
pub fn random_lines(rng: &mut impl Rng, max: usize, r: i64) -> LineArrangement<Rational> {
    let n = rng.gen_range(1..=max);
    let mut out: Vec<AffineLine<Rational>> = Vec::new();
    while out.len() < n {
        let (a, b, c) = (rng.gen_range(-r..=r), rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        if a == 0 && b == 0 {
            continue;
        }
        let l = AffineLine::new(q(a), q(b), q(c)).unwrap();
        if !out.contains(&l) {
            out.push(l);
        }
    }
    LineArrangement::new(out).unwrap()
}

pub fn random_planes(rng: &mut impl Rng, max: usize, r: i64) -> CentralArrangement<Rational> {
    let n = rng.gen_range(1..=max);
    let mut out: Vec<CentralPlane<Rational>> = Vec::new();
    while out.len() < n {
        let v = [rng.gen_range(-r..=r), rng.gen_range(-r..=r), rng.gen_range(-r..=r)];
        if v == [0, 0, 0] {
            continue;
        }
        let p = CentralPlane::new(v.map(q)).unwrap();
        if !out.contains(&p) {
            out.push(p);
        }
    }
    CentralArrangement::new(out).unwrap()
}

// ---------------------------------------------------------------------------
// Whitney's formula

/// Rank of a set of row vectors: rows are reduced one at a time against an
/// echelon basis, stopping once the basis is full.
pub fn rank_of<F: Field>(rows: Vec<Vec<F>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    // (pivot column, row with a 1 there)
    let mut basis: Vec<(usize, Vec<F>)> = Vec::new();
    for mut row in rows {
        if basis.len() == cols {
            break;
        }
        for (p, b) in &basis {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for j in 0..cols {
                    row[j] = row[j].clone() - f.clone() * b[j].clone();
                }
            }
        }
        if let Some(p) = (0..cols).find(|&j| !row[j].is_zero()) {
            let inv = row[p].inverse().unwrap();
            let row: Vec<F> = row.into_iter().map(|x| x * inv.clone()).collect();
            basis.push((p, row));
        }
    }
    basis.len()
}

fn whitney(n: usize, central_rank: impl Fn(&[usize]) -> Option<usize>) -> IntPolynomial {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if let Some(r) = central_rank(&subset) {
            // (-1)^|S| (-t)^r
            let sign = if (subset.len() + r) % 2 == 0 { 1 } else { -1 };
            coeffs[r] += sign;
        }
    }
    IntPolynomial::new(coeffs)
}

/// `Σ_S (-1)^{|S|} (-t)^{rank S}` over subsets with a common point.
pub fn whitney_lines<F: Field>(l: &LineArrangement<F>) -> IntPolynomial {
    let ls = l.lines();
    whitney(ls.len(), |s| {
        let coef: Vec<Vec<F>> = s.iter().map(|&i| vec![ls[i].a().clone(), ls[i].b().clone()]).collect();
        let aug: Vec<Vec<F>> = s.iter().map(|&i| vec![ls[i].a().clone(), ls[i].b().clone(), ls[i].c().clone()]).collect();
        let r = rank_of(coef);
        (rank_of(aug) == r).then_some(r)
    })
}

pub fn whitney_planes<F: Field>(a: &CentralArrangement<F>) -> IntPolynomial {
    let ps = a.planes();
    whitney(ps.len(), |s| Some(rank_of(s.iter().map(|&i| ps[i].normal().to_vec()).collect())))
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin

/// `a · x ≥ b`, dense, with the set of starting inequalities it was derived
/// from (for Chernikov's redundancy rule).
#[derive(Clone, Debug)]
struct Ineq {
    a: Vec<Rational>,
    b: Rational,
    history: u128,
}

impl Ineq {
    /// Scales so the first nonzero coefficient is ±1.
    fn normalize(&mut self) {
        if let Some(p) = self.a.iter().find(|x| !x.is_zero()).cloned() {
            let s = p.abs().inverse().unwrap();
            for x in self.a.iter_mut() {
                *x = &*x * &s;
            }
            self.b = &self.b * &s;
        }
    }
}

/// `a · x = b`, dense.
struct Equation {
    a: Vec<Rational>,
    b: Rational,
}

/// Decides `{x ≥ 0 : rows}` nonempty. Equations are first solved for one
/// variable each and substituted away (the eliminated variable's sign
/// condition becomes an inequality); the remaining inequalities are then
/// eliminated one variable at a time, cheapest first, discarding derived
/// rows that combine more than `k + 1` originals after `k` steps.
pub fn fourier_motzkin(lp: &StandardFormLP) -> bool {
    let n = lp.n_vars();
    let dense = |coeffs: &[(usize, Rational)]| {
        let mut a = vec![q(0); n];
        for (j, c) in coeffs {
            a[*j] = c.clone();
        }
        a
    };
    let mut ge: Vec<(Vec<Rational>, Rational)> = (0..n)
        .map(|j| {
            let mut a = vec![q(0); n];
            a[j] = q(1);
            (a, q(0))
        })
        .collect();
    let mut eqs = Vec::new();
    for r in lp.rows() {
        let a = dense(&r.coeffs);
        match r.relation {
            Relation::Ge => ge.push((a, r.rhs.clone())),
            Relation::Le => ge.push((a.iter().map(|x| -x).collect(), -&r.rhs)),
            Relation::Eq => eqs.push(Equation { a, b: r.rhs.clone() }),
        }
    }

    // Gaussian substitution.
    while let Some(e) = eqs.pop() {
        let Some(p) = (0..n).find(|&j| !e.a[j].is_zero()) else {
            if !e.b.is_zero() {
                return false;
            }
            continue;
        };
        let inv = e.a[p].inverse().unwrap();
        let (pa, pb): (Vec<Rational>, Rational) = (e.a.iter().map(|x| x * &inv).collect(), &e.b * &inv);
        // x_p = pb − Σ_{j≠p} pa_j x_j
        let subst = |a: &mut Vec<Rational>, b: &mut Rational| {
            let f = a[p].clone();
            if !f.is_zero() {
                for j in 0..n {
                    a[j] = &a[j] - &(&f * &pa[j]);
                }
                *b = &*b - &(&f * &pb);
            }
        };
        for other in eqs.iter_mut() {
            subst(&mut other.a, &mut other.b);
        }
        for (a, b) in ge.iter_mut() {
            subst(a, b);
        }
    }

    let mut ineqs: Vec<Ineq> = Vec::new();
    for (a, b) in ge {
        if a.iter().all(|x| x.is_zero()) {
            if b.is_positive() {
                return false;
            }
            continue;
        }
        let bit = 1u128.checked_shl(ineqs.len() as u32).unwrap_or(0);
        ineqs.push(Ineq { a, b, history: bit });
    }
    if ineqs.len() > 128 {
        // Histories no longer fit; disable the redundancy rule.
        ineqs.iter_mut().for_each(|i| i.history = 0);
    }
    let chernikov = ineqs.iter().all(|i| i.history != 0);

    let mut remaining: Vec<usize> = (0..n).collect();
    let mut steps = 0u32;
    while !remaining.is_empty() {
        let cost = |j: usize| {
            let pos = ineqs.iter().filter(|i| i.a[j].is_positive()).count();
            let neg = ineqs.iter().filter(|i| i.a[j].is_negative()).count();
            pos * neg
        };
        let (at, &j) = remaining.iter().enumerate().min_by_key(|(_, &j)| cost(j)).unwrap();
        remaining.swap_remove(at);
        steps += 1;

        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for i in ineqs {
            if i.a[j].is_positive() {
                pos.push(i);
            } else if i.a[j].is_negative() {
                neg.push(i);
            } else {
                rest.push(i);
            }
        }
        for p in &pos {
            for m in &neg {
                let history = p.history | m.history;
                if chernikov && history.count_ones() > steps + 1 {
                    continue;
                }
                // p/p_j + m/|m_j| cancels x_j.
                let (sp, sm) = (p.a[j].inverse().unwrap(), (-&m.a[j]).inverse().unwrap());
                let a = (0..n).map(|k| &(&p.a[k] * &sp) + &(&m.a[k] * &sm)).collect();
                let b = &(&p.b * &sp) + &(&m.b * &sm);
                rest.push(Ineq { a, b, history });
            }
        }
        // Duplicates keep the smallest history.
        let mut seen: HashMap<(Vec<Rational>, Rational), usize> = HashMap::new();
        ineqs = Vec::new();
        for mut i in rest {
            i.normalize();
            if i.a.iter().all(|x| x.is_zero()) {
                if i.b.is_positive() {
                    return false;
                }
                continue;
            }
            match seen.entry((i.a.clone(), i.b.clone())) {
                Entry::Occupied(e) => {
                    let kept = &mut ineqs[*e.get()];
                    if i.history.count_ones() < kept.history.count_ones() {
                        kept.history = i.history;
                    }
                }
                Entry::Vacant(e) => {
                    e.insert(ineqs.len());
                    ineqs.push(i);
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Circuit walks

/// The literal vertex sequence for a circuit type (1 = i, …, 4 = iv) on a
/// link with `k` vertices, starting at the 1-based index `j`.
pub fn walk(kind: u8, k: usize, m: usize, j: usize) -> Vec<usize> {
    let e = |i: usize| i; // 1-based, reduced later
    let up = |a: usize, b: usize| (a..=b).map(e).collect::<Vec<_>>();
    let down = |a: usize, b: usize| (b..=a).rev().map(e).collect::<Vec<_>>();
    match kind {
        1 => [up(1, k), vec![1]].concat(),
        2 => [up(j, m + j + 1), down(m + j, j)].concat(),
        3 => [up(j, m + j), down(m + j - 1, j), up(j + 1, m + j), down(m + j - 1, j)].concat(),
        4 => [up(j, m + j), vec![m + j - 1, m + j], down(m + j - 1, j), vec![j + 1, j]].concat(),
        _ => unreachable!(),
    }
}

/// Counts how often a walk of 1-based vertex labels crosses each link edge
/// (edge `i` joins vertices `i + 1` and `i + 2`, wrapping on a cycle). Panics
/// if a step is not along an edge.
pub fn traversals(walk: &[usize], k: usize, cyclic: bool) -> Vec<u32> {
    let n_edges = if cyclic { k } else { k - 1 };
    let mut counts = vec![0; n_edges];
    let vertex = |v: usize| (v - 1) % k;
    for w in walk.windows(2) {
        let (u, v) = (vertex(w[0]), vertex(w[1]));
        let edge = if (u + 1) % k == v && (cyclic || u + 1 < k) {
            u
        } else if (v + 1) % k == u && (cyclic || v + 1 < k) {
            v
        } else {
            panic!("step {u} -> {v} is not a link edge");
        };
        counts[edge] += 1;
    }
    counts
}

// ---------------------------------------------------------------------------
// High-precision √5

/// `⌊(a + b√5) · 2^200⌋` for integer `a, b`, by integer square root.
pub fn fixed_point(a: i64, b: i64, den: i64) -> BigInt {
    let shift = 200u32;
    let one = BigInt::from(1) << shift;
    let five = BigInt::from(5) << (2 * shift);
    let sqrt5 = five.sqrt();
    (BigInt::from(a) * &one + BigInt::from(b) * sqrt5) / BigInt::from(den)
}
