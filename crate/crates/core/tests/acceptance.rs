//! One line per acceptance criterion; exits nonzero if any fails.
//!
//!     cargo test --test acceptance

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_bigint::BigInt;
use rand::Rng;

use arrlab::arrangement::{AnyArrangement, ParsedArrangement};
use arrlab::builtins::{builtin, BUILTINS};
use arrlab::complex::{is_simplicial, CellComplex, LinkShape};
use arrlab::factored::{factorization_search, is_factorization, Part};
use arrlab::falk::{self, enumerate_circuits, evaluate_circuit, CircuitType, Options, SolveOptions, WeightSystem};
use arrlab::lpcore::{check_certificate, solve_feasibility, Relation, Row, StandardFormLP};
use arrlab::poset::{splits_over_integers, Hyperplanes, IntPolynomial};
use arrlab::{report, GoldenScalar, LineArrangement, Rational};
use support::{fourier_motzkin, random_lines, random_planes, rng, whitney_lines, whitney_planes};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn l_id() -> LineArrangement<GoldenScalar> {
    let a = arrlab::icosidodecahedral();
    a.decone(a.default_decone_index()).unwrap()
}

fn poincare() -> Outcome {
    let r = report::analyze(&builtin("icosidodecahedral").unwrap()).map_err(|e| e.to_string())?;
    let expected = IntPolynomial::from_i64s(&[1, 16, 75, 60]);
    let decone = IntPolynomial::from_i64s(&[1, 15, 60]);
    ensure(r.poincare == expected, format!("π(A_ID) = {}", r.poincare))?;
    ensure(r.related.1 == decone, format!("π(L_ID) = {}", r.related.1))?;
    Ok(format!("π(A_ID) = {}, π(L_ID) = {}", r.poincare, r.related.1))
}

fn integer_split() -> Outcome {
    let split = splits_over_integers(&IntPolynomial::from_i64s(&[1, 16, 75, 60]));
    ensure(split.is_none(), format!("A_ID split as {split:?}"))?;
    let control = IntPolynomial::from_i64s(&[1, 1]) * IntPolynomial::from_i64s(&[1, 2]) * IntPolynomial::from_i64s(&[1, 3]);
    let got = splits_over_integers(&control);
    ensure(got == Some(vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]), format!("control split as {got:?}"))?;
    Ok("1+16t+75t²+60t³ does not split; (1+t)(1+2t)(1+3t) → {1,2,3}".into())
}

fn factoredness() -> Outcome {
    let l = l_id();
    let search = factorization_search(&l);
    ensure(search.factorization.is_none(), "search found a factorization")?;
    let n = l.len();
    let hits = (0u32..(1 << n))
        .filter(|mask| {
            let parts: Vec<Part> = (0..n).map(|i| if mask >> i & 1 == 1 { Part::Two } else { Part::One }).collect();
            is_factorization(&l, &parts)
        })
        .count();
    ensure(hits == 0, format!("brute force found {hits} factorizations"))?;
    Ok(format!("no factorization by search or by all 2^{n} assignments"))
}

fn simpliciality() -> Outcome {
    let s = is_simplicial(&arrlab::icosidodecahedral()).map_err(|e| e.to_string())?;
    let w = s.witness.as_ref().ok_or("A_ID reported simplicial")?;
    ensure(w.bounded && w.walls == 5, format!("witness {w:?} is not a bounded pentagon"))?;
    let AnyArrangement::Rational(ParsedArrangement::Planes(b)) = builtin("boolean3").unwrap() else { unreachable!() };
    ensure(is_simplicial(&b).map_err(|e| e.to_string())?.is_simplicial(), "Boolean arrangement not simplicial")?;
    Ok(format!("A_ID not simplicial (pentagon f{}); Boolean 3-arrangement simplicial", w.face))
}

fn link_census() -> Outcome {
    let census = CellComplex::build(&l_id()).link_census();
    let keys: Vec<(LinkShape, usize, usize)> = census.keys().copied().collect();
    let mut expected = vec![
        (LinkShape::Cycle, 4, 2),
        (LinkShape::Cycle, 8, 4),
        (LinkShape::Path, 6, 4),
        (LinkShape::Path, 3, 2),
        (LinkShape::Path, 2, 2),
    ];
    expected.sort();
    ensure(keys == expected, format!("census {census:?}"))?;
    let rows: Vec<String> = census.iter().map(|((s, k, m), n)| format!("{s}/{k}/{m}×{n}")).collect();
    Ok(rows.join(", "))
}

fn circuit_sums() -> Outcome {
    let c = CellComplex::build(&l_id());
    let link = c.links().into_iter().find(|l| l.shape == LinkShape::Cycle && l.len() == 8).ok_or("no cycle-8 link")?;
    let labels = &link.components[0].labels;
    // d, e, f, h, k, h, f, e
    let values = [1, 1, 2, 2, 1, 2, 2, 1].map(|n| Rational::new(n, 5).unwrap());
    let mut w = WeightSystem::new();
    for (&corner, v) in labels.iter().zip(&values) {
        w.set(&c, corner, v.clone()).map_err(|e| e.to_string())?;
    }
    let circuits = enumerate_circuits(&link, link.multiplicity);
    let sum = |x: &falk::Circuit| evaluate_circuit(&c, &w, x).unwrap();
    let i = circuits.iter().find(|x| x.kind == CircuitType::I).map(sum).ok_or("no type (i)")?;
    let ii = circuits.iter().filter(|x| x.kind == CircuitType::II).map(sum).min().ok_or("no type (ii)")?;
    // The type (iv) circuit whose window is labelled (e, f, h, k).
    let efhk = &labels[1..5];
    let iv = circuits
        .iter()
        .find(|x| x.kind == CircuitType::IV && x.terms().map(|(c, _)| c).collect::<Vec<_>>() == efhk)
        .map(sum)
        .ok_or("no type (iv) circuit on (e,f,h,k)")?;
    let q = |n| Rational::new(n, 5).unwrap();
    ensure(i == q(12) && ii == q(14) && iv == q(16), format!("(i) {i}, min (ii) {ii}, (iv) {iv}"))?;
    Ok(format!("(i) = {i}, min (ii) = {ii}, (iv) on (e,f,h,k) = {iv} at v{}", link.vertex))
}

fn falk_feasibility() -> Outcome {
    let c = CellComplex::build(&l_id());
    let mut out = Vec::new();
    for equality in [false, true] {
        let options = SolveOptions { constraints: Options { equality_asphericity: equality, ..Options::default() }, minimize_total: false };
        let s = falk::solve(&c, &options).map_err(|e| e.to_string())?;
        ensure(s.check(), "certificate check failed")?;
        let w = s.weights().ok_or(format!("infeasible (equality = {equality})"))?;
        let report = falk::verify(&c, &w).map_err(|e| e.to_string())?;
        ensure(report.passed(), format!("verify: {report}"))?;
        out.push(format!("{} rows, total {}", s.system.rows().len(), w.total()));
    }
    Ok(format!("feasible and verified: default ({}), equality ({})", out[0], out[1]))
}

fn dominance() -> Outcome {
    fn dominated<F: arrlab::Field>(c: &CellComplex<F>) -> Result<usize, String> {
        let mut pairs = 0;
        for link in c.links() {
            let circuits = enumerate_circuits(&link, link.multiplicity);
            for iii in circuits.iter().filter(|x| x.kind == CircuitType::III) {
                let iv = circuits
                    .iter()
                    .find(|x| x.kind == CircuitType::IV && x.component == iii.component && x.start == iii.start)
                    .ok_or(format!("no type (iv) for {iii}"))?;
                ensure(iii.multiplicities.iter().zip(&iv.multiplicities).all(|(a, b)| a >= b), format!("{iii} vs {iv}"))?;
                pairs += 1;
            }
        }
        Ok(pairs)
    }
    let mut pairs = dominated(&CellComplex::build(&l_id()))?;
    let mut r = rng(8);
    for _ in 0..50 {
        pairs += dominated(&CellComplex::build(&random_lines(&mut r, 6, 3)))?;
    }
    Ok(format!("{pairs} (iii)/(iv) pairs, all dominated termwise"))
}

fn oracle_equivalence() -> Outcome {
    let mut arrangements = 0;
    for (name, _) in BUILTINS {
        let ok = match builtin(name).unwrap() {
            AnyArrangement::Rational(ParsedArrangement::Lines(l)) if l.len() <= 7 => l.poincare_polynomial() == whitney_lines(&l),
            AnyArrangement::Rational(ParsedArrangement::Planes(p)) if p.len() <= 7 => p.poincare_polynomial() == whitney_planes(&p),
            AnyArrangement::Golden(ParsedArrangement::Lines(l)) if l.len() <= 7 => l.poincare_polynomial() == whitney_lines(&l),
            AnyArrangement::Golden(ParsedArrangement::Planes(p)) if p.len() <= 7 => p.poincare_polynomial() == whitney_planes(&p),
            _ => continue,
        };
        ensure(ok, format!("@{name}"))?;
        arrangements += 1;
    }
    let mut r = rng(9);
    for _ in 0..100 {
        let l = random_lines(&mut r, 7, 3);
        ensure(l.poincare_polynomial() == whitney_lines(&l), format!("{l:?}"))?;
        let p = random_planes(&mut r, 7, 2);
        ensure(p.poincare_polynomial() == whitney_planes(&p), format!("{p:?}"))?;
        arrangements += 2;
    }
    let (mut lps, mut feasible) = (0, 0);
    for _ in 0..300 {
        let n = r.gen_range(1..=12);
        let mut lp = StandardFormLP::new(n);
        for _ in 0..r.gen_range(0..=30) {
            let terms: Vec<(usize, Rational)> =
                (0..r.gen_range(1..=3)).map(|_| (r.gen_range(0..n), Rational::from(r.gen_range(-3i64..=3)))).collect();
            let rel = [Relation::Le, Relation::Ge, Relation::Eq][r.gen_range(0..3)];
            lp.add_row(Row::new(terms, rel, Rational::from(r.gen_range(-4i64..=4))));
        }
        let result = solve_feasibility(&lp);
        ensure(result.is_feasible() == fourier_motzkin(&lp), format!("verdict differs on\n{lp}"))?;
        ensure(check_certificate(&lp, &result), format!("bad certificate on\n{lp}"))?;
        lps += 1;
        feasible += result.is_feasible() as usize;
    }
    Ok(format!("π = Whitney on {arrangements} arrangements; LP = Fourier–Motzkin on {lps} systems ({feasible} feasible)"))
}

fn coning() -> Outcome {
    let mut r = rng(10);
    let one_plus_t = IntPolynomial::from_i64s(&[1, 1]);
    for _ in 0..20 {
        let l = random_lines(&mut r, 8, 3);
        let lhs = l.cone().poincare_polynomial();
        let rhs = one_plus_t.clone() * l.poincare_polynomial();
        ensure(lhs == rhs, format!("{lhs} ≠ {rhs} for {l:?}"))?;
    }
    let (l, a) = (l_id(), arrlab::icosidodecahedral());
    ensure(a.poincare_polynomial() == one_plus_t * l.poincare_polynomial(), "A_ID vs L_ID")?;
    Ok("π(cone L) = (1+t)π(L) on 20 random arrangements and on L_ID".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Poincaré polynomials", poincare),
        ("integer split", integer_split),
        ("factoredness", factoredness),
        ("simpliciality", simpliciality),
        ("link census", link_census),
        ("circuit sums", circuit_sums),
        ("Falk feasibility", falk_feasibility),
        ("dominance", dominance),
        ("oracle equivalence", oracle_equivalence),
        ("coning identity", coning),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS — {name}: {detail}", n + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL — {name}: {detail}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
