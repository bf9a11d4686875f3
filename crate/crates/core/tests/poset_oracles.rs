mod support;

use num_bigint::BigInt;
use proptest::prelude::*;

use arrlab::arrangement::{AnyArrangement, ParsedArrangement};
use arrlab::builtins::{builtin, BUILTINS};
use arrlab::poset::{splits_over_integers, Hyperplanes, IntPolynomial};
use support::{random_lines, random_planes, rng, whitney_lines, whitney_planes};

#[test]
fn mobius_matches_whitney_on_builtins() {
    let mut checked = 0;
    for (name, _) in BUILTINS {
        let a = builtin(name).unwrap();
        let (n, ok) = match &a {
            AnyArrangement::Rational(ParsedArrangement::Lines(l)) => (l.len(), l.poincare_polynomial() == whitney_lines(l)),
            AnyArrangement::Rational(ParsedArrangement::Planes(p)) => (p.len(), p.poincare_polynomial() == whitney_planes(p)),
            AnyArrangement::Golden(ParsedArrangement::Lines(l)) => (l.len(), l.poincare_polynomial() == whitney_lines(l)),
            AnyArrangement::Golden(ParsedArrangement::Planes(p)) => (p.len(), p.poincare_polynomial() == whitney_planes(p)),
        };
        if n <= 16 {
            assert!(ok, "@{name}");
            checked += 1;
        }
    }
    assert!(checked >= 8);
}

#[test]
fn mobius_matches_whitney_on_random_arrangements() {
    let mut r = rng(11);
    for _ in 0..200 {
        let l = random_lines(&mut r, 7, 3);
        assert_eq!(l.poincare_polynomial(), whitney_lines(&l), "{l:?}");
        let p = random_planes(&mut r, 7, 2);
        assert_eq!(p.poincare_polynomial(), whitney_planes(&p), "{p:?}");
    }
}

#[test]
fn coning_multiplies_by_one_plus_t() {
    let mut r = rng(12);
    let one_plus_t = IntPolynomial::from_i64s(&[1, 1]);
    for _ in 0..20 {
        let l = random_lines(&mut r, 9, 4);
        assert_eq!(l.cone().poincare_polynomial(), one_plus_t.clone() * l.poincare_polynomial());
    }
}

#[test]
fn deconing_divides_by_one_plus_t() {
    let mut r = rng(13);
    let one_plus_t = IntPolynomial::from_i64s(&[1, 1]);
    for _ in 0..20 {
        let p = random_planes(&mut r, 8, 2);
        if p.rank() < 3 {
            continue;
        }
        for i in 0..p.len() {
            assert_eq!(p.poincare_polynomial(), one_plus_t.clone() * p.decone(i).unwrap().poincare_polynomial());
        }
    }
}

#[test]
fn mobius_alternates_in_sign() {
    let a = arrlab::icosidodecahedral();
    let poset = a.intersection_poset();
    for (flat, mu) in poset.flats().iter().zip(poset.mobius()) {
        let expected_sign = if flat.rank % 2 == 0 { 1 } else { -1 };
        assert!(mu * BigInt::from(expected_sign) > BigInt::from(0));
    }
}

proptest! {
    #[test]
    fn split_recovers_linear_factors(ds in proptest::collection::vec(1i64..=12, 0..5)) {
        let ds: Vec<BigInt> = ds.into_iter().map(BigInt::from).collect();
        let p = IntPolynomial::from_linear_factors(&ds);
        let mut sorted = ds.clone();
        sorted.sort();
        prop_assert_eq!(splits_over_integers(&p), Some(sorted));
    }

    #[test]
    fn split_rejects_perturbed_products(ds in proptest::collection::vec(1i64..=9, 2..4), k in 1usize..3) {
        let ds: Vec<BigInt> = ds.into_iter().map(BigInt::from).collect();
        let p = IntPolynomial::from_linear_factors(&ds);
        let mut coeffs = p.coeffs().to_vec();
        let k = k.min(coeffs.len() - 2);
        coeffs[k] += 1;
        let perturbed = IntPolynomial::new(coeffs);
        // Any claimed split must multiply back to the polynomial.
        if let Some(roots) = splits_over_integers(&perturbed) {
            prop_assert_eq!(IntPolynomial::from_linear_factors(&roots), perturbed);
        }
    }
}
