//! Randomized invariants at a fixed seed (override with `CUSPKIT_SEED`).

use std::cmp::Ordering;

use cuspkit::geometry::catalog::twisted_cubic_family;
use cuspkit::geometry::fiber_change;
use cuspkit::groebner::Ideal;
use cuspkit::pipeline::DEFAULT_SEED;
use cuspkit::poly::{frac, parse, Monomial, Poly, Rational, Ring, RingRef, TermOrder};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    let seed = std::env::var("CUSPKIT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

type Terms = Vec<(Vec<u32>, i64, i64)>;

fn terms(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -6i64..=6, 1i64..=4),
        0..=max_terms,
    )
}

fn build(ring: &RingRef, t: &Terms) -> Poly {
    Poly::from_terms(
        ring,
        t.iter()
            .map(|(e, n, d)| (Monomial::from_exponents(e).unwrap(), frac(*n, *d))),
    )
}

fn xyz(order: TermOrder) -> RingRef {
    Ring::new(&["x", "y", "z"], order).unwrap()
}

fn order_strategy() -> impl Strategy<Value = TermOrder> {
    prop_oneof![Just(TermOrder::Grevlex), Just(TermOrder::Lex), Just(TermOrder::Grlex)]
}

fn exps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=5, 3)
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn ring_and_order_axioms(
        order in order_strategy(),
        a in terms(3, 3, 4), b in terms(3, 3, 4), c in terms(3, 3, 4),
        ma in exps(), mb in exps(), mc in exps(),
    ) {
        let r = xyz(order);
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Poly::one(&r), f.clone());

        let (ma, mb, mc) = (
            Monomial::from_exponents(&ma).unwrap(),
            Monomial::from_exponents(&mb).unwrap(),
            Monomial::from_exponents(&mc).unwrap(),
        );
        let ab = order.cmp(&ma, &mb);
        prop_assert_eq!(ab, order.cmp(&mb, &ma).reverse());
        prop_assert_eq!(ab == Ordering::Equal, ma == mb);
        prop_assert_eq!(ab, order.cmp(&ma.mul(&mc), &mb.mul(&mc)));
        prop_assert_ne!(order.cmp(&Monomial::one(3), &ma), Ordering::Greater);
        if ab != Ordering::Greater && order.cmp(&mb, &mc) != Ordering::Greater {
            prop_assert_ne!(order.cmp(&ma, &mc), Ordering::Greater);
        }
        // Terms are kept strictly descending.
        let t = f.terms();
        prop_assert!(t.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
    }
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn exact_divide_round_trip(order in order_strategy(), a in terms(3, 3, 4), b in terms(3, 2, 3)) {
        let r = xyz(order);
        let (f, g) = (build(&r, &a), build(&r, &b));
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn substitute_is_a_homomorphism(
        a in terms(3, 2, 4), b in terms(3, 2, 4),
        i0 in terms(2, 2, 3), i1 in terms(2, 2, 3), i2 in terms(2, 2, 3),
    ) {
        let r = xyz(TermOrder::Grevlex);
        let target = Ring::new(&["s", "t"], TermOrder::Grevlex).unwrap();
        let (f, g) = (build(&r, &a), build(&r, &b));
        let images = [build(&target, &i0), build(&target, &i1), build(&target, &i2)];
        let sub = |p: &Poly| p.substitute(&images).unwrap();
        prop_assert_eq!(sub(&(&f * &g)), &sub(&f) * &sub(&g));
        prop_assert_eq!(sub(&(&f + &g)), &sub(&f) + &sub(&g));
        prop_assert_eq!(sub(&Poly::one(&r)), Poly::one(&target));
    }

    #[test]
    fn parse_format_round_trip(a in terms(4, 4, 6)) {
        let r = Ring::projective3();
        let f = build(&r, &a);
        let back: Poly = parse(&r, &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(config(60))]

    /// Reduced bases do not depend on generator order, and every computed
    /// basis passes the S-polynomial audit.
    #[test]
    fn reduced_basis_is_unique(
        order in order_strategy(),
        gens in prop::collection::vec(terms(3, 2, 3), 1..=3),
        rot in 0usize..3,
    ) {
        let r = xyz(order);
        let polys: Vec<Poly> = gens.iter().map(|t| build(&r, t)).collect();
        let mut permuted = polys.clone();
        permuted.reverse();
        let k = rot % permuted.len();
        permuted.rotate_left(k);
        let a = Ideal::new(&r, polys.clone()).unwrap().groebner_basis(order);
        let b = Ideal::new(&r, permuted).unwrap().groebner_basis(order);
        prop_assert!(a.s_pair_audit());
        prop_assert!(b.s_pair_audit());
        prop_assert_eq!(a.elements(), b.elements());
        for p in &polys {
            prop_assert!(a.contains(p));
        }
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn fiber_change_identity(e in prop::collection::vec((-9i64..=9, 1i64..=5), 4)) {
        let q: Vec<Rational> = e.iter().map(|(n, d)| frac(*n, *d)).collect();
        let det = &q[0] * &q[3] - &q[1] * &q[2];
        prop_assume!(!det.is_zero());
        let a = [[q[0].clone(), q[1].clone()], [q[2].clone(), q[3].clone()]];
        let fc = fiber_change(&twisted_cubic_family(), a).unwrap();
        prop_assert!(fc.verified);
    }
}

/// Every suite above, for callers that include this file as a module.
#[allow(dead_code)]
pub fn suites() -> Vec<(&'static str, fn())> {
    vec![
        ("ring/order axioms x1000", ring_and_order_axioms),
        ("exact_divide round trip x500", exact_divide_round_trip),
        ("substitute homomorphism x500", substitute_is_a_homomorphism),
        ("parse/format round trip x500", parse_format_round_trip),
        ("reduced basis uniqueness + S-pair audit x60", reduced_basis_is_unique),
        ("fiber change identity x100", fiber_change_identity),
    ]
}
