use cuspkit::geometry::catalog::{three_lines_family, twisted_cubic_family};
use cuspkit::geometry::{
    barth_points, barth_quartic, classify_configuration, cusp_candidates, sextic_identity_residual, DivisibleFamily,
    GeometryError, ProjectivePoint,
};
use cuspkit::linalg::Matrix;
use cuspkit::poly::{frac, int, parse, Poly, Rational, Ring, TermOrder};
use cuspkit::singular::{classify, classify_in_chart, forms_through_points, in_span, monomials_of_degree};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn sextic_identity_with_symbolic_coefficients() {
    let mut names: Vec<String> = (0..4).map(|i| format!("x{i}")).collect();
    names.extend((0..16).map(|i| format!("a{i}")));
    names.extend((0..10).map(|i| format!("r{i}")));
    let ring = Ring::new(&names, TermOrder::Grevlex).unwrap();
    let x: Vec<Poly> = (0..4).map(|i| Poly::var(&ring, i)).collect();
    let form = |k: usize| {
        (0..4).fold(Poly::zero(&ring), |acc, j| {
            &acc + &(&Poly::var(&ring, 4 + 4 * k + j) * &x[j])
        })
    };
    let mut r = Poly::zero(&ring);
    let mut idx = 20;
    for i in 0..4 {
        for j in i..4 {
            r = &r + &(&Poly::var(&ring, idx) * &(&x[i] * &x[j]));
            idx += 1;
        }
    }
    let residual = sextic_identity_residual(&form(0), &form(1), &form(2), &form(3), &r);
    assert!(residual.is_zero());
}

fn random_linear(rng: &mut ChaCha8Rng, ring: &cuspkit::poly::RingRef) -> Poly {
    let c: Vec<Rational> = (0..4)
        .map(|_| frac(rng.gen_range(-7..=7), rng.gen_range(1..=3)))
        .collect();
    Poly::linear_form(ring, &c)
}

#[test]
fn sextic_identity_on_random_rational_families() {
    let ring = Ring::projective3();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let quadrics = monomials_of_degree(4, 2);
    let mut built = 0;
    while built < 100 {
        let forms: Vec<Poly> = (0..4).map(|_| random_linear(&mut rng, &ring)).collect();
        let r = Poly::from_terms(
            &ring,
            quadrics
                .iter()
                .cloned()
                .map(|m| (m, frac(rng.gen_range(-5..=5), rng.gen_range(1..=2)))),
        );
        match DivisibleFamily::new(
            forms[0].clone(),
            forms[1].clone(),
            forms[2].clone(),
            forms[3].clone(),
            r,
        ) {
            Ok(fam) => {
                assert!(fam.identity_holds());
                assert_eq!(fam.determinantal(), *fam.y4());
                assert_eq!(fam.y4().total_degree(), Some(4));
                built += 1;
            }
            Err(GeometryError::DependentForms | GeometryError::BadResidual) => {}
            Err(e) => panic!("unexpected {e}"),
        }
    }
}

#[test]
fn configuration_rank_two_is_rejected() {
    let r = Ring::projective3();
    let p = |s: &str| parse(&r, s).unwrap();
    assert_eq!(
        classify_configuration(&p("x0"), &p("x1"), &p("x0 + x1"), &p("x0 - x1")),
        Err(GeometryError::DegenerateConfiguration(2))
    );
}

fn worked_cusps() -> Vec<(Poly, Vec<ProjectivePoint>)> {
    [twisted_cubic_family(), three_lines_family()]
        .into_iter()
        .map(|fam| {
            let cfg = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp()).unwrap();
            let pts = cusp_candidates(&fam, &cfg).unwrap().points;
            (fam.y4().clone(), pts)
        })
        .collect()
}

#[test]
fn classification_is_chart_independent() {
    let k = barth_quartic(&int(3)).unwrap();
    let mut cases = worked_cusps();
    cases.push((k, barth_points()));
    for (f, points) in &cases {
        for p in points {
            let kind = classify(f, p).unwrap().kind;
            for chart in 0..4 {
                if !p.coords()[chart].is_zero() {
                    assert_eq!(classify_in_chart(f, p, chart).unwrap().kind, kind, "{p} chart {chart}");
                }
            }
        }
    }
}

#[test]
fn classification_is_coordinate_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (f, points) in worked_cusps() {
        let ring = f.ring().clone();
        for _ in 0..3 {
            // x = M y, so F(M y) has the point M^{-1} p.
            let (m, inv) = loop {
                let rows: Vec<Vec<Rational>> = (0..4)
                    .map(|_| (0..4).map(|_| int(rng.gen_range(-3..=3))).collect())
                    .collect();
                let m = Matrix::from_rows(rows);
                if let Some(inv) = m.inverse() {
                    break (m, inv);
                }
            };
            let images: Vec<Poly> = (0..4).map(|i| Poly::linear_form(&ring, m.row(i))).collect();
            let g = f.substitute(&images).unwrap();
            for p in &points {
                let q = ProjectivePoint::new(inv.mul_vec(p.coords())).unwrap();
                assert_eq!(classify(&g, &q).unwrap().kind, classify(&f, p).unwrap().kind);
            }
        }
    }
}

#[test]
fn quadrics_through_point_sets() {
    let ring = Ring::projective3();
    let pts = barth_points();
    let basis = forms_through_points(&ring, &pts, 2);
    let monos = monomials_of_degree(4, 2);
    let eval = Matrix::from_rows(
        pts.iter()
            .map(|p| {
                monos
                    .iter()
                    .map(|m| p.eval(&Poly::monomial(&ring, m.clone(), int(1))))
                    .collect()
            })
            .collect(),
    );
    assert_eq!(basis.len(), 10 - eval.rank());
    for g in &basis {
        assert!(pts.iter().all(|p| p.lies_on(g)));
    }

    let fam = three_lines_family();
    let cfg = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp()).unwrap();
    let cusps = cusp_candidates(&fam, &cfg).unwrap().points;
    let basis = forms_through_points(&ring, &cusps, 2);
    for q in [fam.s(), fam.q12(), fam.q21(), fam.q22()] {
        assert!(in_span(q, &basis), "{q}");
    }
    assert!(in_span(&parse(&ring, "x3^2 - x2^2").unwrap(), &basis));
}
