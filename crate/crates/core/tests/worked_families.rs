use cuspkit::geometry::catalog::{three_lines_family, twisted_cubic_family};
use cuspkit::geometry::{classify_configuration, cusp_candidates, Configuration, ProjectivePoint};
use cuspkit::poly::TermOrder;
use cuspkit::singular::{
    classify, cusp_divisibility_certificate, jacobian_ideal, no_extra_singularities, SingularityKind,
};

#[test]
fn twisted_cubic_family_end_to_end() {
    let fam = twisted_cubic_family();
    let cfg = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp()).unwrap();
    assert_eq!(cfg, Configuration::TypeI);
    let cusps = cusp_candidates(&fam, &cfg).unwrap();
    assert_eq!(cusps.points.len(), 6);
    for p in &cusps.points {
        assert_eq!(classify(fam.y4(), p).unwrap().kind, SingularityKind::A2);
    }
    let gb = jacobian_ideal(fam.y4()).unwrap().groebner_basis(TermOrder::Grevlex);
    let gs = [
        ("Q12", fam.q12()),
        ("Q21", fam.q21()),
        ("Q22", fam.q22()),
        ("S", fam.s()),
    ];
    let cert = no_extra_singularities(fam.y4(), &gb, &gs, &cusps.points, 8).unwrap();
    assert!(cert.verified, "{cert:#?}");
    let div = cusp_divisibility_certificate(&fam, &cusps.points).unwrap();
    assert!(div.verified, "{div:#?}");
}

#[test]
fn three_lines_family_end_to_end() {
    let fam = three_lines_family();
    let cfg = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp()).unwrap();
    let vertex = ProjectivePoint::from_i64(&[0, 0, 0, 1]).unwrap();
    assert_eq!(cfg.vertex(), Some(&vertex));
    let cusps = cusp_candidates(&fam, &cfg).unwrap();
    assert_eq!(cusps.points.len(), 6);
    let gb = jacobian_ideal(fam.y4()).unwrap().groebner_basis(TermOrder::Grevlex);
    let gs = [
        ("Q12", fam.q12()),
        ("Q21", fam.q21()),
        ("Q22", fam.q22()),
        ("S", fam.s()),
    ];
    let cert = no_extra_singularities(fam.y4(), &gb, &gs, &cusps.points, 8).unwrap();
    assert!(cert.verified, "{cert:#?}");
    let div = cusp_divisibility_certificate(&fam, &cusps.points).unwrap();
    assert!(div.verified, "{div:#?}");
}
