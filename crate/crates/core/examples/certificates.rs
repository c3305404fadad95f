//! Certificates for the singular locus: radical membership in the jacobian
//! ideal, an exact finite solve, and the tangent-cone divisibility check.
use cuspkit::geometry::catalog::three_lines_family;
use cuspkit::geometry::{classify_configuration, cusp_candidates};
use cuspkit::poly::TermOrder;
use cuspkit::singular::{cusp_divisibility_certificate, jacobian_ideal, no_extra_singularities};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fam = three_lines_family();
    let config = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp())?;
    let cusps = cusp_candidates(&fam, &config)?.points;

    let gb = jacobian_ideal(fam.y4())?.groebner_basis(TermOrder::Grevlex);
    let gs = [
        ("Q12", fam.q12()),
        ("Q21", fam.q21()),
        ("Q22", fam.q22()),
        ("S", fam.s()),
    ];
    let extra = no_extra_singularities(fam.y4(), &gb, &gs, &cusps, 8)?;
    println!(
        "{}: verified = {}, exponents = {:?}",
        extra.claim, extra.verified, extra.exponents
    );

    let div = cusp_divisibility_certificate(&fam, &cusps)?;
    println!("{}", serde_json::to_string_pretty(&div)?);
    println!("recheck from the serialized inputs: {}", div.recheck()?);
    Ok(())
}
