//! A family with six cusps on a twisted cubic: build the quartic from the
//! contact data, classify the configuration and locate the cusps.
use cuspkit::geometry::catalog::twisted_cubic_family;
use cuspkit::geometry::{classify_configuration, cusp_candidates, format_manifest};
use cuspkit::singular::classify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fam = twisted_cubic_family();
    print!("{}", format_manifest(&fam));
    println!("S  = {}", fam.s());
    println!("Y4 = {}", fam.y4());
    println!("S'S'' - S^3 = R*Y4: {}", fam.identity_holds());

    let config = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp())?;
    println!("configuration: {}", config.name());
    let cusps = cusp_candidates(&fam, &config)?;
    println!(
        "pullback of S to the cubic: {}",
        cusps.pullback.as_deref().unwrap_or("-")
    );
    for p in &cusps.points {
        let v = classify(fam.y4(), p)?;
        println!("  {p}  {}  R = {}", v.kind.name(), p.eval(fam.r()));
    }
    Ok(())
}
