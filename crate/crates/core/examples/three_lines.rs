//! Six cusps on three concurrent lines: the degenerate configuration where
//! the twisted cubic breaks into lines through a vertex.
use cuspkit::geometry::catalog::three_lines_family;
use cuspkit::geometry::{classify_configuration, cusp_candidates};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fam = three_lines_family();
    let config = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp())?;
    let vertex = config.vertex().expect("concurrent lines");
    println!("vertex {vertex}, Y4(vertex) = {}", vertex.eval(fam.y4()));

    let cusps = cusp_candidates(&fam, &config)?;
    for line in &cusps.lines {
        println!("line through {}: {}", line.through, line.equations.join(" = "));
    }
    for p in &cusps.points {
        println!("cusp {p}");
    }
    Ok(())
}
