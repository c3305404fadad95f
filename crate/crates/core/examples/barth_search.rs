//! Barth's quartic: its eight singular points, their local type, and the
//! exhaustive code search for three-divisible subsets.
use cuspkit::codes::{barth_configuration, enumerate_divisible_families};
use cuspkit::geometry::{barth_points, barth_quartic};
use cuspkit::poly::frac;
use cuspkit::singular::{classify, is_singular_point};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = std::env::args().nth(1).and_then(|s| s.parse::<i64>().ok()).unwrap_or(2);
    let f = barth_quartic(&frac(k, 1))?;
    for (i, p) in barth_points().iter().enumerate() {
        let v = classify(&f, p)?;
        println!(
            "P{} = {p}: singular {}, {}",
            i + 1,
            is_singular_point(&f, p),
            v.kind.name()
        );
    }

    let result = enumerate_divisible_families(&barth_configuration());
    println!(
        "{} two-dimensional constant-weight codes examined",
        result.codes_examined
    );
    for family in &result.families {
        println!("family: {family:?}");
    }
    Ok(())
}
