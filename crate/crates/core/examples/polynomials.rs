//! Parsing, arithmetic, exact division and substitution over Q.
use cuspkit::poly::{frac, parse, Poly, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = Ring::projective3();
    let f: Poly = parse(&ring, "(x0 + x1)*(x0 + x1)*(x0 + x1) - 2/3*x2*x3")?;
    let g: Poly = parse(&ring, "x0 - x1")?;
    println!("f         = {f}");
    println!(
        "deg f     = {:?}, homogeneous: {}",
        f.total_degree(),
        f.is_homogeneous()
    );

    let h = &f * &g;
    println!("f*g       = {h}");
    println!("(f*g)/g   = {}", h.exact_divide(&g)?);
    println!("df/dx0    = {}", f.partial_derivative(0));

    // x2 -> x0 + x1 and x3 -> x0 - x1, other variables fixed.
    let images = vec![
        Poly::var(&ring, 0),
        Poly::var(&ring, 1),
        parse(&ring, "x0 + x1")?,
        parse(&ring, "x0 - x1")?,
    ];
    println!("f(x0, x1, x0+x1, x0-x1) = {}", f.substitute(&images)?);
    println!(
        "f(1, 2, 3, 1/2) = {}",
        f.evaluate(&[frac(1, 1), frac(2, 1), frac(3, 1), frac(1, 2)])?
    );
    Ok(())
}
