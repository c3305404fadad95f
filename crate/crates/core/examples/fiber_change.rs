//! Reparametrizing the twisted cubic by a 2x2 matrix and checking that the
//! determinantal matrix transforms accordingly.
use cuspkit::geometry::catalog::twisted_cubic_family;
use cuspkit::geometry::fiber_change;
use cuspkit::poly::frac;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fam = twisted_cubic_family();
    let matrices = [
        [[frac(1, 1), frac(0, 1)], [frac(0, 1), frac(1, 1)]],
        [[frac(0, 1), frac(1, 1)], [frac(1, 1), frac(0, 1)]],
        [[frac(2, 1), frac(-1, 3)], [frac(1, 2), frac(5, 1)]],
    ];
    for a in matrices {
        let fc = fiber_change(&fam, a.clone())?;
        println!("a = [[{}, {}], [{}, {}]]", a[0][0], a[0][1], a[1][0], a[1][1]);
        println!("  transformed forms: {}", fc.forms.join(", "));
        println!("  Q(a) = {}", fc.q_a);
        println!("  identity holds: {}", fc.verified);
    }
    Ok(())
}
