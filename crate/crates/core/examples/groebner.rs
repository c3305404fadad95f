//! Reduced Gröbner bases, normal forms and radical membership.
use cuspkit::groebner::Ideal;
use cuspkit::poly::{parse, parse_list, Poly, Ring, TermOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = Ring::new(&["x", "y", "z"], TermOrder::Lex)?;
    let gens = parse_list(&ring, "x^2 + y^2 + z^2 - 1, x - y, y - z^2")?;
    let ideal = Ideal::new(&ring, gens)?;

    for order in [TermOrder::Lex, TermOrder::Grevlex] {
        let gb = ideal.groebner_basis(order);
        println!("{order}: {} elements, S-pair audit {}", gb.len(), gb.s_pair_audit());
        for g in gb.elements() {
            println!("    {g}");
        }
    }

    let gb = ideal.groebner_basis(TermOrder::Lex);
    let g: Poly = parse(&ring, "x^3*y")?;
    println!("NF(x^3*y) = {}", gb.normal_form(&g)?);

    // x lies in the radical of (x^3, y) but not in the ideal itself.
    let ring2 = Ring::new(&["x", "y"], TermOrder::Grevlex)?;
    let j = Ideal::new(&ring2, parse_list(&ring2, "x^3, y")?)?;
    let x: Poly = parse(&ring2, "x")?;
    println!(
        "x in (x^3, y): {}, least p with x^p in it: {:?}",
        j.contains(&x),
        j.radical_membership(&x, 8)
    );
    Ok(())
}
