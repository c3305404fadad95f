//! The two worked families: six cusps on a twisted cubic, and six cusps on
//! three concurrent lines.

use crate::poly::{parse, Poly, Ring};

use super::DivisibleFamily;

fn p(s: &str) -> Poly {
    parse(&Ring::projective3(), s).expect("catalog polynomial")
}

/// `L' = x0, L'' = x1, F' = x2, F'' = x3`, `S = 49x1^2 + x2^2 - 36x3^2 - 14x0^2`.
pub fn twisted_cubic_family() -> DivisibleFamily {
    DivisibleFamily::from_contact_quadric(
        p("x0"),
        p("x1"),
        p("x2"),
        p("x3"),
        p("49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2"),
    )
    .expect("valid family")
}

/// `L' = x0, L'' = x1, F' = x2, F'' = 6(x1 + x2) - 11x0`, `S = x3^2 - x2^2`.
pub fn three_lines_family() -> DivisibleFamily {
    DivisibleFamily::from_contact_quadric(p("x0"), p("x1"), p("x2"), p("6*(x1 + x2) - 11*x0"), p("x3^2 - x2^2"))
        .expect("valid family")
}

pub const TWISTED_CUBIC_MANIFEST: &str = "\
# six cusps on a twisted cubic
Lp  = x0
Lpp = x1
Fp  = x2
Fpp = x3
R   = 49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2 - x0*x1
";

pub const THREE_LINES_MANIFEST: &str = "\
# six cusps on three lines through (0:0:0:1)
Lp  = x0
Lpp = x1
Fp  = x2
Fpp = 6*(x1 + x2) - 11*x0
R   = x3^2 - x2^2 - x0*x1
";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::manifest::Manifest;

    #[test]
    fn manifests_match_constructors() {
        let a = Manifest::parse(TWISTED_CUBIC_MANIFEST).unwrap().into_family().unwrap();
        assert_eq!(a.y4(), twisted_cubic_family().y4());
        let b = Manifest::parse(THREE_LINES_MANIFEST).unwrap().into_family().unwrap();
        assert_eq!(b.y4(), three_lines_family().y4());
        assert_eq!(three_lines_family().r(), &p("x3^2 - x2^2 - x0*x1"));
    }
}
