//! Rational points of zero-dimensional polynomial systems via lex Gröbner bases.

use num_traits::{One, Zero};

use crate::groebner::{buchberger, Ideal};
use crate::poly::{Poly, Rational, TermOrder};

use super::univariate::{rational_roots_with_multiplicity, UniPoly};
use super::{GeometryError, ProjectivePoint};

/// Rational solutions of a system together with any factors whose roots are
/// not rational (reported, never approximated).
#[derive(Clone, Debug)]
pub struct RationalSolutions<P> {
    pub points: Vec<P>,
    pub unresolved: Vec<String>,
}

impl<P> Default for RationalSolutions<P> {
    fn default() -> Self {
        RationalSolutions {
            points: Vec::new(),
            unresolved: Vec::new(),
        }
    }
}

impl<P> RationalSolutions<P> {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// Affine rational solutions in the variables `free` (listed in ring order);
/// every other variable must already be eliminated from `polys`.
///
/// Each solution lists the values of `free` in order.
pub fn affine_rational_points(
    polys: &[Poly],
    free: &[usize],
) -> Result<RationalSolutions<Vec<Rational>>, GeometryError> {
    let mut out = RationalSolutions::default();
    let polys: Vec<Poly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let Some(&last) = free.last() else {
        if polys.is_empty() {
            out.points.push(Vec::new());
        }
        return Ok(out);
    };
    if polys.is_empty() {
        return Err(GeometryError::PositiveDimensional);
    }
    let ring = polys[0].ring().clone();
    let ideal = Ideal::new(&ring, polys).expect("common ring");
    let gb = buchberger(&ideal, TermOrder::Lex);
    if gb.is_unit_ideal() {
        return Ok(out);
    }
    if !gb.is_zero_dimensional_in(free) {
        return Err(GeometryError::PositiveDimensional);
    }
    // In a reduced lex basis of a zero-dimensional ideal the smallest element is
    // the univariate eliminant in the last variable.
    let eliminant = gb
        .elements()
        .iter()
        .filter_map(|g| UniPoly::from_poly(g, last))
        .find(|u| u.degree().unwrap_or(0) > 0)
        .ok_or(GeometryError::PositiveDimensional)?;
    let report = rational_roots_with_multiplicity(&eliminant);
    let name = &ring.vars()[last];
    for u in &report.unresolved {
        out.unresolved.push(format!("{}", u).replace('t', name));
    }
    let rest = &free[..free.len() - 1];
    for (root, _) in report.roots {
        let specialized: Vec<Poly> = gb
            .elements()
            .iter()
            .map(|g| g.specialize(last, &root).to_ring(&ring).expect("same ring"))
            .collect();
        let sub = affine_rational_points(&specialized, rest)?;
        out.unresolved.extend(sub.unresolved);
        for mut p in sub.points {
            p.push(root.clone());
            out.points.push(p);
        }
    }
    Ok(out)
}

/// Rational points of the projective scheme cut out by homogeneous `polys`,
/// found chart by chart (`x_c = 1`, earlier coordinates zero).
pub fn projective_rational_points(polys: &[Poly]) -> Result<RationalSolutions<ProjectivePoint>, GeometryError> {
    let ring = polys.first().ok_or(GeometryError::PositiveDimensional)?.ring().clone();
    let ring = ring.with_order(TermOrder::Lex);
    let n = ring.nvars();
    let mut out = RationalSolutions::default();
    for chart in 0..n {
        let specialized: Vec<Poly> = polys
            .iter()
            .map(|f| {
                let mut g = f.to_ring(&ring).expect("same variables");
                for z in 0..chart {
                    g = g.specialize(z, &Rational::zero());
                }
                g.specialize(chart, &Rational::one())
            })
            .collect();
        let free: Vec<usize> = (chart + 1..n).collect();
        let sols = affine_rational_points(&specialized, &free)?;
        out.unresolved.extend(sols.unresolved);
        for tail in sols.points {
            let mut coords = vec![Rational::zero(); chart];
            coords.push(Rational::one());
            coords.extend(tail);
            out.points.push(ProjectivePoint::new(coords)?);
        }
    }
    out.points.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse, Ring};

    #[test]
    fn twisted_cubic_meets_plane_in_three_points() {
        let ring = Ring::projective3();
        let polys: Vec<Poly> = ["x0*x3 - x1^2", "x1*x2 - x0^2", "x2*x3 - x0*x1", "x0 + x1 - x2 - x3"]
            .iter()
            .map(|s| parse(&ring, s).unwrap())
            .collect();
        let sols = projective_rational_points(&polys).unwrap();
        // Φ(t0,t1) on the plane: t0^2 t1 + t0 t1^2 - t0^3 - t1^3 = -(t0 - t1)^2 (t0 + t1)
        // gives (1:1:1:1) and (1:-1:-1:1) only.
        assert_eq!(sols.points.len(), 2);
        assert!(sols.is_complete());
        for p in &sols.points {
            for f in &polys {
                assert_eq!(p.eval(f), int(0));
            }
        }
    }

    #[test]
    fn irrational_points_are_reported() {
        let ring = Ring::indexed("x", 3, TermOrder::Grevlex);
        let polys: Vec<Poly> = ["x0^2 - 2*x2^2", "x1"]
            .iter()
            .map(|s| parse(&ring, s).unwrap())
            .collect();
        let sols = projective_rational_points(&polys).unwrap();
        assert!(sols.points.is_empty());
        assert!(!sols.is_complete());
    }

    #[test]
    fn positive_dimensional_is_an_error() {
        let ring = Ring::indexed("x", 3, TermOrder::Grevlex);
        let polys: Vec<Poly> = vec![parse(&ring, "x0*x1").unwrap()];
        assert!(matches!(
            projective_rational_points(&polys),
            Err(GeometryError::PositiveDimensional)
        ));
    }
}
