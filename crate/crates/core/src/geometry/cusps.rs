//! Intersection of the contact quadric `S` with the curve `C3`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::{primitive_integer_vector, Matrix};
use crate::poly::{Poly, Rational, Ring, RingRef, TermOrder};

use super::family::DivisibleFamily;
use super::solve::projective_rational_points;
use super::univariate::{rational_roots_with_multiplicity, UniPoly};
use super::{Configuration, GeometryError, ProjectivePoint};

/// The ring `Q[t0, t1]` of the parametrization.
pub fn parameter_ring() -> RingRef {
    Ring::new(&["t0", "t1"], TermOrder::Grevlex).expect("valid names")
}

/// `Φ(t0, t1) = (t0^2 t1, t0 t1^2, t0^3, t1^3)` in `ring` (two variables).
pub fn twisted_cubic_map(ring: &RingRef) -> [Poly; 4] {
    let t0 = Poly::var(ring, 0);
    let t1 = Poly::var(ring, 1);
    [&(&t0 * &t0) * &t1, &(&t1 * &t1) * &t0, t0.pow(3), t1.pow(3)]
}

/// Image of `Φ(s0, s1)` as a coordinate vector.
pub fn phi_at(s0: &Rational, s1: &Rational) -> [Rational; 4] {
    [s0 * s0 * s1, s0 * s1 * s1, s0 * s0 * s0, s1 * s1 * s1]
}

/// A line through the type II vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Line {
    pub vertex: ProjectivePoint,
    /// Second point of the line (on the slicing hyperplane).
    pub through: ProjectivePoint,
    /// Two primitive integer linear forms cutting out the line, solved for the
    /// highest-index variables first.
    pub equations: Vec<String>,
}

impl Line {
    fn new(vertex: ProjectivePoint, through: ProjectivePoint, ring: &RingRef) -> Self {
        let n = vertex.coords().len();
        // Columns reversed so that the kernel basis expresses lower-index variables
        // in terms of higher ones, e.g. x0 - j*x2, x1 - j^2*x2.
        let rev = |p: &ProjectivePoint| p.coords().iter().rev().cloned().collect::<Vec<_>>();
        let m = Matrix::from_rows(vec![rev(&vertex), rev(&through)]);
        let mut equations: Vec<String> = m
            .nullspace()
            .into_iter()
            .map(|v| {
                let v: Vec<Rational> = v.into_iter().rev().collect();
                let coeffs: Vec<Rational> = primitive_integer_vector(&v)
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect();
                debug_assert_eq!(coeffs.len(), n);
                Poly::linear_form(ring, &coeffs).to_string()
            })
            .collect();
        equations.sort();
        Line {
            vertex,
            through,
            equations,
        }
    }

    /// Linear forms cutting out the line.
    pub fn equation_polys(&self, ring: &RingRef) -> Vec<Poly> {
        self.equations
            .iter()
            .map(|e| crate::poly::parse(ring, e).expect("printed by this crate"))
            .collect()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        let m = Matrix::from_rows(vec![
            self.vertex.coords().to_vec(),
            self.through.coords().to_vec(),
            p.coords().to_vec(),
        ]);
        m.rank() == 2
    }
}

/// Rational points of `S ∩ C3`, plus whatever could not be resolved over `Q`.
#[derive(Clone, Debug, Serialize)]
pub struct CuspCandidates {
    pub points: Vec<ProjectivePoint>,
    /// Type I: the binary sextic `S(Φ(t0, t1))` in adapted coordinates.
    pub pullback: Option<String>,
    /// Type I: rational roots `t` of the pullback at `t1 = 1` with multiplicities.
    pub parameters: Vec<(String, usize)>,
    /// Type I: `t1` divides the pullback (a cusp at `Φ(1, 0)`).
    pub root_at_infinity: bool,
    /// Type II: the lines of `C3`.
    pub lines: Vec<Line>,
    /// Irreducible factors without rational roots.
    pub unresolved: Vec<String>,
    /// Every point lies on `S`, `Q12`, `Q21`, `Q22` (exact evaluation).
    pub verified: bool,
}

impl CuspCandidates {
    fn empty() -> Self {
        CuspCandidates {
            points: Vec::new(),
            pullback: None,
            parameters: Vec::new(),
            root_at_infinity: false,
            lines: Vec::new(),
            unresolved: Vec::new(),
            verified: false,
        }
    }

    /// Rational roots of the pullback (type I).
    pub fn parameter_values(&self) -> Vec<Rational> {
        self.parameters
            .iter()
            .map(|(t, _)| t.parse::<Rational>().expect("printed rational"))
            .collect()
    }
}

/// Cusp candidates with the default slicing hyperplane for type II
/// (the last coordinate hyperplane not through the vertex).
pub fn cusp_candidates(family: &DivisibleFamily, config: &Configuration) -> Result<CuspCandidates, GeometryError> {
    cusp_candidates_with(family, config, None)
}

pub fn cusp_candidates_with(
    family: &DivisibleFamily,
    config: &Configuration,
    hyperplane: Option<&Poly>,
) -> Result<CuspCandidates, GeometryError> {
    let mut out = match config {
        Configuration::TypeI => type_one(family)?,
        Configuration::TypeII { vertex } => type_two(family, vertex, hyperplane)?,
    };
    out.points.sort();
    out.points.dedup();
    let on_curve = |p: &ProjectivePoint| {
        std::iter::once(family.s())
            .chain(family.quadrics())
            .all(|f| p.eval(f).is_zero())
    };
    out.verified = out.points.iter().all(on_curve);
    Ok(out)
}

fn type_one(family: &DivisibleFamily) -> Result<CuspCandidates, GeometryError> {
    let a = family.coefficient_matrix();
    let ainv = a.inverse().ok_or(GeometryError::DegenerateConfiguration(a.rank()))?;
    let tring = parameter_ring();
    let phi = twisted_cubic_map(&tring);
    // x = A^{-1} Φ(t): the forms (L', L'', F', F'') become the coordinates of Φ.
    let images: Vec<Poly> = (0..4)
        .map(|i| (0..4).fold(Poly::zero(&tring), |acc, j| &acc + &phi[j].scale(&ainv[(i, j)])))
        .collect();
    let pullback = family.s().substitute(&images)?;
    if pullback.is_zero() {
        return Err(GeometryError::CurveOnSurface);
    }
    let f = UniPoly::from_binary_form(&pullback, 0, 1).expect("binary form");
    let deficit = 6 - f.degree().unwrap_or(0);
    let report = rational_roots_with_multiplicity(&f);

    let point = |s0: &Rational, s1: &Rational| ProjectivePoint::new(ainv.mul_vec(&phi_at(s0, s1)));
    let mut out = CuspCandidates::empty();
    for (t, _) in &report.roots {
        out.points.push(point(t, &Rational::one())?);
    }
    if deficit > 0 {
        out.root_at_infinity = true;
        out.points.push(point(&Rational::one(), &Rational::zero())?);
    }
    out.parameters = report.roots.iter().map(|(t, m)| (t.to_string(), *m)).collect();
    out.unresolved = report
        .unresolved
        .iter()
        .map(|u| u.homogenize(&tring, 0, 1, u.degree().unwrap_or(0) as u32).to_string())
        .collect();
    out.pullback = Some(pullback.to_string());
    Ok(out)
}

fn type_two(
    family: &DivisibleFamily,
    vertex: &ProjectivePoint,
    hyperplane: Option<&Poly>,
) -> Result<CuspCandidates, GeometryError> {
    let ring = family.ring().clone();
    let h = match hyperplane {
        Some(h) => h.clone(),
        None => Poly::var(&ring, vertex.last_nonzero()),
    };
    h.linear_coefficients()
        .map_err(|_| GeometryError::NotLinear("slicing hyperplane"))?;
    if vertex.eval(&h).is_zero() {
        return Err(GeometryError::HyperplaneThroughVertex);
    }
    let mut system: Vec<Poly> = family.quadrics().into_iter().cloned().collect();
    system.push(h);
    let slice = projective_rational_points(&system)?;

    let mut out = CuspCandidates::empty();
    out.unresolved = slice.unresolved;
    let s = family.s();
    for q in slice.points {
        // S(λP + q) = λ^2 S(P) + λ B(P, q) + S(q)
        let sum: Vec<Rational> = vertex.coords().iter().zip(q.coords()).map(|(a, b)| a + b).collect();
        let sp = vertex.eval(s);
        let sq = q.eval(s);
        let mixed = s.evaluate(&sum).expect("arity") - &sp - &sq;
        let quad = UniPoly::new(vec![sq, mixed, sp]);
        if quad.is_zero() {
            return Err(GeometryError::CurveOnSurface);
        }
        let report = rational_roots_with_multiplicity(&quad);
        for (lambda, _) in &report.roots {
            let c: Vec<Rational> = vertex
                .coords()
                .iter()
                .zip(q.coords())
                .map(|(a, b)| lambda * a + b)
                .collect();
            out.points.push(ProjectivePoint::new(c)?);
        }
        if quad.degree() < Some(2) {
            out.points.push(vertex.clone());
        }
        let line = Line::new(vertex.clone(), q.clone(), &ring);
        for u in &report.unresolved {
            out.unresolved
                .push(format!("on line {}: {}", line.equations.join(", "), u));
        }
        out.lines.push(line);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn p(s: &str) -> Poly {
        parse(&Ring::projective3(), s).unwrap()
    }

    #[test]
    fn quadrics_vanish_on_phi() {
        let tring = parameter_ring();
        let phi = twisted_cubic_map(&tring);
        for q in [p("x0*x3 - x1^2"), p("x1*x2 - x0^2"), p("x2*x3 - x0*x1")] {
            assert!(q.substitute(&phi).unwrap().is_zero());
        }
    }

    #[test]
    fn contact_quadric_containing_the_curve() {
        let lp = p("x0");
        let fam = DivisibleFamily::from_contact_quadric(lp, p("x1"), p("x2"), p("x3"), p("x2*x3 - x0*x1")).unwrap();
        assert_eq!(
            cusp_candidates(&fam, &Configuration::TypeI).unwrap_err(),
            GeometryError::CurveOnSurface
        );
    }

    #[test]
    fn type_one_with_non_adapted_forms() {
        // Swap the roles of x0/x1 and x2/x3: the same curve, permuted coordinates.
        let s = p("49*x0^2 + x3^2 - 36*x2^2 - 14*x1^2");
        let fam = DivisibleFamily::from_contact_quadric(p("x1"), p("x0"), p("x3"), p("x2"), s).unwrap();
        let c = cusp_candidates(&fam, &Configuration::TypeI).unwrap();
        assert_eq!(c.points.len(), 6);
        assert!(c.verified);
        assert!(c.points.contains(&ProjectivePoint::from_i64(&[2, 4, 1, 8]).unwrap()));
    }
}
