//! Singular points of surfaces: detection, A1/A2 classification,
//! transversality, and Gröbner-backed certificates.

mod certificate;
mod classify;

use num_traits::Zero;
use thiserror::Error;

use crate::geometry::{GeometryError, ProjectivePoint};
use crate::groebner::Ideal;
use crate::linalg::{primitive_integer_vector, Matrix};
use crate::poly::{Monomial, Poly, PolyError, Rational, RingRef};

pub use certificate::{
    cusp_divisibility_certificate, no_extra_singularities, singular_locus_contained_in,
    singular_locus_contained_in_basis, Certificate, CertificateKind, Check, PointRecord,
};
pub use classify::{
    classify, classify_affine, classify_in_chart, local_equation, quadratic_form_matrix, SingularityKind,
    SingularityVerdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("point {0} does not lie on the surface")]
    NotOnSurface(String),
    #[error("coordinate {0} of the point is zero; cannot use that chart")]
    BadChart(usize),
    #[error("precondition violated at {point}: {reason}")]
    Precondition { point: String, reason: String },
    #[error("certificate cannot be rechecked: {0}")]
    Malformed(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Ideal of the partial derivatives of a homogeneous form.
pub fn jacobian_ideal(f: &Poly) -> Result<Ideal, SingularError> {
    if f.is_zero() || !f.is_homogeneous() {
        return Err(SingularError::NotHomogeneous);
    }
    Ok(Ideal::new(f.ring(), f.gradient()).expect("same ring"))
}

/// All partial derivatives vanish at `p`.
pub fn is_singular_point(f: &Poly, p: &ProjectivePoint) -> bool {
    f.gradient().iter().all(|g| p.eval(g).is_zero())
}

pub(crate) fn gradient_at(f: &Poly, p: &ProjectivePoint) -> Vec<Rational> {
    f.gradient().iter().map(|g| p.eval(g)).collect()
}

/// The surfaces meet transversally at `p`: their gradients there are independent.
pub fn transversal_at(surfaces: &[&Poly], p: &ProjectivePoint) -> Result<bool, SingularError> {
    for f in surfaces {
        if !p.eval(f).is_zero() {
            return Err(SingularError::NotOnSurface(p.to_string()));
        }
    }
    let m = Matrix::from_rows(surfaces.iter().map(|f| gradient_at(f, p)).collect());
    Ok(m.rank() == surfaces.len())
}

/// All monomials of degree `d` in `n` variables, descending in grevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix).expect("small exponents"));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Basis of the degree-`d` forms vanishing at every point, from the kernel of
/// the evaluation matrix. Each form has coprime integer coefficients.
pub fn forms_through_points(ring: &RingRef, points: &[ProjectivePoint], d: u32) -> Vec<Poly> {
    let monos = monomials_of_degree(ring.nvars(), d);
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|m| p.eval(&Poly::monomial(ring, m.clone(), Rational::from_integer(1.into()))))
                .collect()
        })
        .collect();
    let kernel = if rows.is_empty() {
        (0..monos.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); monos.len()];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    kernel
        .into_iter()
        .map(|v| {
            let ints = primitive_integer_vector(&v);
            Poly::from_terms(
                ring,
                monos.iter().cloned().zip(ints.into_iter().map(Rational::from_integer)),
            )
        })
        .collect()
}

/// `f` lies in the span of `basis` (exact rank test on coefficient vectors).
pub fn in_span(f: &Poly, basis: &[Poly]) -> bool {
    let mut monos: Vec<Monomial> = basis
        .iter()
        .chain(std::iter::once(f))
        .flat_map(|p| p.terms().iter().map(|(m, _)| m.clone()))
        .collect();
    monos.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    monos.dedup();
    let row = |p: &Poly| monos.iter().map(|m| p.coefficient(m)).collect::<Vec<_>>();
    let before = Matrix::from_rows(basis.iter().map(row).collect::<Vec<_>>());
    let mut with: Vec<Vec<Rational>> = basis.iter().map(row).collect();
    with.push(row(f));
    let r0 = if basis.is_empty() { 0 } else { before.rank() };
    Matrix::from_rows(with).rank() == r0
}
