use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::{primitive_integer_vector, Matrix};
use crate::poly::{Poly, Rational, Ring, RingRef, TermOrder};

use crate::geometry::ProjectivePoint;

use super::SingularError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SingularityKind {
    Smooth,
    A1,
    A2,
    AtLeastA3,
    CorankGE2,
}

impl SingularityKind {
    pub fn name(self) -> &'static str {
        match self {
            SingularityKind::Smooth => "smooth",
            SingularityKind::A1 => "A1",
            SingularityKind::A2 => "A2",
            SingularityKind::AtLeastA3 => "A>=3",
            SingularityKind::CorankGE2 => "corank>=2",
        }
    }
}

/// Classification of a point together with the local data that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityVerdict {
    pub point: String,
    pub kind: SingularityKind,
    /// Dehomogenizing coordinate (`None` for affine input).
    pub chart: Option<usize>,
    /// Rank of the local quadratic part (absent at smooth points).
    pub rank: Option<usize>,
    /// Kernel of the quadratic part when its corank is one, as coprime integers.
    pub kernel: Option<Vec<String>>,
    /// Cubic part evaluated at `kernel`.
    pub cubic_on_kernel: Option<String>,
}

/// Affine coordinates around `p` in chart `chart`: `F(P + u)` with `x_chart = 1`.
pub fn local_equation(f: &Poly, p: &ProjectivePoint, chart: usize) -> Result<Poly, SingularError> {
    let coords = p.in_chart(chart).ok_or(SingularError::BadChart(chart))?;
    let names: Vec<&str> = f
        .ring()
        .vars()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != chart)
        .map(|(_, v)| v.as_str())
        .collect();
    let local = Ring::new(&names, TermOrder::Grevlex)?;
    let mut k = 0;
    let images: Vec<Poly> = coords
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == chart {
                Poly::one(&local)
            } else {
                let u = &Poly::var(&local, k) + &Poly::constant(&local, c.clone());
                k += 1;
                u
            }
        })
        .collect();
    Ok(f.substitute(&images)?)
}

/// Classify the point `p` of the projective hypersurface `f = 0`, using the
/// chart of the last nonzero coordinate.
pub fn classify(f: &Poly, p: &ProjectivePoint) -> Result<SingularityVerdict, SingularError> {
    classify_in_chart(f, p, p.last_nonzero())
}

pub fn classify_in_chart(f: &Poly, p: &ProjectivePoint, chart: usize) -> Result<SingularityVerdict, SingularError> {
    if !f.is_homogeneous() {
        return Err(SingularError::NotHomogeneous);
    }
    if !p.eval(f).is_zero() {
        return Err(SingularError::NotOnSurface(p.to_string()));
    }
    let local = local_equation(f, p, chart)?;
    let mut v = classify_at_origin(&local)?;
    v.point = p.to_string();
    v.chart = Some(chart);
    Ok(v)
}

/// Classify an affine hypersurface at `point`.
pub fn classify_affine(f: &Poly, point: &[Rational]) -> Result<SingularityVerdict, SingularError> {
    let ring = f.ring();
    let images: Vec<Poly> = point
        .iter()
        .enumerate()
        .map(|(i, c)| &Poly::var(ring, i) + &Poly::constant(ring, c.clone()))
        .collect();
    if images.len() != ring.nvars() {
        return Err(crate::poly::PolyError::ArityMismatch {
            expected: ring.nvars(),
            found: images.len(),
        }
        .into());
    }
    let local = f.substitute(&images)?;
    let mut v = classify_at_origin(&local)?;
    v.point = format!(
        "({})",
        point.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    );
    Ok(v)
}

/// Symmetric matrix `H` with `f2(u) = uᵀ H u`.
pub fn quadratic_form_matrix(f2: &Poly) -> Matrix {
    let n = f2.ring().nvars();
    let mut m = Matrix::zeros(n, n);
    let half = Rational::new(1.into(), 2.into());
    for (mono, c) in f2.terms() {
        let idx: Vec<usize> = (0..n).filter(|&i| mono.exponent(i) > 0).collect();
        match idx.as_slice() {
            [i] => m[(*i, *i)] += c.clone(),
            [i, j] => {
                m[(*i, *j)] += c * &half;
                m[(*j, *i)] += c * &half;
            }
            _ => unreachable!("quadratic monomial"),
        }
    }
    m
}

fn classify_at_origin(local: &Poly) -> Result<SingularityVerdict, SingularError> {
    let ring: &RingRef = local.ring();
    let n = ring.nvars();
    if !local.constant_term().is_zero() {
        return Err(SingularError::NotOnSurface("origin".into()));
    }
    let mut verdict = SingularityVerdict {
        point: String::new(),
        kind: SingularityKind::Smooth,
        chart: None,
        rank: None,
        kernel: None,
        cubic_on_kernel: None,
    };
    if !local.homogeneous_component(1).is_zero() {
        return Ok(verdict);
    }
    let h = quadratic_form_matrix(&local.homogeneous_component(2));
    let rank = h.rank();
    verdict.rank = Some(rank);
    verdict.kind = if rank == n {
        SingularityKind::A1
    } else if rank + 1 == n {
        let kernel = primitive_integer_vector(&h.nullspace()[0]);
        let kq: Vec<Rational> = kernel.iter().cloned().map(Rational::from_integer).collect();
        let cubic = local.homogeneous_component(3).evaluate(&kq)?;
        verdict.kernel = Some(kernel.iter().map(|k| k.to_string()).collect());
        let kind = if cubic.is_zero() {
            SingularityKind::AtLeastA3
        } else {
            SingularityKind::A2
        };
        verdict.cubic_on_kernel = Some(cubic.to_string());
        kind
    } else {
        SingularityKind::CorankGE2
    };
    Ok(verdict)
}

/// Dehomogenized linear form `Σ_{i≠chart} g_i u_i` in the local ring.
pub(crate) fn local_linear_form(coeffs: &[Rational], chart: usize, local: &RingRef) -> Poly {
    let c: Vec<Rational> = coeffs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != chart)
        .map(|(_, c)| c.clone())
        .collect();
    Poly::linear_form(local, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, parse};

    fn affine(text: &str) -> SingularityKind {
        let ring = Ring::new(&["x", "y", "z"], TermOrder::Grevlex).unwrap();
        let f: Poly = parse(&ring, text).unwrap();
        classify_affine(&f, &[int(0), int(0), int(0)]).unwrap().kind
    }

    #[test]
    fn local_models() {
        assert_eq!(affine("x*y - z^3"), SingularityKind::A2);
        assert_eq!(affine("x*y - z^2"), SingularityKind::A1);
        assert_eq!(affine("x*y - z^4"), SingularityKind::AtLeastA3);
        assert_eq!(affine("x^2 + y^3 + z^3"), SingularityKind::CorankGE2);
        assert_eq!(affine("x + y*z"), SingularityKind::Smooth);
    }

    #[test]
    fn projective_point() {
        let ring = Ring::projective3();
        let f: Poly = parse(&ring, "x0*x1*x3 - x2^3").unwrap();
        let p = ProjectivePoint::from_i64(&[0, 0, 0, 1]).unwrap();
        let v = classify(&f, &p).unwrap();
        assert_eq!(v.kind, SingularityKind::A2);
        assert_eq!(v.chart, Some(3));
        assert_eq!(v.kernel, Some(vec!["0".into(), "0".into(), "1".into()]));
        let off = ProjectivePoint::from_i64(&[1, 1, 2, 1]).unwrap();
        assert!(matches!(classify(&f, &off), Err(SingularError::NotOnSurface(_))));
    }
}
