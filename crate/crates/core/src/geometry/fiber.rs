//! Change of parameter on the twisted cubic: a 2×2 matrix `a` acting on
//! `(t0, t1)` induces a linear map on the adapted coordinates with
//! `𝔞 ∘ Φ = Φ ∘ a`, and the determinantal matrix transforms accordingly.

use num_traits::Zero;
use serde::Serialize;

use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly, Rational};

use super::cusps::{parameter_ring, twisted_cubic_map};
use super::{DivisibleFamily, GeometryError};

#[derive(Clone, Debug, Serialize)]
pub struct FiberChange {
    /// The 4×4 matrix of `𝔞` on `(L', L'', F', F'')`-coordinates; row `i`
    /// expands the `i`-th coordinate of `Φ(a·t)` in `t0^2 t1, t0 t1^2, t0^3, t1^3`.
    #[serde(skip)]
    pub map: Matrix,
    /// `(L''(a), L'(a), F''(a), F'(a))`.
    pub forms: [String; 4],
    /// The transformed contact quadric `Q(a)`.
    pub q_a: String,
    /// All four entries of the transformation identity hold exactly.
    pub verified: bool,
}

/// Applies `a = [[a00, a01], [a10, a11]]` to the family.
///
/// With `M = [[S, Q12], [Q21, Q22 - S]]`, `A1 = [[a01, a00], [a11, a10]]` and
/// `A2 = [[a10, a00], [a11, a01]]`, the identity checked is
/// `det(a)^2 · A1 M A2 = [[Q(a), Q12(a)], [Q21(a), Q22(a) - Q(a)]]`, where the
/// `Qij(a)` are built from the transformed forms.
pub fn fiber_change(family: &DivisibleFamily, a: [[Rational; 2]; 2]) -> Result<FiberChange, GeometryError> {
    let [[a00, a01], [a10, a11]] = &a;
    let det = a00 * a11 - a01 * a10;
    if det.is_zero() {
        return Err(GeometryError::SingularMatrix);
    }

    let map = induced_map(&a);
    // Coordinates y = (L', L'', F', F''); 𝔞 produces the rows in the order of Φ.
    let y = family.forms();
    let ring = family.ring();
    let rows: Vec<Poly> = (0..4)
        .map(|i| (0..4).fold(Poly::zero(ring), |acc, j| &acc + &y[j].scale(&map[(i, j)])))
        .collect();
    let (lpp_a, lp_a, fpp_a, fp_a) = (&rows[0], &rows[1], &rows[2], &rows[3]);
    let q12_a = lp_a * fpp_a - lpp_a * lpp_a;
    let q21_a = lpp_a * fp_a - lp_a * lp_a;
    let q22_a = fp_a * fpp_a - lp_a * lpp_a;

    let s = family.s();
    let m = [
        [s.clone(), family.q12().clone()],
        [family.q21().clone(), family.q22() - s],
    ];
    let a1 = [[a01, a00], [a11, a10]];
    let a2 = [[a10, a00], [a11, a01]];
    let d2 = &det * &det;
    let entry = |i: usize, j: usize| -> Poly {
        let mut acc = Poly::zero(ring);
        for (k, a1k) in a1[i].iter().enumerate() {
            for (l, ml) in m[k].iter().enumerate() {
                let c = *a1k * a2[l][j] * &d2;
                if !c.is_zero() {
                    acc = &acc + &ml.scale(&c);
                }
            }
        }
        acc
    };
    let lhs = [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]];
    let q_a = lhs[0][0].clone();
    let rhs = [[q_a.clone(), q12_a], [q21_a, &q22_a - &q_a]];
    let verified = lhs == rhs;

    Ok(FiberChange {
        map,
        forms: [lpp_a.to_string(), lp_a.to_string(), fpp_a.to_string(), fp_a.to_string()],
        q_a: q_a.to_string(),
        verified,
    })
}

/// Matrix of `𝔞`: coefficients of `Φ(a·(t0, t1))` in the cubic basis.
pub fn induced_map(a: &[[Rational; 2]; 2]) -> Matrix {
    let tring = parameter_ring();
    let s0 = Poly::linear_form(&tring, &[a[0][0].clone(), a[0][1].clone()]);
    let s1 = Poly::linear_form(&tring, &[a[1][0].clone(), a[1][1].clone()]);
    let phi = twisted_cubic_map(&tring);
    let basis: Vec<Monomial> = phi
        .iter()
        .map(|b| b.leading_monomial().expect("monomial").clone())
        .collect();
    let rows = phi
        .iter()
        .map(|c| {
            let image = c.substitute(&[s0.clone(), s1.clone()]).expect("two variables");
            basis.iter().map(|m| image.coefficient(m)).collect()
        })
        .collect();
    Matrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, int, parse, Ring};

    fn family() -> DivisibleFamily {
        let r = Ring::projective3();
        let p = |s: &str| -> Poly { parse(&r, s).unwrap() };
        DivisibleFamily::from_contact_quadric(
            p("x0"),
            p("x1"),
            p("x2"),
            p("x3"),
            p("49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2"),
        )
        .unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let fam = family();
        let id = fiber_change(&fam, [[int(1), int(0)], [int(0), int(1)]]).unwrap();
        assert!(id.verified);
        assert_eq!(id.map, Matrix::identity(4));
        // Rows come out as (L'', L', F'', F') = (x0, x1, x2, x3), so Q(a) is the
        // lower-right entry Q22 - S of the original matrix.
        assert_eq!(id.q_a, (fam.q22() - fam.s()).to_string());

        let swap = fiber_change(&fam, [[int(0), int(1)], [int(1), int(0)]]).unwrap();
        assert!(swap.verified);
        let expected = Matrix::from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(swap.map, expected);
    }

    #[test]
    fn rational_matrix() {
        let fc = fiber_change(&family(), [[frac(2, 3), int(-5)], [int(7), frac(1, 4)]]).unwrap();
        assert!(fc.verified);
        assert!(fiber_change(&family(), [[int(1), int(2)], [int(2), int(4)]]).is_err());
    }
}
