use num_traits::Zero;

use crate::linalg::Matrix;
use crate::poly::{Poly, Rational, RingRef};

use super::GeometryError;

/// The quadrics `Q12 = L'F'' - L''^2`, `Q21 = L''F' - L'^2`, `Q22 = F'F'' - L'L''`
/// cutting out the curve `C3`.
pub fn ideal_quadrics(lp: &Poly, lpp: &Poly, fp: &Poly, fpp: &Poly) -> Result<(Poly, Poly, Poly), GeometryError> {
    check_forms(lp, lpp, fp, fpp)?;
    Ok(quadrics_unchecked(lp, lpp, fp, fpp))
}

fn quadrics_unchecked(lp: &Poly, lpp: &Poly, fp: &Poly, fpp: &Poly) -> (Poly, Poly, Poly) {
    (lp * fpp - lpp * lpp, lpp * fp - lp * lp, fp * fpp - lp * lpp)
}

/// `S·(Q22 - S) - Q12·Q21`.
pub fn determinantal_quartic(s: &Poly, q12: &Poly, q21: &Poly, q22: &Poly) -> Poly {
    s * &(q22 - s) - q12 * q21
}

/// `S'S'' - S^3 - R·(S(Q22 - S) - Q12·Q21)` with no restriction on the inputs,
/// so it can be expanded with symbolic coefficients. Vanishes identically.
pub fn sextic_identity_residual(lp: &Poly, lpp: &Poly, fp: &Poly, fpp: &Poly, r: &Poly) -> Poly {
    let s = r + &(lp * lpp);
    let sp = &lp.pow(3) + &(fp * r);
    let spp = &lpp.pow(3) + &(fpp * r);
    let (q12, q21, q22) = quadrics_unchecked(lp, lpp, fp, fpp);
    &(&(&sp * &spp) - &s.pow(3)) - &(r * &determinantal_quartic(&s, &q12, &q21, &q22))
}

/// Coefficient matrix of linear forms (one row per form).
pub(crate) fn coefficient_matrix(forms: &[&Poly]) -> Result<Matrix, GeometryError> {
    const NAMES: [&str; 4] = ["L'", "L''", "F'", "F''"];
    let rows = forms
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.linear_coefficients()
                .map_err(|_| GeometryError::NotLinear(NAMES.get(i).copied().unwrap_or("form")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

fn check_forms(lp: &Poly, lpp: &Poly, fp: &Poly, fpp: &Poly) -> Result<(), GeometryError> {
    let ring = lp.ring();
    if [lpp, fp, fpp].iter().any(|f| f.ring().vars() != ring.vars()) {
        return Err(crate::poly::PolyError::RingMismatch.into());
    }
    let m = coefficient_matrix(&[lp, lpp, fp, fpp])?;
    if coefficient_matrix(&[lp, lpp])?.rank() < 2 {
        return Err(GeometryError::DependentForms);
    }
    debug_assert_eq!(m.nrows(), 4);
    Ok(())
}

/// Input data `(L', L'', F', F'', R)` together with every derived surface.
#[derive(Clone, Debug)]
pub struct DivisibleFamily {
    lp: Poly,
    lpp: Poly,
    fp: Poly,
    fpp: Poly,
    r: Poly,
    s: Poly,
    sp: Poly,
    spp: Poly,
    q12: Poly,
    q21: Poly,
    q22: Poly,
    sextic: Poly,
    y4: Poly,
}

impl DivisibleFamily {
    /// Builds `S' = L'^3 + F'R`, `S'' = L''^3 + F''R`, `S = R + L'L''` and the
    /// quartic `Y4 = (S'S'' - S^3) / R`.
    pub fn new(lp: Poly, lpp: Poly, fp: Poly, fpp: Poly, r: Poly) -> Result<Self, GeometryError> {
        check_forms(&lp, &lpp, &fp, &fpp)?;
        if r.ring().vars() != lp.ring().vars() {
            return Err(crate::poly::PolyError::RingMismatch.into());
        }
        if r.is_zero() || !r.is_homogeneous() || r.total_degree() != Some(2) {
            return Err(GeometryError::BadResidual);
        }
        let s = &r + &(&lp * &lpp);
        let sp = &lp.pow(3) + &(&fp * &r);
        let spp = &lpp.pow(3) + &(&fpp * &r);
        let (q12, q21, q22) = quadrics_unchecked(&lp, &lpp, &fp, &fpp);
        let sextic = &(&sp * &spp) - &s.pow(3);
        let y4 = sextic.exact_divide(&r).map_err(|_| GeometryError::InexactDivision)?;
        if !y4.is_zero() && y4.total_degree() != Some(4) {
            return Err(GeometryError::InexactDivision);
        }
        Ok(DivisibleFamily {
            lp,
            lpp,
            fp,
            fpp,
            r,
            s,
            sp,
            spp,
            q12,
            q21,
            q22,
            sextic,
            y4,
        })
    }

    /// Family with prescribed contact quadric `S`, i.e. `R = S - L'L''`.
    pub fn from_contact_quadric(lp: Poly, lpp: Poly, fp: Poly, fpp: Poly, s: Poly) -> Result<Self, GeometryError> {
        let r = &s - &(&lp * &lpp);
        Self::new(lp, lpp, fp, fpp, r)
    }

    pub fn ring(&self) -> &RingRef {
        self.lp.ring()
    }

    pub fn lp(&self) -> &Poly {
        &self.lp
    }
    pub fn lpp(&self) -> &Poly {
        &self.lpp
    }
    pub fn fp(&self) -> &Poly {
        &self.fp
    }
    pub fn fpp(&self) -> &Poly {
        &self.fpp
    }
    /// The residual quadric `R`.
    pub fn r(&self) -> &Poly {
        &self.r
    }
    /// The contact quadric `S = R + L'L''`.
    pub fn s(&self) -> &Poly {
        &self.s
    }
    /// The contact cubic `S'`.
    pub fn sp(&self) -> &Poly {
        &self.sp
    }
    /// The contact cubic `S''`.
    pub fn spp(&self) -> &Poly {
        &self.spp
    }
    pub fn q12(&self) -> &Poly {
        &self.q12
    }
    pub fn q21(&self) -> &Poly {
        &self.q21
    }
    pub fn q22(&self) -> &Poly {
        &self.q22
    }
    /// `S'S'' - S^3`.
    pub fn sextic(&self) -> &Poly {
        &self.sextic
    }
    pub fn y4(&self) -> &Poly {
        &self.y4
    }

    /// `[L', L'', F', F'']`.
    pub fn forms(&self) -> [&Poly; 4] {
        [&self.lp, &self.lpp, &self.fp, &self.fpp]
    }

    pub fn quadrics(&self) -> [&Poly; 3] {
        [&self.q12, &self.q21, &self.q22]
    }

    /// The quartic recomputed from the determinantal expression.
    pub fn determinantal(&self) -> Poly {
        determinantal_quartic(&self.s, &self.q12, &self.q21, &self.q22)
    }

    /// `4 x 4` matrix whose rows are the coefficients of `L', L'', F', F''`.
    pub fn coefficient_matrix(&self) -> Matrix {
        coefficient_matrix(&self.forms()).expect("validated on construction")
    }

    /// `S'S'' - S^3 == R·Y4` and `Y4` equals the determinantal quartic.
    pub fn identity_holds(&self) -> bool {
        &self.r * &self.y4 == self.sextic && self.determinantal() == self.y4
    }

    /// The line `L' = L'' = 0` does not lie on `S`, so `R`, `S'`, `S''` meet properly.
    pub fn base_line_off_contact_quadric(&self) -> bool {
        let m = coefficient_matrix(&[&self.lp, &self.lpp]).expect("linear");
        let basis = m.nullspace();
        // S restricted to span(u, v): zero iff the form in (a, b) vanishes identically,
        // detected by three sample points of a binary quadric.
        let (u, v) = (&basis[0], &basis[1]);
        let samples: [(i64, i64); 3] = [(1, 0), (0, 1), (1, 1)];
        samples.iter().any(|&(a, b)| {
            let p: Vec<Rational> = u
                .iter()
                .zip(v)
                .map(|(x, y)| x * Rational::from_integer(a.into()) + y * Rational::from_integer(b.into()))
                .collect();
            !self.s.evaluate(&p).expect("arity").is_zero()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, Ring};

    fn p(s: &str) -> Poly {
        parse(&Ring::projective3(), s).unwrap()
    }

    #[test]
    fn coordinate_quadrics() {
        let (a, b, c) = ideal_quadrics(&p("x0"), &p("x1"), &p("x2"), &p("x3")).unwrap();
        assert_eq!(a, p("x0*x3 - x1^2"));
        assert_eq!(b, p("x1*x2 - x0^2"));
        assert_eq!(c, p("x2*x3 - x0*x1"));
        assert_eq!(
            ideal_quadrics(&p("x0"), &p("x0"), &p("x2"), &p("x3")),
            Err(GeometryError::DependentForms)
        );
        assert!(matches!(
            ideal_quadrics(&p("x0^2"), &p("x1"), &p("x2"), &p("x3")),
            Err(GeometryError::NotLinear(_))
        ));
    }

    #[test]
    fn family_identity() {
        let s = p("49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2");
        let fam = DivisibleFamily::from_contact_quadric(p("x0"), p("x1"), p("x2"), p("x3"), s.clone()).unwrap();
        assert_eq!(fam.s(), &s);
        assert_eq!(fam.y4().total_degree(), Some(4));
        assert!(fam.identity_holds());
        assert!(fam.base_line_off_contact_quadric());
    }

    #[test]
    fn degenerate_determinant() {
        let q22 = p("x2*x3 - x0*x1");
        let z = Poly::zero(q22.ring());
        assert!(determinantal_quartic(&q22, &z, &z, &q22).is_zero());
    }
}
