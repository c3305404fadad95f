use serde::Serialize;

use crate::poly::Poly;

use super::family::coefficient_matrix;
use super::{GeometryError, ProjectivePoint};

/// Position of the six cusps: on a twisted cubic (type I) or on three
/// concurrent lines through the common zero of the four forms (type II).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum Configuration {
    TypeI,
    TypeII { vertex: ProjectivePoint },
}

impl Configuration {
    pub fn name(&self) -> &'static str {
        match self {
            Configuration::TypeI => "TypeI",
            Configuration::TypeII { .. } => "TypeII",
        }
    }

    pub fn vertex(&self) -> Option<&ProjectivePoint> {
        match self {
            Configuration::TypeI => None,
            Configuration::TypeII { vertex } => Some(vertex),
        }
    }
}

pub fn classify_configuration(lp: &Poly, lpp: &Poly, fp: &Poly, fpp: &Poly) -> Result<Configuration, GeometryError> {
    if coefficient_matrix(&[lp, lpp])?.rank() < 2 {
        return Err(GeometryError::DependentForms);
    }
    let m = coefficient_matrix(&[lp, lpp, fp, fpp])?;
    match m.rank() {
        4 => Ok(Configuration::TypeI),
        3 => {
            let kernel = m.nullspace();
            Ok(Configuration::TypeII {
                vertex: ProjectivePoint::new(kernel[0].clone())?,
            })
        }
        r => Err(GeometryError::DegenerateConfiguration(r)),
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
    fn types() {
        assert_eq!(
            classify_configuration(&p("x0"), &p("x1"), &p("x2"), &p("x3")).unwrap(),
            Configuration::TypeI
        );
        let c = classify_configuration(&p("x0"), &p("x1"), &p("x2"), &p("6*(x1 + x2) - 11*x0")).unwrap();
        assert_eq!(c.vertex().unwrap(), &ProjectivePoint::from_i64(&[0, 0, 0, 1]).unwrap());
        assert_eq!(
            classify_configuration(&p("x0"), &p("x1"), &p("x0 + x1"), &p("x0 - x1")),
            Err(GeometryError::DegenerateConfiguration(2))
        );
    }
}
