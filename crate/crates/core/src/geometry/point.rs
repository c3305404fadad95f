use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::linalg::primitive_integer_vector;
use crate::poly::{Field, Poly, Rational};

use super::GeometryError;

/// Point of projective space with rational coordinates, normalized so that the
/// first nonzero coordinate is one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, GeometryError> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(GeometryError::ZeroPoint);
        };
        let inv = first.recip();
        Ok(ProjectivePoint {
            coords: coords.into_iter().map(|c| c * &inv).collect(),
        })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, GeometryError> {
        Self::new(coords.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Coprime integer representative with the first nonzero entry positive.
    pub fn integer_coords(&self) -> Vec<BigInt> {
        primitive_integer_vector(&self.coords)
    }

    /// Index of the last nonzero coordinate.
    pub fn last_nonzero(&self) -> usize {
        self.coords
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("point has a nonzero coordinate")
    }

    /// Exact value of `f` at this representative.
    pub fn eval(&self, f: &Poly) -> Rational {
        f.evaluate(&self.coords).expect("point arity matches ring")
    }

    pub fn lies_on(&self, f: &Poly) -> bool {
        f.is_homogeneous() && self.eval(f).is_zero()
    }

    /// Representative scaled so that coordinate `chart` equals one.
    pub fn in_chart(&self, chart: usize) -> Option<Vec<Rational>> {
        let c = &self.coords[chart];
        if c.is_zero() {
            return None;
        }
        let inv = c.recip();
        Some(self.coords.iter().map(|x| x * &inv).collect())
    }

    pub fn is_one_at(&self, i: usize) -> bool {
        self.coords[i].is_one()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.integer_coords().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn normalization_is_canonical() {
        let a = ProjectivePoint::from_i64(&[2, 4, 1, -1]).unwrap();
        let b = ProjectivePoint::from_i64(&[-4, -8, -2, 2]).unwrap();
        assert_eq!(a, b);
        assert!(a.coords()[0] == int(1));
        assert_eq!(a.to_string(), "(2 : 4 : 1 : -1)");
        assert_eq!(a.last_nonzero(), 3);
    }

    #[test]
    fn zero_vector_rejected() {
        assert!(ProjectivePoint::from_i64(&[0, 0, 0, 0]).is_err());
    }
}
