//! Barth's one-parameter family of quartics with eight singular points.

use num_traits::{One, Zero};

use crate::poly::{Poly, Rational, Ring, RingRef};

use super::{GeometryError, ProjectivePoint};

/// `(1+k)^3 x0^2 x1^2 + 2k(1-k^2) x0 x1 x2 x3 - (1-k)^3 x2^2 x3^2
///  + (1-k)^2 (x0+x1+x2+x3) [(1-k) x2 x3 (x0+x1) - (1+k) x0 x1 (x2+x3)]`
pub fn barth_quartic(k: &Rational) -> Result<Poly, GeometryError> {
    if k.is_zero() {
        return Err(GeometryError::ZeroParameter);
    }
    let ring = Ring::projective3();
    Ok(barth_quartic_in(&ring, k))
}

pub(crate) fn barth_quartic_in(ring: &RingRef, k: &Rational) -> Poly {
    let x: Vec<Poly> = (0..4).map(|i| Poly::var(ring, i)).collect();
    let one = Rational::one();
    let p = &one + k;
    let m = &one - k;
    let c = |v: Rational| Poly::constant(ring, v);

    let x01 = &x[0] * &x[1];
    let x23 = &x[2] * &x[3];
    let sum = &(&x[0] + &x[1]) + &(&x[2] + &x[3]);
    let bracket = &(&c(m.clone()) * &(&x23 * &(&x[0] + &x[1]))) - &(&c(p.clone()) * &(&x01 * &(&x[2] + &x[3])));

    let t1 = &c(&p * &p * &p) * &(&x01 * &x01);
    let t2 = &c(Rational::from_integer(2.into()) * k * (&one - k * k)) * &(&x01 * &x23);
    let t3 = &c(&m * &m * &m) * &(&x23 * &x23);
    let t4 = &c(&m * &m) * &(&sum * &bracket);
    &(&(&t1 + &t2) - &t3) + &t4
}

/// The eight singular points in the order of the three symmetry orbits:
/// `P1..P4`, then the coordinate points `P5, P6` and `P7, P8`.
pub fn barth_points() -> Vec<ProjectivePoint> {
    [
        [1, 0, -1, 0],
        [1, 0, 0, -1],
        [0, 1, -1, 0],
        [0, 1, 0, -1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
    .iter()
    .map(|c| ProjectivePoint::from_i64(c).expect("nonzero"))
    .collect()
}

/// The coordinate swaps `x0 <-> x1` and `x2 <-> x3`.
pub fn barth_symmetries() -> [[usize; 4]; 2] {
    [[1, 0, 2, 3], [0, 1, 3, 2]]
}

/// `det` of the local Hessian (halved) at `(1:0:0:0)`, `-(k/2)(1+k)^2(1-k)^6`.
pub fn barth_local_determinant(k: &Rational) -> Rational {
    let one = Rational::one();
    let p = &one + k;
    let m = &one - k;
    let m2 = &m * &m;
    -(k / Rational::from_integer(2.into())) * &p * &p * &m2 * &m2 * &m2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn vanishes_at_points_and_is_symmetric() {
        for k in [int(2), int(3), crate::poly::frac(-1, 5)] {
            let f = barth_quartic(&k).unwrap();
            assert!(f.is_homogeneous());
            assert_eq!(f.total_degree(), Some(4));
            for p in barth_points() {
                assert!(p.eval(&f).is_zero());
                assert!(f.gradient().iter().all(|g| p.eval(g).is_zero()));
            }
            let ring = f.ring().clone();
            for perm in barth_symmetries() {
                let images: Vec<Poly> = perm.iter().map(|&i| Poly::var(&ring, i)).collect();
                assert_eq!(f.substitute(&images).unwrap(), f);
            }
        }
        assert!(barth_quartic(&int(0)).is_err());
    }
}
