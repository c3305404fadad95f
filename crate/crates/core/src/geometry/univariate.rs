//! Dense univariate polynomials over the rationals: square-free decomposition
//! and exact rational roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{Monomial, Poly, Rational, RingRef};

/// Coefficients from the constant term upwards, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    /// Extract from a multivariate polynomial in which only `var` occurs.
    pub fn from_poly(f: &Poly, var: usize) -> Option<Self> {
        let mut coeffs = vec![Rational::zero(); f.degree_in(var) as usize + 1];
        for (m, c) in f.terms() {
            if m.degree() != m.exponent(var) {
                return None;
            }
            coeffs[m.exponent(var) as usize] += c.clone();
        }
        Some(Self::new(coeffs))
    }

    /// Dehomogenize a binary form at `t1 = 1`.
    pub fn from_binary_form(f: &Poly, t0: usize, t1: usize) -> Option<Self> {
        let mut coeffs = vec![Rational::zero(); f.degree_in(t0) as usize + 1];
        for (m, c) in f.terms() {
            if m.degree() != m.exponent(t0) + m.exponent(t1) {
                return None;
            }
            coeffs[m.exponent(t0) as usize] += c.clone();
        }
        Some(Self::new(coeffs))
    }

    /// Embed as a polynomial in `x_var`.
    pub fn to_poly(&self, ring: &RingRef, var: usize) -> Poly {
        Poly::from_terms(
            ring,
            self.0
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(ring.nvars(), var, e as u16), c.clone())),
        )
    }

    /// Homogenize to a binary form of total degree `degree` in `t0`, `t1`.
    pub fn homogenize(&self, ring: &RingRef, t0: usize, t1: usize, degree: u32) -> Poly {
        let n = ring.nvars();
        Poly::from_terms(
            ring,
            self.0.iter().enumerate().map(|(e, c)| {
                let m = Monomial::var(n, t0, e as u16).mul(&Monomial::var(n, t1, (degree as usize - e) as u16));
                (m, c.clone())
            }),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(e, c)| c * Rational::from_integer(BigInt::from(e)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                Self::new(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        let lead_inv = d.lead().expect("nonzero").recip();
        if rem.len() <= dd {
            return (UniPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    let v = &c * dc;
                    rem[k + i] -= v;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: `[(g1, 1), (g2, 2), …]` with `self = c · Π gi^i`, each gi
    /// square-free and monic; factors equal to one are omitted.
    pub fn square_free_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let g = b.gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_rem(&g).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&g).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut coeffs = integer_coefficients(&self.0);
        if coeffs[0].is_zero() {
            roots.push(Rational::zero());
            let k = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero poly");
            coeffs.drain(..k);
        }
        if coeffs.len() > 1 {
            let a0 = coeffs[0].abs();
            let an = coeffs.last().expect("nonempty").abs();
            let f = UniPoly::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect());
            for q in divisors(&an) {
                for p in divisors(&a0) {
                    if p.gcd(&q) != BigInt::one() {
                        continue;
                    }
                    for sign in [1, -1] {
                        let r = Rational::new(&p * BigInt::from(sign), q.clone());
                        if f.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// `self / (x - r)` for a known root `r`.
    pub fn deflate(&self, r: &Rational) -> UniPoly {
        let (q, rem) = self.div_rem(&UniPoly::new(vec![-r.clone(), Rational::one()]));
        debug_assert!(rem.is_zero());
        q
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = crate::poly::Ring::new(&["t"], crate::poly::TermOrder::Lex).expect("valid");
        write!(f, "{}", self.to_poly(&ring, 0))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Roots with multiplicity plus the parts that have no rational roots.
#[derive(Clone, Debug, Default)]
pub struct RootReport {
    pub roots: Vec<(Rational, usize)>,
    /// Monic factors of degree ≥ 2 left after removing every rational root.
    pub unresolved: Vec<UniPoly>,
}

/// Exact rational roots with multiplicities via square-free decomposition.
pub fn rational_roots_with_multiplicity(f: &UniPoly) -> RootReport {
    let mut report = RootReport::default();
    for (factor, mult) in f.square_free_decomposition() {
        let mut rest = factor.clone();
        for r in factor.rational_roots() {
            report.roots.push((r.clone(), mult));
            rest = rest.deflate(&r);
        }
        if rest.degree().unwrap_or(0) > 0 {
            report.unresolved.push(rest.monic());
        }
    }
    report.roots.sort();
    report
}

fn integer_coefficients(c: &[Rational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in c {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

/// Positive divisors of `n > 0` by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    if let Some(v) = n.to_u64() {
        let root = v.sqrt();
        for d in 1..=root {
            if v % d == 0 {
                small.push(BigInt::from(d));
                if d != v / d {
                    large.push(BigInt::from(v / d));
                }
            }
        }
    } else {
        let root = n.sqrt();
        let mut d = BigInt::one();
        while d <= root {
            if (n % &d).is_zero() {
                small.push(d.clone());
                let co = n / &d;
                if co != d {
                    large.push(co);
                }
            }
            d += 1;
        }
    }
    large.reverse();
    small.extend(large);
    small
}
