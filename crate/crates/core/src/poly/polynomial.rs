use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Rational};
use super::monomial::{Monomial, TermOrder};
use super::ring::{same_ring, RingRef};
use super::PolyError;

/// Sparse multivariate polynomial in canonical form.
///
/// Terms are sorted strictly descending under the ring's term order, with no
/// duplicate monomials and no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone)]
pub struct Poly<K: Field = Rational> {
    ring: RingRef,
    terms: Vec<(Monomial, K)>,
}

impl<K: Field> PartialEq for Poly<K> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Poly<K> {}

impl<K: Field> Poly<K> {
    pub fn zero(ring: &RingRef) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: K) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, K::one())
    }

    /// The variable `x_index`.
    pub fn var(ring: &RingRef, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Poly {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index, 1), K::one())],
        }
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: K) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Canonicalize an arbitrary term list: merge duplicates, drop zeros, sort.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, K)>,
    {
        let mut acc: HashMap<Monomial, K> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
            match acc.get_mut(&m) {
                Some(v) => *v += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, K)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order()
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Degree of `x_index` in this polynomial.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(index)).max().unwrap_or(0)
    }

    /// Sorted list of variable indices that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .collect()
    }

    pub(crate) fn without_leading_term(mut self) -> Self {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    pub fn leading_term(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, m: &Monomial) -> K {
        let order = self.order();
        self.terms
            .binary_search_by(|(t, _)| order.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| K::zero())
    }

    /// Constant term.
    pub fn constant_term(&self) -> K {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => K::zero(),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Self::from_sorted(&self.ring, terms)
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, |c| -c.clone()))
    }

    fn merge(&self, other: &Self, map_other: impl Fn(&K) -> K) -> Self {
        let order = self.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), map_other(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.clone() + map_other(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), map_other(c))));
        Self::from_sorted(&self.ring, out)
    }

    /// `self - c * m * g` in one merge pass; the workhorse of reduction.
    pub fn sub_scaled_shifted(&self, c: &K, m: &Monomial, g: &Self) -> Self {
        debug_assert!(same_ring(&self.ring, &g.ring));
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let order = self.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut shifted = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc.clone() * c.clone()));
        let mut pending = shifted.next();
        while let Some((mb, cb)) = pending.take() {
            while i < self.terms.len() && order.cmp(&self.terms[i].0, &mb) == Ordering::Greater {
                out.push(self.terms[i].clone());
                i += 1;
            }
            if i < self.terms.len() && self.terms[i].0 == mb {
                let v = self.terms[i].1.clone() - cb;
                if !v.is_zero() {
                    out.push((mb, v));
                }
                i += 1;
            } else {
                out.push((mb, -cb));
            }
            pending = shifted.next();
        }
        out.extend(self.terms[i..].iter().cloned());
        Self::from_sorted(&self.ring, out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.try_mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, K> = HashMap::with_capacity(small.len() * large.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.try_mul(mb)?;
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Self::from_sorted(&self.ring, terms))
    }

    /// Multiply by the single term `c * m`.
    pub fn try_mul_term(&self, m: &Monomial, c: &K) -> Result<Self, PolyError> {
        if c.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| Ok((tm.try_mul(m)?, tc.clone() * c.clone())))
            .collect::<Result<Vec<_>, PolyError>>()?;
        // Multiplication by a monomial preserves the order.
        Ok(Self::from_sorted(&self.ring, terms))
    }

    pub fn mul_term(&self, m: &Monomial, c: &K) -> Self {
        self.try_mul_term(m, c).expect("monomial exponent overflow")
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, tc)| (m.clone(), tc.clone() * c.clone()))
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Leading coefficient scaled to one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero")),
        }
    }

    /// Field-specific normal form up to scalars: for rationals, coprime integer
    /// coefficients with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<K> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        let s = K::normalizing_scale(&coeffs);
        if s.is_one() {
            self.clone()
        } else {
            self.scale(&s)
        }
    }

    /// The unique `q` with `self = q * divisor`, if it exists.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_ring(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = lc.inverse().expect("nonzero leading coefficient");
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            // If g | f then every intermediate remainder is a multiple of g, whose
            // leading monomial is divisible by lm(g).
            let shift = lm.quotient_of(m).ok_or(PolyError::InexactDivision)?;
            let qc = c.clone() * lc_inv.clone();
            rest = rest.sub_scaled_shifted(&qc, &shift, divisor);
            quotient.push((shift, qc));
        }
        Ok(Self::from_sorted(&self.ring, quotient))
    }

    pub fn partial_derivative(&self, index: usize) -> Self {
        assert!(index < self.ring.nvars(), "variable index out of range");
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(index);
            (e > 0).then(|| {
                (
                    m.with_exponent(index, (e - 1) as u16),
                    c.clone() * K::from_i64(e as i64),
                )
            })
        });
        Self::from_terms(&self.ring, terms)
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.ring.nvars()).map(|i| self.partial_derivative(i)).collect()
    }

    /// Ring homomorphism `x_i -> images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Self]) -> Result<Self, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => {
                // Zero-variable ring: constants map to themselves.
                return Ok(self.clone());
            }
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<Self>> = images.iter().map(|p| vec![Self::one(&target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, K> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Self::constant(&target, c.clone());
            for (i, e) in m.exponents().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                term = term.try_mul(&cache[e as usize])?;
            }
            for (tm, tc) in term.terms {
                match acc.get_mut(&tm) {
                    Some(v) => *v += tc,
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Ok(Self::from_terms(&target, acc))
    }

    /// Replace `x_index` by the constant `value`, staying in the same ring.
    pub fn specialize(&self, index: usize, value: &K) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            for _ in 0..m.exponent(index) {
                coeff *= value.clone();
            }
            (m.without(index), coeff)
        });
        Self::from_terms(&self.ring, terms)
    }

    pub fn evaluate(&self, point: &[K]) -> Result<K, PolyError> {
        if point.len() != self.ring.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.nvars(),
                found: point.len(),
            });
        }
        let mut total = K::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x.clone();
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Same polynomial re-sorted under another term order.
    pub fn reorder(&self, order: TermOrder) -> Self {
        if order == self.order() {
            return self.clone();
        }
        let ring = self.ring.with_order(order);
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self::from_sorted(&ring, terms)
    }

    /// Move into `ring`, which must have the same variables (possibly another order).
    pub fn to_ring(&self, ring: &RingRef) -> Result<Self, PolyError> {
        if ring.vars() != self.ring.vars() {
            return Err(PolyError::RingMismatch);
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Self::from_sorted(ring, terms))
    }

    /// Coefficient vector w.r.t. `x0..x{n-1}` for a homogeneous linear form.
    pub fn linear_coefficients(&self) -> Result<Vec<K>, PolyError> {
        if self.terms.iter().any(|(m, _)| m.degree() != 1) {
            return Err(PolyError::NotLinear);
        }
        let mut v = vec![K::zero(); self.ring.nvars()];
        for (m, c) in &self.terms {
            let i = m.pure_power_of().expect("degree-one monomial");
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Homogeneous linear form `sum coeffs[i] * x_i`.
    pub fn linear_form(ring: &RingRef, coeffs: &[K]) -> Self {
        assert_eq!(coeffs.len(), ring.nvars());
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(ring.nvars(), i, 1), c.clone()));
        Self::from_terms(ring, terms)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, K: Field> $tr<&'a Poly<K>> for &'a Poly<K> {
            type Output = Poly<K>;
            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &'a Poly<K>) -> Poly<K> {
                self.$checked(rhs)
                    .expect(concat!("polynomial ", stringify!($method)))
            }
        }

        impl<K: Field> $tr<Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $method(self, rhs: Poly<K>) -> Poly<K> {
                (&self).$method(&rhs)
            }
        }

        impl<'a, K: Field> $tr<&'a Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $method(self, rhs: &'a Poly<K>) -> Poly<K> {
                (&self).$method(rhs)
            }
        }

        impl<'a, K: Field> $tr<Poly<K>> for &'a Poly<K> {
            type Output = Poly<K>;
            fn $method(self, rhs: Poly<K>) -> Poly<K> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Poly::from_sorted(&self.ring, terms)
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        -&self
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_poly(self))
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse, Ring};
    use super::*;
    use crate::poly::field::int;

    fn ring() -> RingRef {
        Ring::projective3()
    }

    fn p(s: &str) -> Poly {
        parse(&ring(), s).unwrap()
    }

    #[test]
    fn addition_cancels() {
        assert_eq!(p("x0 + x1") + p("x0 - x1"), p("2*x0"));
        assert_eq!(p("x0^2 + 3") + p("-x0^2 + x1"), p("x1 + 3"));
        assert_eq!(p("x0*x1 - 7") + Poly::zero(&ring()), p("x0*x1 - 7"));
    }

    #[test]
    fn multiplication() {
        assert_eq!(p("x0 + x1") * p("x0 - x1"), p("x0^2 - x1^2"));
        assert_eq!(p("x0 + x1").pow(3), p("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"));
        assert_eq!(p("x2 - 5/3") * Poly::one(&ring()), p("x2 - 5/3"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x0^2 - x1^2").exact_divide(&p("x0 - x1")).unwrap(), p("x0 + x1"));
        assert_eq!(p("x0^2 + 1").exact_divide(&p("x1")), Err(PolyError::InexactDivision));
        assert_eq!(
            p("x0").exact_divide(&Poly::zero(&ring())),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x0^3").partial_derivative(0), p("3*x0^2"));
        assert!(p("x1*x2").partial_derivative(0).is_zero());
        let cusp = p("x0*x1 - x2^3");
        let origin = vec![int(0); 4];
        for g in cusp.gradient() {
            assert_eq!(g.evaluate(&origin).unwrap(), int(0));
        }
    }

    #[test]
    fn substitution_along_twisted_cubic() {
        let t = Ring::indexed("t", 2, TermOrder::Grevlex);
        let phi: Vec<Poly> = ["t0^2*t1", "t0*t1^2", "t0^3", "t1^3"]
            .iter()
            .map(|s| parse(&t, s).unwrap())
            .collect();
        assert!(p("x0*x3 - x1^2").substitute(&phi).unwrap().is_zero());
        let identity: Vec<Poly> = (0..4).map(|i| Poly::var(&ring(), i)).collect();
        let f = p("x0^2*x3 - 4*x1 + 1/2");
        assert_eq!(f.substitute(&identity).unwrap(), f);
        let swap: Vec<Poly> = ["x1", "x0", "x3", "x2"].iter().map(|s| p(s)).collect();
        assert_eq!(p("x0").substitute(&swap).unwrap(), p("x1"));
        assert!(matches!(f.substitute(&swap[..3]), Err(PolyError::ArityMismatch { .. })));
    }

    #[test]
    fn evaluation() {
        let s = p("49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2");
        assert_eq!(s.evaluate(&[int(1), int(1), int(1), int(1)]).unwrap(), int(0));
        let f = p("x0^3 - 2*x1 + 17/5");
        assert_eq!(f.evaluate(&vec![int(0); 4]).unwrap(), f.constant_term());
        let s2 = p("x3^2 - x2^2");
        for j in 1..=3 {
            assert_eq!(s2.evaluate(&[int(j), int(j * j), int(1), int(1)]).unwrap(), int(0));
        }
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let other = Ring::indexed("y", 4, TermOrder::Grevlex);
        let y = Poly::<Rational>::var(&other, 0);
        assert_eq!(p("x0").try_add(&y), Err(PolyError::RingMismatch));
        let lex = p("x0").reorder(TermOrder::Lex);
        assert_eq!(p("x0").try_mul(&lex), Err(PolyError::RingMismatch));
    }

    #[test]
    fn reorder_resorts_terms() {
        let f = p("x0*x2 + x1^2");
        assert_eq!(f.leading_monomial(), p("x1^2").leading_monomial());
        let g = f.reorder(TermOrder::Lex);
        assert_eq!(g.terms()[0].0, p("x0*x2").terms()[0].0);
        assert_eq!(g.reorder(TermOrder::Grevlex), f);
    }

    #[test]
    fn coefficient_lookup() {
        let f = p("3*x0^2 - x1*x3 + 2");
        assert_eq!(
            f.coefficient(&Monomial::from_exponents(&[0, 1, 0, 1]).unwrap()),
            int(-1)
        );
        assert_eq!(f.coefficient(&Monomial::one(4)), int(2));
        assert_eq!(f.coefficient(&Monomial::from_exponents(&[1, 0, 0, 0]).unwrap()), int(0));
    }
}
