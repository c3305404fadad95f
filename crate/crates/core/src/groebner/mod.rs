//! Buchberger's algorithm, normal forms and ideal/radical membership.

mod buchberger;

pub use buchberger::{buchberger, s_polynomial};

use thiserror::Error;

use crate::poly::{Field, Monomial, Poly, Rational, RingRef, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("polynomial and basis use different rings or term orders")]
    OrderMismatch,
    #[error("ideal generators belong to different rings")]
    RingMismatch,
}

/// Finitely generated ideal. Zero generators are dropped on construction.
#[derive(Clone, Debug)]
pub struct Ideal<K: Field = Rational> {
    ring: RingRef,
    generators: Vec<Poly<K>>,
}

impl<K: Field> Ideal<K> {
    pub fn new(ring: &RingRef, generators: Vec<Poly<K>>) -> Result<Self, GroebnerError> {
        if generators.iter().any(|g| g.ring().vars() != ring.vars()) {
            return Err(GroebnerError::RingMismatch);
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.to_ring(ring).expect("same variables"))
            .collect();
        Ok(Ideal {
            ring: ring.clone(),
            generators,
        })
    }

    /// Ideal of the given generators in their own ring; panics on an empty list.
    pub fn from_generators(generators: Vec<Poly<K>>) -> Result<Self, GroebnerError> {
        let ring = generators.first().expect("at least one generator").ring().clone();
        Self::new(&ring, generators)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly<K>] {
        &self.generators
    }

    /// Reduced Gröbner basis under `order`.
    pub fn groebner_basis(&self, order: TermOrder) -> GroebnerBasis<K> {
        buchberger(self, order)
    }

    /// `g ∈ I`, decided by a reduced grevlex basis.
    pub fn contains(&self, g: &Poly<K>) -> bool {
        let basis = self.groebner_basis(TermOrder::Grevlex);
        basis.contains(g)
    }

    /// Least `p <= p_max` with `g^p ∈ I`.
    pub fn radical_membership(&self, g: &Poly<K>, p_max: u32) -> Option<u32> {
        self.groebner_basis(TermOrder::Grevlex).radical_membership(g, p_max)
    }
}

/// Reduced Gröbner basis: monic elements sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<K: Field = Rational> {
    ring: RingRef,
    elements: Vec<Poly<K>>,
    reduced: bool,
}

impl<K: Field> GroebnerBasis<K> {
    pub(crate) fn from_parts(ring: RingRef, elements: Vec<Poly<K>>, reduced: bool) -> Self {
        GroebnerBasis {
            ring,
            elements,
            reduced,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Poly<K>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True iff the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero basis element"))
            .collect()
    }

    /// Remainder of `g` on division by the basis, divisors tried in basis order.
    pub fn normal_form(&self, g: &Poly<K>) -> Result<Poly<K>, GroebnerError> {
        if **g.ring() != *self.ring {
            return Err(GroebnerError::OrderMismatch);
        }
        Ok(reduce(g, &self.elements))
    }

    pub fn contains(&self, g: &Poly<K>) -> bool {
        let g = g.to_ring(&self.ring).expect("same variables");
        reduce(&g, &self.elements).is_zero()
    }

    /// Least `p <= p_max` with `g^p` in the ideal, using `NF(g^p) = NF(NF(g^(p-1)) * g)`.
    pub fn radical_membership(&self, g: &Poly<K>, p_max: u32) -> Option<u32> {
        let g = g.to_ring(&self.ring).expect("same variables");
        let mut current = Poly::one(&self.ring);
        for p in 1..=p_max {
            current = reduce(&(&current * &g), &self.elements);
            if current.is_zero() {
                return Some(p);
            }
        }
        None
    }

    /// Every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional_affine(&self) -> bool {
        self.is_zero_dimensional_in(&(0..self.ring.nvars()).collect::<Vec<_>>())
    }

    /// Zero-dimensionality test restricted to the variables in `vars`
    /// (other variables are assumed absent from the basis).
    pub fn is_zero_dimensional_in(&self, vars: &[usize]) -> bool {
        if self.is_unit_ideal() {
            return true;
        }
        let lms = self.leading_monomials();
        vars.iter().all(|&v| lms.iter().any(|m| m.pure_power_of() == Some(v)))
    }

    /// Buchberger's criterion re-checked: every pair S-polynomial reduces to zero.
    pub fn s_pair_audit(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| reduce(&s_polynomial(&self.elements[i], &self.elements[j]), &self.elements).is_zero())
        })
    }
}

/// Full reduction of `f` by `divisors` (leading and tail terms).
pub(crate) fn reduce<K: Field>(f: &Poly<K>, divisors: &[Poly<K>]) -> Poly<K> {
    let ring = f.ring().clone();
    let mut rest = f.clone();
    let mut remainder: Vec<(Monomial, K)> = Vec::new();
    let lead_inv: Vec<K> = divisors
        .iter()
        .map(|d| d.leading_coeff().expect("nonzero divisor").inverse().expect("nonzero"))
        .collect();
    'outer: while let Some((m, c)) = rest.leading_term().cloned() {
        for (d, inv) in divisors.iter().zip(&lead_inv) {
            let lm = d.leading_monomial().expect("nonzero divisor");
            if let Some(shift) = lm.quotient_of(&m) {
                rest = rest.sub_scaled_shifted(&(c * inv.clone()), &shift, d);
                continue 'outer;
            }
        }
        remainder.push((m, c));
        rest = rest.without_leading_term();
    }
    Poly::from_sorted(&ring, remainder)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, Ring};

    fn r() -> RingRef {
        Ring::indexed("x", 2, TermOrder::Grevlex)
    }

    fn p(s: &str) -> Poly {
        parse(&r(), s).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(&r(), gens.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn normal_form_by_coordinate_ideal() {
        let gb = ideal(&["x0", "x1"]).groebner_basis(TermOrder::Grevlex);
        assert_eq!(gb.normal_form(&p("x0^2 + x1 + 5")).unwrap(), p("5"));
    }

    #[test]
    fn normal_form_hand_reduction() {
        // x0^4 ≡ x1^2 ≡ x0 modulo <x0^2 - x1, x1^2 - x0>.
        let gb = ideal(&["x0^2 - x1", "x1^2 - x0"]).groebner_basis(TermOrder::Grevlex);
        assert!(gb.normal_form(&p("x0^4 - x0")).unwrap().is_zero());
        assert!(gb.s_pair_audit());
    }

    #[test]
    fn membership() {
        let i = ideal(&["x0", "x1"]);
        assert!(i.contains(&p("x0 + x1")));
        assert!(!i.contains(&p("1")));
    }

    #[test]
    fn radical_membership_powers() {
        assert_eq!(ideal(&["x0^2"]).radical_membership(&p("x0"), 5), Some(2));
        assert_eq!(ideal(&["x0"]).radical_membership(&p("x0 + 1"), 10), None);
        assert_eq!(ideal(&["x0*x1^3", "x0^3"]).radical_membership(&p("x0"), 4), Some(3));
    }

    #[test]
    fn zero_dimensionality() {
        assert!(ideal(&["x0^2", "x1^3"])
            .groebner_basis(TermOrder::Grevlex)
            .is_zero_dimensional_affine());
        assert!(!ideal(&["x0"])
            .groebner_basis(TermOrder::Grevlex)
            .is_zero_dimensional_affine());
        assert!(ideal(&["x0^2 - 1", "x1 - x0"])
            .groebner_basis(TermOrder::Grevlex)
            .is_zero_dimensional_affine());
    }

    #[test]
    fn normal_form_rejects_other_order() {
        let gb = ideal(&["x0", "x1"]).groebner_basis(TermOrder::Grevlex);
        let g = p("x0").reorder(TermOrder::Lex);
        assert_eq!(gb.normal_form(&g), Err(GroebnerError::OrderMismatch));
    }
}
