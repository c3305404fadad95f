use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::PolyError;

/// Largest exponent allowed for a single variable.
pub const MAX_EXPONENT: u32 = u16::MAX as u32;

/// Exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 6]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = exp;
        m.degree = exp as u32;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self, PolyError> {
        let mut out = SmallVec::with_capacity(exps.len());
        for &e in exps {
            if e > MAX_EXPONENT {
                return Err(PolyError::ExponentOverflow);
            }
            out.push(e as u16);
        }
        let degree = exps.iter().sum();
        Ok(Monomial { exps: out, degree })
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product; fails when an exponent leaves the `u16` range.
    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(PolyError::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self.degree + other.degree,
        })
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 6]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable occurring, if this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Copy with exponent of `index` set to zero.
    pub(crate) fn without(&self, index: usize) -> Monomial {
        let mut m = self.clone();
        m.degree -= m.exps[index] as u32;
        m.exps[index] = 0;
        m
    }

    pub(crate) fn with_exponent(&self, index: usize, exp: u16) -> Monomial {
        let mut m = self.without(index);
        m.exps[index] = exp;
        m.degree += exp as u32;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial order. Grevlex is the default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    #[default]
    Grevlex,
    Lex,
    Grlex,
}

impl TermOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => lex(a, b),
            TermOrder::Grlex => a.degree.cmp(&b.degree).then_with(|| lex(a, b)),
            TermOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                // Smaller exponent in the last differing variable wins.
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Grevlex => "grevlex",
            TermOrder::Lex => "lex",
            TermOrder::Grlex => "grlex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" | "tdeg" => Ok(TermOrder::Grevlex),
            "lex" | "plex" => Ok(TermOrder::Lex),
            "grlex" => Ok(TermOrder::Grlex),
            other => Err(format!("unknown term order `{other}`")),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps.cmp(&b.exps)
}
