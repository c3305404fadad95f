//! Ternary linear codes: weights, the Griesmer bound, and the search for
//! candidate three-divisible cusp sets.

mod enumerate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use enumerate::{
    barth_configuration, coplanar_subsets, enumerate_divisible_families, extends_to_dimension_three, CuspConfiguration,
    Enumeration,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("word {index} has length {found}, expected {expected}")]
    LengthMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("cannot parse ternary word `{0}`")]
    BadWord(String),
    #[error("permutation {0} is not a symmetry of the point set")]
    BadSymmetry(usize),
}

/// Vector over `F3`; entries stored as residues `0, 1, 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F3Vector(Vec<u8>);

impl F3Vector {
    pub fn new(entries: &[i64]) -> Self {
        F3Vector(entries.iter().map(|e| e.rem_euclid(3) as u8).collect())
    }

    pub fn zero(len: usize) -> Self {
        F3Vector(vec![0; len])
    }

    pub(crate) fn from_residues(v: Vec<u8>) -> Self {
        debug_assert!(v.iter().all(|&x| x < 3));
        F3Vector(v)
    }

    /// Accepts compact words such as `0011(-1)(-1)11` or `00112211`, or
    /// separated entries such as `0 0 1 1 -1 -1 1 1` / `0,0,1,1,-1,-1,1,1`.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let bad = || CodeError::BadWord(text.to_string());
        let t = text.trim();
        if t.is_empty() {
            return Err(bad());
        }
        if t.contains([',', ' ']) {
            let entries = t
                .split([',', ' '])
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Self::new(&entries));
        }
        let mut out = Vec::new();
        let mut chars = t.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '0' | '1' | '2' => out.push(c as i64 - '0' as i64),
                '(' => {
                    let inner: String = chars.by_ref().take_while(|&c| c != ')').collect();
                    out.push(inner.trim().parse::<i64>().map_err(|_| bad())?);
                }
                '-' => match chars.next() {
                    Some(d @ '0'..='2') => out.push(-(d as i64 - '0' as i64)),
                    _ => return Err(bad()),
                },
                _ => return Err(bad()),
            }
        }
        Ok(Self::new(&out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn residues(&self) -> &[u8] {
        &self.0
    }

    /// Entries as `-1, 0, 1`.
    pub fn signed(&self) -> Vec<i8> {
        self.0.iter().map(|&x| if x == 2 { -1 } else { x as i8 }).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    /// Nonzero positions, 1-based.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).map(|i| i + 1).collect()
    }

    pub fn add(&self, other: &F3Vector) -> F3Vector {
        F3Vector(self.0.iter().zip(&other.0).map(|(a, b)| (a + b) % 3).collect())
    }

    pub fn scale(&self, c: u8) -> F3Vector {
        F3Vector(self.0.iter().map(|a| (a * c) % 3).collect())
    }

    /// Multiple with first nonzero entry equal to one.
    pub fn normalized(&self) -> F3Vector {
        match self.0.iter().find(|&&x| x != 0) {
            Some(2) => self.scale(2),
            _ => self.clone(),
        }
    }
}

pub fn weight(v: &F3Vector) -> usize {
    v.weight()
}

impl fmt::Display for F3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.signed() {
            if x < 0 {
                write!(f, "({x})")?;
            } else {
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for F3Vector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.signed().serialize(s)
    }
}

/// `Σ_{i<d} ⌈r / 3^i⌉`.
pub fn griesmer_sum(d: u32, r: u64) -> u64 {
    (0..d).map(|i| r.div_ceil(3u64.pow(i))).sum()
}

/// Griesmer bound `q >= Σ_{i<d} ⌈r / 3^i⌉` for a ternary `[q, d]` code of minimum weight `r`.
pub fn griesmer_holds(q: u64, d: u32, r: u64) -> bool {
    q >= griesmer_sum(d, r)
}

/// Linear code over `F3` given by generator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryCode {
    length: usize,
    generators: Vec<F3Vector>,
    basis: Vec<F3Vector>,
}

impl TernaryCode {
    pub fn new(length: usize, generators: Vec<F3Vector>) -> Result<Self, CodeError> {
        for (index, g) in generators.iter().enumerate() {
            if g.len() != length {
                return Err(CodeError::LengthMismatch {
                    index,
                    expected: length,
                    found: g.len(),
                });
            }
        }
        let basis = row_reduce(&generators, length);
        Ok(TernaryCode {
            length,
            generators,
            basis,
        })
    }

    /// Length taken from the first word; an empty list gives the zero code of length 0.
    pub fn from_words(words: Vec<F3Vector>) -> Result<Self, CodeError> {
        let len = words.first().map_or(0, F3Vector::len);
        Self::new(len, words)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[F3Vector] {
        &self.generators
    }

    /// Reduced row echelon generator matrix.
    pub fn basis(&self) -> &[F3Vector] {
        &self.basis
    }

    /// All `3^d` codewords, sorted.
    pub fn codewords(&self) -> Vec<F3Vector> {
        let mut words = vec![F3Vector::zero(self.length)];
        for b in &self.basis {
            let mut next = Vec::with_capacity(words.len() * 3);
            for w in &words {
                next.push(w.clone());
                next.push(w.add(b));
                next.push(w.add(&b.scale(2)));
            }
            words = next;
        }
        words.sort();
        words
    }

    pub fn weight_distribution(&self) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::new();
        for w in self.codewords() {
            *dist.entry(w.weight()).or_insert(0) += 1;
        }
        dist
    }

    /// Every nonzero codeword has weight exactly `r` (vacuous for the zero code).
    pub fn is_constant_weight(&self, r: usize) -> bool {
        self.codewords().iter().all(|w| w.is_zero() || w.weight() == r)
    }

    /// Supports (1-based, sorted) of the nonzero codewords.
    pub fn supports(&self) -> BTreeSet<Vec<usize>> {
        self.codewords()
            .iter()
            .filter(|w| !w.is_zero())
            .map(F3Vector::support)
            .collect()
    }

    pub fn minimum_weight(&self) -> Option<usize> {
        self.codewords()
            .iter()
            .filter(|w| !w.is_zero())
            .map(F3Vector::weight)
            .min()
    }
}

pub fn is_constant_weight(code: &TernaryCode, r: usize) -> bool {
    code.is_constant_weight(r)
}

pub fn supports(code: &TernaryCode) -> BTreeSet<Vec<usize>> {
    code.supports()
}

/// The `[8, 2, {6}]` code spanned by `11111100` and `0011(-1)(-1)11`.
pub fn eight_cusp_code() -> TernaryCode {
    TernaryCode::new(
        8,
        vec![
            F3Vector::new(&[1, 1, 1, 1, 1, 1, 0, 0]),
            F3Vector::new(&[0, 0, 1, 1, -1, -1, 1, 1]),
        ],
    )
    .expect("equal lengths")
}

fn row_reduce(rows: &[F3Vector], len: usize) -> Vec<F3Vector> {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut r = 0;
    for c in 0..len {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(p, r);
        // In F3 every nonzero element is its own inverse.
        let inv = m[r][c];
        for x in m[r].iter_mut() {
            *x = (*x * inv) % 3;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = 3 - m[i][c];
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = (*x + f * p) % 3;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m.into_iter().map(F3Vector).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_and_parsing() {
        assert_eq!(weight(&F3Vector::new(&[1, 1, 1, 1, 1, 1, 0, 0])), 6);
        assert_eq!(weight(&F3Vector::zero(8)), 0);
        let w = F3Vector::parse("0011(-1)(-1)11").unwrap();
        assert_eq!(w, F3Vector::new(&[0, 0, 1, 1, -1, -1, 1, 1]));
        assert_eq!(w.weight(), 6);
        assert_eq!(w.to_string(), "0011(-1)(-1)11");
        assert_eq!(F3Vector::parse("0 0 1 1 -1 -1 1 1").unwrap(), w);
        assert_eq!(F3Vector::parse("00112211").unwrap(), w);
        assert!(F3Vector::parse("0013").is_err());
    }

    #[test]
    fn griesmer() {
        assert!(griesmer_holds(8, 2, 6));
        assert_eq!(griesmer_sum(2, 6), 8);
        assert!(!griesmer_holds(8, 3, 6));
        assert!(griesmer_holds(6, 1, 6));
    }

    #[test]
    fn eight_cusp() {
        let c = eight_cusp_code();
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.weight_distribution(), BTreeMap::from([(0, 1), (6, 8)]));
        assert!(c.is_constant_weight(6));
        assert_eq!(c.supports().len(), 4);
    }

    #[test]
    fn small_codes() {
        let full = TernaryCode::new(2, vec![F3Vector::new(&[1, 0]), F3Vector::new(&[0, 1])]).unwrap();
        assert!(!full.is_constant_weight(2));
        let zero = TernaryCode::new(3, vec![F3Vector::zero(3)]).unwrap();
        assert_eq!(zero.dimension(), 0);
        assert!(zero.is_constant_weight(5));
        assert!(zero.supports().is_empty());
        let one = TernaryCode::new(8, vec![F3Vector::new(&[1, 1, 1, 1, 1, 1, 0, 0])]).unwrap();
        assert_eq!(one.supports(), BTreeSet::from([vec![1, 2, 3, 4, 5, 6]]));
        assert!(TernaryCode::from_words(vec![F3Vector::zero(3), F3Vector::zero(4)]).is_err());
    }
}
