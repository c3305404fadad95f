//! Exhaustive search for two-dimensional constant-weight-6 ternary codes whose
//! support families pass the geometric filters of a cusp configuration.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::geometry::{barth_points, barth_symmetries, ProjectivePoint};
use crate::linalg::Matrix;

use super::{CodeError, F3Vector};

/// Points with a group of symmetries acting on their indices.
#[derive(Clone, Debug)]
pub struct CuspConfiguration {
    points: Vec<ProjectivePoint>,
    symmetries: Vec<Vec<usize>>,
}

impl CuspConfiguration {
    /// `symmetries[k][i]` is the index of the image of point `i` (0-based).
    pub fn new(points: Vec<ProjectivePoint>, symmetries: Vec<Vec<usize>>) -> Result<Self, CodeError> {
        let n = points.len();
        for (k, perm) in symmetries.iter().enumerate() {
            let mut seen = vec![false; n];
            if perm.len() != n || perm.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
                return Err(CodeError::BadSymmetry(k));
            }
        }
        Ok(CuspConfiguration { points, symmetries })
    }

    /// Index permutations induced by coordinate permutations
    /// (`perm[i]` = source coordinate of target coordinate `i`).
    pub fn from_coordinate_symmetries(
        points: Vec<ProjectivePoint>,
        coordinate_perms: &[Vec<usize>],
    ) -> Result<Self, CodeError> {
        let mut symmetries = Vec::new();
        for (k, cp) in coordinate_perms.iter().enumerate() {
            let perm = points
                .iter()
                .map(|p| {
                    let image = ProjectivePoint::new(cp.iter().map(|&j| p.coords()[j].clone()).collect())
                        .map_err(|_| CodeError::BadSymmetry(k))?;
                    points.iter().position(|q| *q == image).ok_or(CodeError::BadSymmetry(k))
                })
                .collect::<Result<Vec<_>, _>>()?;
            symmetries.push(perm);
        }
        Self::new(points, symmetries)
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn symmetries(&self) -> &[Vec<usize>] {
        &self.symmetries
    }

    /// Orbits of the generated group, each sorted, 1-based.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.points.len();
        let mut label: Vec<Option<usize>> = vec![None; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if label[start].is_some() {
                continue;
            }
            let mut orbit = vec![start];
            label[start] = Some(orbits.len());
            let mut i = 0;
            while i < orbit.len() {
                for perm in &self.symmetries {
                    let j = perm[orbit[i]];
                    if label[j].is_none() {
                        label[j] = Some(orbits.len());
                        orbit.push(j);
                    }
                }
                i += 1;
            }
            orbit.sort();
            orbits.push(orbit.into_iter().map(|i| i + 1).collect());
        }
        orbits
    }
}

/// The eight singular points of the Barth quartic with the symmetries
/// `x0 <-> x1` and `x2 <-> x3`.
pub fn barth_configuration() -> CuspConfiguration {
    let perms: Vec<Vec<usize>> = barth_symmetries().iter().map(|p| p.to_vec()).collect();
    CuspConfiguration::from_coordinate_symmetries(barth_points(), &perms).expect("symmetries of the point set")
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

fn coplanar(points: &[ProjectivePoint], subset: &[usize]) -> bool {
    let m = Matrix::from_rows(subset.iter().map(|&i| points[i - 1].coords().to_vec()).collect());
    m.rank() <= 3
}

/// `k`-subsets (1-based) of `points` lying in a plane.
pub fn coplanar_subsets(points: &[ProjectivePoint], k: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (1..=points.len()).collect();
    subsets(&all, k).into_iter().filter(|s| coplanar(points, s)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    /// Two-dimensional codes all of whose nonzero words have weight 6.
    pub codes_examined: usize,
    /// Surviving support families, each a sorted list of sorted 1-based supports.
    pub families: Vec<Vec<Vec<usize>>>,
    /// Codes among those examined that extend to a three-dimensional
    /// constant-weight-6 code (must be zero for length 8).
    pub three_dimensional_extensions: usize,
}

/// Every two-dimensional constant-weight-6 code on the configuration's
/// indices, filtered by: (i) the support family is invariant under each
/// symmetry, (ii) distinct supports share at most four indices, (iii) no
/// support contains five coplanar points. Returns the distinct families.
pub fn enumerate_divisible_families(config: &CuspConfiguration) -> Enumeration {
    let n = config.points.len();
    let mut out = Enumeration {
        codes_examined: 0,
        families: Vec::new(),
        three_dimensional_extensions: 0,
    };
    if n < 6 {
        return out;
    }
    let words = normalized_weight_six(n);
    let mut codes: HashSet<Vec<F3Vector>> = HashSet::new();
    for (a, u) in words.iter().enumerate() {
        for v in &words[a + 1..] {
            // Normalized words are pairwise independent; check u ± v.
            let s = u.add(v);
            let d = u.add(&v.scale(2));
            if s.weight() != 6 || d.weight() != 6 {
                continue;
            }
            let mut code: Vec<F3Vector> = [u.clone(), v.clone(), s.normalized(), d.normalized()].into();
            code.sort();
            codes.insert(code);
        }
    }
    let mut codes: Vec<Vec<F3Vector>> = codes.into_iter().collect();
    codes.sort();
    out.codes_examined = codes.len();

    let mut coplanar_cache: std::collections::HashMap<Vec<usize>, bool> = Default::default();
    let mut families: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    for code in &codes {
        if extends_to_dimension_three(code, &words) {
            out.three_dimensional_extensions += 1;
        }
        let family: BTreeSet<Vec<usize>> = code.iter().map(F3Vector::support).collect();
        let invariant = config.symmetries.iter().all(|perm| {
            let image: BTreeSet<Vec<usize>> = family
                .iter()
                .map(|s| {
                    let mut t: Vec<usize> = s.iter().map(|&i| perm[i - 1] + 1).collect();
                    t.sort();
                    t
                })
                .collect();
            image == family
        });
        if !invariant {
            continue;
        }
        let fam: Vec<Vec<usize>> = family.into_iter().collect();
        let small_overlaps = fam.iter().enumerate().all(|(i, a)| {
            fam[i + 1..]
                .iter()
                .all(|b| a.iter().filter(|x| b.contains(x)).count() <= 4)
        });
        if !small_overlaps {
            continue;
        }
        let no_five_coplanar = fam.iter().all(|s| {
            subsets(s, 5).into_iter().all(|sub| {
                !*coplanar_cache
                    .entry(sub.clone())
                    .or_insert_with(|| coplanar(&config.points, &sub))
            })
        });
        if no_five_coplanar {
            families.insert(fam);
        }
    }
    out.families = families.into_iter().collect();
    out
}

/// Whether some weight-6 word outside the span of `code` (given by its four
/// normalized nonzero words) keeps every word of the enlarged span at weight 6.
pub fn extends_to_dimension_three(code: &[F3Vector], candidates: &[F3Vector]) -> bool {
    let span: Vec<F3Vector> = code.iter().flat_map(|w| [w.clone(), w.scale(2)]).collect();
    candidates.iter().any(|w| {
        !span.contains(w)
            && span.iter().all(|c| {
                let x = c.add(w);
                let y = c.add(&w.scale(2));
                x.weight() == 6 && y.weight() == 6
            })
    })
}

/// Weight-6 words of length `n` with first nonzero entry 1.
fn normalized_weight_six(n: usize) -> Vec<F3Vector> {
    let all: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for support in subsets(&all, 6) {
        for signs in 0u32..(1 << 5) {
            let mut v = vec![0u8; n];
            v[support[0]] = 1;
            for (k, &i) in support[1..].iter().enumerate() {
                v[i] = if signs >> k & 1 == 1 { 2 } else { 1 };
            }
            out.push(F3Vector::from_residues(v));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barth_orbits_and_planes() {
        let cfg = barth_configuration();
        assert_eq!(
            cfg.symmetries(),
            &[vec![2, 3, 0, 1, 5, 4, 6, 7], vec![1, 0, 3, 2, 4, 5, 7, 6]]
        );
        assert_eq!(cfg.orbits(), vec![vec![1, 2, 3, 4], vec![5, 6], vec![7, 8]]);
        let four = coplanar_subsets(cfg.points(), 4);
        assert!(four.contains(&vec![1, 2, 3, 4]));
        assert!(!four.contains(&vec![5, 6, 7, 8]));
        assert!(coplanar_subsets(cfg.points(), 5).contains(&vec![1, 3, 5, 6, 7]));
    }

    #[test]
    fn too_few_points() {
        let pts: Vec<ProjectivePoint> = barth_points().into_iter().take(5).collect();
        let cfg = CuspConfiguration::new(pts, vec![]).unwrap();
        assert!(enumerate_divisible_families(&cfg).families.is_empty());
    }

    #[test]
    fn bad_symmetry_rejected() {
        assert!(CuspConfiguration::new(barth_points(), vec![vec![0, 0, 1, 2, 3, 4, 5, 6]]).is_err());
        let swap03 = vec![3, 1, 2, 0];
        assert!(CuspConfiguration::from_coordinate_symmetries(barth_points(), &[swap03]).is_err());
    }
}
