use std::cmp::Ordering;

use crate::poly::{Field, Monomial, Poly, TermOrder};

use super::{reduce, GroebnerBasis, Ideal};

/// `(L/LT(f))·f − (L/LT(g))·g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial<K: Field>(f: &Poly<K>, g: &Poly<K>) -> Poly<K> {
    let (fm, fc) = f.leading_term().expect("nonzero f");
    let (gm, gc) = g.leading_term().expect("nonzero g");
    let l = fm.lcm(gm);
    let uf = fm.quotient_of(&l).expect("lm divides lcm");
    let ug = gm.quotient_of(&l).expect("lm divides lcm");
    let left = f.mul_term(&uf, &fc.inverse().expect("nonzero"));
    let gc_inv = gc.inverse().expect("nonzero");
    left.sub_scaled_shifted(&gc_inv, &ug, g)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of `ideal` under `order`.
///
/// Pairs are processed by the normal strategy (smallest lcm first) and pruned
/// with the Gebauer–Möller installation of Buchberger's product and chain
/// criteria. Intermediate remainders are normalized by content removal.
pub fn buchberger<K: Field>(ideal: &Ideal<K>, order: TermOrder) -> GroebnerBasis<K> {
    let ring = ideal.ring().with_order(order);
    let mut basis: Vec<Poly<K>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Poly<K>> = ideal
        .generators()
        .iter()
        .map(|g| g.to_ring(&ring).expect("same variables").normalized())
        .collect();
    inputs.sort_by(|a, b| cmp_lead(order, a, b));

    for g in inputs {
        let active_elems: Vec<Poly<K>> = active_elements(&basis, &active);
        let h = reduce(&g, &active_elems).normalized();
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(&ring);
        }
        update(&mut basis, &mut active, &mut pairs, h, order);
    }

    while let Some(idx) = select_pair(&pairs, order) {
        let pair = pairs.swap_remove(idx);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let active_elems = active_elements(&basis, &active);
        let h = reduce(&s, &active_elems).normalized();
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit_basis(&ring);
        }
        update(&mut basis, &mut active, &mut pairs, h, order);
    }

    let survivors = active_elements(&basis, &active);
    GroebnerBasis::from_parts(ring, interreduce(survivors, order), true)
}

fn cmp_lead<K: Field>(order: TermOrder, a: &Poly<K>, b: &Poly<K>) -> Ordering {
    match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => order.cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}

fn unit_basis<K: Field>(ring: &crate::poly::RingRef) -> GroebnerBasis<K> {
    GroebnerBasis::from_parts(ring.clone(), vec![Poly::one(ring)], true)
}

fn active_elements<K: Field>(basis: &[Poly<K>], active: &[bool]) -> Vec<Poly<K>> {
    basis
        .iter()
        .zip(active)
        .filter(|(_, &a)| a)
        .map(|(g, _)| g.clone())
        .collect()
}

/// Normal strategy: minimal lcm degree, then minimal lcm in the term order,
/// then the older pair.
fn select_pair(pairs: &[Pair], order: TermOrder) -> Option<usize> {
    (0..pairs.len()).min_by(|&a, &b| {
        let (p, q) = (&pairs[a], &pairs[b]);
        p.lcm
            .degree()
            .cmp(&q.lcm.degree())
            .then_with(|| order.cmp(&p.lcm, &q.lcm))
            .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
    })
}

/// Gebauer–Möller update adding `h` to the basis.
fn update<K: Field>(
    basis: &mut Vec<Poly<K>>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Poly<K>,
    _order: TermOrder,
) {
    let hidx = basis.len();
    let hm = h.leading_monomial().expect("nonzero").clone();
    let lm = |k: usize| basis[k].leading_monomial().expect("nonzero").clone();

    // C: candidate pairs (g, h) for active g, processed in index order.
    let candidates: Vec<(usize, Monomial, bool)> = (0..basis.len())
        .filter(|&k| active[k])
        .map(|k| {
            let gm = lm(k);
            (k, gm.lcm(&hm), gm.is_coprime(&hm))
        })
        .collect();

    // Chain criterion: (h, g1) is dropped when another pair (h, g2) still
    // pending or already kept has an lcm dividing lcm(h, g1).
    let mut kept: Vec<usize> = Vec::new();
    for a in 0..candidates.len() {
        let (_, ref la, coprime) = candidates[a];
        let dominated = candidates[a + 1..].iter().any(|(_, lb, _)| lb.divides(la))
            || kept.iter().any(|&b| candidates[b].1.divides(la));
        if coprime || !dominated {
            kept.push(a);
        }
    }
    // Product criterion: coprime leading monomials never need an S-pair.
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|&a| !candidates[a].2)
        .map(|a| Pair {
            i: candidates[a].0,
            j: hidx,
            lcm: candidates[a].1.clone(),
        })
        .collect();

    // Drop old pairs (i,j) whose lcm is strictly divisible-through by LM(h).
    pairs.retain(|p| {
        if !hm.divides(&p.lcm) {
            return true;
        }
        let lih = lm(p.i).lcm(&hm);
        let ljh = lm(p.j).lcm(&hm);
        lih == p.lcm || ljh == p.lcm
    });
    pairs.extend(new_pairs);

    for k in 0..basis.len() {
        if active[k] && hm.divides(&lm(k)) {
            active[k] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

/// Minimalize, fully reduce, make monic and sort by descending leading monomial.
fn interreduce<K: Field>(mut elems: Vec<Poly<K>>, order: TermOrder) -> Vec<Poly<K>> {
    elems.sort_by(|a, b| cmp_lead(order, a, b));
    let mut minimal: Vec<Poly<K>> = Vec::new();
    for (i, g) in elems.iter().enumerate() {
        let gm = g.leading_monomial().expect("nonzero");
        let redundant = elems.iter().enumerate().any(|(j, f)| {
            let fm = f.leading_monomial().expect("nonzero");
            j != i && fm.divides(gm) && (fm != gm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Poly<K>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly<K>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        // Leading term is irreducible by the others in a minimal basis.
        let (m, c) = minimal[i].leading_term().expect("nonzero").clone();
        let tail = minimal[i].clone().without_leading_term();
        let tail = reduce(&tail, &others);
        let lead = Poly::monomial(minimal[i].ring(), m, c);
        reduced.push((&lead + &tail).monic());
    }
    reduced.sort_by(|a, b| cmp_lead(order, b, a));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, Ring, RingRef};

    fn r2(order: TermOrder) -> RingRef {
        Ring::indexed("x", 2, order)
    }

    #[test]
    fn coordinate_ideal_is_already_reduced() {
        let ring = r2(TermOrder::Grevlex);
        let gens: Vec<Poly> = vec![parse(&ring, "x0").unwrap(), parse(&ring, "x1").unwrap()];
        let gb = buchberger(&Ideal::new(&ring, gens).unwrap(), TermOrder::Grevlex);
        let names: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, vec!["x0", "x1"]);
    }

    #[test]
    fn lex_elimination() {
        let ring = r2(TermOrder::Lex);
        let gens: Vec<Poly> = vec![parse(&ring, "x0 - x1^2").unwrap(), parse(&ring, "x1 - 1").unwrap()];
        let gb = buchberger(&Ideal::new(&ring, gens).unwrap(), TermOrder::Lex);
        let names: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, vec!["x0 - 1", "x1 - 1"]);
    }

    #[test]
    fn s_polynomial_examples() {
        let ring = r2(TermOrder::Grevlex);
        let p = |s: &str| -> Poly { parse(&ring, s).unwrap() };
        assert!(s_polynomial(&p("x0^2"), &p("x0*x1")).is_zero());
        let f = p("x0 + 7*x1 - 2");
        assert!(s_polynomial(&f, &f).is_zero());

        let lex = r2(TermOrder::Lex);
        let q = |s: &str| -> Poly { parse(&lex, s).unwrap() };
        assert_eq!(s_polynomial(&q("x0 + x1"), &q("x1 + 1")), q("x1^2 - x0"));
    }

    #[test]
    fn unit_ideal() {
        let ring = r2(TermOrder::Grevlex);
        let gens: Vec<Poly> = vec![parse(&ring, "x0*x1 - 1").unwrap(), parse(&ring, "x0").unwrap()];
        let gb = buchberger(&Ideal::new(&ring, gens).unwrap(), TermOrder::Grevlex);
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.len(), 1);
    }

    #[test]
    fn zero_ideal_gives_empty_basis() {
        let ring = r2(TermOrder::Grevlex);
        let gb = buchberger(
            &Ideal::new(&ring, vec![Poly::<crate::poly::Rational>::zero(&ring)]).unwrap(),
            TermOrder::Grevlex,
        );
        assert!(gb.is_empty());
    }

    #[test]
    fn twisted_cubic_ideal() {
        let ring = Ring::projective3();
        let gens: Vec<Poly> = ["x0*x3 - x1^2", "x1*x2 - x0^2", "x2*x3 - x0*x1"]
            .iter()
            .map(|s| parse(&ring, s).unwrap())
            .collect();
        let gb = buchberger(&Ideal::new(&ring, gens).unwrap(), TermOrder::Grevlex);
        assert!(gb.s_pair_audit());
        assert!(gb.elements().iter().all(|g| g.is_homogeneous()));
        assert_eq!(gb.len(), 3);
    }
}
