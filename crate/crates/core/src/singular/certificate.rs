use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::geometry::solve::projective_rational_points;
use crate::geometry::{DivisibleFamily, ProjectivePoint};
use crate::groebner::GroebnerBasis;
use crate::linalg::Matrix;
use crate::poly::{parse, Poly, Rational, Ring, RingRef, TermOrder};

use super::classify::{local_equation, local_linear_form};
use super::{
    classify, gradient_at, jacobian_ideal, transversal_at, SingularError, SingularityKind, SingularityVerdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Powers of the named polynomials lie in the jacobian ideal.
    SingularLocusContainment,
    /// Tangent-cone check that the contact curves are smooth at the cusps.
    CuspDivisibility,
    /// Containment plus exact solution of the remaining finite system.
    NoExtraSingularities,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    fn with(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub point: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<SingularityVerdict>,
    pub checks: Vec<Check>,
}

/// Machine-checkable record of a claim; `recheck` recomputes everything from
/// the stored inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub claim: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(default)]
    pub points: Vec<PointRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_size: Option<usize>,
    #[serde(default)]
    pub exponents: BTreeMap<String, Option<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_max: Option<u32>,
    #[serde(default)]
    pub checks: Vec<Check>,
    pub verified: bool,
}

impl Certificate {
    fn new(kind: CertificateKind, claim: String) -> Self {
        Certificate {
            kind,
            claim,
            inputs: BTreeMap::new(),
            points: Vec::new(),
            basis_size: None,
            exponents: BTreeMap::new(),
            p_max: None,
            checks: Vec::new(),
            verified: false,
        }
    }

    fn finish(mut self) -> Self {
        self.verified =
            self.checks.iter().all(|c| c.passed) && self.points.iter().all(|p| p.checks.iter().all(|c| c.passed));
        self
    }

    fn ring(&self) -> Result<RingRef, SingularError> {
        let vars = self.input("vars")?;
        let names: Vec<&str> = vars.split(',').map(str::trim).collect();
        Ok(Ring::new(&names, TermOrder::Grevlex)?)
    }

    fn input(&self, key: &str) -> Result<&str, SingularError> {
        self.inputs
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| SingularError::Malformed(format!("missing input `{key}`")))
    }

    fn poly(&self, ring: &RingRef, key: &str) -> Result<Poly, SingularError> {
        parse(ring, self.input(key)?).map_err(|e| SingularError::Malformed(format!("{key}: {e}")))
    }

    fn named_polys(&self, ring: &RingRef) -> Result<Vec<(String, Poly)>, SingularError> {
        self.inputs
            .keys()
            .filter_map(|k| k.strip_prefix("g:"))
            .map(|name| Ok((name.to_string(), self.poly(ring, &format!("g:{name}"))?)))
            .collect()
    }

    fn recorded_points(&self) -> Result<Vec<ProjectivePoint>, SingularError> {
        self.points.iter().map(|r| parse_point(&r.point)).collect()
    }

    /// Re-run every check from the stored inputs; true iff the result is
    /// identical to this certificate and verified.
    pub fn recheck(&self) -> Result<bool, SingularError> {
        let ring = self.ring()?;
        let again = match self.kind {
            CertificateKind::SingularLocusContainment => {
                let f = self.poly(&ring, "F")?;
                let p_max = self
                    .p_max
                    .ok_or_else(|| SingularError::Malformed("missing p_max".into()))?;
                let gs = self.named_polys(&ring)?;
                let named: Vec<(&str, &Poly)> = gs.iter().map(|(n, g)| (n.as_str(), g)).collect();
                let gb = jacobian_ideal(&f)?.groebner_basis(TermOrder::Grevlex);
                singular_locus_contained_in_basis(&f, &gb, &named, p_max)
            }
            CertificateKind::CuspDivisibility => {
                let family = DivisibleFamily::new(
                    self.poly(&ring, "Lp")?,
                    self.poly(&ring, "Lpp")?,
                    self.poly(&ring, "Fp")?,
                    self.poly(&ring, "Fpp")?,
                    self.poly(&ring, "R")?,
                )?;
                cusp_divisibility_certificate(&family, &self.recorded_points()?)?
            }
            CertificateKind::NoExtraSingularities => {
                let f = self.poly(&ring, "F")?;
                let p_max = self
                    .p_max
                    .ok_or_else(|| SingularError::Malformed("missing p_max".into()))?;
                let gs = self.named_polys(&ring)?;
                let named: Vec<(&str, &Poly)> = gs.iter().map(|(n, g)| (n.as_str(), g)).collect();
                let gb = jacobian_ideal(&f)?.groebner_basis(TermOrder::Grevlex);
                no_extra_singularities(&f, &gb, &named, &self.recorded_points()?, p_max)?
            }
        };
        Ok(again.verified && &again == self)
    }
}

/// Parses `(a : b : c : d)` with rational entries.
pub(crate) fn parse_point(text: &str) -> Result<ProjectivePoint, SingularError> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| SingularError::Malformed(format!("bad point `{text}`")))?;
    let coords = inner
        .split(':')
        .map(|c| {
            c.trim()
                .parse::<Rational>()
                .map_err(|_| SingularError::Malformed(format!("bad coordinate in `{text}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProjectivePoint::new(coords)?)
}

fn base_inputs(f: &Poly) -> BTreeMap<String, String> {
    let mut inputs = BTreeMap::new();
    inputs.insert("vars".into(), f.ring().vars().join(","));
    inputs.insert("F".into(), f.to_string());
    inputs
}

/// Least `p <= p_max` with `g^p` in the jacobian ideal of `f`; verified iff found.
pub fn singular_locus_contained_in(f: &Poly, g: &Poly, p_max: u32) -> Result<Certificate, SingularError> {
    let gb = jacobian_ideal(f)?.groebner_basis(TermOrder::Grevlex);
    Ok(singular_locus_contained_in_basis(f, &gb, &[("g", g)], p_max))
}

/// Containment certificate for several polynomials sharing one jacobian basis.
pub fn singular_locus_contained_in_basis(
    f: &Poly,
    gb: &GroebnerBasis,
    gs: &[(&str, &Poly)],
    p_max: u32,
) -> Certificate {
    let names: Vec<&str> = gs.iter().map(|(n, _)| *n).collect();
    let mut cert = Certificate::new(
        CertificateKind::SingularLocusContainment,
        format!("the singular locus of F = 0 lies on each of {}", names.join(", ")),
    );
    cert.inputs = base_inputs(f);
    cert.basis_size = Some(gb.len());
    cert.p_max = Some(p_max);
    for (name, g) in gs {
        cert.inputs.insert(format!("g:{name}"), g.to_string());
        let p = gb.radical_membership(g, p_max);
        cert.exponents.insert(name.to_string(), p);
        let detail = match p {
            Some(p) => format!("NF({name}^{p}) = 0"),
            None => format!("NF({name}^p) != 0 for p <= {p_max}"),
        };
        cert.checks
            .push(Check::with(&format!("{name} in radical"), p.is_some(), detail));
    }
    cert.finish()
}

/// The singular points of `f` are exactly `claimed`: every `g` is certified
/// to vanish on the singular locus, and `{g = 0} ∩ {∇f = 0}` is solved exactly.
pub fn no_extra_singularities(
    f: &Poly,
    gb: &GroebnerBasis,
    gs: &[(&str, &Poly)],
    claimed: &[ProjectivePoint],
    p_max: u32,
) -> Result<Certificate, SingularError> {
    let containment = singular_locus_contained_in_basis(f, gb, gs, p_max);
    let mut cert = Certificate::new(
        CertificateKind::NoExtraSingularities,
        format!("F = 0 has exactly {} singular points", claimed.len()),
    );
    cert.inputs = containment.inputs.clone();
    cert.basis_size = containment.basis_size;
    cert.exponents = containment.exponents.clone();
    cert.p_max = Some(p_max);
    cert.checks = containment.checks;

    let mut system: Vec<Poly> = gs.iter().map(|(_, g)| (*g).clone()).collect();
    system.extend(f.gradient());
    let solved = projective_rational_points(&system)?;
    cert.checks.push(Check::with(
        "finite system solved over Q",
        solved.is_complete(),
        if solved.is_complete() {
            format!("{} rational points", solved.points.len())
        } else {
            format!("unresolved: {}", solved.unresolved.join("; "))
        },
    ));
    let mut want: Vec<ProjectivePoint> = claimed.to_vec();
    want.sort();
    want.dedup();
    cert.checks.push(Check::with(
        "solutions equal the claimed set",
        solved.points == want,
        solved
            .points
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    ));
    for p in &want {
        cert.points.push(PointRecord {
            point: p.to_string(),
            verdict: None,
            checks: vec![Check::new("singular", super::is_singular_point(f, p))],
        });
    }
    Ok(cert.finish())
}

/// Tangent-cone certificate that the six cusps form a three-divisible set.
///
/// At each cusp `P` (chart `c` = last nonzero coordinate, `P_c = 1`):
/// (a) `S'(P) = S''(P) = S(P) = 0` and `R(P) != 0`;
/// (b) the gradients of `S'`, `S''` at `P` are non-proportional;
/// (c) the local quadratic part of `Y4` equals `λ·l'·l''` with `λ != 0`, where
///     `l', l''` are the dehomogenized tangent forms of `S'`, `S''`.
/// Points violating (a) or not of type A2 on `Y4` are precondition errors.
pub fn cusp_divisibility_certificate(
    family: &DivisibleFamily,
    cusps: &[ProjectivePoint],
) -> Result<Certificate, SingularError> {
    let mut cert = Certificate::new(
        CertificateKind::CuspDivisibility,
        format!("the {} cusps of Y4 form a three-divisible set", cusps.len()),
    );
    let mut inputs = BTreeMap::new();
    inputs.insert("vars".into(), family.ring().vars().join(","));
    for (k, f) in
        ["Lp", "Lpp", "Fp", "Fpp", "R"]
            .iter()
            .zip([family.lp(), family.lpp(), family.fp(), family.fpp(), family.r()])
    {
        inputs.insert(k.to_string(), f.to_string());
    }
    cert.inputs = inputs;
    cert.checks
        .push(Check::new("S'S'' - S^3 = R*Y4", family.identity_holds()));
    cert.checks.push(Check::new(
        "line L' = L'' = 0 not on S",
        family.base_line_off_contact_quadric(),
    ));

    let mut sorted = cusps.to_vec();
    sorted.sort();
    for p in &sorted {
        let pre = |reason: &str| SingularError::Precondition {
            point: p.to_string(),
            reason: reason.into(),
        };
        for (name, f) in [("S'", family.sp()), ("S''", family.spp()), ("S", family.s())] {
            if !p.eval(f).is_zero() {
                return Err(pre(&format!("{name} does not vanish")));
            }
        }
        if p.eval(family.r()).is_zero() {
            return Err(pre("point lies on R"));
        }
        let verdict = classify(family.y4(), p)?;
        if verdict.kind != SingularityKind::A2 {
            return Err(pre(&format!("Y4 has a {} point, not a cusp", verdict.kind.name())));
        }
        let chart = p.last_nonzero();
        let rep = ProjectivePoint::new(p.in_chart(chart).expect("nonzero"))?;
        let g1 = gradient_at(family.sp(), &rep);
        let g2 = gradient_at(family.spp(), &rep);
        let independent = Matrix::from_rows(vec![g1.clone(), g2.clone()]).rank() == 2;

        let mut checks = vec![
            Check::with(
                "on S', S'', S and off R",
                true,
                format!("R(P) = {}", rep.eval(family.r())),
            ),
            Check::new("tangent planes of S', S'' distinct", independent),
            Check::new(
                "S', S'', S transversal",
                transversal_at(&[family.sp(), family.spp(), family.s()], p)?,
            ),
        ];

        let local = local_equation(family.y4(), p, chart)?;
        let f2 = local.homogeneous_component(2);
        let lring = local.ring().clone();
        let l1 = local_linear_form(&g1, chart, &lring);
        let l2 = local_linear_form(&g2, chart, &lring);
        let product = &l1 * &l2;
        let (factor_ok, detail) = match (f2.leading_coeff(), product.leading_coeff()) {
            (Some(a), Some(b)) if f2.leading_monomial() == product.leading_monomial() => {
                let lambda: Rational = a / b;
                let ok = !lambda.is_zero() && product.scale(&lambda) == f2;
                (ok, format!("f2 = ({lambda}) * ({l1}) * ({l2})"))
            }
            _ => (false, format!("f2 = {f2}")),
        };
        checks.push(Check::with("tangent cone = T_P S' + T_P S''", factor_ok, detail));

        cert.points.push(PointRecord {
            point: p.to_string(),
            verdict: Some(verdict),
            checks,
        });
    }
    Ok(cert.finish())
}
