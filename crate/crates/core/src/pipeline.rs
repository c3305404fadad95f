//! End-to-end runs behind the command-line tool: each function parses its
//! inputs, performs the computation, and returns a [`Report`].

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

use crate::codes::{
    barth_configuration, coplanar_subsets, eight_cusp_code, enumerate_divisible_families, griesmer_holds, griesmer_sum,
    CodeError, CuspConfiguration, F3Vector, TernaryCode,
};
use crate::geometry::catalog::{
    three_lines_family, twisted_cubic_family, THREE_LINES_MANIFEST, TWISTED_CUBIC_MANIFEST,
};
use crate::geometry::manifest::Manifest;
use crate::geometry::{
    barth_local_determinant, barth_points, barth_quartic, barth_symmetries, classify_configuration,
    cusp_candidates_with, fiber_change, Configuration, CuspCandidates, DivisibleFamily, GeometryError, ProjectivePoint,
};
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{frac, parse, parse_list, Poly, PolyError, Rational, Ring, RingRef, TermOrder};
use crate::report::{Report, ReportBuilder};
use crate::singular::{
    classify, cusp_divisibility_certificate, is_singular_point, jacobian_ideal, local_equation, no_extra_singularities,
    quadratic_form_matrix, singular_locus_contained_in_basis, transversal_at, SingularError, SingularityKind,
};

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_PMAX: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub p_max: u32,
    pub order: TermOrder,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            p_max: DEFAULT_PMAX,
            order: TermOrder::Grevlex,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl PipelineError {
    /// 2 for malformed input, 3 for a violated mathematical precondition.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Input(_) => 2,
            PipelineError::Precondition(_) => 3,
        }
    }
}

impl From<PolyError> for PipelineError {
    fn from(e: PolyError) -> Self {
        PipelineError::Input(e.to_string())
    }
}

impl From<CodeError> for PipelineError {
    fn from(e: CodeError) -> Self {
        PipelineError::Input(e.to_string())
    }
}

impl From<GroebnerError> for PipelineError {
    fn from(e: GroebnerError) -> Self {
        PipelineError::Input(e.to_string())
    }
}

impl From<GeometryError> for PipelineError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Manifest { .. } | GeometryError::Poly(_) => PipelineError::Input(e.to_string()),
            other => PipelineError::Precondition(other.to_string()),
        }
    }
}

impl From<SingularError> for PipelineError {
    fn from(e: SingularError) -> Self {
        match e {
            SingularError::Geometry(g) => g.into(),
            SingularError::Poly(p) => p.into(),
            SingularError::Malformed(m) => PipelineError::Input(m),
            other => PipelineError::Precondition(other.to_string()),
        }
    }
}

pub type Outcome = Result<Report, PipelineError>;

fn ring_for(vars: Option<&str>, order: TermOrder) -> Result<RingRef, PipelineError> {
    match vars {
        None => Ok(Ring::projective3().with_order(order)),
        Some(v) => {
            let names: Vec<&str> = v.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if names.is_empty() {
                return Err(PipelineError::Input("empty variable list".into()));
            }
            Ok(Ring::new(&names, order)?)
        }
    }
}

fn generators(ring: &RingRef, text: &str) -> Result<Vec<Poly>, PipelineError> {
    if text.trim().is_empty() {
        return Err(PipelineError::Input("no generators given".into()));
    }
    let gens: Vec<Poly> = parse_list(ring, text)?;
    if gens.is_empty() {
        return Err(PipelineError::Input("no generators given".into()));
    }
    Ok(gens)
}

/// Reduced Gröbner basis of the ideal generated by a comma/newline separated list.
pub fn groebner(text: &str, vars: Option<&str>, opts: &Options) -> Outcome {
    let mut b = ReportBuilder::new("gb");
    b.input("generators", text.trim()).input("order", opts.order.name());
    let ring = ring_for(vars, opts.order)?;
    b.input("vars", ring.vars().join(","));
    let gens = generators(&ring, text)?;
    let gb = Ideal::new(&ring, gens)?.groebner_basis(opts.order);
    let basis: Vec<String> = gb.elements().iter().map(Poly::to_string).collect();
    b.info("size", gb.len());
    b.info("basis", basis);
    b.check(
        "S-pair audit",
        gb.s_pair_audit(),
        json!({"pairs": gb.len() * gb.len().saturating_sub(1) / 2}),
    );
    Ok(b.finish())
}

/// Normal form of `g` modulo the ideal, membership, and the least power in the ideal.
pub fn normal_form(g: &str, text: &str, vars: Option<&str>, opts: &Options) -> Outcome {
    let mut b = ReportBuilder::new("nf");
    b.input("g", g.trim())
        .input("generators", text.trim())
        .input("order", opts.order.name());
    let ring = ring_for(vars, opts.order)?;
    b.input("vars", ring.vars().join(","));
    let g: Poly = parse(&ring, g)?;
    let gb = Ideal::new(&ring, generators(&ring, text)?)?.groebner_basis(opts.order);
    let nf = gb.normal_form(&g)?;
    b.info("basis size", gb.len());
    b.info("normal form", nf.to_string());
    b.info("member", nf.is_zero());
    b.info("radical exponent", gb.radical_membership(&g, opts.p_max));
    Ok(b.finish())
}

fn family_from_manifest(text: &str) -> Result<DivisibleFamily, PipelineError> {
    Ok(Manifest::parse(text)?.into_family()?)
}

fn echo_family(b: &mut ReportBuilder, fam: &DivisibleFamily) {
    for (k, f) in ["Lp", "Lpp", "Fp", "Fpp", "R"]
        .iter()
        .zip([fam.lp(), fam.lpp(), fam.fp(), fam.fpp(), fam.r()])
    {
        b.input(k, f.to_string());
    }
}

fn points_json(points: &[ProjectivePoint]) -> Vec<String> {
    points.iter().map(ProjectivePoint::to_string).collect()
}

/// Construction, configuration and cusp candidates; with `certify`, the
/// singularity certificates as well. Returns the configuration and candidates.
fn analyse_family(
    b: &mut ReportBuilder,
    fam: &DivisibleFamily,
    certify: bool,
    hyperplane: Option<&Poly>,
    opts: &Options,
) -> Result<(Configuration, CuspCandidates), PipelineError> {
    b.info("Y4", fam.y4().to_string());
    b.check("S'S'' - S^3 = R*Y4", fam.identity_holds(), Option::<()>::None);
    b.check(
        "Y4 = S(Q22 - S) - Q12*Q21",
        fam.determinantal() == *fam.y4(),
        Option::<()>::None,
    );

    let config = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp())?;
    b.info("configuration", &config);
    if let Some(v) = config.vertex() {
        b.check(
            "vertex off Y4",
            !v.lies_on(fam.y4()),
            json!({"Y4(vertex)": v.eval(fam.y4()).to_string()}),
        );
    }

    let cands = cusp_candidates_with(fam, &config, hyperplane)?;
    if let Some(pb) = &cands.pullback {
        b.info("pullback", pb);
        b.info("parameters", &cands.parameters);
    }
    if !cands.lines.is_empty() {
        b.info("lines", &cands.lines);
    }
    if !cands.unresolved.is_empty() {
        b.info("unresolved factors", &cands.unresolved);
    }
    b.info("cusp candidates", points_json(&cands.points));
    b.check("candidates on S and the quadrics", cands.verified, cands.points.len());
    let off_r: Vec<String> = cands.points.iter().map(|p| p.eval(fam.r()).to_string()).collect();
    b.check(
        "R nonzero at candidates",
        cands.points.iter().all(|p| !p.lies_on(fam.r())),
        off_r,
    );

    if certify {
        certify_family(b, fam, &cands.points, opts)?;
    }
    Ok((config, cands))
}

fn certify_family(
    b: &mut ReportBuilder,
    fam: &DivisibleFamily,
    cusps: &[ProjectivePoint],
    opts: &Options,
) -> Result<(), PipelineError> {
    for p in cusps {
        let v = classify(fam.y4(), p)?;
        b.check(&format!("A2 at {p}"), v.kind == SingularityKind::A2, &v);
    }
    let mut transversal = Vec::new();
    for p in cusps {
        transversal.push(transversal_at(&[fam.sp(), fam.spp(), fam.s()], p)?);
    }
    b.check(
        "S', S'', S transversal at candidates",
        transversal.iter().all(|&t| t),
        &transversal,
    );

    let ring = fam.ring().with_order(opts.order);
    let y4 = fam.y4().to_ring(&ring)?;
    let gb = jacobian_ideal(&y4)?.groebner_basis(opts.order);
    b.info("jacobian basis size", gb.len());
    b.check("jacobian basis S-pair audit", gb.s_pair_audit(), gb.len());

    let named = [
        ("Q12", fam.q12()),
        ("Q21", fam.q21()),
        ("Q22", fam.q22()),
        ("S", fam.s()),
    ];
    let gs: Vec<(&str, Poly)> = named
        .iter()
        .map(|(n, g)| Ok((*n, g.to_ring(&ring)?)))
        .collect::<Result<_, PolyError>>()?;
    let gs_ref: Vec<(&str, &Poly)> = gs.iter().map(|(n, g)| (*n, g)).collect();
    for (name, g) in &gs_ref {
        let cert = singular_locus_contained_in_basis(&y4, &gb, &[(name, g)], opts.p_max);
        b.check(&format!("{name}^p in jacobian ideal"), cert.verified, &cert);
    }
    let extra = no_extra_singularities(&y4, &gb, &gs_ref, cusps, opts.p_max)?;
    b.check("no extra singularities", extra.verified, &extra);

    let div = cusp_divisibility_certificate(fam, cusps)?;
    b.check("divisibility certificate", div.verified, &div);
    Ok(())
}

/// Builds the family of a manifest and reports its construction data.
pub fn construct(manifest: &str, certify: bool, opts: &Options) -> Outcome {
    let mut b = ReportBuilder::new("construct");
    b.input("certify", certify).input("pmax", opts.p_max);
    let fam = family_from_manifest(manifest)?;
    echo_family(&mut b, &fam);
    analyse_family(&mut b, &fam, certify, None, opts)?;
    Ok(b.finish())
}

/// Cusp candidates of a manifest family; `hyperplane` overrides the type II slice.
pub fn cusps(manifest: &str, hyperplane: Option<&str>) -> Outcome {
    let mut b = ReportBuilder::new("cusps");
    let fam = family_from_manifest(manifest)?;
    echo_family(&mut b, &fam);
    let h = match hyperplane {
        Some(h) => {
            b.input("hyperplane", h);
            Some(parse(fam.ring(), h)?)
        }
        None => None,
    };
    let config = classify_configuration(fam.lp(), fam.lpp(), fam.fp(), fam.fpp())?;
    b.info("configuration", &config);
    let cands = cusp_candidates_with(&fam, &config, h.as_ref())?;
    if let Some(pb) = &cands.pullback {
        b.info("pullback", pb).info("parameters", &cands.parameters);
    }
    if !cands.lines.is_empty() {
        b.info("lines", &cands.lines);
    }
    if !cands.unresolved.is_empty() {
        b.info("unresolved factors", &cands.unresolved);
    }
    b.info("cusp candidates", points_json(&cands.points));
    b.check("candidates on S and the quadrics", cands.verified, cands.points.len());
    Ok(b.finish())
}

/// Names accepted by [`verify_example`].
pub const EXAMPLES: [&str; 3] = ["ex61", "ex62", "barth"];

pub fn verify_example(name: &str, k: Option<&str>, opts: &Options) -> Outcome {
    match name {
        "ex61" => verify_twisted_cubic(opts),
        "ex62" => verify_three_lines(opts),
        "barth" => {
            let k = k.unwrap_or("2");
            let kp: Poly = parse(&Ring::projective3(), k)?;
            if !kp.is_constant() {
                return Err(PipelineError::Input(format!(
                    "--k must be a rational number, got `{k}`"
                )));
            }
            let kv = kp.leading_coeff().cloned().unwrap_or_else(Rational::zero);
            verify_barth(&kv, opts)
        }
        other => Err(PipelineError::Input(format!(
            "unknown example `{other}` (expected one of {})",
            EXAMPLES.join(", ")
        ))),
    }
}

fn random_invertible(rng: &mut ChaCha8Rng) -> [[Rational; 2]; 2] {
    loop {
        let mut e = || frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let a = [[e(), e()], [e(), e()]];
        if !(&a[0][0] * &a[1][1] - &a[0][1] * &a[1][0]).is_zero() {
            return a;
        }
    }
}

/// Six cusps on a twisted cubic (type I).
pub fn verify_twisted_cubic(opts: &Options) -> Outcome {
    let mut b = ReportBuilder::new("verify-example ex61");
    b.input("pmax", opts.p_max).input("seed", opts.seed);
    let fam = family_from_manifest(TWISTED_CUBIC_MANIFEST)?;
    echo_family(&mut b, &fam);
    b.check(
        "manifest agrees with the contact-quadric construction",
        fam.y4() == twisted_cubic_family().y4(),
        Option::<()>::None,
    );
    let (config, cands) = analyse_family(&mut b, &fam, true, None, opts)?;
    b.check("type I configuration", config == Configuration::TypeI, config.name());

    let mut roots: Vec<Rational> = cands.parameter_values();
    roots.sort();
    let expected: Vec<Rational> = [-3, -2, -1, 1, 2, 3].iter().map(|&t| frac(t, 1)).collect();
    b.check(
        "pullback roots t = ±1, ±2, ±3, all simple",
        roots == expected && cands.parameters.iter().all(|(_, m)| *m == 1) && !cands.root_at_infinity,
        &cands.parameters,
    );
    let derived: BTreeSet<ProjectivePoint> = expected
        .iter()
        .map(|t| {
            let t2 = t * t;
            ProjectivePoint::new(vec![t2.clone(), t.clone(), &t2 * t, Rational::one()]).expect("nonzero")
        })
        .collect();
    let found: BTreeSet<ProjectivePoint> = cands.points.iter().cloned().collect();
    b.check(
        "six cusps (t^2 : t : t^3 : 1)",
        found == derived && found.len() == 6,
        points_json(&cands.points),
    );

    // The printed coordinates (±j : j : j^3 : ±1) against the contact quadric.
    let mut printed = Vec::new();
    for j in 1..=3i64 {
        for s0 in [1, -1] {
            for s3 in [1, -1] {
                let p = ProjectivePoint::from_i64(&[s0 * j, j, j * j * j, s3]).expect("nonzero");
                let on_s = p.lies_on(fam.s());
                printed.push(json!({"point": p.to_string(), "S": p.eval(fam.s()).to_string(), "on S": on_s}));
            }
        }
    }
    let all_on = printed.iter().all(|e| e["on S"] == json!(true));
    if all_on {
        b.info("printed coordinates (±j : j : j^3 : ±1)", printed);
    } else {
        b.warn(
            "printed coordinates (±j : j : j^3 : ±1)",
            "the printed cusp coordinates (±j : j : j^3 : ±1) lie on S only for j = 1; \
             the reported cusps are the parametrized points (j^2 : ±j : ±j^3 : 1), which satisfy every equation"
                .into(),
            printed,
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let trials = 8;
    let mut ok = 0;
    for _ in 0..trials {
        if fiber_change(&fam, random_invertible(&mut rng))?.verified {
            ok += 1;
        }
    }
    b.check(
        "fiber change identity (random matrices)",
        ok == trials,
        json!({"trials": trials, "verified": ok}),
    );
    Ok(b.finish())
}

/// Six cusps on three concurrent lines (type II).
pub fn verify_three_lines(opts: &Options) -> Outcome {
    let mut b = ReportBuilder::new("verify-example ex62");
    b.input("pmax", opts.p_max);
    let fam = family_from_manifest(THREE_LINES_MANIFEST)?;
    echo_family(&mut b, &fam);
    b.check(
        "manifest agrees with the contact-quadric construction",
        fam.y4() == three_lines_family().y4(),
        Option::<()>::None,
    );
    let (config, cands) = analyse_family(&mut b, &fam, true, None, opts)?;
    let vertex = ProjectivePoint::from_i64(&[0, 0, 0, 1]).expect("nonzero");
    b.check(
        "type II with vertex (0 : 0 : 0 : 1)",
        config.vertex() == Some(&vertex),
        &config,
    );
    let r = parse(fam.ring(), "x3^2 - x2^2 - x0*x1")?;
    b.check(
        "residual quadric R = x3^2 - x2^2 - x0*x1",
        *fam.r() == r,
        fam.r().to_string(),
    );

    let mut lines_ok = true;
    let mut line_eqs = Vec::new();
    for j in 1..=3i64 {
        let through = ProjectivePoint::from_i64(&[j, j * j, 1, 0]).expect("nonzero");
        let want = [
            parse(fam.ring(), &format!("x0 - {j}*x2"))?,
            parse(fam.ring(), &format!("x1 - {}*x2", j * j))?,
        ];
        let hit = cands.lines.iter().any(|l| {
            l.contains(&through) && l.contains(&vertex) && {
                let eqs = l.equation_polys(fam.ring());
                want.iter().all(|w| crate::singular::in_span(w, &eqs))
            }
        });
        lines_ok &= hit;
        line_eqs.push(format!("x0 = {j}*x2, x1 = {}*x2", j * j));
    }
    b.check(
        "lines x0 = j*x2, x1 = j^2*x2 recovered",
        lines_ok && cands.lines.len() == 3,
        line_eqs,
    );

    let expected: BTreeSet<ProjectivePoint> = (1..=3i64)
        .flat_map(|j| [1, -1].map(|s| ProjectivePoint::from_i64(&[j, j * j, 1, s]).expect("nonzero")))
        .collect();
    let found: BTreeSet<ProjectivePoint> = cands.points.iter().cloned().collect();
    b.check(
        "six cusps (j : j^2 : 1 : ±1)",
        found == expected,
        points_json(&cands.points),
    );
    Ok(b.finish())
}

/// The eight singular points of the Barth quartic, their local type, and the
/// code-theoretic search for three-divisible subsets.
pub fn verify_barth(k: &Rational, opts: &Options) -> Outcome {
    let mut b = ReportBuilder::new("verify-example barth");
    b.input("k", k.to_string()).input("pmax", opts.p_max);
    let f = barth_quartic(k)?;
    b.info("S_k", f.to_string());
    let points = barth_points();

    let symmetric = barth_symmetries().iter().all(|perm| {
        let images: Vec<Poly> = perm.iter().map(|&j| Poly::var(f.ring(), j)).collect();
        f.substitute(&images).map(|g| g == f).unwrap_or(false)
    });
    b.check(
        "S_k invariant under x0 <-> x1 and x2 <-> x3",
        symmetric,
        Option::<()>::None,
    );

    let mut non_cusps = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let label = format!("P{}", i + 1);
        b.check(&format!("{label} = {p} on S_k"), p.lies_on(&f), p.eval(&f).to_string());
        b.check(
            &format!("{label} singular"),
            is_singular_point(&f, p),
            Option::<()>::None,
        );
        match classify(&f, p) {
            Ok(v) => {
                if v.kind != SingularityKind::A2 {
                    non_cusps.push(format!("{label}: {}", v.kind.name()));
                }
                b.info(&format!("{label} local type"), &v);
            }
            Err(e) => {
                b.check(&format!("{label} local type"), false, e.to_string());
            }
        }
    }

    // Cross-check of the local quadratic form at P5 = (1 : 0 : 0 : 0).
    let p5 = &points[4];
    let local = local_equation(&f, p5, 0)?;
    let det = quadratic_form_matrix(&local.homogeneous_component(2)).determinant();
    let expected = barth_local_determinant(k);
    b.check(
        "det of the quadratic part at P5 = -(k/2)(1+k)^2(1-k)^6",
        det == expected,
        json!({"det": det.to_string(), "formula": expected.to_string()}),
    );
    if !non_cusps.is_empty() {
        b.warn(
            "local type of the eight points",
            format!(
                "the eight singular points are described as cusps, but the quartic as written has {}",
                non_cusps.join(", ")
            ),
            non_cusps,
        );
    }

    let code = eight_cusp_code();
    push_code(&mut b, &code);
    b.check(
        "Griesmer [8,2,6] holds with equality",
        griesmer_holds(8, 2, 6) && griesmer_sum(2, 6) == 8,
        griesmer_sum(2, 6),
    );
    b.check("Griesmer [8,3,6] fails", !griesmer_holds(8, 3, 6), griesmer_sum(3, 6));
    push_enumeration(&mut b, &barth_configuration(), true);
    Ok(b.finish())
}

fn push_code(b: &mut ReportBuilder, code: &TernaryCode) {
    b.info(
        "generators",
        code.generators().iter().map(F3Vector::to_string).collect::<Vec<_>>(),
    );
    b.info("dimension", code.dimension());
    b.info("weight distribution", code.weight_distribution());
    b.info("supports", code.supports());
}

/// The four subsets of the Barth configuration that the enumeration must return.
pub fn barth_family() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 3, 4, 5, 6],
        vec![1, 2, 3, 4, 7, 8],
        vec![1, 4, 5, 6, 7, 8],
        vec![2, 3, 5, 6, 7, 8],
    ]
}

fn push_enumeration(b: &mut ReportBuilder, config: &CuspConfiguration, barth: bool) {
    let result = enumerate_divisible_families(config);
    b.info("codes examined", result.codes_examined);
    b.check(
        "no three-dimensional constant-weight-6 extension",
        result.three_dimensional_extensions == 0,
        result.three_dimensional_extensions,
    );
    b.info("orbits", config.orbits());
    b.info("family count", result.families.len());
    b.info("families", &result.families);
    if barth {
        b.check(
            "the expected four sets form the unique family",
            result.families == vec![barth_family()],
            result.families.len(),
        );
        let planar: Vec<serde_json::Value> = barth_family()
            .iter()
            .map(|s| {
                let pts: Vec<ProjectivePoint> = s.iter().map(|&i| config.points()[i - 1].clone()).collect();
                json!({
                    "set": s,
                    "coplanar 4-subsets": coplanar_subsets(&pts, 4).len(),
                    "coplanar 5-subsets": coplanar_subsets(&pts, 5).len(),
                })
            })
            .collect();
        let ok = planar
            .iter()
            .all(|e| e["coplanar 4-subsets"].as_u64() > Some(0) && e["coplanar 5-subsets"] == json!(0));
        b.check("each set has a coplanar 4-subset and no coplanar 5-subset", ok, planar);
    }
}

/// Dimension, weights and supports of the code spanned by `words`, plus a
/// Griesmer check for each claimed `(q, d, r)`.
pub fn code(words: &[String], length: Option<usize>, claims: &[(u64, u32, u64)]) -> Outcome {
    let mut b = ReportBuilder::new("code");
    b.input("generators", words.to_vec());
    if words.is_empty() {
        return Err(PipelineError::Input("no generator words given".into()));
    }
    let parsed = words
        .iter()
        .map(|w| F3Vector::parse(w))
        .collect::<Result<Vec<_>, _>>()?;
    let code = match length {
        Some(n) => {
            b.input("length", n);
            TernaryCode::new(n, parsed)?
        }
        None => TernaryCode::from_words(parsed)?,
    };
    b.info("length", code.length());
    push_code(&mut b, &code);
    b.info("minimum weight", code.minimum_weight());
    let claims: Vec<(u64, u32, u64)> = if claims.is_empty() {
        code.minimum_weight()
            .map(|r| vec![(code.length() as u64, code.dimension() as u32, r as u64)])
            .unwrap_or_default()
    } else {
        claims.to_vec()
    };
    for (q, d, r) in claims {
        b.info(
            &format!("Griesmer [{q},{d},{r}]"),
            json!({"holds": griesmer_holds(q, d, r), "bound": griesmer_sum(d, r)}),
        );
    }
    Ok(b.finish())
}

/// Exhaustive search for candidate three-divisible families. Without points,
/// uses the Barth configuration.
pub fn enumerate_sets(points: Option<&str>, symmetries: &[String]) -> Outcome {
    let mut b = ReportBuilder::new("enumerate-sets");
    let config = match points {
        None => {
            b.input("configuration", "barth");
            barth_configuration()
        }
        Some(text) => {
            b.input("points", text).input("symmetries", symmetries.to_vec());
            let pts = parse_points(text)?;
            let perms = symmetries
                .iter()
                .map(|s| {
                    s.split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<usize>()
                                .map_err(|_| PipelineError::Input(format!("bad permutation `{s}`")))
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            CuspConfiguration::from_coordinate_symmetries(pts, &perms)?
        }
    };
    b.info("points", points_json(config.points()));
    push_enumeration(&mut b, &config, points.is_none());
    Ok(b.finish())
}

/// `;`-separated points, each with `:` or `,` separated rational coordinates.
pub fn parse_points(text: &str) -> Result<Vec<ProjectivePoint>, PipelineError> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let inner = s.trim_start_matches('(').trim_end_matches(')');
            let coords = inner
                .split([':', ','])
                .map(|c| {
                    c.trim()
                        .parse::<Rational>()
                        .map_err(|_| PipelineError::Input(format!("bad coordinate `{c}` in `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            ProjectivePoint::new(coords).map_err(|e| PipelineError::Input(e.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gb_small_and_empty() {
        let r = groebner("x0, x1", None, &Options::default()).unwrap();
        assert_eq!(r.entry("size").unwrap().detail, json!(2));
        assert!(r.verified);
        assert_eq!(groebner("  ", None, &Options::default()).unwrap_err().exit_code(), 2);
        assert_eq!(groebner("x0 +", None, &Options::default()).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn nf_reports_membership() {
        let r = normal_form("x0^2*x1", "x0*x1", None, &Options::default()).unwrap();
        assert_eq!(r.entry("member").unwrap().detail, json!(true));
        let r = normal_form("x0 + x1", "x0", Some("x0,x1"), &Options::default()).unwrap();
        assert_eq!(r.entry("normal form").unwrap().detail, json!("x1"));
    }

    #[test]
    fn construct_errors() {
        let dependent = "Lp = x0\nLpp = x0\nFp = x2\nFpp = x3\nR = x1^2";
        assert_eq!(
            construct(dependent, false, &Options::default())
                .unwrap_err()
                .exit_code(),
            3
        );
        assert_eq!(
            construct("Lp = x0 +", false, &Options::default())
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn code_reports() {
        let r = code(
            &["11111100".into(), "0011(-1)(-1)11".into()],
            None,
            &[(8, 2, 6), (8, 3, 6)],
        )
        .unwrap();
        assert_eq!(r.entry("dimension").unwrap().detail, json!(2));
        assert_eq!(r.entry("weight distribution").unwrap().detail, json!({"0": 1, "6": 8}));
        assert_eq!(r.entry("Griesmer [8,3,6]").unwrap().detail["holds"], json!(false));
        let zero = code(&["00000000".into()], None, &[]).unwrap();
        assert_eq!(zero.entry("dimension").unwrap().detail, json!(0));
        assert_eq!(
            code(&["111".into(), "1111".into()], None, &[]).unwrap_err().exit_code(),
            2
        );
    }

    #[test]
    fn unknown_example() {
        assert_eq!(
            verify_example("ex99", None, &Options::default())
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn points_parse() {
        let p = parse_points("(1:0:-1:0); 0,0,0,1/2").unwrap();
        assert_eq!(p[1], ProjectivePoint::from_i64(&[0, 0, 0, 1]).unwrap());
        assert!(parse_points("(0:0:0:0)").is_err());
    }
}
