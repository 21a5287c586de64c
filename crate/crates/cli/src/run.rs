//! Dispatch from a parsed problem to the engine.

use rayon::prelude::*;
use rgroup_core::cartan::Family;
use rgroup_core::criterion::{
    pairwise_flags, CriterionReport, Mode as ReportMode, OrbitNote, RawPairing,
};
use rgroup_core::error::ErrorClass;
use rgroup_core::levi::RelativeRoots;
use rgroup_core::verify::{certify, certify_type, TypeSummary};
use rgroup_core::{
    analyze, build_cartan, build_root_system, conjecture_predict, decide_gps,
    decide_ps_unramified, generate_weyl, product_formula_count, CoreError, ElemId, LeviAnalysis,
    RelId, RootSystem, SigmaOracle, UnramifiedParam, WeylGroup, Q,
};
use serde::Serialize;
use serde_json::Value;

use crate::envelope::{Conventions, Diagnostic, Engine, ReportEnvelope, Status};
use crate::schema::{Basis, CharacterSpec, FlagSpec, GridSpec, Mode, ProblemSpec, SigmaSpec};

/// Element lists longer than this are summarized by their size only.
pub const LIST_LIMIT: usize = 1000;

pub const DEFAULT_GRID_BUDGET: u64 = 100_000;

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub cap: Option<usize>,
    pub jobs: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{message}")]
    Schema { code: &'static str, message: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("certification failed: {0}")]
    VerifyFailed(String),
}

fn schema(code: &'static str, message: impl Into<String>) -> CliError {
    CliError::Schema {
        code,
        message: message.into(),
    }
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Schema { .. } => Status::SchemaError,
            CliError::Core(e) => match e.class() {
                ErrorClass::Schema => Status::SchemaError,
                ErrorClass::Rejected => Status::Rejected,
                ErrorClass::Internal => Status::InternalError,
            },
            CliError::VerifyFailed(_) => Status::InternalError,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Schema { code, .. } => code,
            CliError::VerifyFailed(_) => "verification-failed",
            CliError::Core(e) => match e {
                CoreError::InvalidCartan { .. } => "invalid-cartan",
                CoreError::UnknownFamily(_) => "unknown-family",
                CoreError::RootBoundExceeded { .. } => "root-bound-exceeded",
                CoreError::CapExceeded { .. } => "cap-exceeded",
                CoreError::NotARoot => "not-a-root",
                CoreError::IndexOutOfRange { .. } => "index-out-of-range",
                CoreError::DimensionMismatch { .. } => "dimension-mismatch",
                CoreError::NotRelativeRoot => "not-a-relative-root",
                CoreError::NotRelativeSimple => "not-relative-simple",
                CoreError::NotNormalizing { .. } => "not-normalizing",
                CoreError::NotVanishingOnLevi { .. } => "not-vanishing-on-levi",
                CoreError::NonIntegralCoroot => "non-integral-coroot",
                CoreError::OracleInconsistent(_) => "oracle-inconsistent",
                CoreError::MissingCorankFlags { .. } => "missing-corank-flags",
                CoreError::MissingMuZero { .. } => "missing-mu-zero",
                CoreError::FlagNotOrbitConstant { .. } => "flag-not-orbit-constant",
                CoreError::ProductHypothesis(_) => "product-hypothesis",
                CoreError::GridTooLarge { .. } => "grid-too-large",
                CoreError::RequiresTorus => "requires-torus",
                CoreError::RequiresTypeA => "requires-type-a",
                CoreError::Faithfulness { .. } => "faithfulness",
                CoreError::Factorization(_) => "factorization",
                CoreError::Invariant(_) => "invariant",
            },
        }
    }

    fn diagnostic(&self) -> Diagnostic {
        Diagnostic {
            class: self.status(),
            code: self.code().to_string(),
            message: self.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `text` and runs `verb`. Never panics on bad input; every failure
/// ends up in the envelope diagnostics.
pub fn run_text(verb: Mode, text: &str, opts: &Options) -> ReportEnvelope {
    match ProblemSpec::from_json(text) {
        Ok(spec) => run(verb, &spec, opts),
        Err(e) => envelope(verb, None, Err(schema("malformed-input", e.to_string()))),
    }
}

pub fn run(verb: Mode, spec: &ProblemSpec, opts: &Options) -> ReportEnvelope {
    let outcome = match spec.mode {
        Some(m) if m != verb => Err(schema(
            "mode-mismatch",
            format!("spec declares mode {} but verb is {}", m.as_str(), verb.as_str()),
        )),
        _ => match opts.jobs {
            Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
                Ok(pool) => pool.install(|| dispatch(verb, spec, opts)),
                Err(e) => Err(schema("bad-jobs", e.to_string())),
            },
            None => dispatch(verb, spec, opts),
        },
    };
    envelope(verb, Some(spec.clone()), outcome)
}

fn envelope(
    verb: Mode,
    input: Option<ProblemSpec>,
    outcome: CliResult<(Value, Vec<Diagnostic>)>,
) -> ReportEnvelope {
    let (status, result, diagnostics) = match outcome {
        Ok((v, diags)) => {
            let status = diags.iter().map(|d| d.class).max_by_key(|s| s.exit_code()).unwrap_or(Status::Ok);
            (status, Some(v), diags)
        }
        Err(e) => (e.status(), None, vec![e.diagnostic()]),
    };
    ReportEnvelope {
        engine: Engine::default(),
        conventions: Conventions::default(),
        verb: verb.as_str().to_string(),
        input,
        status,
        result,
        diagnostics,
    }
}

fn dispatch(verb: Mode, spec: &ProblemSpec, opts: &Options) -> CliResult<(Value, Vec<Diagnostic>)> {
    let cap = opts.cap.unwrap_or(rgroup_core::DEFAULT_CAP);
    let family = parse_family(&spec.family)?;
    if verb == Mode::Verify {
        return verify(family, spec.rank, cap);
    }
    let rs = build_root_system(build_cartan(family, spec.rank)?)?;
    let group = generate_weyl(rs, cap)?;
    let theta = parse_theta(spec)?;
    let an = analyze(&group, &theta)?;
    let value = match verb {
        Mode::Decompose => to_value(decompose(&an)),
        Mode::DecidePs => {
            if spec.sigma.is_some() {
                return Err(schema("unexpected-sigma", "decide-ps takes no sigma oracle"));
            }
            let lambda = parse_character(&an, spec.character.as_ref())?;
            to_value(decision(&an, &decide_ps_unramified(&an, &lambda)?))
        }
        Mode::DecideGps => {
            let nu = parse_character(&an, spec.character.as_ref())?;
            let oracle = build_oracle(&an, spec.sigma.as_ref(), &nu)?;
            to_value(decision(&an, &decide_gps(&an, &nu, &oracle)?))
        }
        Mode::ProductCount => {
            let nu = parse_character(&an, spec.character.as_ref())?;
            let oracle = build_oracle(&an, spec.sigma.as_ref(), &nu)?;
            let report = decide_gps(&an, &nu, &oracle)?;
            let blocks = spec
                .blocks
                .as_ref()
                .ok_or_else(|| schema("missing-blocks", "product-count needs `blocks`"))?;
            let counts = spec.factor_counts.as_ref().ok_or_else(|| {
                schema("missing-factor-counts", "product-count needs `factor_counts`")
            })?;
            let zero_based = blocks
                .iter()
                .map(|b| b.iter().map(|&i| to_zero_based(i, spec.rank)).collect())
                .collect::<CliResult<Vec<Vec<usize>>>>()?;
            let count = product_formula_count(&an, &report, &zero_based, counts)?;
            to_value(ProductOut {
                count,
                blocks: blocks.clone(),
                factor_counts: counts.clone(),
                verdict: report.verdict.as_str(),
                r_order: report.r.order(),
            })
        }
        Mode::Predict => {
            let nu = parse_character(&an, spec.character.as_ref())?;
            let oracle = build_oracle(&an, spec.sigma.as_ref(), &nu)?;
            let p = conjecture_predict(&an, &nu, &oracle)?;
            let gps = decide_gps(&an, &nu, &oracle).ok().map(|r| r.verdict.as_str());
            to_value(PredictOut {
                r_sigma_order: p.r_sigma_order,
                prediction: p.verdict.map(|v| v.as_str()),
                abstain_reason: p.abstain_reason,
                quantified_over: "all relative roots",
                failing: p.failing.iter().map(|&a| dir(an.roots(), a)).collect(),
                decide_gps: gps,
            })
        }
        Mode::Atlas => {
            if !theta.is_empty() {
                return Err(CoreError::RequiresTorus.into());
            }
            let grid = spec
                .grid
                .as_ref()
                .ok_or_else(|| schema("missing-grid", "atlas needs `grid`"))?;
            to_value(atlas(&an, grid)?)
        }
        Mode::Verify => unreachable!("handled above"),
    };
    Ok((value, Vec::new()))
}

fn to_value<T: Serialize>(t: T) -> Value {
    serde_json::to_value(t).expect("result serializes")
}

fn parse_family(s: &str) -> CliResult<Family> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(Family::from_letter(c)?),
        _ => Err(schema("unknown-family", format!("family must be one letter A-G, got {s:?}"))),
    }
}

fn to_zero_based(i: usize, rank: usize) -> CliResult<usize> {
    if i == 0 || i > rank {
        return Err(CoreError::IndexOutOfRange { index: i, rank }.into());
    }
    Ok(i - 1)
}

fn parse_theta(spec: &ProblemSpec) -> CliResult<Vec<usize>> {
    spec.levi.iter().map(|&i| to_zero_based(i, spec.rank)).collect()
}

pub fn parse_rational(s: &str) -> CliResult<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| schema("bad-rational", format!("not an exact rational: {s:?}")))
}

fn parse_vec(v: &Option<Vec<String>>, n: usize) -> CliResult<Vec<Q>> {
    match v {
        None => Ok(vec![Q::from_integer(0); n]),
        Some(v) => {
            if v.len() != n {
                return Err(CoreError::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                }
                .into());
            }
            v.iter().map(|s| parse_rational(s)).collect()
        }
    }
}

fn parse_character(an: &LeviAnalysis<'_>, c: Option<&CharacterSpec>) -> CliResult<UnramifiedParam> {
    let rs = an.root_system();
    let theta = an.levi.theta();
    let Some(c) = c else {
        return Ok(UnramifiedParam::trivial(rs.rank()));
    };
    let q = parse_vec(&c.q_part, rs.rank())?;
    let t = parse_vec(&c.t_part, rs.rank())?;
    Ok(match c.basis {
        Basis::FundamentalWeight => UnramifiedParam::new(q, t, theta)?,
        Basis::SimpleRoot => UnramifiedParam::from_simple_root_coords(rs, &q, &t, theta)?,
    })
}

fn rel_root(an: &LeviAnalysis<'_>, v: &[i32]) -> CliResult<RelId> {
    let n = an.root_system().rank();
    if v.len() != n {
        return Err(CoreError::DimensionMismatch {
            expected: n,
            found: v.len(),
        }
        .into());
    }
    let rr = an.roots();
    rr.find(v).ok_or_else(|| {
        schema(
            "not-a-relative-root",
            format!("{v:?} is not a relative root of this Levi (give coefficients along all simple roots, zero on the Levi)"),
        )
    })
}

fn flags(an: &LeviAnalysis<'_>, f: &[FlagSpec]) -> CliResult<Vec<(RelId, bool)>> {
    f.iter().map(|x| Ok((rel_root(an, &x.root)?, x.value))).collect()
}

fn build_oracle(
    an: &LeviAnalysis<'_>,
    sigma: Option<&SigmaSpec>,
    nu: &UnramifiedParam,
) -> CliResult<SigmaOracle> {
    let Some(sigma) = sigma else {
        if an.levi.theta().is_empty() {
            return Ok(SigmaOracle::principal_series(an, nu)?);
        }
        return Err(schema(
            "missing-sigma",
            "a sigma oracle is required unless the Levi is empty",
        ));
    };
    let group = an.group();
    let mut pairs = Vec::with_capacity(sigma.stab_pairs.len());
    for p in &sigma.stab_pairs {
        let letters = p
            .word
            .iter()
            .map(|&l| to_zero_based(l, group.root_system().rank()).map(|x| x as u8))
            .collect::<CliResult<Vec<u8>>>()?;
        let w = group.from_word(&letters)?;
        let twist = parse_character(an, p.twist.as_ref())?;
        pairs.push((w, twist));
    }
    let mu = flags(an, &sigma.mu_zero)?;
    let mut corank = flags(an, &sigma.corank_irred)?;
    if let Some(m) = &sigma.pairwise_irred {
        corank.extend(pairwise_flags(an, m)?);
    }
    Ok(SigmaOracle::new(an, pairs, mu, corank)?)
}

fn word(group: &WeylGroup, w: ElemId) -> Vec<usize> {
    group.element(w).word().iter().map(|&l| l as usize + 1).collect()
}

fn words(group: &WeylGroup, ws: impl Iterator<Item = ElemId>) -> Vec<Vec<usize>> {
    ws.map(|w| word(group, w)).collect()
}

fn dir(rr: &RelativeRoots, a: RelId) -> Vec<i32> {
    rr.direction(a).to_vec()
}

fn qs(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Serialize)]
struct RelRootOut {
    root: Vec<i32>,
    coroot: Vec<String>,
    fiber_size: usize,
    in_phi0: bool,
    reflection: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ElementOut {
    word: Vec<usize>,
    w0_part: Vec<usize>,
    w1_part: Vec<usize>,
}

#[derive(Serialize)]
struct CertificateOut {
    distinguished: bool,
    normal: bool,
    trivial_intersection: bool,
    order_product: bool,
    unique_factorization: bool,
    phi0_stable: bool,
    reflection_closed: bool,
    conjugation: bool,
}

#[derive(Serialize)]
struct DecomposeOut {
    cartan: Vec<Vec<i32>>,
    group_order: usize,
    levi: Vec<usize>,
    relative_roots: Vec<RelRootOut>,
    wm_order: usize,
    wm0_order: usize,
    wm1_order: usize,
    phi0: Vec<Vec<i32>>,
    delta0: Vec<Vec<i32>>,
    wm1: Vec<Vec<usize>>,
    orphan_reflections: Vec<Vec<usize>>,
    elements: Option<Vec<ElementOut>>,
    certificate: CertificateOut,
}

fn decompose(an: &LeviAnalysis<'_>) -> DecomposeOut {
    let group = an.group();
    let rs: &RootSystem = an.root_system();
    let rr = an.roots();
    let cert = certify(an);
    let elements = (an.wm.reps.order() <= LIST_LIMIT).then(|| {
        an.wm
            .reps
            .iter()
            .map(|w| {
                let (a, b) = an.wm.factor(w).expect("factorized");
                ElementOut {
                    word: word(group, w),
                    w0_part: word(group, a),
                    w1_part: word(group, b),
                }
            })
            .collect()
    });
    DecomposeOut {
        cartan: rs.cartan().matrix().to_vec(),
        group_order: group.order(),
        levi: an.levi.theta().iter().map(|i| i + 1).collect(),
        relative_roots: rr
            .positives()
            .map(|a| RelRootOut {
                root: dir(rr, a),
                coroot: qs(&rr.coroot(a)),
                fiber_size: rr.root(a).fiber.len(),
                in_phi0: an.in_phi0(a),
                reflection: an.reflection(a).map(|w| word(group, w)),
            })
            .collect(),
        wm_order: an.wm.reps.order(),
        wm0_order: an.wm.small.order(),
        wm1_order: an.wm.complement.order(),
        phi0: an.data.phi0.iter().map(|&a| dir(rr, a)).collect(),
        delta0: an.data.delta0.iter().map(|&a| dir(rr, a)).collect(),
        wm1: words(group, an.wm.complement.iter()),
        orphan_reflections: words(group, an.data.orphan_reflections.iter().copied()),
        elements,
        certificate: CertificateOut {
            distinguished: cert.distinguished,
            normal: cert.normal,
            trivial_intersection: cert.trivial_intersection,
            order_product: cert.order_product,
            unique_factorization: cert.unique_factorization,
            phi0_stable: cert.phi0_stable,
            reflection_closed: cert.reflection_closed,
            conjugation: cert.conjugation,
        },
    }
}

#[derive(Serialize)]
struct ParamOut {
    q_part: Vec<String>,
    t_part: Vec<String>,
}

impl From<&UnramifiedParam> for ParamOut {
    fn from(p: &UnramifiedParam) -> ParamOut {
        ParamOut {
            q_part: qs(p.q_part()),
            t_part: qs(p.t_part()),
        }
    }
}

#[derive(Serialize)]
struct FlagOut {
    root: Vec<i32>,
    value: bool,
}

#[derive(Serialize)]
struct PairingOut {
    root: Vec<i32>,
    real: String,
    torsion: Option<String>,
}

#[derive(Serialize)]
struct Delta1Out {
    roots: Vec<Vec<i32>>,
    base: Vec<Vec<i32>>,
    group_order: usize,
    reflection_closed: bool,
}

#[derive(Serialize)]
struct LadderOut {
    mu_zero_roots: Vec<Vec<i32>>,
    w0_prime_order: usize,
    r_prime: Vec<Vec<usize>>,
    r0: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct ClauseOut {
    name: &'static str,
    status: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct OrbitNoteOut {
    w1: Vec<usize>,
    translated_nu: ParamOut,
    verdict: &'static str,
}

#[derive(Serialize)]
struct DecisionOut {
    mode: &'static str,
    verdict: &'static str,
    reason: &'static str,
    nu: ParamOut,
    stabilizer_order: usize,
    stabilizer: Option<Vec<Vec<usize>>>,
    phi0: Vec<Vec<i32>>,
    w0_order: usize,
    r_order: usize,
    r: Vec<Vec<usize>>,
    delta1: Option<Delta1Out>,
    ladder: Option<LadderOut>,
    walls: Vec<Vec<i32>>,
    corank: Vec<FlagOut>,
    pairings: Vec<PairingOut>,
    clauses: Vec<ClauseOut>,
    orbit_notes: Vec<OrbitNoteOut>,
    gps: Option<Box<DecisionOut>>,
}

fn decision(an: &LeviAnalysis<'_>, r: &CriterionReport) -> DecisionOut {
    let group = an.group();
    let rr = an.roots();
    let dirs = |v: &[RelId]| v.iter().map(|&a| dir(rr, a)).collect::<Vec<_>>();
    DecisionOut {
        mode: match r.mode {
            ReportMode::Gps => "gps",
            ReportMode::PrincipalSeries => "principal-series",
        },
        verdict: r.verdict.as_str(),
        reason: r.reason.as_str(),
        nu: (&r.nu).into(),
        stabilizer_order: r.stab.order(),
        stabilizer: (r.stab.order() <= LIST_LIMIT).then(|| words(group, r.stab.iter())),
        phi0: dirs(&r.phi0),
        w0_order: r.w0.order(),
        r_order: r.r.order(),
        r: words(group, r.r.iter().take(LIST_LIMIT)),
        delta1: r.delta1.as_ref().map(|d| Delta1Out {
            roots: dirs(&d.roots),
            base: dirs(&d.base),
            group_order: d.group.order(),
            reflection_closed: d.reflection_closed,
        }),
        ladder: r.ladder.as_ref().map(|l| LadderOut {
            mu_zero_roots: dirs(&l.mu_zero_roots),
            w0_prime_order: l.w0_prime.order(),
            r_prime: words(group, l.r_prime.iter().take(LIST_LIMIT)),
            r0: words(group, l.r0.iter().take(LIST_LIMIT)),
        }),
        walls: dirs(&r.walls),
        corank: r
            .corank
            .iter()
            .map(|(&a, &value)| FlagOut {
                root: dir(rr, a),
                value,
            })
            .collect(),
        pairings: r
            .pairings
            .iter()
            .map(|p: &RawPairing| PairingOut {
                root: dir(rr, p.root),
                real: p.real.to_string(),
                torsion: p.torsion.map(|t| t.to_string()),
            })
            .collect(),
        clauses: r
            .clauses
            .iter()
            .map(|c| ClauseOut {
                name: c.name,
                status: c.status.as_str(),
                detail: c.detail.clone(),
            })
            .collect(),
        orbit_notes: r
            .orbit_notes
            .iter()
            .map(|n: &OrbitNote| OrbitNoteOut {
                w1: word(group, n.w1),
                translated_nu: (&n.translated_nu).into(),
                verdict: n.verdict.as_str(),
            })
            .collect(),
        gps: r.gps.as_ref().map(|g| Box::new(decision(an, g))),
    }
}

#[derive(Serialize)]
struct ProductOut {
    count: u64,
    blocks: Vec<Vec<usize>>,
    factor_counts: Vec<u64>,
    verdict: &'static str,
    r_order: usize,
}

#[derive(Serialize)]
struct PredictOut {
    r_sigma_order: usize,
    prediction: Option<&'static str>,
    abstain_reason: Option<String>,
    quantified_over: &'static str,
    failing: Vec<Vec<i32>>,
    decide_gps: Option<&'static str>,
}

#[derive(Serialize)]
pub struct AtlasRow {
    pub q_part: Vec<String>,
    pub t_part: Vec<String>,
    pub verdict: &'static str,
    pub reason: &'static str,
    pub r_order: usize,
    pub walls: usize,
}

#[derive(Serialize)]
struct AtlasOut {
    points: usize,
    rows: Vec<AtlasRow>,
}

fn atlas(an: &LeviAnalysis<'_>, grid: &GridSpec) -> CliResult<AtlasOut> {
    let n = an.root_system().rank();
    let qv: Vec<Q> = grid.q_exp.iter().map(|s| parse_rational(s)).collect::<CliResult<_>>()?;
    let tv: Vec<Q> = grid.torsion.iter().map(|s| parse_rational(s)).collect::<CliResult<_>>()?;
    let per_coord: Vec<(Q, Q)> = qv
        .iter()
        .flat_map(|&q| tv.iter().map(move |&t| (q, t)))
        .collect();
    let budget = grid.budget.unwrap_or(DEFAULT_GRID_BUDGET) as u128;
    let points = (per_coord.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if points > budget {
        return Err(CoreError::GridTooLarge { points, budget }.into());
    }
    let points = points as usize;
    let m = per_coord.len();
    let rows = (0..points)
        .into_par_iter()
        .map(|idx| {
            // Odometer with the first coordinate varying slowest.
            let mut digits = vec![0usize; n];
            let mut rem = idx;
            for d in digits.iter_mut().rev() {
                *d = rem % m;
                rem /= m;
            }
            let q: Vec<Q> = digits.iter().map(|&d| per_coord[d].0).collect();
            let t: Vec<Q> = digits.iter().map(|&d| per_coord[d].1).collect();
            let lambda = UnramifiedParam::new(q, t, &[])?;
            let r = decide_ps_unramified(an, &lambda)?;
            Ok(AtlasRow {
                q_part: qs(lambda.q_part()),
                t_part: qs(lambda.t_part()),
                verdict: r.verdict.as_str(),
                reason: r.reason.as_str(),
                r_order: r.r.order(),
                walls: r.walls.len(),
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(AtlasOut { points, rows })
}

#[derive(Serialize)]
struct FailureOut {
    levi: Vec<usize>,
    reason: String,
}

#[derive(Serialize)]
struct FixtureOut {
    levi: Vec<usize>,
    wm_order: usize,
    wm0_order: usize,
    wm1_order: usize,
    wm1: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct TypeOut {
    pub family: String,
    pub rank: usize,
    pub group_order: usize,
    pub levis: usize,
    pub passed: usize,
    failures: Vec<FailureOut>,
    fixtures: Vec<FixtureOut>,
}

#[derive(Serialize)]
struct VerifyOut {
    types: Vec<TypeOut>,
    levis: usize,
    passed: usize,
    ok: bool,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn type_out(s: &TypeSummary) -> TypeOut {
    TypeOut {
        family: s.family.to_string(),
        rank: s.rank,
        group_order: s.group_order,
        levis: s.levis,
        passed: s.passed,
        failures: s
            .failures
            .iter()
            .map(|(t, r)| FailureOut {
                levi: one_based(t),
                reason: r.clone(),
            })
            .collect(),
        fixtures: s
            .fixtures
            .iter()
            .map(|c| FixtureOut {
                levi: one_based(&c.theta),
                wm_order: c.wm_order,
                wm0_order: c.wm0_order,
                wm1_order: c.wm1_order,
                wm1: c
                    .wm1_words
                    .iter()
                    .map(|w| w.iter().map(|&l| l as usize + 1).collect())
                    .collect(),
            })
            .collect(),
    }
}

fn verify(family: Family, rank: usize, cap: usize) -> CliResult<(Value, Vec<Diagnostic>)> {
    build_cartan(family, rank)?;
    let ranks: Vec<usize> = family.ranks_up_to(rank).collect();
    let summaries = ranks
        .par_iter()
        .map(|&r| certify_type(family, r, cap))
        .collect::<Result<Vec<_>, CoreError>>()?;
    let mut diags = Vec::new();
    for s in &summaries {
        for (t, reason) in &s.failures {
            diags.push(
                CliError::VerifyFailed(format!("{}{} levi {:?}: {reason}", s.family, s.rank, one_based(t)))
                    .diagnostic(),
            );
        }
    }
    let out = VerifyOut {
        levis: summaries.iter().map(|s| s.levis).sum(),
        passed: summaries.iter().map(|s| s.passed).sum(),
        ok: summaries.iter().all(TypeSummary::ok),
        types: summaries.iter().map(type_out).collect(),
    };
    Ok((to_value(out), diags))
}
