//! Stabilizers, modified R-groups and irreducibility verdicts.
//!
//! The generalized principal series `Ind_P^G(σ ⊗ ν)` is irreducible exactly
//! when `R_{σν} = {1}` and every co-rank one induction along `α ∈ Φ_M⁰` is
//! irreducible. [`decide_gps`] evaluates this from a [`SigmaOracle`];
//! [`decide_ps_unramified`] evaluates the principal-series version for
//! `M = T` directly from the definitions `Φ_λ⁰`, `W_λ`, `R_λ` and the walls,
//! and cross-checks it against the oracle path.

mod ladder;
mod oracle;
mod predict;
mod product;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::charlat::{is_wall, stabilizer, UnramifiedParam};
use crate::error::{CoreError, Result};
use crate::levi::{LeviAnalysis, RelId};
use crate::rational::Q;
use crate::subgroup::Subgroup;
use crate::weyl::ElemId;

pub use ladder::{
    certify_factorization, delta_1, knapp_stein_ladder, phi_sigma_nu_0, r_group, split, Delta1,
    Ladder, Splitting,
};
pub use oracle::SigmaOracle;
pub use predict::{conjecture_predict, pairwise_flags, Prediction};
pub use product::product_formula_count;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Irreducible,
    Reducible,
}

impl Verdict {
    pub fn from_bool(irreducible: bool) -> Verdict {
        if irreducible {
            Verdict::Irreducible
        } else {
            Verdict::Reducible
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Reducible => "reducible",
        }
    }
}

/// Which clause decides the verdict. When several fail the first in the
/// order `RGroup`, `Wall`, `Corank` is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReasonClass {
    Irreducible,
    RGroup,
    Wall,
    Corank,
}

impl ReasonClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ReasonClass::Irreducible => "irreducible",
            ReasonClass::RGroup => "R-group",
            ReasonClass::Wall => "wall",
            ReasonClass::Corank => "corank",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClauseStatus {
    Holds,
    Fails,
    Abstains,
    Informational,
}

impl ClauseStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClauseStatus::Holds => "holds",
            ClauseStatus::Fails => "fails",
            ClauseStatus::Abstains => "abstains",
            ClauseStatus::Informational => "informational",
        }
    }

    fn of(b: bool) -> ClauseStatus {
        if b {
            ClauseStatus::Holds
        } else {
            ClauseStatus::Fails
        }
    }
}

/// One machine-readable line of the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub status: ClauseStatus,
    pub detail: String,
}

/// `⟨ν, α∨⟩` for a positive relative root; the torsion part is `None` when
/// the relative coroot is not integral along `Δ ∖ Θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPairing {
    pub root: RelId,
    pub real: Q,
    pub torsion: Option<Q>,
}

/// Result of translating the datum by a nontrivial `w₁ ∈ W_M¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitNote {
    pub w1: ElemId,
    pub translated_nu: UnramifiedParam,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Oracle-driven generalized principal series.
    Gps,
    /// `M = T` with the definitions `Φ_λ⁰`, `W_λ`, `R_λ`.
    PrincipalSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub mode: Mode,
    pub nu: UnramifiedParam,
    /// `W_{σν}` (resp. `W_λ`).
    pub stab: Subgroup,
    /// `Φ_{σν}⁰` (resp. `Φ_λ⁰`), positive members.
    pub phi0: Vec<RelId>,
    /// `W_{σν}⁰` (resp. `W_λ⁰`).
    pub w0: Subgroup,
    /// `R_{σν}` (resp. `R_λ`).
    pub r: Subgroup,
    pub delta1: Option<Delta1>,
    pub ladder: Option<Ladder>,
    /// Positive relative roots with `ν_α = q^{±1}`.
    pub walls: Vec<RelId>,
    /// Co-rank one flags over `(Φ_M⁰)⁺` as used by the verdict.
    pub corank: BTreeMap<RelId, bool>,
    pub pairings: Vec<RawPairing>,
    pub verdict: Verdict,
    pub reason: ReasonClass,
    pub clauses: Vec<Clause>,
    pub orbit_notes: Vec<OrbitNote>,
    /// In principal-series mode, the oracle-path report it was checked against.
    pub gps: Option<alloc::boxed::Box<CriterionReport>>,
}

impl CriterionReport {
    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn raw_pairings(an: &LeviAnalysis<'_>, nu: &UnramifiedParam) -> Vec<RawPairing> {
    an.roots()
        .positives()
        .map(|a| RawPairing {
            root: a,
            real: nu.real_pairing(an, a),
            torsion: nu.eval_rel(an, a).ok().map(|v| v.t),
        })
        .collect()
}

fn walls(an: &LeviAnalysis<'_>, nu: &UnramifiedParam) -> Vec<RelId> {
    an.roots()
        .positives()
        .filter(|&a| nu.eval_rel(an, a).map(is_wall).unwrap_or(false))
        .collect()
}

fn check_nu(an: &LeviAnalysis<'_>, nu: &UnramifiedParam) -> Result<()> {
    let n = an.root_system().rank();
    if nu.rank() != n {
        return Err(CoreError::DimensionMismatch {
            expected: n,
            found: nu.rank(),
        });
    }
    for &t in an.levi.theta() {
        if nu.q_part()[t] != Q::from_integer(0) || nu.t_part()[t] != Q::from_integer(0) {
            return Err(CoreError::NotVanishingOnLevi { index: t });
        }
    }
    Ok(())
}

/// `W_{σν}` from the oracle.
pub fn stabilizer_sigma_nu(
    an: &LeviAnalysis<'_>,
    nu: &UnramifiedParam,
    oracle: &SigmaOracle,
) -> Result<Subgroup> {
    check_nu(an, nu)?;
    oracle.stabilizer(an, nu)
}

/// Shortcut for regular data: with `W_{σν} = {1}` the verdict is the
/// conjunction of the co-rank one flags. `None` when the datum is not regular.
pub fn regular_shortcut(report: &CriterionReport) -> Option<Verdict> {
    report
        .stab
        .is_trivial()
        .then(|| Verdict::from_bool(report.corank.values().all(|&b| b)))
}

/// Shortcut for unitary data: irreducible iff `R′_{σν} = {1}`. `None` when
/// `ν` is not unitary or the ladder is unavailable; an error when the two
/// oracle fields contradict each other in the unitary setting.
pub fn unitary_shortcut(
    an: &LeviAnalysis<'_>,
    report: &CriterionReport,
    oracle: &SigmaOracle,
) -> Result<Option<Verdict>> {
    if !report.nu.is_unitary() {
        return Ok(None);
    }
    if let Some(msg) = unitary_inconsistency(an, report, oracle) {
        return Err(CoreError::OracleInconsistent(msg));
    }
    Ok(report
        .ladder
        .as_ref()
        .map(|l| Verdict::from_bool(l.r_prime.is_trivial())))
}

/// For unitary `ν` the co-rank one induction along `α ∈ Φ_{σν}⁰` is
/// irreducible iff `μ_α(σ) = 0`, and along `α ∈ Φ_M⁰ ∖ Φ_{σν}⁰` it is
/// always irreducible.
fn unitary_inconsistency(
    an: &LeviAnalysis<'_>,
    report: &CriterionReport,
    oracle: &SigmaOracle,
) -> Option<String> {
    let rr = an.roots();
    for (&a, &irr) in &report.corank {
        let fixed = report.phi0.binary_search(&a).is_ok();
        if fixed {
            if let Some(&mu) = oracle.mu_zero().get(&a) {
                if mu != irr {
                    return Some(format!(
                        "unitary datum: corank_irred and mu_zero differ on {:?}",
                        rr.direction(a)
                    ));
                }
            }
        } else if !irr {
            return Some(format!(
                "unitary datum: reducible co-rank one induction along {:?} whose reflection does not fix σ⊗ν",
                rr.direction(a)
            ));
        }
    }
    None
}

/// Evaluates the irreducibility criterion for `Ind_P^G(σ ⊗ ν)`.
pub fn decide_gps(
    an: &LeviAnalysis<'_>,
    nu: &UnramifiedParam,
    oracle: &SigmaOracle,
) -> Result<CriterionReport> {
    let report = gps_core(an, nu, oracle)?;
    let mut report = report;
    let mut notes = Vec::new();
    for w1 in an.wm.complement.iter().filter(|&w| w != crate::weyl::WeylGroup::IDENTITY) {
        let nu1 = nu.weyl_act(&an.levi, w1)?;
        let oracle1 = oracle.translate(an, w1)?;
        let other = gps_core(an, &nu1, &oracle1)?;
        if other.verdict != report.verdict {
            return Err(CoreError::Invariant(format!(
                "translation by W_M¹ element {:?} changes the verdict",
                an.word(w1)
            )));
        }
        notes.push(OrbitNote {
            w1,
            translated_nu: nu1,
            verdict: other.verdict,
        });
    }
    report.orbit_notes = notes;
    Ok(report)
}

fn gps_core(
    an: &LeviAnalysis<'_>,
    nu: &UnramifiedParam,
    oracle: &SigmaOracle,
) -> Result<CriterionReport> {
    check_nu(an, nu)?;
    let rr = an.roots();
    let stab = oracle.stabilizer(an, nu)?;
    let oracle = oracle.orbit_completed(an, &stab)?;
    let phi0 = phi_sigma_nu_0(an, &stab);
    let base = r_group(an, &stab, &phi0)?;

    let missing: Vec<Vec<i32>> = an
        .data
        .phi0
        .iter()
        .filter(|a| !oracle.corank_irred().contains_key(a))
        .map(|&a| rr.direction(a).to_vec())
        .collect();
    if !missing.is_empty() {
        return Err(CoreError::MissingCorankFlags { roots: missing });
    }
    let corank: BTreeMap<RelId, bool> = an
        .data
        .phi0
        .iter()
        .map(|&a| (a, oracle.corank_irred()[&a]))
        .collect();

    let r_trivial = base.complement.is_trivial();
    let all_corank = corank.values().all(|&b| b);
    let verdict = Verdict::from_bool(r_trivial && all_corank);
    let reason = if !r_trivial {
        ReasonClass::RGroup
    } else if !all_corank {
        ReasonClass::Corank
    } else {
        ReasonClass::Irreducible
    };

    let mut clauses = Vec::new();
    clauses.push(Clause {
        name: "R-trivial",
        status: ClauseStatus::of(r_trivial),
        detail: format!("|R_σν| = {}", base.complement.order()),
    });
    let failing: Vec<&[i32]> = corank
        .iter()
        .filter(|(_, &b)| !b)
        .map(|(&a, _)| rr.direction(a))
        .collect();
    clauses.push(Clause {
        name: "corank",
        status: ClauseStatus::of(all_corank),
        detail: if failing.is_empty() {
            String::from("all co-rank one inductions over Φ_M⁰ irreducible")
        } else {
            format!("reducible along {failing:?}")
        },
    });

    let d1 = delta_1(an, nu);
    let contained = stab.is_subset_of(&d1.group);
    if !d1.reflection_closed {
        return Err(CoreError::Invariant("Δ₁ is not reflection-closed".into()));
    }
    let asserted = oracle.has_trivial_twists() && an.wm.complement.is_trivial();
    if asserted && !contained {
        return Err(CoreError::Invariant("W_σν ⊄ W_Δ₁".into()));
    }
    clauses.push(Clause {
        name: "urd-containment",
        status: if asserted {
            ClauseStatus::Holds
        } else {
            ClauseStatus::Informational
        },
        detail: format!("W_σν ⊆ W_Δ₁: {contained}"),
    });

    let ladder = match knapp_stein_ladder(an, &stab, &phi0, &base, &oracle) {
        Ok(l) => Some(l),
        Err(CoreError::MissingMuZero { .. }) => None,
        Err(e) => return Err(e),
    };
    clauses.push(Clause {
        name: "ladder",
        status: if ladder.is_some() {
            ClauseStatus::Holds
        } else {
            ClauseStatus::Abstains
        },
        detail: match &ladder {
            Some(l) => format!(
                "R′ = R⁰ ⋊ R with |R′| = {}, |R⁰| = {}, |R| = {}",
                l.r_prime.order(),
                l.r0.order(),
                base.complement.order()
            ),
            None => String::from("mu_zero flags missing on Φ_σν⁰"),
        },
    });

    let mut report = CriterionReport {
        mode: Mode::Gps,
        nu: nu.clone(),
        stab,
        phi0,
        w0: base.reflections,
        r: base.complement,
        delta1: Some(d1),
        ladder,
        walls: walls(an, nu),
        corank,
        pairings: raw_pairings(an, nu),
        verdict,
        reason,
        clauses,
        orbit_notes: Vec::new(),
        gps: None,
    };

    let regular = regular_shortcut(&report);
    if let Some(v) = regular {
        if v != verdict {
            return Err(CoreError::Invariant("regular shortcut disagrees".into()));
        }
    }
    report.clauses.push(Clause {
        name: "regular-shortcut",
        status: if regular.is_some() {
            ClauseStatus::Holds
        } else {
            ClauseStatus::Abstains
        },
        detail: String::from(if regular.is_some() {
            "W_σν = {1}: verdict is the co-rank one conjunction"
        } else {
            "W_σν ≠ {1}"
        }),
    });

    let unitary: core::result::Result<Verdict, String> = if !nu.is_unitary() {
        Err(String::from("ν is not unitary"))
    } else if let Some(msg) = unitary_inconsistency(an, &report, &oracle) {
        Err(msg)
    } else if let Some(l) = &report.ladder {
        Ok(Verdict::from_bool(l.r_prime.is_trivial()))
    } else {
        Err(String::from("ladder unavailable"))
    };
    match unitary {
        Ok(v) => {
            if v != verdict {
                return Err(CoreError::Invariant("unitary shortcut disagrees".into()));
            }
            report.clauses.push(Clause {
                name: "unitary-shortcut",
                status: ClauseStatus::Holds,
                detail: String::from("irreducible iff R′ = {1}"),
            });
        }
        Err(detail) => report.clauses.push(Clause {
            name: "unitary-shortcut",
            status: ClauseStatus::Abstains,
            detail,
        }),
    }
    Ok(report)
}

/// Principal series `Ind_B^G(λ)`: `Φ_λ⁰ = {λ_α = 1}`, `W_λ = {w.λ = λ}`,
/// `R_λ = W_λ¹`; irreducible iff `R_λ = {1}` and no `λ_α = q^{±1}`.
pub fn decide_ps_unramified(an: &LeviAnalysis<'_>, lambda: &UnramifiedParam) -> Result<CriterionReport> {
    if !an.levi.theta().is_empty() {
        return Err(CoreError::RequiresTorus);
    }
    check_nu(an, lambda)?;
    let rr = an.roots();
    let stab = stabilizer(an, lambda);
    let mut phi0 = Vec::new();
    for a in rr.positives() {
        if lambda.eval_rel(an, a)?.is_one() {
            phi0.push(a);
        }
    }
    let base = split(an, &stab, &phi0)?;
    let walls = walls(an, lambda);
    let r_trivial = base.complement.is_trivial();
    let verdict = Verdict::from_bool(r_trivial && walls.is_empty());
    let reason = if !r_trivial {
        ReasonClass::RGroup
    } else if !walls.is_empty() {
        ReasonClass::Wall
    } else {
        ReasonClass::Irreducible
    };

    let oracle = SigmaOracle::principal_series(an, lambda)?;
    let gps = decide_gps(an, lambda, &oracle)?;
    if gps.verdict != verdict {
        return Err(CoreError::Invariant(
            "principal-series and oracle paths disagree".into(),
        ));
    }
    let clauses = alloc::vec![
        Clause {
            name: "R-trivial",
            status: ClauseStatus::of(r_trivial),
            detail: format!("|R_λ| = {}", base.complement.order()),
        },
        Clause {
            name: "no-wall",
            status: ClauseStatus::of(walls.is_empty()),
            detail: format!("{} wall root(s)", walls.len()),
        },
        Clause {
            name: "gps-agrees",
            status: ClauseStatus::Holds,
            detail: format!(
                "oracle path: |R_σν| = {}, verdict {}",
                gps.r.order(),
                gps.verdict.as_str()
            ),
        },
    ];
    Ok(CriterionReport {
        mode: Mode::PrincipalSeries,
        nu: lambda.clone(),
        stab,
        phi0,
        w0: base.reflections,
        r: base.complement,
        delta1: None,
        ladder: None,
        walls,
        corank: gps.corank.clone(),
        pairings: raw_pairings(an, lambda),
        verdict,
        reason,
        clauses,
        orbit_notes: Vec::new(),
        gps: Some(alloc::boxed::Box::new(gps)),
    })
}
