//! The combinatorial shadow of a supercuspidal `σ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::charlat::{is_wall, UnramifiedParam};
use crate::error::{CoreError, Result};
use crate::levi::{LeviAnalysis, RelId};
use crate::rational::Q;
use crate::subgroup::Subgroup;
use crate::weyl::{ElemId, WeylGroup};

/// `w.σ ≅ σ ⊗ χ_w` for the listed `w`, plus the rank-one flags.
///
/// Flags are keyed by the positive member of `{α, −α}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaOracle {
    pairs: BTreeMap<ElemId, UnramifiedParam>,
    mu_zero: BTreeMap<RelId, bool>,
    corank_irred: BTreeMap<RelId, bool>,
}

fn word_of(an: &LeviAnalysis<'_>, w: ElemId) -> Vec<u8> {
    an.word(w).to_vec()
}

impl SigmaOracle {
    /// Validates the twisted-subgroup axioms:
    /// `(1, trivial)` is present and `χ_{w₁w₂} = χ_{w₁} · w₁.χ_{w₂}`.
    pub fn new(
        an: &LeviAnalysis<'_>,
        pairs: Vec<(ElemId, UnramifiedParam)>,
        mu_zero: Vec<(RelId, bool)>,
        corank_irred: Vec<(RelId, bool)>,
    ) -> Result<SigmaOracle> {
        let rank = an.root_system().rank();
        let mut map: BTreeMap<ElemId, UnramifiedParam> = BTreeMap::new();
        map.insert(WeylGroup::IDENTITY, UnramifiedParam::trivial(rank));
        for (w, chi) in pairs {
            if !an.wm.reps.contains(w) {
                return Err(CoreError::OracleInconsistent(format!(
                    "{:?} is not in W_M",
                    word_of(an, w)
                )));
            }
            if chi.rank() != rank {
                return Err(CoreError::DimensionMismatch {
                    expected: rank,
                    found: chi.rank(),
                });
            }
            for &t in an.levi.theta() {
                if chi.q_part()[t] != Q::from_integer(0) || chi.t_part()[t] != Q::from_integer(0) {
                    return Err(CoreError::NotVanishingOnLevi { index: t });
                }
            }
            match map.get(&w) {
                Some(prev) if *prev != chi => {
                    return Err(CoreError::OracleInconsistent(format!(
                        "two different twists for {:?}",
                        word_of(an, w)
                    )))
                }
                _ => {
                    map.insert(w, chi);
                }
            }
        }
        let oracle = SigmaOracle {
            pairs: map,
            mu_zero: normalize_flags(an, mu_zero)?,
            corank_irred: normalize_flags(an, corank_irred)?,
        };
        oracle.check_cocycle(an)?;
        Ok(oracle)
    }

    /// Closure and the cocycle rule only need checking against a generating
    /// set of the listed elements.
    fn check_cocycle(&self, an: &LeviAnalysis<'_>) -> Result<()> {
        let group = an.group();
        let mut gens: Vec<ElemId> = Vec::new();
        let mut span = Subgroup::trivial();
        for &p in self.pairs.keys() {
            if !span.contains(p) {
                gens.push(p);
                span = Subgroup::generated(group, &gens);
            }
        }
        for (&a, chi_a) in &self.pairs {
            for &b in &gens {
                let ab = group.mul(a, b);
                let expect = chi_a.add(&self.pairs[&b].weyl_act(&an.levi, a)?);
                match self.pairs.get(&ab) {
                    Some(chi) if *chi == expect => {}
                    Some(_) => {
                        return Err(CoreError::OracleInconsistent(format!(
                            "twist of {:?} disagrees with the pair ({:?}, {:?})",
                            word_of(an, ab),
                            word_of(an, a),
                            word_of(an, b)
                        )))
                    }
                    None => {
                        return Err(CoreError::OracleInconsistent(format!(
                            "pairs not closed: ({:?}, {:?}) gives {:?}",
                            word_of(an, a),
                            word_of(an, b),
                            word_of(an, ab)
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// Only `(1, trivial)`.
    pub fn trivial(an: &LeviAnalysis<'_>) -> SigmaOracle {
        SigmaOracle::new(an, Vec::new(), Vec::new(), Vec::new()).expect("trivial oracle")
    }

    /// Every element of `W_M` fixes `σ` with trivial twist.
    pub fn full(
        an: &LeviAnalysis<'_>,
        mu_zero: Vec<(RelId, bool)>,
        corank_irred: Vec<(RelId, bool)>,
    ) -> Result<SigmaOracle> {
        let rank = an.root_system().rank();
        let pairs = an
            .wm
            .reps
            .iter()
            .map(|w| (w, UnramifiedParam::trivial(rank)))
            .collect();
        SigmaOracle::new(an, pairs, mu_zero, corank_irred)
    }

    /// Degenerate oracle for `M = T`: `σ` is the trivial character, every
    /// `w ∈ W` fixes it, `μ_α = 0` exactly when `λ_α = 1`, and the rank-one
    /// induction along `α` is irreducible unless `λ_α = q^{±1}` or
    /// `s_α λ = λ` with `λ_α ≠ 1`.
    pub fn principal_series(an: &LeviAnalysis<'_>, lambda: &UnramifiedParam) -> Result<SigmaOracle> {
        if !an.levi.theta().is_empty() {
            return Err(CoreError::RequiresTorus);
        }
        let rr = an.roots();
        let mut mu = Vec::new();
        let mut corank = Vec::new();
        for a in rr.positives() {
            let v = lambda.eval_rel(an, a)?;
            let w = an.reflection(a).expect("every root reflects when M = T");
            let fixed = lambda.weyl_act(&an.levi, w)? == *lambda;
            mu.push((a, v.is_one()));
            corank.push((a, !is_wall(v) && !(fixed && !v.is_one())));
        }
        SigmaOracle::full(an, mu, corank)
    }

    pub fn pairs(&self) -> &BTreeMap<ElemId, UnramifiedParam> {
        &self.pairs
    }

    pub fn twist(&self, w: ElemId) -> Option<&UnramifiedParam> {
        self.pairs.get(&w)
    }

    /// Whether every twist is trivial.
    pub fn has_trivial_twists(&self) -> bool {
        self.pairs.values().all(UnramifiedParam::is_trivial)
    }

    pub fn mu_zero(&self) -> &BTreeMap<RelId, bool> {
        &self.mu_zero
    }

    pub fn corank_irred(&self) -> &BTreeMap<RelId, bool> {
        &self.corank_irred
    }

    /// `W_{σν} = {w : (w, χ_w) listed, χ_w · w.ν = ν}`.
    pub fn stabilizer(&self, an: &LeviAnalysis<'_>, nu: &UnramifiedParam) -> Result<Subgroup> {
        let mut members = Vec::new();
        for (&w, chi) in &self.pairs {
            if chi.add(&nu.weyl_act(&an.levi, w)?) == *nu {
                members.push(w);
            }
        }
        Ok(Subgroup::from_members(members))
    }

    /// Extends both flag maps along `stab`-orbits, rejecting conflicts.
    pub fn orbit_completed(&self, an: &LeviAnalysis<'_>, stab: &Subgroup) -> Result<SigmaOracle> {
        Ok(SigmaOracle {
            pairs: self.pairs.clone(),
            mu_zero: complete(an, stab, &self.mu_zero)?,
            corank_irred: complete(an, stab, &self.corank_irred)?,
        })
    }

    /// The same `σ` seen through `w ∈ W_M`: pairs are conjugated, twists and
    /// flags transported.
    pub fn translate(&self, an: &LeviAnalysis<'_>, w: ElemId) -> Result<SigmaOracle> {
        let group = an.group();
        let mut pairs = BTreeMap::new();
        for (&x, chi) in &self.pairs {
            pairs.insert(group.conj(w, x), chi.weyl_act(&an.levi, w)?);
        }
        let rr = an.roots();
        let move_flags = |m: &BTreeMap<RelId, bool>| -> BTreeMap<RelId, bool> {
            m.iter()
                .map(|(&a, &v)| (rr.positive_of(an.act_rel(w, a)), v))
                .collect()
        };
        Ok(SigmaOracle {
            pairs,
            mu_zero: move_flags(&self.mu_zero),
            corank_irred: move_flags(&self.corank_irred),
        })
    }
}

fn normalize_flags(an: &LeviAnalysis<'_>, flags: Vec<(RelId, bool)>) -> Result<BTreeMap<RelId, bool>> {
    let rr = an.roots();
    let mut out = BTreeMap::new();
    for (a, v) in flags {
        if a as usize >= rr.len() {
            return Err(CoreError::NotRelativeRoot);
        }
        let key = rr.positive_of(a);
        if let Some(&prev) = out.get(&key) {
            if prev != v {
                return Err(CoreError::OracleInconsistent(format!(
                    "conflicting flags for {:?}",
                    rr.direction(key)
                )));
            }
        }
        out.insert(key, v);
    }
    Ok(out)
}

fn complete(
    an: &LeviAnalysis<'_>,
    stab: &Subgroup,
    flags: &BTreeMap<RelId, bool>,
) -> Result<BTreeMap<RelId, bool>> {
    let rr = an.roots();
    let mut out = flags.clone();
    for (&a, &v) in flags {
        for w in stab.iter() {
            let b = rr.positive_of(an.act_rel(w, a));
            match out.get(&b) {
                Some(&prev) if prev != v => {
                    return Err(CoreError::FlagNotOrbitConstant {
                        root: rr.direction(a).to_vec(),
                    })
                }
                _ => {
                    out.insert(b, v);
                }
            }
        }
    }
    Ok(out)
}
