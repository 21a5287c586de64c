//! Reflection/complement splittings of stabilizers: `W_{σν} = W⁰ ⋊ R`,
//! the Knapp–Stein ladder `R′ = R⁰ ⋊ R`, and `Δ₁`.

use alloc::format;
use alloc::vec::Vec;

use crate::charlat::UnramifiedParam;
use crate::error::{CoreError, Result};
use crate::levi::{indecomposables, is_reflection_closed, LeviAnalysis, RelId};
use crate::rational::Q;
use crate::subgroup::Subgroup;
use crate::weyl::ElemId;

use super::oracle::SigmaOracle;

/// `stab = W⁰ ⋊ C` with `W⁰ = ⟨w_α : α ∈ roots⟩` and
/// `C = {w ∈ stab : w(roots⁺) > 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub reflections: Subgroup,
    pub complement: Subgroup,
}

/// Computes and certifies the splitting of `stab` along the positive
/// relative roots `roots`, whose reflections must lie in `stab`.
pub fn split(an: &LeviAnalysis<'_>, stab: &Subgroup, roots: &[RelId]) -> Result<Splitting> {
    let group = an.group();
    let rr = an.roots();
    let mut gens = Vec::with_capacity(roots.len());
    for &a in roots {
        let w = an.reflection(a).ok_or_else(|| {
            CoreError::Invariant(format!("{:?} is not in Φ_M⁰", rr.direction(a)))
        })?;
        if !stab.contains(w) {
            return Err(CoreError::Invariant(format!(
                "reflection of {:?} is not in the stabilizer",
                rr.direction(a)
            )));
        }
        gens.push(w);
    }
    let reflections = Subgroup::generated(group, &gens);
    let mut complement = Vec::new();
    for w in stab.iter() {
        let mut keeps = true;
        for &a in roots {
            let img = an.act_rel(w, a);
            if roots.binary_search(&rr.positive_of(img)).is_err() {
                return Err(CoreError::Invariant(format!(
                    "root set not stable under {:?}",
                    an.word(w)
                )));
            }
            keeps &= rr.is_positive(img);
        }
        if keeps {
            complement.push(w);
        }
    }
    let complement = Subgroup::from_members(complement);
    certify_factorization(an, stab, &reflections, &complement)?;
    Ok(Splitting {
        reflections,
        complement,
    })
}

/// Every element of `whole` is `a·b` with `a ∈ left`, `b ∈ right` in exactly
/// one way. Iterates over the smaller factor.
pub fn certify_factorization(
    an: &LeviAnalysis<'_>,
    whole: &Subgroup,
    left: &Subgroup,
    right: &Subgroup,
) -> Result<()> {
    let group = an.group();
    for w in whole.iter() {
        let count = if left.order() <= right.order() {
            left.iter()
                .filter(|&a| right.contains(group.mul(group.inv(a), w)))
                .count()
        } else {
            right
                .iter()
                .filter(|&b| left.contains(group.mul(w, group.inv(b))))
                .count()
        };
        if count != 1 {
            return Err(CoreError::Factorization(format!(
                "{:?} has {count} factorizations",
                an.word(w)
            )));
        }
    }
    if whole.order() != left.order() * right.order() {
        return Err(CoreError::Factorization(format!(
            "order {} differs from {}·{}",
            whole.order(),
            left.order(),
            right.order()
        )));
    }
    Ok(())
}

/// `Φ_{σν}⁰ = {α ∈ Φ_M⁰ : w_α ∈ stab}` (positive members).
pub fn phi_sigma_nu_0(an: &LeviAnalysis<'_>, stab: &Subgroup) -> Vec<RelId> {
    an.data
        .phi0
        .iter()
        .copied()
        .filter(|&a| stab.contains(an.reflection(a).expect("reflection of Φ_M⁰")))
        .collect()
}

/// `(W_{σν}⁰, R_{σν})`.
pub fn r_group(an: &LeviAnalysis<'_>, stab: &Subgroup, phi0: &[RelId]) -> Result<Splitting> {
    split(an, stab, phi0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta1 {
    /// `{α ∈ Φ_M⁰ : ⟨Re ν, α∨⟩ = 0}` (positive members).
    pub roots: Vec<RelId>,
    pub group: Subgroup,
    pub base: Vec<RelId>,
    pub reflection_closed: bool,
}

/// `Δ₁` is read off the real part of `ν`; the torsion part belongs to `σ`.
pub fn delta_1(an: &LeviAnalysis<'_>, nu: &UnramifiedParam) -> Delta1 {
    let roots: Vec<RelId> = an
        .data
        .phi0
        .iter()
        .copied()
        .filter(|&a| nu.real_pairing(an, a) == Q::from_integer(0))
        .collect();
    let gens: Vec<ElemId> = roots
        .iter()
        .map(|&a| an.reflection(a).expect("reflection of Φ_M⁰"))
        .collect();
    Delta1 {
        group: Subgroup::generated(an.group(), &gens),
        base: indecomposables(an.roots(), &roots),
        reflection_closed: is_reflection_closed(an.root_system(), an.roots(), &roots),
        roots,
    }
}

/// `W_{σν}^{0′}`, `R′`, `R⁰` for a given `stab = W⁰ ⋊ R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    /// `{α ∈ Φ_{σν}⁰ : μ_α(σ) = 0}` (positive members).
    pub mu_zero_roots: Vec<RelId>,
    pub w0_prime: Subgroup,
    pub r_prime: Subgroup,
    /// `W⁰ ∩ R′`, mapping isomorphically onto `W⁰/W^{0′}`.
    pub r0: Subgroup,
}

/// Builds the ladder and checks `R′ = R⁰ ⋊ R` exactly.
pub fn knapp_stein_ladder(
    an: &LeviAnalysis<'_>,
    stab: &Subgroup,
    phi0: &[RelId],
    base: &Splitting,
    oracle: &SigmaOracle,
) -> Result<Ladder> {
    let group = an.group();
    let rr = an.roots();
    let missing: Vec<Vec<i32>> = phi0
        .iter()
        .filter(|a| !oracle.mu_zero().contains_key(a))
        .map(|&a| rr.direction(a).to_vec())
        .collect();
    if !missing.is_empty() {
        return Err(CoreError::MissingMuZero { roots: missing });
    }
    let mu_zero_roots: Vec<RelId> = phi0
        .iter()
        .copied()
        .filter(|a| oracle.mu_zero()[a])
        .collect();
    let primed = split(an, stab, &mu_zero_roots)?;
    let (w0, r) = (&base.reflections, &base.complement);
    let (w0p, rp) = (&primed.reflections, &primed.complement);
    let r0 = w0.intersection(rp);

    let fail = |what: &str| Err(CoreError::Invariant(format!("R′ = R⁰ ⋊ R: {what}")));
    if !w0p.is_subset_of(w0) || !r.is_subset_of(rp) {
        return fail("containments");
    }
    if r0.order() * w0p.order() != w0.order() {
        return fail("|R⁰| ≠ |W⁰ / W^{0′}|");
    }
    // Distinct elements of R⁰ lie in distinct W^{0′}-cosets.
    for a in r0.iter() {
        for b in r0.iter() {
            if a != b && w0p.contains(group.mul(group.inv(a), b)) {
                return fail("R⁰ → W⁰/W^{0′} is not injective");
            }
        }
    }
    if !r0.is_normalized_by(group, rp, r0.members()) {
        return fail("R⁰ is not normal in R′");
    }
    if !r0.intersection(r).is_trivial() {
        return fail("R⁰ ∩ R ≠ {1}");
    }
    if rp.order() != r0.order() * r.order() {
        return fail("|R′| ≠ |R⁰|·|R|");
    }
    Ok(Ladder {
        mu_zero_roots,
        w0_prime: primed.reflections,
        r_prime: primed.complement,
        r0,
    })
}
