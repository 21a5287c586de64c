//! Predictions of the irreducibility conjectures.
//!
//! Under `R_σ = {1}` the pairwise criterion predicts irreducibility iff every
//! co-rank one induction is irreducible, quantified over all of `Φ_M` rather
//! than `Φ_M⁰`. In type A the flags can be given as a symmetric matrix over
//! the blocks of the Levi.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cartan::Family;
use crate::charlat::UnramifiedParam;
use crate::error::{CoreError, Result};
use crate::levi::{LeviAnalysis, RelId};
use crate::subgroup::Subgroup;

use super::ladder::{phi_sigma_nu_0, r_group};
use super::oracle::SigmaOracle;
use super::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    /// Order of `R_σ`, computed from the pairs with trivial twist.
    pub r_sigma_order: usize,
    /// `None` when the predictor abstains.
    pub verdict: Option<Verdict>,
    pub abstain_reason: Option<String>,
    /// Positive relative roots with a reducible co-rank one induction.
    pub failing: Vec<RelId>,
}

/// Co-rank one flags over `(Φ_M)⁺` read off a symmetric block matrix.
///
/// For type `A`, the Levi `Θ` cuts `{1, …, n+1}` into `k + 1` consecutive
/// blocks, where `k = |Δ ∖ Θ|`; the relative root between blocks `i < j`
/// is the sum of the simple roots on the boundaries `i, …, j − 1`.
pub fn pairwise_flags(an: &LeviAnalysis<'_>, matrix: &[Vec<bool>]) -> Result<Vec<(RelId, bool)>> {
    let rs = an.root_system();
    if rs.cartan().family() != Family::A {
        return Err(CoreError::RequiresTypeA);
    }
    let rest = an.levi.rest();
    let blocks = rest.len() + 1;
    if matrix.len() != blocks {
        return Err(CoreError::DimensionMismatch {
            expected: blocks,
            found: matrix.len(),
        });
    }
    for row in matrix {
        if row.len() != blocks {
            return Err(CoreError::DimensionMismatch {
                expected: blocks,
                found: row.len(),
            });
        }
    }
    let mut out = Vec::new();
    for i in 0..blocks {
        for j in i + 1..blocks {
            if matrix[i][j] != matrix[j][i] {
                return Err(CoreError::OracleInconsistent(format!(
                    "pairwise matrix is not symmetric at blocks {} and {}",
                    i + 1,
                    j + 1
                )));
            }
            let mut d = alloc::vec![0i32; rs.rank()];
            for &b in &rest[i..j] {
                d[b] = 1;
            }
            let a = an.roots().find(&d).ok_or(CoreError::NotRelativeRoot)?;
            out.push((a, matrix[i][j]));
        }
    }
    Ok(out)
}

/// Evaluates the conjectural criterion. Abstains when `R_σ ≠ {1}`.
pub fn conjecture_predict(
    an: &LeviAnalysis<'_>,
    nu: &UnramifiedParam,
    oracle: &SigmaOracle,
) -> Result<Prediction> {
    let fixing_sigma = Subgroup::from_members(
        oracle
            .pairs()
            .iter()
            .filter(|(_, chi)| chi.is_trivial())
            .map(|(&w, _)| w)
            .collect(),
    );
    let phi0_sigma = phi_sigma_nu_0(an, &fixing_sigma);
    let r_sigma = r_group(an, &fixing_sigma, &phi0_sigma)?.complement;
    if !r_sigma.is_trivial() {
        return Ok(Prediction {
            r_sigma_order: r_sigma.order(),
            verdict: None,
            abstain_reason: Some(format!("R_σ has order {}", r_sigma.order())),
            failing: Vec::new(),
        });
    }
    let stab = oracle.stabilizer(an, nu)?;
    let oracle = oracle.orbit_completed(an, &stab)?;
    let rr = an.roots();
    let missing: Vec<Vec<i32>> = rr
        .positives()
        .filter(|a| !oracle.corank_irred().contains_key(a))
        .map(|a| rr.direction(a).to_vec())
        .collect();
    if !missing.is_empty() {
        return Err(CoreError::MissingCorankFlags { roots: missing });
    }
    let failing: Vec<RelId> = rr
        .positives()
        .filter(|a| !oracle.corank_irred()[a])
        .collect();
    Ok(Prediction {
        r_sigma_order: 1,
        verdict: Some(Verdict::from_bool(failing.is_empty())),
        abstain_reason: None,
        failing,
    })
}
