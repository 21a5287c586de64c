//! Jordan–Hölder counts through a decomposition into orthogonal blocks.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::levi::LeviAnalysis;

use super::CriterionReport;

fn support_in_block(support: &BTreeSet<usize>, blocks: &[Vec<usize>]) -> bool {
    blocks
        .iter()
        .any(|b| support.iter().all(|i| b.contains(i)))
}

/// `#JH(Ind_P^G σ) = ∏ #JH` over blocks, valid when every reducible co-rank
/// one root and the whole support of `R_{σν}` sit inside a single block.
///
/// `blocks` are pairwise disjoint, mutually orthogonal sets of simple roots
/// (0-based) whose union contains `Θ`; `counts[i]` is the constituent count
/// of the induction inside block `i`.
pub fn product_formula_count(
    an: &LeviAnalysis<'_>,
    report: &CriterionReport,
    blocks: &[Vec<usize>],
    counts: &[u64],
) -> Result<u64> {
    let rs = an.root_system();
    let n = rs.rank();
    if blocks.len() != counts.len() {
        return Err(CoreError::DimensionMismatch {
            expected: blocks.len(),
            found: counts.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for b in blocks {
        if b.is_empty() {
            return Err(CoreError::ProductHypothesis("empty block".into()));
        }
        for &i in b {
            if i >= n {
                return Err(CoreError::IndexOutOfRange { index: i, rank: n });
            }
            if !seen.insert(i) {
                return Err(CoreError::ProductHypothesis(format!(
                    "simple root {} lies in two blocks",
                    i + 1
                )));
            }
        }
    }
    for (x, bx) in blocks.iter().enumerate() {
        for by in &blocks[x + 1..] {
            for &i in bx {
                for &j in by {
                    if rs.cartan().entry(i, j) != 0 {
                        return Err(CoreError::ProductHypothesis(format!(
                            "blocks are not orthogonal: simple roots {} and {} are joined",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
    }
    if let Some(&t) = an.levi.theta().iter().find(|t| !seen.contains(t)) {
        return Err(CoreError::ProductHypothesis(format!(
            "Levi simple root {} is not covered by any block",
            t + 1
        )));
    }
    if let Some(&c) = counts.iter().find(|&&c| c == 0) {
        return Err(CoreError::ProductHypothesis(format!("count {c} is not positive")));
    }

    let rr = an.roots();
    for (&a, &irr) in &report.corank {
        if irr {
            continue;
        }
        let support: BTreeSet<usize> = rr
            .root(a)
            .fiber
            .iter()
            .flat_map(|&k| {
                rs.root(k as usize)
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, _)| i)
                    .collect::<Vec<_>>()
            })
            .collect();
        if !support_in_block(&support, blocks) {
            return Err(CoreError::ProductHypothesis(format!(
                "reducibility root {:?} crosses blocks",
                rr.direction(a)
            )));
        }
    }
    let r_support: BTreeSet<usize> = report
        .r
        .iter()
        .flat_map(|w| an.word(w).iter().map(|&l| l as usize).collect::<Vec<_>>())
        .collect();
    if !support_in_block(&r_support, blocks) {
        return Err(CoreError::ProductHypothesis(format!(
            "R_σν is supported on {:?}, which is not inside one block",
            r_support.iter().map(|i| i + 1).collect::<Vec<_>>()
        )));
    }
    counts.iter().try_fold(1u64, |acc, &c| {
        acc.checked_mul(c)
            .ok_or_else(|| CoreError::ProductHypothesis("count overflows u64".into()))
    })
}
