//! Exhaustive certification of the relative Weyl group structure.
//!
//! For each Levi subset the checks are recomputed by brute force from the
//! enumerated group: `W_M⁰ ⊴ W_M`, `W_M⁰ ∩ W_M¹ = {1}`,
//! `|W_M| = |W_M⁰|·|W_M¹|`, unique factorization, `Φ_M⁰` stable under `W_M`
//! and closed under its reflections, and `w·w_α·w⁻¹ = w_{w.α}`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cartan::{build_cartan, Family};
use crate::criterion::certify_factorization;
use crate::error::Result;
use crate::levi::{analyze, is_reflection_closed, LeviAnalysis};
use crate::rootsys::build_root_system;
use crate::weyl::{generate_weyl, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviCertificate {
    pub theta: Vec<usize>,
    pub wm_order: usize,
    pub wm0_order: usize,
    pub wm1_order: usize,
    pub relative_roots: usize,
    pub phi0_roots: usize,
    pub orphan_reflections: usize,
    /// Canonical words (0-based letters) of `W_M¹`.
    pub wm1_words: Vec<Vec<u8>>,
    pub distinguished: bool,
    pub normal: bool,
    pub trivial_intersection: bool,
    pub order_product: bool,
    pub unique_factorization: bool,
    pub phi0_stable: bool,
    pub reflection_closed: bool,
    pub conjugation: bool,
}

impl LeviCertificate {
    pub fn key1(&self) -> bool {
        self.normal && self.trivial_intersection && self.order_product && self.unique_factorization
    }

    pub fn subroot(&self) -> bool {
        self.phi0_stable && self.reflection_closed && self.conjugation
    }

    pub fn passed(&self) -> bool {
        self.distinguished && self.key1() && self.subroot()
    }
}

/// Runs every check on an analysed Levi.
pub fn certify(an: &LeviAnalysis<'_>) -> LeviCertificate {
    let group = an.group();
    let rr = an.roots();
    let wm = &an.wm;
    let theta = an.levi.theta();

    let distinguished = wm.reps.iter().all(|w| {
        let len = group.element(w).length();
        theta
            .iter()
            .all(|&t| group.element(group.mul(w, group.simple(t))).length() > len)
    });
    let gens: Vec<_> = an.data.reflection_of.values().copied().collect();
    let normal = wm.small.is_normalized_by(group, &wm.reps, &gens)
        && wm.small.is_subset_of(&wm.reps)
        && wm.complement.is_subset_of(&wm.reps);
    let trivial_intersection = wm.small.intersection(&wm.complement).is_trivial();
    let order_product = wm.reps.order() == wm.small.order() * wm.complement.order();
    let unique_factorization = certify_factorization(an, &wm.reps, &wm.small, &wm.complement).is_ok()
        && wm.reps.iter().all(|w| match wm.factor(w) {
            Some((a, b)) => group.mul(a, b) == w,
            None => false,
        });

    let mut phi0_stable = true;
    let mut conjugation = true;
    for w in wm.reps.iter() {
        for &a in &an.data.phi0 {
            let img = an.act_rel(w, a);
            match an.reflection(img) {
                Some(wa) => {
                    let lhs = group.conj(w, an.reflection(a).expect("Φ_M⁰ reflection"));
                    conjugation &= lhs == wa;
                }
                None => phi0_stable = false,
            }
        }
    }
    let reflection_closed = is_reflection_closed(an.root_system(), rr, &an.data.phi0);

    LeviCertificate {
        theta: theta.to_vec(),
        wm_order: wm.reps.order(),
        wm0_order: wm.small.order(),
        wm1_order: wm.complement.order(),
        relative_roots: rr.n_pos(),
        phi0_roots: an.data.phi0.len(),
        orphan_reflections: an.data.orphan_reflections.len(),
        wm1_words: wm
            .complement
            .iter()
            .map(|w| group.element(w).word().to_vec())
            .collect(),
        distinguished,
        normal,
        trivial_intersection,
        order_product,
        unique_factorization,
        phi0_stable,
        reflection_closed,
        conjugation,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeSummary {
    pub family: Family,
    pub rank: usize,
    pub group_order: usize,
    pub levis: usize,
    pub passed: usize,
    /// Failing subsets with the reason.
    pub failures: Vec<(Vec<usize>, String)>,
    /// Certificates of the subsets with `W_M¹ ≠ {1}`.
    pub fixtures: Vec<LeviCertificate>,
}

impl TypeSummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.levis
    }
}

/// Certifies every `Θ ⊆ Δ` of one type.
pub fn certify_group(group: &WeylGroup) -> TypeSummary {
    let rs = group.root_system();
    let n = rs.rank();
    let mut summary = TypeSummary {
        family: rs.cartan().family(),
        rank: n,
        group_order: group.order(),
        levis: 0,
        passed: 0,
        failures: Vec::new(),
        fixtures: Vec::new(),
    };
    for mask in 0u32..(1u32 << n) {
        let theta: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        summary.levis += 1;
        match analyze(group, &theta) {
            Ok(an) => {
                let cert = certify(&an);
                if cert.passed() {
                    summary.passed += 1;
                } else {
                    summary
                        .failures
                        .push((theta.clone(), "brute-force check failed".to_string()));
                }
                if cert.wm1_order > 1 {
                    summary.fixtures.push(cert);
                }
            }
            Err(e) => summary.failures.push((theta, e.to_string())),
        }
    }
    summary
}

/// Builds the group of `(family, rank)` and certifies all its Levi subsets.
pub fn certify_type(family: Family, rank: usize, cap: usize) -> Result<TypeSummary> {
    let rs = build_root_system(build_cartan(family, rank)?)?;
    let group = generate_weyl(rs, cap)?;
    Ok(certify_group(&group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_CAP;

    #[test]
    fn small_types_pass() {
        let a3 = certify_type(Family::A, 3, DEFAULT_CAP).unwrap();
        assert_eq!((a3.levis, a3.passed), (8, 8));
        let b3 = certify_type(Family::B, 3, DEFAULT_CAP).unwrap();
        assert!(b3.ok());
        let g2 = certify_type(Family::G, 2, DEFAULT_CAP).unwrap();
        assert_eq!((g2.levis, g2.passed), (4, 4));
        assert!(a3.fixtures.is_empty());
    }

    #[test]
    fn d4_has_non_coxeter_fixtures() {
        let d4 = certify_type(Family::D, 4, DEFAULT_CAP).unwrap();
        assert!(d4.ok());
        assert_eq!(d4.fixtures.len(), 3);
        for f in &d4.fixtures {
            assert_eq!((f.wm_order, f.wm1_order, f.phi0_roots), (2, 2, 0));
        }
    }
}
