//! Relative root data of a standard Levi subset `Θ ⊆ Δ`.
//!
//! `a_M*` is identified with the quotient of the root space by `span(Θ)`,
//! i.e. with the coefficients of a vector along `Δ ∖ Θ`. A relative root is
//! the shortest projected absolute root on its ray; its
//! metric realization is the orthogonal projection of that vector onto
//! `span(Θ)^⊥`, and its coroot is `2p/(p, p)`.
//!
//! `W_M` is realized by the distinguished representatives
//! `{w ∈ W : w(Θ) = Θ}`, which are the `W_Θ`-minimal elements of their cosets
//! and form a subgroup of `W`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::error::{CoreError, Result};
use crate::rational::{gcd_all, solve, Q};
use crate::rootsys::RootSystem;
use crate::subgroup::Subgroup;
use crate::weyl::{ElemId, WeylGroup};

/// Index of a relative root; positives come first.
pub type RelId = u16;

#[derive(Clone, Debug)]
pub struct Levi<'g> {
    group: &'g WeylGroup,
    theta: Vec<usize>,
    in_theta: Vec<bool>,
}

impl<'g> Levi<'g> {
    /// `theta` holds 0-based simple root indices.
    pub fn new(group: &'g WeylGroup, theta: &[usize]) -> Result<Levi<'g>> {
        let rs = group.root_system();
        rs.check_subset(theta)?;
        let mut theta = theta.to_vec();
        theta.sort_unstable();
        theta.dedup();
        let mut in_theta = vec![false; rs.rank()];
        for &t in &theta {
            in_theta[t] = true;
        }
        Ok(Levi {
            group,
            theta,
            in_theta,
        })
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.group
    }

    pub fn root_system(&self) -> &'g RootSystem {
        self.group.root_system()
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn in_theta(&self, i: usize) -> bool {
        self.in_theta[i]
    }

    /// Simple roots outside `Θ`; these index the coordinates of `a_M*`.
    pub fn rest(&self) -> Vec<usize> {
        (0..self.in_theta.len()).filter(|&i| !self.in_theta[i]).collect()
    }

    /// Whether the root lies in `Φ^M`.
    pub fn in_levi(&self, root: usize) -> bool {
        self.root_system()
            .root(root)
            .coords()
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || self.in_theta[i])
    }

    /// Whether `w` normalizes `M`, i.e. `w(Φ^M) = Φ^M`.
    pub fn normalizes(&self, w: ElemId) -> bool {
        let e = self.group.element(w);
        self.theta.iter().all(|&t| self.in_levi(e.apply(t)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeRoot {
    /// Integer vector along `Δ ∖ Θ`, zero on `Θ`.
    pub direction: Vec<i32>,
    /// Absolute roots projecting onto this ray.
    pub fiber: Vec<u16>,
    pub positive: bool,
}

/// `Φ_M`: reduced relative roots with their metric data.
#[derive(Clone, Debug)]
pub struct RelativeRoots {
    roots: Vec<RelativeRoot>,
    n_pos: usize,
    of_root: Vec<Option<RelId>>,
    lookup: BTreeMap<Vec<i32>, RelId>,
    projection: Vec<Vec<Q>>,
    coroot: Vec<Vec<Q>>,
}

impl RelativeRoots {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn n_pos(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, a: RelId) -> &RelativeRoot {
        &self.roots[a as usize]
    }

    pub fn positives(&self) -> impl Iterator<Item = RelId> {
        0..self.n_pos as RelId
    }

    pub fn all(&self) -> impl Iterator<Item = RelId> {
        0..self.roots.len() as RelId
    }

    pub fn is_positive(&self, a: RelId) -> bool {
        (a as usize) < self.n_pos
    }

    pub fn neg(&self, a: RelId) -> RelId {
        if self.is_positive(a) {
            a + self.n_pos as RelId
        } else {
            a - self.n_pos as RelId
        }
    }

    /// The positive member of `{α, −α}`.
    pub fn positive_of(&self, a: RelId) -> RelId {
        if self.is_positive(a) {
            a
        } else {
            self.neg(a)
        }
    }

    pub fn direction(&self, a: RelId) -> &[i32] {
        &self.roots[a as usize].direction
    }

    /// Relative root containing the given absolute root, if it lies outside `Φ^M`.
    pub fn of_root(&self, root: usize) -> Option<RelId> {
        self.of_root[root]
    }

    /// Looks a relative root up by its direction (full length, zero on `Θ`).
    pub fn find(&self, direction: &[i32]) -> Option<RelId> {
        self.lookup.get(direction).copied()
    }

    /// Orthogonal projection of the direction onto `span(Θ)^⊥`, in the
    /// simple-root basis.
    pub fn projection(&self, a: RelId) -> Vec<Q> {
        let p = &self.projection[self.positive_of(a) as usize];
        if self.is_positive(a) {
            p.clone()
        } else {
            p.iter().map(|x| -*x).collect()
        }
    }

    /// Relative coroot `2p/(p,p)` in the basis of simple coroots.
    pub fn coroot(&self, a: RelId) -> Vec<Q> {
        let c = &self.coroot[self.positive_of(a) as usize];
        if self.is_positive(a) {
            c.clone()
        } else {
            c.iter().map(|x| -*x).collect()
        }
    }

    /// Relative simple roots are the images of `Δ ∖ Θ`.
    pub fn is_simple(&self, a: RelId) -> bool {
        self.is_positive(a) && self.direction(a).iter().sum::<i32>() == 1
    }

    /// `⟨β, α∨⟩` inside `a_M*`.
    pub fn pairing(&self, rs: &RootSystem, beta: RelId, alpha: RelId) -> Q {
        let pb = self.projection(beta);
        let cv = self.coroot_vector(rs, alpha);
        rs.form_q(&pb, &cv)
    }

    /// Coroot `2p/(p,p)` as a vector in the simple-root basis.
    pub fn coroot_vector(&self, rs: &RootSystem, a: RelId) -> Vec<Q> {
        let p = self.projection(a);
        let pp = rs.form_q(&p, &p);
        p.iter().map(|x| *x * Q::from_integer(2) / pp).collect()
    }
}

/// Projects absolute roots to `a_M*`, groups them by ray and keeps the
/// shortest projection on each ray.
pub fn relative_roots(levi: &Levi<'_>) -> RelativeRoots {
    let rs = levi.root_system();
    let n = rs.rank();
    let mut rays: BTreeMap<Vec<i32>, Vec<u16>> = BTreeMap::new();
    let mut ray_of_root: Vec<Option<Vec<i32>>> = vec![None; rs.n_roots()];
    for k in 0..rs.n_roots() {
        let mut d: Vec<i32> = rs.root(k).coords().to_vec();
        for &t in levi.theta() {
            d[t] = 0;
        }
        let g = gcd_all(&d);
        if g == 0 {
            continue;
        }
        for x in d.iter_mut() {
            *x /= g;
        }
        rays.entry(d.clone()).or_default().push(k as u16);
        ray_of_root[k] = Some(d);
    }
    // The relative root on a ray is its shortest projected root.
    let scale = |prim: &[i32], fiber: &[u16]| -> i32 {
        let j = prim.iter().position(|&x| x != 0).expect("nonzero ray");
        fiber
            .iter()
            .map(|&k| rs.root(k as usize).coords()[j] / prim[j])
            .min()
            .expect("nonempty fiber")
    };
    let scaled: BTreeMap<Vec<i32>, Vec<i32>> = rays
        .iter()
        .map(|(prim, fiber)| {
            let m = scale(prim, fiber);
            (prim.clone(), prim.iter().map(|x| m * x).collect())
        })
        .collect();
    let rays: BTreeMap<Vec<i32>, Vec<u16>> = rays
        .into_iter()
        .map(|(prim, fiber)| (scaled[&prim].clone(), fiber))
        .collect();
    let ray_of_root: Vec<Option<Vec<i32>>> = ray_of_root
        .into_iter()
        .map(|d| d.map(|d| scaled[&d].clone()))
        .collect();
    let mut pos: Vec<Vec<i32>> = rays
        .keys()
        .filter(|d| d.iter().all(|&x| x >= 0))
        .cloned()
        .collect();
    pos.sort_by_key(|d| (d.iter().sum::<i32>(), Reverse(d.clone())));
    let n_pos = pos.len();
    let mut roots = Vec::with_capacity(2 * n_pos);
    for (sign, positive) in [(1, true), (-1, false)] {
        for d in &pos {
            let dir: Vec<i32> = d.iter().map(|x| sign * x).collect();
            let fiber = rays[&dir].clone();
            roots.push(RelativeRoot {
                direction: dir,
                fiber,
                positive,
            });
        }
    }
    let lookup: BTreeMap<Vec<i32>, RelId> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.direction.clone(), i as RelId))
        .collect();
    let of_root = ray_of_root
        .into_iter()
        .map(|d| d.map(|d| lookup[&d]))
        .collect();

    // Projection onto span(Θ)^⊥: p = x − Σ c_t α_t with (p, α_s) = 0, s ∈ Θ.
    let form = rs.bilinear_form();
    let theta = levi.theta();
    let gram: Vec<Vec<Q>> = theta
        .iter()
        .map(|&a| theta.iter().map(|&b| form[a][b]).collect())
        .collect();
    let mut projection = Vec::with_capacity(n_pos);
    let mut coroot = Vec::with_capacity(n_pos);
    for d in &pos {
        let x: Vec<Q> = d.iter().map(|&c| Q::from_integer(c as i64)).collect();
        let mut p = x.clone();
        if !theta.is_empty() {
            let rhs: Vec<Q> = theta
                .iter()
                .map(|&t| (0..n).map(|j| form[t][j] * x[j]).sum())
                .collect();
            let c = solve(gram.clone(), rhs).expect("Gram matrix of simple roots is definite");
            for (ci, &t) in c.iter().zip(theta) {
                p[t] -= *ci;
            }
        }
        let pp = rs.form_q(&p, &p);
        // coroot coordinates y_j = (2 p_j/(p,p)) · (α_j, α_j)/2
        let y: Vec<Q> = (0..n).map(|j| p[j] * form[j][j] / pp).collect();
        projection.push(p);
        coroot.push(y);
    }
    RelativeRoots {
        roots,
        n_pos,
        of_root,
        lookup,
        projection,
        coroot,
    }
}

/// Image of a relative root under `w ∈ W_M`, computed through its fiber.
pub fn rel_image(group: &WeylGroup, rr: &RelativeRoots, w: ElemId, a: RelId) -> Option<RelId> {
    let beta = rr.root(a).fiber[0] as usize;
    rr.of_root(group.element(w).apply(beta))
}

/// `W_M = {w ∈ W : w(Θ) = Θ}`.
pub fn relative_weyl_group(levi: &Levi<'_>) -> Subgroup {
    let group = levi.group();
    let rs = group.root_system();
    let members = (0..group.order() as ElemId)
        .filter(|&w| {
            let e = group.element(w);
            levi.theta().iter().all(|&t| {
                let img = e.apply(t);
                img < rs.rank() && levi.in_theta(img)
            })
        })
        .collect();
    Subgroup::from_members(members)
}

/// Matrix of `w` on `a_M*` in the coordinates `Δ ∖ Θ` (row-major, `k × k`).
pub fn quotient_matrix(levi: &Levi<'_>, w: ElemId) -> Vec<i32> {
    let rs = levi.root_system();
    let e = levi.group().element(w);
    let rest = levi.rest();
    let k = rest.len();
    let mut m = vec![0i32; k * k];
    for (c, &j) in rest.iter().enumerate() {
        let img = rs.root(e.apply(j)).coords();
        for (r, &i) in rest.iter().enumerate() {
            m[r * k + c] = img[i];
        }
    }
    m
}

fn mat_mul(a: &[i32], b: &[i32], k: usize) -> Vec<i32> {
    let mut out = vec![0i32; k * k];
    for i in 0..k {
        for l in 0..k {
            let x = a[i * k + l];
            if x == 0 {
                continue;
            }
            for j in 0..k {
                out[i * k + j] += x * b[l * k + j];
            }
        }
    }
    out
}

fn identity_matrix(k: usize) -> Vec<i32> {
    let mut m = vec![0i32; k * k];
    for i in 0..k {
        m[i * k + i] = 1;
    }
    m
}

/// `Φ_M` together with its reflection part.
#[derive(Clone, Debug)]
pub struct RelativeData {
    pub roots: RelativeRoots,
    /// `(Φ_M⁰)⁺`, sorted.
    pub phi0: Vec<RelId>,
    /// `α ↦ w_α` for `α ∈ (Φ_M⁰)⁺`.
    pub reflection_of: BTreeMap<RelId, ElemId>,
    /// Elements of `W_M` acting as reflections without negating any relative root.
    pub orphan_reflections: Vec<ElemId>,
    /// `Δ_M⁰`.
    pub delta0: Vec<RelId>,
}

impl RelativeData {
    pub fn in_phi0(&self, a: RelId) -> bool {
        self.reflection_of.contains_key(&self.roots.positive_of(a))
    }

    /// `w_α` for `α ∈ Φ_M⁰` of either sign.
    pub fn reflection(&self, a: RelId) -> Option<ElemId> {
        self.reflection_of.get(&self.roots.positive_of(a)).copied()
    }
}

/// Scans `W_M` for elements acting on `a_M*` as reflections.
///
/// Also asserts that `W_M` acts faithfully on `a_M*` and that each reflection
/// found is the orthogonal reflection in its relative root.
pub fn reflections_in_wm(
    levi: &Levi<'_>,
    rr: RelativeRoots,
    reps: &Subgroup,
) -> Result<RelativeData> {
    let group = levi.group();
    let rs = group.root_system();
    let k = levi.rest().len();
    let rest = levi.rest();
    let id = identity_matrix(k);

    let mut seen: BTreeMap<Vec<i32>, ElemId> = BTreeMap::new();
    let mut reflection_of = BTreeMap::new();
    let mut orphans = Vec::new();
    for w in reps.iter() {
        let m = quotient_matrix(levi, w);
        if let Some(&other) = seen.get(&m) {
            let kernel = group.mul(group.inv(other), w);
            return Err(CoreError::Faithfulness {
                kernel: group.element(kernel).word().to_vec(),
            });
        }
        seen.insert(m.clone(), w);
        if w == WeylGroup::IDENTITY {
            continue;
        }
        let trace: i32 = (0..k).map(|i| m[i * k + i]).sum();
        if trace != k as i32 - 2 || mat_mul(&m, &m, k) != id {
            continue;
        }
        let negated: Vec<RelId> = rr
            .positives()
            .filter(|&a| rel_image(group, &rr, w, a) == Some(rr.neg(a)))
            .collect();
        match negated.as_slice() {
            [] => orphans.push(w),
            [a] => {
                // w must be x ↦ x − ⟨x, α∨⟩ α on a_M*.
                let cv = rr.coroot_vector(rs, *a);
                let d = rr.direction(*a);
                for (c, &j) in rest.iter().enumerate() {
                    let mut e = vec![Q::from_integer(0); rs.rank()];
                    e[j] = Q::from_integer(1);
                    let pair = rs.form_q(&e, &cv);
                    if !pair.is_integer() {
                        return Err(CoreError::Invariant(format!(
                            "non-integral relative pairing for reflection {:?}",
                            group.element(w).word()
                        )));
                    }
                    let pair = pair.to_integer() as i32;
                    for (r, &i) in rest.iter().enumerate() {
                        let expect = if r == c { 1 } else { 0 } - pair * d[i];
                        if m[r * k + c] != expect {
                            return Err(CoreError::Invariant(format!(
                                "element {:?} negates a relative root but is not its orthogonal reflection",
                                group.element(w).word()
                            )));
                        }
                    }
                }
                reflection_of.insert(*a, w);
            }
            _ => {
                return Err(CoreError::Invariant(format!(
                    "reflection {:?} negates several relative rays",
                    group.element(w).word()
                )))
            }
        }
    }
    let phi0: Vec<RelId> = reflection_of.keys().copied().collect();
    let delta0 = delta_m0(&rr, &phi0);
    Ok(RelativeData {
        roots: rr,
        phi0,
        reflection_of,
        orphan_reflections: orphans,
        delta0,
    })
}

/// `s_α(β)` computed inside `a_M*`, if it is again a relative root.
pub fn reflect_rel(rs: &RootSystem, rr: &RelativeRoots, a: RelId, b: RelId) -> Option<RelId> {
    let c = rr.pairing(rs, b, a);
    if !c.is_integer() {
        return None;
    }
    let c = c.to_integer() as i32;
    let d: Vec<i32> = rr
        .direction(b)
        .iter()
        .zip(rr.direction(a))
        .map(|(x, y)| x - c * y)
        .collect();
    rr.find(&d)
}

/// Whether `±set` is closed under its own reflections.
pub fn is_reflection_closed(rs: &RootSystem, rr: &RelativeRoots, set: &[RelId]) -> bool {
    let pos: Vec<RelId> = set.iter().map(|&a| rr.positive_of(a)).collect();
    pos.iter().all(|&a| {
        pos.iter().all(|&b| match reflect_rel(rs, rr, a, b) {
            Some(img) => pos.contains(&rr.positive_of(img)),
            None => false,
        })
    })
}

/// Indecomposable elements of a positive system given by relative roots:
/// those not expressible as a sum of two others from the same set.
pub fn indecomposables(rr: &RelativeRoots, positives: &[RelId]) -> Vec<RelId> {
    let dirs: BTreeMap<&[i32], RelId> = positives.iter().map(|&a| (rr.direction(a), a)).collect();
    positives
        .iter()
        .copied()
        .filter(|&a| {
            let da = rr.direction(a);
            !positives.iter().any(|&b| {
                let rest: Vec<i32> = da.iter().zip(rr.direction(b)).map(|(x, y)| x - y).collect();
                dirs.contains_key(rest.as_slice())
            })
        })
        .collect()
}

/// `Δ_M⁰`: the simple system of `Φ_M⁰`.
pub fn delta_m0(rr: &RelativeRoots, phi0: &[RelId]) -> Vec<RelId> {
    indecomposables(rr, phi0)
}

/// `ω_α = w₀^{M_α} w₀^M` for a relative simple root `α`.
pub fn relative_reflection_simple(levi: &Levi<'_>, rr: &RelativeRoots, a: RelId) -> Result<ElemId> {
    if !rr.is_simple(a) {
        return Err(CoreError::NotRelativeSimple);
    }
    let j = rr
        .direction(a)
        .iter()
        .position(|&x| x == 1)
        .expect("unit direction");
    let mut bigger = levi.theta().to_vec();
    bigger.push(j);
    let group = levi.group();
    let w0_big = group.longest_element(&bigger)?;
    let w0_m = group.longest_element(levi.theta())?;
    Ok(group.mul(w0_big, w0_m))
}

/// `W_M` with its semidirect decomposition `W_M⁰ ⋊ W_M¹`.
#[derive(Clone, Debug)]
pub struct RelativeWeylGroup {
    pub reps: Subgroup,
    /// `W_M⁰ = ⟨w_α : α ∈ Φ_M⁰⟩`.
    pub small: Subgroup,
    /// `W_M¹ = {w ∈ W_M : w(Φ_M⁰)⁺ > 0}`.
    pub complement: Subgroup,
    /// `(w⁰, w¹)` with `w = w⁰·w¹`, aligned with `reps.members()`.
    pub factorization: Vec<(ElemId, ElemId)>,
}

impl RelativeWeylGroup {
    pub fn factor(&self, w: ElemId) -> Option<(ElemId, ElemId)> {
        let i = self.reps.members().binary_search(&w).ok()?;
        Some(self.factorization[i])
    }
}

/// Computes `W_M⁰`, `W_M¹` and the unique factorization of every element.
pub fn decompose_wm(group: &WeylGroup, reps: Subgroup, rd: &RelativeData) -> Result<RelativeWeylGroup> {
    let rr = &rd.roots;
    let gens: Vec<ElemId> = rd.reflection_of.values().copied().collect();
    let small = Subgroup::generated(group, &gens);
    if !small.is_subset_of(&reps) {
        return Err(CoreError::Invariant("W_M⁰ escapes W_M".into()));
    }
    let mut complement = Vec::new();
    for w in reps.iter() {
        let mut keeps = true;
        for &a in &rd.phi0 {
            let img = rel_image(group, rr, w, a)
                .ok_or_else(|| CoreError::Invariant("W_M does not preserve Φ_M".into()))?;
            if !rd.in_phi0(img) {
                return Err(CoreError::Invariant(format!(
                    "Φ_M⁰ is not stable under {:?}",
                    group.element(w).word()
                )));
            }
            keeps &= rr.is_positive(img);
        }
        if keeps {
            complement.push(w);
        }
    }
    let complement = Subgroup::from_members(complement);
    let mut factorization = Vec::with_capacity(reps.order());
    for w in reps.iter() {
        let mut found = None;
        for w1 in complement.iter() {
            let w0 = group.mul(w, group.inv(w1));
            if small.contains(w0) {
                if found.is_some() {
                    return Err(CoreError::Factorization(format!(
                        "{:?} factors in more than one way",
                        group.element(w).word()
                    )));
                }
                found = Some((w0, w1));
            }
        }
        match found {
            Some(f) => factorization.push(f),
            None => {
                return Err(CoreError::Factorization(format!(
                    "{:?} has no factorization",
                    group.element(w).word()
                )))
            }
        }
    }
    Ok(RelativeWeylGroup {
        reps,
        small,
        complement,
        factorization,
    })
}

/// Everything attached to one Levi subset.
#[derive(Clone, Debug)]
pub struct LeviAnalysis<'g> {
    pub levi: Levi<'g>,
    pub data: RelativeData,
    pub wm: RelativeWeylGroup,
}

impl<'g> LeviAnalysis<'g> {
    pub fn group(&self) -> &'g WeylGroup {
        self.levi.group()
    }

    pub fn root_system(&self) -> &'g RootSystem {
        self.levi.root_system()
    }

    pub fn roots(&self) -> &RelativeRoots {
        &self.data.roots
    }

    /// `w.α` for `w ∈ W_M`.
    pub fn act_rel(&self, w: ElemId, a: RelId) -> RelId {
        rel_image(self.group(), &self.data.roots, w, a).expect("W_M permutes relative roots")
    }

    pub fn reflection(&self, a: RelId) -> Option<ElemId> {
        self.data.reflection(a)
    }

    pub fn in_phi0(&self, a: RelId) -> bool {
        self.data.in_phi0(a)
    }

    pub fn word(&self, w: ElemId) -> &[u8] {
        self.group().element(w).word()
    }
}

/// Runs the whole relative analysis of `Θ`, including the cross-check of
/// `ω_α = w₀^{M_α} w₀^M` against the reflection scan for relative simple
/// roots in `Φ_M⁰`.
pub fn analyze<'g>(group: &'g WeylGroup, theta: &[usize]) -> Result<LeviAnalysis<'g>> {
    let levi = Levi::new(group, theta)?;
    let rr = relative_roots(&levi);
    let reps = relative_weyl_group(&levi);
    let data = reflections_in_wm(&levi, rr, &reps)?;
    for &a in &data.phi0 {
        if data.roots.is_simple(a) {
            let omega = relative_reflection_simple(&levi, &data.roots, a)?;
            if Some(omega) != data.reflection(a) {
                return Err(CoreError::Invariant(format!(
                    "w₀^(M_α) w₀^M disagrees with the reflection scan for {:?}",
                    data.roots.direction(a)
                )));
            }
        }
    }
    let wm = decompose_wm(group, reps, &data)?;
    Ok(LeviAnalysis { levi, data, wm })
}
