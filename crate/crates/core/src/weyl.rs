//! Weyl groups as permutation groups on the signed root list.
//!
//! An element `w` is stored as `perm` with `perm[k] = index of w(root k)`.
//! Composition follows functions: `(u·v)(β) = u(v(β))`.
//!
//! Each element also carries its canonical word, the lexicographically least
//! reduced word in the simple reflections (letters are 0-based). The group
//! is enumerated level by level: an element `u` of length `ℓ+1` is produced
//! exactly once, as `s_i·w` where `i` is the smallest left descent of `u`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{CoreError, Result};
use crate::rational::Q;
use crate::rootsys::RootSystem;

pub const DEFAULT_CAP: usize = 1_000_000;

/// Index of an element inside its [`WeylGroup`]; the identity is `0` and
/// indices follow the canonical order (length, then canonical word).
pub type ElemId = u32;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    perm: Vec<u16>,
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> WeylElement {
        WeylElement {
            perm: (0..rs.n_roots() as u16).collect(),
            word: Vec::new(),
        }
    }

    /// Builds the element from a permutation, computing its canonical word.
    /// The permutation must come from the Weyl group of `rs`.
    pub fn from_perm(rs: &RootSystem, perm: Vec<u16>) -> WeylElement {
        let word = canonical_word(rs, &perm);
        WeylElement { perm, word }
    }

    /// Product of simple reflections, letters 0-based.
    pub fn from_word(rs: &RootSystem, letters: &[u8]) -> Result<WeylElement> {
        let mut perm: Vec<u16> = (0..rs.n_roots() as u16).collect();
        for &l in letters {
            if l as usize >= rs.rank() {
                return Err(CoreError::IndexOutOfRange {
                    index: l as usize,
                    rank: rs.rank(),
                });
            }
            // w ← w s_l
            let s = rs.simple_perm(l as usize);
            perm = s.iter().map(|&k| perm[k as usize]).collect();
        }
        Ok(WeylElement::from_perm(rs, perm))
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let perm = other.perm.iter().map(|&k| self.perm[k as usize]).collect();
        WeylElement::from_perm(rs, perm)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        WeylElement::from_perm(rs, invert(&self.perm))
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        (0..rs.n_pos())
            .filter(|&k| !rs.is_positive(self.perm[k] as usize))
            .count()
    }
}

fn invert(perm: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; perm.len()];
    for (k, &p) in perm.iter().enumerate() {
        inv[p as usize] = k as u16;
    }
    inv
}

/// Lexicographically least reduced word: repeatedly strip the smallest left
/// descent `i`, i.e. the smallest `i` with `w⁻¹(α_i) < 0`.
fn canonical_word(rs: &RootSystem, perm: &[u16]) -> Vec<u8> {
    let mut inv = invert(perm);
    let mut word = Vec::new();
    while let Some(i) = (0..rs.rank()).find(|&i| !rs.is_positive(inv[i] as usize)) {
        word.push(i as u8);
        // (s_i w)⁻¹ = w⁻¹ s_i
        let s = rs.simple_perm(i);
        inv = s.iter().map(|&k| inv[k as usize]).collect();
    }
    word
}

/// Applies the linear action of `w` to a rational vector in the simple-root
/// basis.
pub fn act(rs: &RootSystem, w: &WeylElement, v: &[Q]) -> Vec<Q> {
    let n = rs.rank();
    let mut out = vec![Q::from_integer(0); n];
    for (i, &c) in v.iter().enumerate() {
        if c == Q::from_integer(0) {
            continue;
        }
        let img = rs.root(w.perm[i] as usize);
        for j in 0..n {
            out[j] += c * Q::from_integer(img.0[j] as i64);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    /// Images of the simple roots determine an element.
    index: BTreeMap<Vec<u16>, ElemId>,
}

/// Enumerates `W` (breadth first over lengths, canonical order).
pub fn generate_weyl(rs: RootSystem, cap: usize) -> Result<WeylGroup> {
    WeylGroup::generate(rs, cap)
}

impl WeylGroup {
    pub fn generate(rs: RootSystem, cap: usize) -> Result<WeylGroup> {
        let n = rs.rank();
        let mut elements = vec![WeylElement::identity(&rs)];
        let mut level_start = 0;
        loop {
            let level_end = elements.len();
            let mut next: Vec<WeylElement> = Vec::new();
            for w in &elements[level_start..level_end] {
                let inv = invert(&w.perm);
                for i in 0..n {
                    // l(s_i w) > l(w) iff w⁻¹(α_i) > 0
                    if !rs.is_positive(inv[i] as usize) {
                        continue;
                    }
                    let s = rs.simple_perm(i);
                    // i must be the smallest left descent of u = s_i w:
                    // u⁻¹(α_j) = w⁻¹(s_i α_j) > 0 for all j < i.
                    if (0..i).any(|j| !rs.is_positive(inv[s[j] as usize] as usize)) {
                        continue;
                    }
                    if elements.len() + next.len() >= cap {
                        return Err(CoreError::CapExceeded {
                            cap,
                            partial: elements.len() + next.len(),
                        });
                    }
                    let perm = w.perm.iter().map(|&k| s[k as usize]).collect();
                    let mut word = Vec::with_capacity(w.word.len() + 1);
                    word.push(i as u8);
                    word.extend_from_slice(&w.word);
                    next.push(WeylElement { perm, word });
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by(|a, b| a.word.cmp(&b.word));
            level_start = level_end;
            elements.extend(next);
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (key(&rs, &e.perm), k as ElemId))
            .collect();
        Ok(WeylGroup {
            rs,
            elements,
            index,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &WeylElement {
        &self.elements[id as usize]
    }

    pub const IDENTITY: ElemId = 0;

    /// Locates an element given by a full root permutation.
    pub fn find(&self, perm: &[u16]) -> Option<ElemId> {
        self.index.get(&key(&self.rs, perm)).copied()
    }

    pub fn find_element(&self, w: &WeylElement) -> ElemId {
        self.find(&w.perm).expect("element of this Weyl group")
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let (pa, pb) = (&self.element(a).perm, &self.element(b).perm);
        let k: Vec<u16> = (0..self.rs.rank())
            .map(|i| pa[pb[i] as usize])
            .collect();
        self.index[&k]
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        let p = &self.element(a).perm;
        let mut k = vec![0u16; self.rs.rank()];
        // w⁻¹(α_i) is the root r with w(r) = α_i.
        for (r, &img) in p.iter().enumerate() {
            if (img as usize) < self.rs.rank() {
                k[img as usize] = r as u16;
            }
        }
        self.index[&k]
    }

    pub fn conj(&self, g: ElemId, h: ElemId) -> ElemId {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Element given by a word in simple reflections (0-based letters).
    pub fn from_word(&self, letters: &[u8]) -> Result<ElemId> {
        let mut cur = Self::IDENTITY;
        for &l in letters {
            if l as usize >= self.rs.rank() {
                return Err(CoreError::IndexOutOfRange {
                    index: l as usize,
                    rank: self.rs.rank(),
                });
            }
            cur = self.mul(cur, self.simple(l as usize));
        }
        Ok(cur)
    }

    pub fn simple(&self, i: usize) -> ElemId {
        let mut k: Vec<u16> = (0..self.rs.rank() as u16).collect();
        k[i] = self.rs.negate(i) as u16;
        for j in 0..self.rs.rank() {
            if j != i {
                k[j] = self.rs.simple_perm(i)[j];
            }
        }
        self.index[&k]
    }

    /// `w₀` of the parabolic subgroup `W_Θ`.
    pub fn longest_element(&self, theta: &[usize]) -> Result<ElemId> {
        let w = longest_element(&self.rs, theta)?;
        Ok(self.find_element(&w))
    }

    /// Linear action on a rational vector in the simple-root basis.
    pub fn act(&self, w: ElemId, v: &[Q]) -> Vec<Q> {
        act(&self.rs, self.element(w), v)
    }
}

fn key(rs: &RootSystem, perm: &[u16]) -> Vec<u16> {
    perm[..rs.rank()].to_vec()
}

/// `w₀^{M_Θ}`: the element of `W_Θ` sending every `Θ`-positive root to a
/// negative root. Built by right-multiplying simple reflections of `Θ` while
/// some simple root of `Θ` is still sent to a positive root.
pub fn longest_element(rs: &RootSystem, theta: &[usize]) -> Result<WeylElement> {
    rs.check_subset(theta)?;
    let mut perm: Vec<u16> = (0..rs.n_roots() as u16).collect();
    while let Some(&t) = theta.iter().find(|&&t| rs.is_positive(perm[t] as usize)) {
        // w ← w s_t
        let s = rs.simple_perm(t);
        perm = s.iter().map(|&k| perm[k as usize]).collect();
    }
    Ok(WeylElement::from_perm(rs, perm))
}
