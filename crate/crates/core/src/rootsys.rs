//! Root systems in the simple-root basis.
//!
//! Roots are stored once in a signed list: indices `0..n_pos` are the
//! positive roots ordered by height (simple root `i` has index `i`), and
//! index `i + n_pos` holds `−root(i)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::cartan::CartanDatum;
use crate::error::{CoreError, Result};
use crate::rational::Q;

pub const DEFAULT_ROOT_BOUND: usize = 10_000;

/// Integer coordinates of a root in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanDatum,
    roots: Vec<RootVector>,
    n_pos: usize,
    lookup: BTreeMap<Vec<i32>, u16>,
    /// Coroot of each root in the basis of simple coroots.
    coroots: Vec<Vec<i32>>,
    /// `(β, β)` under the invariant form.
    norms: Vec<i64>,
    simple_perms: Vec<Vec<u16>>,
}

/// Enumerates `Φ` by reflection closure of the simple roots.
pub fn build_root_system(cartan: CartanDatum) -> Result<RootSystem> {
    RootSystem::with_bound(cartan, DEFAULT_ROOT_BOUND)
}

impl RootSystem {
    pub fn with_bound(cartan: CartanDatum, bound: usize) -> Result<RootSystem> {
        let n = cartan.rank();
        let mut seen: BTreeMap<Vec<i32>, ()> = BTreeMap::new();
        let mut queue: Vec<Vec<i32>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push(e);
        }
        while let Some(beta) = queue.pop() {
            for i in 0..n {
                let c: i32 = (0..n).map(|j| beta[j] * cartan.entry(i, j)).sum();
                if c == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= c;
                if img.iter().all(|&x| x >= 0) && !seen.contains_key(&img) {
                    if 2 * (seen.len() + 1) > bound {
                        return Err(CoreError::RootBoundExceeded { bound });
                    }
                    seen.insert(img.clone(), ());
                    queue.push(img);
                }
            }
        }
        let mut pos: Vec<RootVector> = seen.into_keys().map(RootVector).collect();
        pos.sort_by_key(|r| (r.height(), Reverse(r.0.clone())));
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(RootVector::neg));

        let lookup = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i as u16))
            .collect();
        let form = cartan.form();
        let bform = |a: &[i32], b: &[i32]| -> i64 {
            let mut s = 0i64;
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += a[i] as i64 * form[i][j] * b[j] as i64;
                }
            }
            s
        };
        let norms: Vec<i64> = roots.iter().map(|r| bform(&r.0, &r.0)).collect();
        let coroots = roots
            .iter()
            .zip(&norms)
            .map(|(r, &nb)| {
                (0..n)
                    .map(|i| {
                        let num = r.0[i] as i64 * form[i][i];
                        debug_assert_eq!(num % nb, 0);
                        (num / nb) as i32
                    })
                    .collect()
            })
            .collect();
        let mut rs = RootSystem {
            cartan,
            roots,
            n_pos,
            lookup,
            coroots,
            norms,
            simple_perms: Vec::new(),
        };
        rs.simple_perms = (0..n)
            .map(|i| {
                (0..rs.roots.len())
                    .map(|k| rs.index_of(&rs.reflect(i, &rs.roots[k].0)).expect("closed root set") as u16)
                    .collect()
            })
            .collect();
        Ok(rs)
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Number of positive roots.
    pub fn n_pos(&self) -> usize {
        self.n_pos
    }

    /// Size of the signed root list.
    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, idx: usize) -> &RootVector {
        &self.roots[idx]
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.roots[..self.n_pos]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    pub fn negate(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.lookup.get(coords).map(|&i| i as usize)
    }

    pub fn coroot(&self, idx: usize) -> &[i32] {
        &self.coroots[idx]
    }

    pub fn norm(&self, idx: usize) -> i64 {
        self.norms[idx]
    }

    /// Permutation of the signed root list induced by `s_i`.
    pub fn simple_perm(&self, i: usize) -> &[u16] {
        &self.simple_perms[i]
    }

    /// Invariant symmetric form `(α_i, α_j)` as a rational matrix.
    pub fn bilinear_form(&self) -> Vec<Vec<Q>> {
        self.cartan
            .form()
            .iter()
            .map(|row| row.iter().map(|&x| Q::from_integer(x)).collect())
            .collect()
    }

    /// `(u, v)` for rational vectors in the simple-root basis.
    pub fn form_q(&self, u: &[Q], v: &[Q]) -> Q {
        let form = self.cartan.form();
        let n = self.rank();
        let mut s = Q::from_integer(0);
        for i in 0..n {
            for j in 0..n {
                if form[i][j] != 0 {
                    s += u[i] * v[j] * Q::from_integer(form[i][j]);
                }
            }
        }
        s
    }

    fn reflect(&self, i: usize, beta: &[i32]) -> Vec<i32> {
        let n = self.rank();
        let c: i32 = (0..n).map(|j| beta[j] * self.cartan.entry(i, j)).sum();
        let mut img = beta.to_vec();
        img[i] -= c;
        img
    }

    /// `⟨β, α∨⟩` for roots given by index.
    pub fn pairing_idx(&self, beta: usize, alpha: usize) -> i32 {
        let n = self.rank();
        let c = &self.coroots[alpha];
        let b = &self.roots[beta].0;
        let mut s = 0i32;
        for i in 0..n {
            if c[i] == 0 {
                continue;
            }
            // ⟨β, α_i∨⟩ = Σ_j β_j A[i][j]
            let bi: i32 = (0..n).map(|j| b[j] * self.cartan.entry(i, j)).sum();
            s += c[i] * bi;
        }
        s
    }

    /// `⟨β, α∨⟩`; both arguments must be roots.
    pub fn pairing(&self, beta: &RootVector, alpha: &RootVector) -> Result<i32> {
        let b = self.index_of(&beta.0).ok_or(CoreError::NotARoot)?;
        let a = self.index_of(&alpha.0).ok_or(CoreError::NotARoot)?;
        Ok(self.pairing_idx(b, a))
    }

    /// Simple roots of `Θ` expressed as root indices.
    pub fn check_subset(&self, theta: &[usize]) -> Result<()> {
        for &t in theta {
            if t >= self.rank() {
                return Err(CoreError::IndexOutOfRange {
                    index: t,
                    rank: self.rank(),
                });
            }
        }
        Ok(())
    }
}
