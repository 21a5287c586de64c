//! Subgroups of an enumerated Weyl group, stored as sorted element indices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::weyl::{ElemId, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<ElemId>,
}

impl Subgroup {
    pub fn trivial() -> Subgroup {
        Subgroup {
            members: alloc::vec![WeylGroup::IDENTITY],
        }
    }

    /// Wraps a list of elements that is already known to be closed.
    pub fn from_members(mut members: Vec<ElemId>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    /// Subgroup generated by `gens`.
    pub fn generated(group: &WeylGroup, gens: &[ElemId]) -> Subgroup {
        let mut seen: BTreeSet<ElemId> = BTreeSet::new();
        seen.insert(WeylGroup::IDENTITY);
        let mut frontier = alloc::vec![WeylGroup::IDENTITY];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = group.mul(x, g);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            members: seen.into_iter().collect(),
        }
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.members.iter().copied()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self.iter().filter(|&x| other.contains(x)).collect(),
        }
    }

    /// Closed under products and inverses.
    pub fn is_closed(&self, group: &WeylGroup) -> bool {
        self.contains(WeylGroup::IDENTITY)
            && self.iter().all(|a| self.contains(group.inv(a)))
            && self
                .iter()
                .all(|a| self.iter().all(|b| self.contains(group.mul(a, b))))
    }

    /// `g·N·g⁻¹ ⊆ N` for every `g` in `ambient`, tested on generators of `self`.
    pub fn is_normalized_by(&self, group: &WeylGroup, ambient: &Subgroup, gens: &[ElemId]) -> bool {
        ambient
            .iter()
            .all(|g| gens.iter().all(|&h| self.contains(group.conj(g, h))))
    }
}
