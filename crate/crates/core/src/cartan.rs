//! Finite-type Cartan data.
//!
//! Convention: `A[i][j] = ⟨α_j, α_i∨⟩`, so the simple reflection `s_i` acts
//! by `s_i(α_j) = α_j − A[i][j]·α_i`. Simple roots are numbered as in
//! Bourbaki for A–F (`B_n`: `α_n` short, `C_n`: `α_n` long, `F_4`: `α_1, α_2`
//! long). For `G_2` the first simple root is the long one, which gives the
//! matrix `[[2, −1], [−3, 2]]` under the convention above.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{CoreError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn from_letter(c: char) -> Result<Family> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            other => return Err(CoreError::UnknownFamily(other)),
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C | Family::G => 2,
            Family::D => 3,
            Family::F => 4,
            Family::E => 6,
        }
    }

    fn check(self, rank: usize) -> Result<()> {
        let bad = |reason| {
            Err(CoreError::InvalidCartan {
                family: self.letter(),
                rank,
                reason,
            })
        };
        if rank < self.min_rank() {
            return bad("rank below family minimum");
        }
        match self {
            Family::E if rank > 8 => bad("type E exists only in ranks 6, 7, 8"),
            Family::F if rank != 4 => bad("type F exists only in rank 4"),
            Family::G if rank != 2 => bad("type G exists only in rank 2"),
            _ => Ok(()),
        }
    }

    /// All valid ranks of this family up to `max_rank`.
    pub fn ranks_up_to(self, max_rank: usize) -> impl Iterator<Item = usize> {
        (self.min_rank()..=max_rank).filter(move |&r| self.check(r).is_ok())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    family: Family,
    rank: usize,
    matrix: Vec<Vec<i32>>,
    /// Symmetrized invariant form `(α_i, α_j)`, scaled so that the shortest
    /// simple root has squared length 2.
    form: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    /// `⟨α_j, α_i∨⟩`.
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j]
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn name(&self) -> alloc::string::String {
        alloc::format!("{}{}", self.family, self.rank)
    }

    /// Checks the generalized Cartan matrix axioms.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank;
        let fail = |reason| CoreError::InvalidCartan {
            family: self.family.letter(),
            rank: n,
            reason,
        };
        for i in 0..n {
            if self.matrix[i][i] != 2 {
                return Err(fail("diagonal entry differs from 2"));
            }
            for j in 0..n {
                if i != j {
                    if self.matrix[i][j] > 0 {
                        return Err(fail("positive off-diagonal entry"));
                    }
                    if (self.matrix[i][j] == 0) != (self.matrix[j][i] == 0) {
                        return Err(fail("zero pattern is not symmetric"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dynkin edges (0-based) and squared lengths of the simple roots.
fn dynkin(family: Family, n: usize) -> (Vec<(usize, usize)>, Vec<i64>) {
    let chain = |m: usize| (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match family {
        Family::A => (chain(n), vec![2; n]),
        Family::B => {
            let mut len = vec![4; n];
            len[n - 1] = 2;
            (chain(n), len)
        }
        Family::C => {
            let mut len = vec![2; n];
            len[n - 1] = 4;
            (chain(n), len)
        }
        Family::D => {
            let mut edges = chain(n - 1);
            edges.push((n - 3, n - 1));
            (edges, vec![2; n])
        }
        Family::E => {
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
            (edges, vec![2; n])
        }
        Family::F => (chain(4), vec![4, 4, 2, 2]),
        Family::G => (chain(2), vec![6, 2]),
    }
}

/// Standard Cartan matrix of the finite type `(family, rank)`.
pub fn build_cartan(family: Family, rank: usize) -> Result<CartanDatum> {
    family.check(rank)?;
    let (edges, len) = dynkin(family, rank);
    let mut form = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        form[i][i] = len[i];
    }
    for &(i, j) in &edges {
        // (α_i, α_j) = −max(|α_i|², |α_j|²)/2 for single, double and triple
        // bonds alike once lengths are 2/4 or 2/6.
        let v = -core::cmp::max(len[i], len[j]) / 2;
        form[i][j] = v;
        form[j][i] = v;
    }
    let matrix = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| (2 * form[i][j] / form[i][i]) as i32)
                .collect()
        })
        .collect();
    let datum = CartanDatum {
        family,
        rank,
        matrix,
        form,
    };
    datum.validate()?;
    Ok(datum)
}

/// Closed-form order of the Weyl group.
pub fn weyl_group_order(family: Family, rank: usize) -> u128 {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    match family {
        Family::A => fact(rank + 1),
        Family::B | Family::C => (1u128 << rank) * fact(rank),
        Family::D => (1u128 << (rank - 1)) * fact(rank),
        Family::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}
