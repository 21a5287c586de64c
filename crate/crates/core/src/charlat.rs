//! Unramified characters of `M`.
//!
//! An unramified character `ν` is recorded through its values on the simple
//! coroots: the value on `α_j∨` is `q^{-x_j}·e^{2πi t_j}` and is stored as
//! the exact pair `(x_j, t_j)` with `t_j` reduced to `[0, 1)`. These are the
//! coordinates of `ν` in the basis of fundamental weights. The real part
//! `x` may be arbitrary in `Q`; the torsion part `t` may have any finite
//! order. `ν` is a character of `M` exactly when both parts vanish on `Θ`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::levi::{LeviAnalysis, Levi, RelId};
use crate::rational::{mod_one, Q};
use crate::rootsys::RootSystem;
use crate::subgroup::Subgroup;
use crate::weyl::ElemId;

/// Exact value `q^{-q}·e^{2πi t}` of a character on one coroot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueExp {
    pub q: Q,
    /// In `[0, 1)`.
    pub t: Q,
}

impl ValueExp {
    pub fn new(q: Q, t: Q) -> ValueExp {
        ValueExp { q, t: mod_one(t) }
    }

    pub fn one() -> ValueExp {
        ValueExp::new(Q::from_integer(0), Q::from_integer(0))
    }

    pub fn is_one(&self) -> bool {
        *self == ValueExp::one()
    }

    pub fn scale(self, k: Q) -> ValueExp {
        ValueExp::new(self.q * k, self.t * k)
    }
}

impl Add for ValueExp {
    type Output = ValueExp;
    fn add(self, o: ValueExp) -> ValueExp {
        ValueExp::new(self.q + o.q, self.t + o.t)
    }
}

impl Neg for ValueExp {
    type Output = ValueExp;
    fn neg(self) -> ValueExp {
        ValueExp::new(-self.q, -self.t)
    }
}

impl Sub for ValueExp {
    type Output = ValueExp;
    fn sub(self, o: ValueExp) -> ValueExp {
        self + (-o)
    }
}

impl fmt::Display for ValueExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.t)
    }
}

/// `λ_α = q^{±1}`, the reducibility points of the rank-one principal series.
pub fn is_wall(v: ValueExp) -> bool {
    v.t == Q::from_integer(0) && (v.q == Q::from_integer(1) || v.q == Q::from_integer(-1))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnramifiedParam {
    q: Vec<Q>,
    t: Vec<Q>,
}

impl UnramifiedParam {
    /// Character with the given values on the simple coroots. Both parts
    /// must vanish on `theta`.
    pub fn new(q: Vec<Q>, t: Vec<Q>, theta: &[usize]) -> Result<UnramifiedParam> {
        if q.len() != t.len() {
            return Err(CoreError::DimensionMismatch {
                expected: q.len(),
                found: t.len(),
            });
        }
        let t: Vec<Q> = t.into_iter().map(mod_one).collect();
        for &i in theta {
            if i >= q.len() {
                return Err(CoreError::IndexOutOfRange {
                    index: i,
                    rank: q.len(),
                });
            }
            if q[i] != Q::from_integer(0) || t[i] != Q::from_integer(0) {
                return Err(CoreError::NotVanishingOnLevi { index: i });
            }
        }
        Ok(UnramifiedParam { q, t })
    }

    pub fn trivial(rank: usize) -> UnramifiedParam {
        UnramifiedParam {
            q: alloc::vec![Q::from_integer(0); rank],
            t: alloc::vec![Q::from_integer(0); rank],
        }
    }

    /// Converts coordinates in the simple-root basis (`Σ x_i α_i`) to
    /// values on simple coroots: `c_j = Σ_i x_i A[j][i]`.
    pub fn from_simple_root_coords(
        rs: &RootSystem,
        q: &[Q],
        t: &[Q],
        theta: &[usize],
    ) -> Result<UnramifiedParam> {
        let n = rs.rank();
        for v in [q, t] {
            if v.len() != n {
                return Err(CoreError::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let conv = |x: &[Q]| -> Vec<Q> {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|i| x[i] * Q::from_integer(rs.cartan().entry(j, i) as i64))
                        .sum()
                })
                .collect()
        };
        UnramifiedParam::new(conv(q), conv(t), theta)
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn q_part(&self) -> &[Q] {
        &self.q
    }

    pub fn t_part(&self) -> &[Q] {
        &self.t
    }

    pub fn is_unitary(&self) -> bool {
        self.q.iter().all(|x| *x == Q::from_integer(0))
    }

    pub fn is_trivial(&self) -> bool {
        self.is_unitary() && self.t.iter().all(|x| *x == Q::from_integer(0))
    }

    /// Unitary part: the same torsion, real part dropped.
    pub fn unitary_part(&self) -> UnramifiedParam {
        UnramifiedParam {
            q: alloc::vec![Q::from_integer(0); self.rank()],
            t: self.t.clone(),
        }
    }

    /// Value on the coroot `Σ y_j α_j∨`. The torsion part is only defined for
    /// integral `y`; the caller is responsible for that.
    pub fn eval_coroot(&self, y: &[Q]) -> ValueExp {
        let mut q = Q::from_integer(0);
        let mut t = Q::from_integer(0);
        for (j, c) in y.iter().enumerate() {
            q += *c * self.q[j];
            t += *c * self.t[j];
        }
        ValueExp::new(q, t)
    }

    /// Value on the coroot of an absolute root.
    pub fn eval_root(&self, rs: &RootSystem, root: usize) -> ValueExp {
        let y: Vec<Q> = rs
            .coroot(root)
            .iter()
            .map(|&c| Q::from_integer(c as i64))
            .collect();
        self.eval_coroot(&y)
    }

    /// `⟨Re ν, α∨⟩` for a relative root; always defined.
    pub fn real_pairing(&self, an: &LeviAnalysis<'_>, a: RelId) -> Q {
        self.eval_coroot(&an.roots().coroot(a)).q
    }

    /// `ν_α = ν(α∨)` for a relative root. Coordinates of `α∨` along `Θ` do
    /// not matter since `ν` vanishes there; those along `Δ ∖ Θ` must be
    /// integral for the torsion part to be meaningful.
    pub fn eval_rel(&self, an: &LeviAnalysis<'_>, a: RelId) -> Result<ValueExp> {
        let y = an.roots().coroot(a);
        for j in an.levi.rest() {
            if !y[j].is_integer() {
                return Err(CoreError::NonIntegralCoroot);
            }
        }
        Ok(self.eval_coroot(&y))
    }

    /// `(w.ν)(α_j∨) = ν(w⁻¹ α_j∨)`; `w` must normalize `M`.
    pub fn weyl_act(&self, levi: &Levi<'_>, w: ElemId) -> Result<UnramifiedParam> {
        let group = levi.group();
        if !levi.normalizes(w) {
            return Err(CoreError::NotNormalizing {
                word: group.element(w).word().to_vec(),
            });
        }
        let rs = group.root_system();
        let winv = group.element(group.inv(w));
        let n = rs.rank();
        let mut q = Vec::with_capacity(n);
        let mut t = Vec::with_capacity(n);
        for j in 0..n {
            let v = self.eval_root(rs, winv.apply(j));
            q.push(v.q);
            t.push(v.t);
        }
        Ok(UnramifiedParam { q, t })
    }

    /// Componentwise sum (product of characters).
    pub fn add(&self, other: &UnramifiedParam) -> UnramifiedParam {
        UnramifiedParam {
            q: self.q.iter().zip(&other.q).map(|(a, b)| *a + *b).collect(),
            t: self
                .t
                .iter()
                .zip(&other.t)
                .map(|(a, b)| mod_one(*a + *b))
                .collect(),
        }
    }

    pub fn neg(&self) -> UnramifiedParam {
        UnramifiedParam {
            q: self.q.iter().map(|a| -*a).collect(),
            t: self.t.iter().map(|a| mod_one(-*a)).collect(),
        }
    }
}

/// `W_ν = {w ∈ W_M : w.ν = ν}`.
pub fn stabilizer(an: &LeviAnalysis<'_>, nu: &UnramifiedParam) -> Subgroup {
    Subgroup::from_members(
        an.wm
            .reps
            .iter()
            .filter(|&w| nu.weyl_act(&an.levi, w).as_ref() == Ok(nu))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_cartan, Family};
    use crate::levi::analyze;
    use crate::rational::frac;
    use crate::rootsys::build_root_system;
    use crate::weyl::{generate_weyl, WeylGroup, DEFAULT_CAP};

    fn group(f: Family, n: usize) -> WeylGroup {
        generate_weyl(build_root_system(build_cartan(f, n).unwrap()).unwrap(), DEFAULT_CAP).unwrap()
    }

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_integer(x)).collect()
    }

    #[test]
    fn quadratic_character_on_sl2() {
        let g = group(Family::A, 1);
        let an = analyze(&g, &[]).unwrap();
        let nu = UnramifiedParam::new(qv(&[0]), alloc::vec![frac(1, 2)], &[]).unwrap();
        let v = nu.eval_rel(&an, 0).unwrap();
        assert_eq!(v, ValueExp::new(Q::from_integer(0), frac(1, 2)));
        assert!(v.scale(Q::from_integer(2)).is_one());
        assert!(!is_wall(v));
        assert_eq!(stabilizer(&an, &nu).order(), 2);
        let generic = UnramifiedParam::new(alloc::vec![frac(1, 3)], qv(&[0]), &[]).unwrap();
        assert!(stabilizer(&an, &generic).is_trivial());
    }

    #[test]
    fn rho_of_a2() {
        let g = group(Family::A, 2);
        let rs = g.root_system();
        let rho = UnramifiedParam::new(qv(&[1, 1]), qv(&[0, 0]), &[]).unwrap();
        assert!(is_wall(rho.eval_root(rs, 0)));
        assert!(is_wall(rho.eval_root(rs, 1)));
        assert_eq!(rho.eval_root(rs, 2), ValueExp::new(Q::from_integer(2), Q::from_integer(0)));
        // ρ = α1 + α2 in root coordinates.
        let same = UnramifiedParam::from_simple_root_coords(rs, &qv(&[1, 1]), &qv(&[0, 0]), &[]).unwrap();
        assert_eq!(same, rho);
    }

    #[test]
    fn block_swap_flips_sign() {
        let g = group(Family::A, 3);
        let an = analyze(&g, &[0, 2]).unwrap();
        let nu = UnramifiedParam::new(qv(&[0, 3, 0]), alloc::vec![Q::from_integer(0), frac(1, 3), Q::from_integer(0)], &[0, 2]).unwrap();
        let w = an.reflection(0).unwrap();
        let img = nu.weyl_act(&an.levi, w).unwrap();
        assert_eq!(img.q_part(), &qv(&[0, -3, 0])[..]);
        assert_eq!(img.t_part(), &[Q::from_integer(0), frac(2, 3), Q::from_integer(0)][..]);
        assert!(stabilizer(&an, &nu).is_trivial());
        assert_eq!(stabilizer(&an, &UnramifiedParam::trivial(3)).order(), 2);
    }

    #[test]
    fn must_vanish_on_levi() {
        assert_eq!(
            UnramifiedParam::new(qv(&[1, 0]), qv(&[0, 0]), &[0]),
            Err(CoreError::NotVanishingOnLevi { index: 0 })
        );
    }

    #[test]
    fn non_normalizing_element_is_rejected() {
        let g = group(Family::A, 2);
        let levi = Levi::new(&g, &[0]).unwrap();
        let nu = UnramifiedParam::trivial(2);
        assert!(matches!(
            nu.weyl_act(&levi, g.simple(1)),
            Err(CoreError::NotNormalizing { .. })
        ));
        assert_eq!(nu.weyl_act(&levi, g.simple(0)).unwrap(), nu);
    }

    #[test]
    fn action_is_a_group_action() {
        let g = group(Family::B, 2);
        let levi = Levi::new(&g, &[]).unwrap();
        let nu = UnramifiedParam::new(alloc::vec![frac(1, 2), Q::from_integer(-2)], alloc::vec![frac(1, 3), Q::from_integer(0)], &[]).unwrap();
        for a in 0..g.order() as ElemId {
            for b in 0..g.order() as ElemId {
                let lhs = nu.weyl_act(&levi, g.mul(a, b)).unwrap();
                let rhs = nu.weyl_act(&levi, b).unwrap().weyl_act(&levi, a).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
