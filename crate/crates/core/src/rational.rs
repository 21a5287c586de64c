//! Exact rational helpers.

use alloc::vec::Vec;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Representative of `x mod 1` in `[0, 1)`.
pub fn mod_one(x: Q) -> Q {
    x - x.floor()
}

pub fn is_integral(x: &Q) -> bool {
    x.is_integer()
}

/// Greatest common divisor of the absolute values (0 for the zero vector).
pub fn gcd_all(v: &[i32]) -> i32 {
    v.iter().fold(0i32, |g, &x| g.gcd(&x))
}

/// Solves `m · x = rhs` for a square nonsingular `m` by Gauss–Jordan
/// elimination. Returns `None` if `m` is singular.
pub fn solve(mut m: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> Option<Vec<Q>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = m[col][col];
        for c in col..n {
            m[col][c] /= p;
        }
        rhs[col] /= p;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
                let v = rhs[col];
                rhs[r] -= f * v;
            }
        }
    }
    debug_assert!((0..n).all(|i| m[i][i].is_one()));
    Some(rhs)
}
