//! Brute-force evaluator for unramified principal series.
//!
//! Everything here is recomputed from hard-coded Cartan matrices: the Weyl
//! group is enumerated as integer matrices on the coroot lattice, and the
//! stabilizer, reflection subgroup and walls are found by looping over all of
//! it. Nothing is shared with the engine.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

pub type Mat = Vec<i64>;

/// `A[i][j] = ⟨α_j, α_i∨⟩`, Bourbaki numbering, `G2` with `α1` long.
pub fn cartan(letter: char, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match letter {
        'A' | 'B' | 'C' => (1..n).for_each(|i| link(i - 1, i)),
        'D' => {
            (1..n - 1).for_each(|i| link(i - 1, i));
            link(n - 3, n - 1);
        }
        'E' => {
            link(0, 2);
            link(1, 3);
            (3..n).for_each(|i| link(i - 1, i));
        }
        'F' => (1..4).for_each(|i| link(i - 1, i)),
        'G' => link(0, 1),
        _ => panic!("unknown family {letter}"),
    }
    match letter {
        'B' => a[n - 1][n - 2] = -2,
        'C' => a[n - 2][n - 1] = -2,
        'F' => a[2][1] = -2,
        'G' => a[1][0] = -3,
        _ => {}
    }
    a
}

pub struct Oracle {
    pub n: usize,
    pub a: Vec<Vec<i64>>,
    /// Elements as `n × n` row-major matrices on simple-coroot coordinates.
    pub group: Vec<Mat>,
    /// Positive roots (simple-root coordinates) with their coroots.
    pub positive: Vec<(Vec<i64>, Vec<i64>)>,
}

pub fn mul(n: usize, x: &Mat, y: &Mat) -> Mat {
    let mut z = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let v = x[i * n + k];
            if v != 0 {
                for j in 0..n {
                    z[i * n + j] += v * y[k * n + j];
                }
            }
        }
    }
    z
}

pub fn identity(n: usize) -> Mat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn apply(n: usize, m: &Mat, v: &[i64]) -> Vec<i64> {
    (0..n).map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum()).collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Closure of `gens` under multiplication.
pub fn closure(n: usize, gens: &[Mat]) -> Vec<Mat> {
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut out = vec![identity(n)];
    seen.insert(identity(n));
    let mut queue = VecDeque::from([identity(n)]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(n, g, &x);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

impl Oracle {
    pub fn new(letter: char, n: usize) -> Oracle {
        let a = cartan(letter, n);
        let gens: Vec<Mat> = (0..n).map(|i| Self::coroot_reflection(&a, &unit(n, i), &unit(n, i))).collect();
        let group = closure(n, &gens);
        // Orbit of (α_i, α_i∨) under the simple reflections, acting on both.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut pairs = Vec::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = (0..n).map(|i| (unit(n, i), unit(n, i))).collect();
        while let Some((r, c)) = queue.pop_front() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for i in 0..n {
                // s_i(β) = β − ⟨β, α_i∨⟩ α_i and s_i(β∨) = β∨ − ⟨α_i, β∨⟩ α_i∨.
                let p: i64 = (0..n).map(|k| r[k] * a[i][k]).sum();
                let pc: i64 = (0..n).map(|l| c[l] * a[l][i]).sum();
                let mut r2 = r.clone();
                r2[i] -= p;
                let mut c2 = c.clone();
                c2[i] -= pc;
                queue.push_back((r2, c2));
            }
            pairs.push((r, c));
        }
        let positive = pairs
            .into_iter()
            .filter(|(r, _)| r.iter().all(|&x| x >= 0))
            .collect();
        Oracle { n, a, group, positive }
    }

    /// `⟨β, γ∨⟩` for a root and a coroot in simple coordinates.
    pub fn pair(&self, root: &[i64], coroot: &[i64]) -> i64 {
        let n = self.n;
        (0..n)
            .flat_map(|k| (0..n).map(move |l| (k, l)))
            .map(|(k, l)| root[k] * coroot[l] * self.a[l][k])
            .sum()
    }

    /// Reflection `s_β` on the coroot lattice: `γ∨ ↦ γ∨ − ⟨β, γ∨⟩ β∨`.
    fn coroot_reflection(a: &[Vec<i64>], root: &[i64], coroot: &[i64]) -> Mat {
        let n = a.len();
        let mut m = identity(n);
        for l in 0..n {
            let p: i64 = (0..n).map(|k| root[k] * a[l][k]).sum();
            for i in 0..n {
                m[i * n + l] -= p * coroot[i];
            }
        }
        m
    }

    pub fn reflection(&self, k: usize) -> Mat {
        let (r, c) = &self.positive[k];
        Self::coroot_reflection(&self.a, r, c)
    }

    /// Elements mapping the simple coroots of `theta` onto themselves.
    pub fn normalizer_order(&self, theta: &[usize]) -> usize {
        let n = self.n;
        let target: HashSet<Vec<i64>> = theta.iter().map(|&i| unit(n, i)).collect();
        self.group
            .iter()
            .filter(|w| theta.iter().all(|&i| target.contains(&apply(n, w, &unit(n, i)))))
            .count()
    }

    /// Whether a set of roots is closed under its own reflections.
    pub fn reflection_closed(&self, roots: &[Vec<i64>]) -> bool {
        let set: HashSet<&Vec<i64>> = roots.iter().collect();
        roots.iter().all(|a| {
            let c = &self.positive.iter().find(|(r, _)| r == a).expect("positive root").1;
            roots.iter().all(|b| {
                let p = self.pair(b, c);
                let img: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - p * y).collect();
                let pos = if img.iter().all(|&x| x >= 0) { img } else { img.iter().map(|x| -x).collect() };
                set.contains(&pos)
            })
        })
    }
}

/// An unramified character: `q2[i]/2` is the q-exponent and `t[i]/den` the
/// torsion on the `i`-th simple coroot.
#[derive(Clone, Debug)]
pub struct Point {
    pub q2: Vec<i64>,
    pub t: Vec<i64>,
    pub den: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub irreducible: bool,
    pub stab_order: usize,
    pub r_order: usize,
    pub walls: usize,
    /// Co-rank one reducibility along each positive root (same order as
    /// `Oracle::positive`).
    pub reducible_along: Vec<bool>,
    /// Positive roots with zero real pairing.
    pub real_zero: Vec<Vec<i64>>,
}

impl Point {
    fn value(&self, c: &[i64]) -> (i64, i64) {
        let x = c.iter().zip(&self.q2).map(|(a, b)| a * b).sum();
        let t: i64 = c.iter().zip(&self.t).map(|(a, b)| a * b).sum();
        (x, t.rem_euclid(self.den))
    }
}

impl Oracle {
    pub fn evaluate(&self, p: &Point) -> Evaluation {
        let n = self.n;
        let fixes = |w: &Mat| (0..n).all(|j| p.value(&apply(n, w, &unit(n, j))) == p.value(&unit(n, j)));
        let stab: Vec<&Mat> = self.group.iter().filter(|w| fixes(w)).collect();
        let mut gens = Vec::new();
        let mut walls = 0;
        let mut reducible_along = Vec::new();
        let mut real_zero = Vec::new();
        for (k, (r, c)) in self.positive.iter().enumerate() {
            let v = p.value(c);
            let refl = self.reflection(k);
            if v == (0, 0) {
                gens.push(refl.clone());
            }
            let wall = v.1 == 0 && v.0.abs() == 2;
            walls += wall as usize;
            reducible_along.push(wall || (fixes(&refl) && v != (0, 0)));
            if v.0 == 0 {
                real_zero.push(r.clone());
            }
        }
        let w0 = closure(n, &gens);
        assert!(w0.iter().all(&fixes), "W⁰ inside the stabilizer");
        assert_eq!(stab.len() % w0.len(), 0);
        let r_order = stab.len() / w0.len();
        Evaluation {
            irreducible: r_order == 1 && walls == 0,
            stab_order: stab.len(),
            r_order,
            walls,
            reducible_along,
            real_zero,
        }
    }
}
