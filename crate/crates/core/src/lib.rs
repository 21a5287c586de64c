//! Exact combinatorics of relative Weyl groups and modified R-groups.
//!
//! The crate models a split reductive group purely through its root datum:
//! roots in the simple-root basis, the Weyl group as permutations of the
//! signed root list, and unramified characters as exact exponent/phase pairs
//! on coroots. On top of that it computes, for a standard Levi subset `Θ`,
//!
//! * the reduced relative roots `Φ_M` and the relative Weyl group `W_M`,
//! * the reflection part `Φ_M⁰` and the decomposition `W_M = W_M⁰ ⋊ W_M¹`,
//! * stabilizers of induction data, the modified R-group `R_{σν}` and the
//!   Knapp–Stein ladder `R′ = R⁰ ⋊ R`,
//! * the Muller type irreducibility verdict for (generalized) principal
//!   series together with its regular and unitary special cases.
//!
//! Everything is exact (`i32`/`i64` integers and `Ratio<i64>`); the residue
//! field cardinality `q` only appears as the formal base of exponents.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cartan;
pub mod charlat;
pub mod criterion;
pub mod error;
pub mod levi;
pub mod rational;
pub mod rootsys;
pub mod subgroup;
pub mod verify;
pub mod weyl;

pub use cartan::{build_cartan, CartanDatum, Family};
pub use charlat::{is_wall, UnramifiedParam, ValueExp};
pub use criterion::{
    conjecture_predict, decide_gps, decide_ps_unramified, product_formula_count, CriterionReport,
    Prediction, SigmaOracle, Verdict,
};
pub use error::CoreError;
pub use levi::{analyze, Levi, LeviAnalysis, RelId};
pub use rational::Q;
pub use rootsys::{build_root_system, RootSystem, RootVector};
pub use subgroup::Subgroup;
pub use weyl::{generate_weyl, ElemId, WeylElement, WeylGroup, DEFAULT_CAP};
