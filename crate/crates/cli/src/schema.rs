//! JSON problem description.
//!
//! Indices of simple roots and letters of Weyl words are 1-based. Rationals
//! are strings such as `"-1/2"` or `"3"`. Unknown keys are rejected.
//!
//! Documented defaults: `levi` empty, `character` trivial, `character.basis`
//! is `fundamental-weight`, a missing `q_part`/`t_part` is zero, a missing
//! pair `twist` is trivial, a missing `sigma` in `decide-gps` with an empty
//! Levi means the principal-series oracle.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Decompose,
    DecidePs,
    DecideGps,
    Verify,
    Atlas,
    ProductCount,
    Predict,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Decompose => "decompose",
            Mode::DecidePs => "decide-ps",
            Mode::DecideGps => "decide-gps",
            Mode::Verify => "verify",
            Mode::Atlas => "atlas",
            Mode::ProductCount => "product-count",
            Mode::Predict => "predict",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// Values on the simple coroots.
    #[default]
    FundamentalWeight,
    /// Coefficients along the simple roots.
    SimpleRoot,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterSpec {
    #[serde(default)]
    pub basis: Basis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_part: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_part: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub word: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<CharacterSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagSpec {
    /// Relative root as coefficients along the simple roots (zero on the Levi).
    pub root: Vec<i32>,
    pub value: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SigmaSpec {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stab_pairs: Vec<PairSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mu_zero: Vec<FlagSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub corank_irred: Vec<FlagSpec>,
    /// Type A only: symmetric block-by-block co-rank one irreducibility.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairwise_irred: Option<Vec<Vec<bool>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    /// Values of the q-exponent on each simple coroot.
    pub q_exp: Vec<String>,
    /// Values of the torsion phase on each simple coroot.
    pub torsion: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub family: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub levi: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_counts: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<ProblemSpec, serde_json::Error> {
        serde_json::from_str(text)
    }
}
