//! Report envelope shared by every verb.

use serde::{Deserialize, Serialize};

use crate::schema::ProblemSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    SchemaError,
    Rejected,
    InternalError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::SchemaError => 2,
            Status::Rejected => 3,
            Status::InternalError => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Engine {
    pub name: String,
    pub version: String,
}

impl Default for Engine {
    fn default() -> Engine {
        Engine {
            name: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    pub cartan: String,
    pub numbering: String,
    pub coroot_normalization: String,
    pub character: String,
    pub indexing: String,
}

impl Default for Conventions {
    fn default() -> Conventions {
        Conventions {
            cartan: "A[i][j] = <alpha_j, alpha_i^vee>; s_i(alpha_j) = alpha_j - A[i][j] alpha_i".into(),
            numbering: "Bourbaki for A-F (B_n: alpha_n short, C_n: alpha_n long, F_4: alpha_1, alpha_2 long); G_2: alpha_1 long, matrix [[2,-1],[-3,2]]".into(),
            coroot_normalization: "relative root = shortest projected root on its ray; relative coroot = 2p/(p,p) with p the projection orthogonal to the Levi roots, written in simple coroots".into(),
            character: "unramified character = (q-exponent, torsion mod 1) on each simple coroot; value q^(-x) e^(2 pi i t)".into(),
            indexing: "simple roots and reflection letters are 1-based; words are canonical (lexicographically least reduced)".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub class: Status,
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub engine: Engine,
    pub conventions: Conventions,
    pub verb: String,
    pub input: Option<ProblemSpec>,
    pub status: Status,
    pub result: Option<serde_json::Value>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ReportEnvelope {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}
