use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Everything the engine can refuse or detect.
///
/// Variants fall into three classes (see [`CoreError::class`]): malformed
/// input that a front end should report as a schema problem, well-formed
/// input the engine rejects, and internal invariant failures that would
/// indicate a bug or a counterexample to one of the structural lemmas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreError {
    InvalidCartan { family: char, rank: usize, reason: &'static str },
    UnknownFamily(char),
    RootBoundExceeded { bound: usize },
    CapExceeded { cap: usize, partial: usize },
    NotARoot,
    IndexOutOfRange { index: usize, rank: usize },
    DimensionMismatch { expected: usize, found: usize },
    NotRelativeRoot,
    NotRelativeSimple,
    NotNormalizing { word: Vec<u8> },
    NotVanishingOnLevi { index: usize },
    NonIntegralCoroot,
    OracleInconsistent(String),
    MissingCorankFlags { roots: Vec<Vec<i32>> },
    MissingMuZero { roots: Vec<Vec<i32>> },
    FlagNotOrbitConstant { root: Vec<i32> },
    ProductHypothesis(String),
    GridTooLarge { points: u128, budget: u128 },
    RequiresTorus,
    RequiresTypeA,
    Faithfulness { kernel: Vec<u8> },
    Factorization(String),
    Invariant(String),
}

/// Coarse classification used for exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    Schema,
    Rejected,
    Internal,
}

impl CoreError {
    pub fn class(&self) -> ErrorClass {
        use CoreError::*;
        match self {
            InvalidCartan { .. }
            | UnknownFamily(_)
            | IndexOutOfRange { .. }
            | DimensionMismatch { .. }
            | MissingCorankFlags { .. }
            | RequiresTorus
            | RequiresTypeA => ErrorClass::Schema,
            Faithfulness { .. } | Factorization(_) | Invariant(_) => ErrorClass::Internal,
            _ => ErrorClass::Rejected,
        }
    }
}

fn word_str(w: &[u8]) -> String {
    use core::fmt::Write;
    let mut s = String::from("[");
    for (i, l) in w.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", *l as usize + 1);
    }
    s.push(']');
    s
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoreError::*;
        match self {
            InvalidCartan { family, rank, reason } => {
                write!(f, "invalid Cartan type {family}{rank}: {reason}")
            }
            UnknownFamily(c) => write!(f, "unknown Cartan family {c:?}"),
            RootBoundExceeded { bound } => {
                write!(f, "root closure exceeded the safety bound of {bound} roots")
            }
            CapExceeded { cap, partial } => write!(
                f,
                "Weyl group enumeration exceeded the cap of {cap} elements ({partial} enumerated)"
            ),
            NotARoot => write!(f, "vector is not a root of the root system"),
            IndexOutOfRange { index, rank } => {
                write!(f, "simple root index {index} out of range for rank {rank}")
            }
            DimensionMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            NotRelativeRoot => write!(f, "vector is not a relative root of this Levi"),
            NotRelativeSimple => write!(f, "relative root is not relative simple"),
            NotNormalizing { word } => {
                write!(f, "Weyl element {} does not normalize the Levi", word_str(word))
            }
            NotVanishingOnLevi { index } => write!(
                f,
                "character does not vanish on the coroot of Levi simple root {}",
                index + 1
            ),
            NonIntegralCoroot => write!(
                f,
                "relative coroot is not integral on a_M; torsion pairing is undefined"
            ),
            OracleInconsistent(msg) => write!(f, "inconsistent sigma oracle: {msg}"),
            MissingCorankFlags { roots } => {
                write!(f, "missing co-rank one flags for relative roots {roots:?}")
            }
            MissingMuZero { roots } => write!(f, "missing mu_zero flags for relative roots {roots:?}"),
            FlagNotOrbitConstant { root } => {
                write!(f, "oracle flag is not constant on the stabilizer orbit of {root:?}")
            }
            ProductHypothesis(msg) => write!(f, "product formula hypothesis violated: {msg}"),
            GridTooLarge { points, budget } => {
                write!(f, "grid has {points} points, budget is {budget}")
            }
            RequiresTorus => write!(f, "operation requires the minimal Levi (empty Θ)"),
            RequiresTypeA => write!(f, "pairwise block flags are only defined in type A"),
            Faithfulness { kernel } => write!(
                f,
                "relative Weyl group does not act faithfully on a_M*: {} acts trivially",
                word_str(kernel)
            ),
            Factorization(msg) => write!(f, "semidirect factorization failed: {msg}"),
            Invariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for CoreError {}

pub type Result<T> = core::result::Result<T, CoreError>;
