//! JSON/CSV front end for `rgroup-core`.

pub mod envelope;
pub mod render;
pub mod run;
pub mod schema;

pub use envelope::{ReportEnvelope, Status};
pub use run::{run, run_text, CliError, Options};
pub use schema::{Mode, ProblemSpec};
