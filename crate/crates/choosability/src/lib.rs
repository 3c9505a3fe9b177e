//! Exact list-coloring tools for complete multipartite graphs.
//!
//! A complete multipartite graph is given by its part sizes; two vertices are
//! adjacent exactly when they lie in different parts. This crate provides:
//!
//! - [`instance`]: the core data model — instances, list assignments over a
//!   dense color pot, part-size profiles, and the bound
//!   `max{k, ceil((n+k-1)/3)}` on the choice number.
//! - [`oracle`]: exact ground truth at desk scale — an `L`-coloring decision
//!   procedure, a `k`-choosability decision with a bad-assignment witness,
//!   and the exact choice number.
//! - [`sdr`]: systems of distinct representatives via bipartite matching,
//!   with Hall-violator certificates when no SDR exists.
//! - [`generators`]: the classical hard-instance families (cover designs on
//!   a small color universe, subset lists on a large one, sharpness and
//!   near-chromatic examples) plus closed-form choice-number formulas.
//! - [`pipeline`]: a constructive colorer that reduces an instance, merges
//!   vertex pairs inside parts, checks a battery of structural properties at
//!   runtime, and finishes with one matching step — falling back to the
//!   exact oracle whenever a check fails.
//! - [`harness`]: verification campaigns that sweep instance families,
//!   compare computed choice numbers against the formulas, and persist
//!   machine-readable reports.
//!
//! Every capability has a runnable example under `examples/`:
//!
//! ```text
//! cargo run --release --example bounds_and_profiles
//! cargo run --release --example exact_choice_numbers
//! cargo run --release --example hall_certificates
//! cargo run --release --example hard_instances
//! cargo run --release --example guided_coloring
//! cargo run --release --example desk_verification
//! ```
//!
//! The thin `choosability` binary exposes the same operations as
//! subcommands (`gen`, `solve`, `choice-number`, `choosable`, `verify`).

pub mod generators;
pub mod harness;
pub mod instance;
pub mod oracle;
pub mod pipeline;
pub mod sdr;

pub use instance::{main_bound, ColorSet, Coloring, Instance, ListAssignment, Profile};
pub use oracle::{choice_number, find_coloring, is_k_choosable, SearchOptions};
pub use pipeline::{color, validate_coloring, ProofTrace};
pub use sdr::{find_sdr, SdrResult};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid list assignment: {0}")]
    InvalidLists(String),
    #[error("unsupported profile: {0}")]
    UnsupportedProfile(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction too large: m = {m} exceeds cap {cap}")]
    TooLarge { m: u64, cap: u64 },
    #[error("search inconclusive: node limit {limit} exhausted")]
    Inconclusive { limit: u64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
