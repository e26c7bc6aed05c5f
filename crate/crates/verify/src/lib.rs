//! Exhaustive verification of the identities relating promotion,
//! evacuation, rowmotion, the matching map, RSK and the non-crossing
//! partition maps, together with orbit tables, golden data and the
//! conversions behind the `ratdyck` command-line tool.
//!
//! Every path map has a [`MapName`]; compositions of powers of maps form an
//! [`Expr`]. An [`Identity`] compares two expressions (or runs a custom
//! predicate) on every path of a slope and reports counterexamples.
//!
//! ```
//! use ratdyck_paths::Slope;
//! use ratdyck_verify::{verify, Status};
//!
//! let report = verify("mat-rowmotion", Slope::new(2, 3, 2).unwrap()).unwrap();
//! assert_eq!(report.domain_size, 23);
//! assert_eq!(report.status, Status::Pass);
//! ```

pub mod convert;
pub mod golden;
mod identities;
mod maps;
pub mod orbit;
mod report;

use ratdyck_paths::Slope;
use thiserror::Error;

pub use identities::{identities, identity, Check, Identity, DEFAULT_DOMAINS};
pub use maps::{Ctx, Expr, MapName, Power, Scope, Term};
pub use report::{run_suite, verify, verify_in, Status, SuiteOptions, VerificationReport};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("identity {identity} does not apply to {slope}")]
    Inapplicable { identity: String, slope: Slope },
    #[error("unknown map {0:?}")]
    UnknownMap(String),
    #[error("map {map} is not defined for {slope}")]
    MapInapplicable { map: String, slope: Slope },
    #[error("map {map} is not bijective: {witness}")]
    NotBijective { map: String, witness: String },
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Path(#[from] ratdyck_paths::PathError),
    #[error(transparent)]
    Matching(#[from] ratdyck_matchings::MatchingError),
    #[error(transparent)]
    MatMap(#[from] ratdyck_matmap::MatMapError),
    #[error(transparent)]
    Perm(#[from] ratdyck_perm321::PermError),
    #[error(transparent)]
    Tiling(#[from] ratdyck_tilings::TilingError),
    #[error(transparent)]
    NonCrossing(#[from] ratdyck_noncrossing::NcError),
}
