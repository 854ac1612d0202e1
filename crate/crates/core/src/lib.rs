//! Euler factors of elliptic curves as resolvents of rank-two operator pencils.
//!
//! Exact arithmetic lives in [`exactmath`], point counting in [`curves`], the pencil
//! algebra in [`pencil`], basepoint matching in [`matching`], continuum limits in
//! [`continuum`] and prime statistics in [`stats`]. Common types are re-exported here.

pub mod catalogue;
pub mod continuum;
pub mod curves;
pub mod error;
pub mod exactmath;
pub mod matching;
pub mod pencil;
pub mod report;
pub mod stats;
pub mod verify;

pub use catalogue::{Catalogue, CatalogueEntry};
pub use curves::WeierstrassCurve;
pub use error::{Error, Result};
pub use exactmath::{Cx, Field, Matrix2, QuadExt, Rational, Ring};
pub use matching::{Basepoint, Branch, MatchReport, MatchTarget, PencilParams};
pub use pencil::{EtaGram, Pencil2};
pub use stats::PrimeSeries;
