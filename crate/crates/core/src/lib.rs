//! Invariants of multigraded modules over `k[t_1, ..., t_m]`: rank invariants, localized
//! barcodes, the two-parameter decomposition up to the kernel of localization, support
//! complexes, and the bridge to star-quiver representations.

pub mod error;
pub mod k2;
pub mod linalg;
pub mod localization;
pub mod presentation;
pub mod quiver;
pub mod support;

pub use error::{Error, Result};
