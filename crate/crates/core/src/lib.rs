//! Certified recomputation of the explicit constants in an effective
//! Chebotarev least-prime-ideal bound.
//!
//! Every real quantity is carried as an outward-rounded [`Interval`]. The
//! constants form a dependency graph ([`graph`]) whose nodes are adjudicated
//! against the printed values; the universal inequalities the argument relies
//! on are checked by interval branch-and-bound ([`verify`]).

// `!(a < b)` is used on purpose so NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod certificate;
pub mod config;
pub mod error;
pub mod graph;
pub mod interval;
pub mod jet;
pub mod optimize;
pub mod sandbox;
pub mod verify;

pub use error::{Error, Result};
pub use interval::{ComplexBox, Interval};
pub use jet::{Jet, Real};
