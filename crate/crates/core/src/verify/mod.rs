//! Interval branch-and-bound verification of universal inequalities.

pub mod bnb;
pub mod claims;
pub mod g0;
mod record;
pub mod suite;
pub mod universal;

pub use bnb::{BnbOptions, Region};
pub use g0::{locate_g0, G0Location};
pub use record::{conjoin, Verdict, VerdictRecord};
pub use suite::{catalog, run_claims, run_suite, select, ClaimInfo, ClaimOutcome, SuiteStatus};
pub use universal::{verify_halfline, verify_monotone, verify_nonneg, Direction, Tail};
