//! Rigorous quadrature and the special functions built on it.

pub mod digamma;
pub mod kernels;
pub mod mellin;
pub mod quad;
pub mod vertical;
pub mod zeta;

pub use digamma::{digamma_re, digamma_real, Digamma};
pub use kernels::{k0, k1, k2, kernel_eval, khat1, khat2, Kernel};
pub use mellin::mellin_roundtrip_check;
pub use quad::{integrate, integrate_halfline, QuadOptions, TailMajorant, TailSign};
pub use vertical::v_winckler;
pub use zeta::{neg_zeta_log_deriv, NegZetaLogDeriv};
