//! Exact computation of generating functions for Chebyshev-like polynomial
//! families obtained by power substitution in algebraic root systems.
//!
//! The crate works over exact rational arithmetic throughout. Its layers:
//!
//! - [`scalar`]: coefficient-ring traits ([`scalar::Coeff`], [`scalar::ExactDiv`])
//!   with rational, floating, and complex instances;
//! - [`polyring`]: dense variable-tagged polynomials [`polyring::Poly`],
//!   nested for multivariate work;
//! - [`series`]: truncated power series over a coefficient ring;
//! - [`newton`]: Newton's identities between polynomials and power sums;
//! - [`resultant`]: Sylvester/Bareiss and subresultant resultants, plus the
//!   power-substitution resultant `Res_y(y^s - x, Q(y))`;
//! - [`genfun`]: the generating-function pipeline producing rational
//!   functions `F_s(x, t) = N_s / D_s`;
//! - [`verify`]: exact and numeric cross-checks of the identities the
//!   pipeline is built on.

pub mod genfun;
pub mod newton;
pub mod polyring;
pub mod resultant;
pub mod scalar;
pub mod series;
pub mod verify;

mod modp;

pub use genfun::{expand_ratfun, generating_function, h_family, h_poly, RatFun};
pub use polyring::{BiPoly, Poly, Rat, UniPoly, Var};
pub use scalar::{rat, rat_int, Coeff, ExactDiv};
pub use series::TruncSeries;
