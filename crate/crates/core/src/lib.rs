//! Fifth-order Hermite-Fejér interpolation on the unit circle.
//!
//! The nodal system is the set of Gauss-Jacobi zeros projected vertically
//! onto the unit circle together with the endpoints +-1. The interpolation
//! operator Q_n matches prescribed values at all 2n+2 nodes while its first
//! four derivatives vanish there. The crate provides:
//!
//! - [`jacobi`]: Jacobi polynomial evaluation, derivatives, zeros, and the
//!   leading-coefficient constant in log-space;
//! - [`nodal`]: the projected nodal system and the node polynomials W, R;
//! - [`jets`]: degree-5 truncated Taylor arithmetic used to compute and
//!   verify polynomial derivatives exactly;
//! - [`basis`]: Lagrange fundamental polynomials and per-node derivative
//!   data;
//! - [`hermite`]: the correction coefficients (closed forms plus an
//!   independent condition-derived oracle), the fundamental polynomials
//!   A_0k, and the operator Q_n;
//! - [`experiments`]: Lebesgue sums, growth tables, moduli of continuity,
//!   convergence studies, and CSV output;
//! - [`plot`]: static SVG line charts.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `hfc` binary for the command-line front end.

pub mod basis;
pub mod error;
mod extended;
pub mod experiments;
pub mod hermite;
pub mod jacobi;
pub mod jets;
pub mod nodal;
pub mod plot;

pub use error::{Error, Result};
pub use hermite::{HermiteBasis, Interpolant};
pub use jacobi::JacobiParams;
pub use nodal::NodalSystem;
