//! Floating-point checks of the quantitative claims attached to the closed-form
//! solution: the conserved integral of U^2 (with its jump at s = 0), the finite
//! ray limits of U at the singular point, the O(1/r^2) decay rates at infinity,
//! and an independent finite-difference evaluation of the evolution equation.
//!
//! Everything here is deliberately boring in the numerical sense: fixed sample
//! layouts, fixed subdivision policies, compensated summation in a fixed order.
//! Reports are bit-identical across runs and across worker counts, so they can
//! be diffed byte for byte. Exact rational evaluation (mnv-algebra) remains the
//! arbiter whenever a floating-point result looks suspicious.

pub mod error;
pub mod eval;
pub mod fd;
pub mod probes;
pub mod quadrature;

pub use error::NumericsError;
pub use eval::FieldEvaluator;
pub use fd::fd_residual_check;
pub use probes::{decay_probe, ray_limit_probe, DecayLaw, ProbeSeries};
pub use quadrature::{integrate_u2, QuadratureReport};
