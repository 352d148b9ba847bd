//! Numerical laboratory for the Riemann zeta function: special functions,
//! exact arithmetic, zero finding, the explicit prime formula, criteria
//! equivalent to the Riemann hypothesis, zero statistics and the Newton
//! fractal of `zeta`.

pub mod arithmetic;
pub mod criteria;
pub mod error;
pub mod explicit;
pub mod fractal;
pub mod precision;
pub mod quadrature;
pub mod roots;
pub mod special;
pub mod statistics;
pub mod zeros;

pub use error::{Result, ZetaError};
pub use precision::{ComplexExt, ComplexPoint, DoubleDouble, EvalResult, PrecisionContext, Real};
