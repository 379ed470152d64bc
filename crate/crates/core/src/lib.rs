//! Exact greatest Ricci lower bounds `R(X)` for the nonhomogeneous projective
//! horospherical manifolds of Picard number one: `X1(n)`, `X2`, `X3(n,k)`,
//! `X4` and `X5`.
//!
//! * [`exactnum`]: big rationals, rational polynomials, exact integration
//! * [`rootsystems`]: positive roots and weights for `B_n`, `C_n`, `F_4`, `G_2`
//! * [`engine`]: moment segment, Duistermaat-Heckman density, barycenter, `R(X)`
//! * [`closedforms`]: the per-family integral formulas, lemmas and bounds
//! * [`oracle`]: floating-point quadrature used to cross-check the exact route

pub mod closedforms;
pub mod engine;
pub mod error;
pub mod exactnum;
pub mod oracle;
pub mod rootsystems;

pub use engine::{Family, HorosphericalDatum};
pub use error::Error;
pub use exactnum::{Polynomial, Rational};
