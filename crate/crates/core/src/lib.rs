//! Exact invariant integration: the Cayley operator on `Gl_n` and `Sl_n`,
//! Weingarten-type projections for `O_n` and `Sp_n`, and harmonic analysis on
//! finite groups.

pub mod cayley;
pub mod error;
pub mod harmonic;
pub mod json;
pub mod limits;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod rat;
pub mod selftest;
pub mod tensor;
pub mod weingarten;

pub use error::{Error, Result};
pub use rat::Rat;
