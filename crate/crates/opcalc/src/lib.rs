//! Numerical operator calculus for transmutation operators of Bessel type.

pub mod cli;
pub mod error;
pub mod fracint;
pub mod gridfn;
pub mod specfun;
pub mod transmute;

pub use error::{Error, Result};
