pub mod abelian;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod factorize;
pub mod frobenius;
pub mod multipoly;
pub mod rings;
pub mod transform;

pub use error::{AlgebraError, Result};
