pub mod arith;
pub mod cli;
pub mod error;
pub mod isolation;
pub mod query;
pub mod rur;
pub mod subres;

pub use error::{Error, Result};
