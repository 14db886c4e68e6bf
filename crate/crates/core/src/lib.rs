//! Finite-group toolkit for equal order pairs and related coset conditions.

pub mod arith;
pub mod error;
pub mod ff;
pub mod grp;

pub use error::{Error, Result};
pub mod pairs;
pub mod structure;
pub mod constructions;
pub mod verify;
