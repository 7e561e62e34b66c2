pub mod cli;
pub mod error;
pub mod guards;
pub mod hankel;
pub mod normality;
pub mod poly;
pub mod poset;
pub mod roots;
pub mod stern;
pub mod suite;

pub use error::{Error, Result};
pub use poly::{IntPoly, Rational};
