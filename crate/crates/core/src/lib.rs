//! Irreducible components, singular loci and GKM graphs of semisimple
//! Hessenberg varieties in classical types.

pub mod cli;
pub mod components;
pub mod error;
pub mod gkm;
pub mod patch;
pub mod poly;
pub mod rational;
pub mod root_system;
pub mod table;
pub mod weyl;

pub use error::{Error, Result};
