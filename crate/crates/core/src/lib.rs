pub mod acceptance;
pub mod certificate;
pub mod cli;
pub mod darboux;
pub mod eigen;
pub mod error;
pub mod exact;
pub mod genericity;
pub mod laguerre;
pub mod sobolev;

pub use error::{Error, Result};
