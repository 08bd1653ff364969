pub mod ci;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod euler;
pub mod oracle;
pub mod orbits;
pub mod rootsys;

pub use error::{Error, Result};
