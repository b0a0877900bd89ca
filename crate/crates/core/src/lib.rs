pub mod analysis;
pub mod braiding;
pub mod cartan;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod reps;
pub mod screen;

pub use error::{Error, Result};
