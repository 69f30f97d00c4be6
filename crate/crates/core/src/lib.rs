pub mod cli;
pub mod error;
pub mod homology;
pub mod io;
pub mod koszul;
pub mod linalg;
pub mod module;
pub mod resolution;
pub mod ring;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
