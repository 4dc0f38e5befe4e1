//! Colored quivers and their mutation, together with the geometric models
//! that realize them: (m+2)-angulations of polygons and of annuli, where
//! flipping an arc mutates the colored quiver read off from the faces.
//!
//! ```
//! use angulator::disk::{Diagonal, DiskConfig};
//!
//! let fan = DiskConfig::new(2, 8).unwrap().initial_fan();
//! let flipped = fan.flip(Diagonal::new(1, 4)).unwrap();
//! assert_eq!(flipped.quiver(), fan.quiver().mutate(0).unwrap());
//! ```

pub mod angulation;
pub mod annulus;
pub mod cli;
pub mod disk;
pub mod face;
pub mod io;
pub mod quiver;
pub mod verify;

use thiserror::Error;

pub use angulation::Angulation;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Quiver(#[from] quiver::QuiverError),
    #[error(transparent)]
    Disk(#[from] disk::DiskError),
    #[error(transparent)]
    Annulus(#[from] annulus::AnnulusError),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
