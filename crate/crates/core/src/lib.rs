//! Exact computations around nets of polar quadrics of cubic fourfolds:
//! polar systems, discriminant sextics, reconstruction of cubics from a
//! polar net, node analysis of plane sextics, the Fermat deformation
//! families and the sextic Del Pezzo projection experiment.

mod error;

pub mod delpezzo;
pub mod exactalg;
pub mod fermatlab;
pub mod nets;
pub mod polar;
pub mod reconstruct;
pub mod sexticlab;
pub mod verify;

pub use error::{Error, Result};
