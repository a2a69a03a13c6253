pub mod algebra;
pub mod coalgebra;
pub mod convolution;
pub mod diffeo;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod random;
pub mod series;
pub mod stuffle;
pub mod universal;
pub mod verify;

pub use error::{Error, Result};
