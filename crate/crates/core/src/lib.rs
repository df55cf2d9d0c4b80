pub mod algebra;
pub mod arithmetic;
pub mod arrangement;
pub mod checks;
pub mod cli;
pub mod error;
pub mod families;
pub mod finite_field;
pub mod linalg;
pub mod multivariate;
pub mod tutte;

pub use arrangement::{Arrangement, Hyperplane};
pub use error::{Error, Result};
