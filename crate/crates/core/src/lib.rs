pub mod chromatic;
pub mod error;
pub mod hecke;
pub mod limits;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod qmatrix;
pub mod ring;
pub mod symfunc;
pub mod traces;
pub mod verify;

pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use partition::Partition;
pub use perm::{Permutation, SymmetricGroup};
pub use ring::{HalfLaurent, RatFunc, Rational};
pub use symfunc::{Basis, SymFunc};
