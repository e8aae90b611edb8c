//! Exact computer algebra for fused Specht polynomials and c=1 conformal blocks.

pub mod blocks;
pub mod bpz;
pub mod error;
pub mod factored;
pub mod hecke;
pub mod jet;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod specht;
pub mod tableaux;
pub mod verify;
pub mod virasoro;

pub use blocks::{BlockBasis, BlockElement, Generator, MobiusMap};
pub use error::{Error, Result};
pub use factored::FactoredFunction;
pub use hecke::{Tabloid, TabloidVector};
pub use linalg::Matrix;
pub use perm::Perm;
pub use poly::{MPoly, Monomial};
pub use rational::Q;
pub use tableaux::{Filling, Partition, TableauClass, Valences};
pub use virasoro::{PbwElement, VermaModule, VermaVector};
