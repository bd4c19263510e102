//! Certificate-checking engine for the cohomology of the Sylow 2-subgroup of
//! SU₃(4): the LHS spectral sequence, essential classes and their products.

pub mod algebra;
pub mod error;
pub mod essential;
pub mod gf16;
pub mod group;
pub mod linalg;
pub mod pages;
pub mod report;
pub mod runner;
pub mod series;
pub mod sseq;

pub use algebra::{Bidegree, Element, GeneratorTable, Monomial, SymbolTable, Weight};
pub use error::{Error, Result};
pub use gf16::Scalar16;
pub use pages::Window;
pub use report::{Check, Status, VerificationReport};
pub use runner::{run, Config, Group};
pub use sseq::Pipeline;
