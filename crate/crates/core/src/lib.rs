//! Chain rings F_q[u]/<u^k>, a Gray map onto F_q^{p^r}, and the
//! λ-constacyclic codes it carries to ϑ-constacyclic codes over F_q.

pub mod chainring;
pub mod cli;
pub mod codes;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod graymap;
pub mod matrix;
pub mod poly;
pub mod verify;

pub use chainring::{Ambient, ChainRing, RingElem, RingPoly};
pub use codes::{CodeFamily, CodeReport, CodeSpec};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use graymap::GrayContext;
pub use matrix::Matrix;
pub use poly::Poly;
