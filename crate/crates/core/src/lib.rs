//! Integral forms of the enveloping algebras of the twisted affine algebras
//! `A₂⁽²⁾` and `A₄⁽²⁾`, computed exactly.

pub mod arith;
pub mod commutative;
pub mod error;
pub mod expr;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod partition;
pub mod pbw;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sequence;
pub mod series;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{GradedPolynomial, UniPoly};
pub use rational::Q;
pub use sequence::SequenceSpec;
pub use series::TruncatedSeries1;
