//! Exact integer engine for Weyl groups of symmetrizable Cartan matrices,
//! Hurwitz orbits of reflection factorizations of Coxeter elements, curve
//! words in the punctured disc, real Schur root certification and
//! noncrossing partition posets.

pub mod cartan;
pub mod curves;
pub mod error;
pub mod exec;
pub mod hurwitz;
pub mod linalg;
pub mod ncposet;
pub mod orientation;
pub mod schur;
pub mod verdict;
pub mod weyl;

pub use cartan::{parse_cartan, preset, CartanMatrix, CoxeterExponent, TypeClass};
pub use curves::{CurveWord, LoopWord, Simplicity};
pub use error::{Error, Result};
pub use exec::Exec;
pub use hurwitz::{BraidLetter, BraidWord, Factorization};
pub use orientation::Orientation;
pub use verdict::{Certainty, Limits};
pub use weyl::{is_reflection, AbsoluteLength, Reflection, RootVector, WeylElement, WeylGroup};
