//! An exact-arithmetic workbench for the algebra of Lie bialgebras: endo Lie
//! algebras, matched pairs, Manin triples, classical r-matrices, O-operators
//! and pre-Lie algebras, with every defining identity verified bit-exactly
//! over rational structure constants and every construction between the
//! structures executable and re-checkable.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads. Semantic
//! verdicts come back as [`report::Report`] values carrying witnesses;
//! `Err` is reserved for shape and precondition violations.

// index arithmetic over basis positions is the bread and butter here;
// range loops over several parallel tables read better than adaptors
#![allow(clippy::needless_range_loop)]

pub mod bialg;
pub mod catalog;
pub mod cybe;
pub mod endo;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod kernel;
pub mod lie;
pub mod manin;
pub mod oop_prelie;
pub mod report;

pub use error::{Error, Result};
pub use kernel::{LinearMap, Scalar, Tensor2, Tensor3};
pub use report::{CheckItem, Report};
