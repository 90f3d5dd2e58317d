//! Warpings, wreaths and skew warpings over finite data.
//!
//! The crate models the bicategory of spans of finite sets strictly: composite
//! spans carry flattened path elements, so horizontal composition is literally
//! associative and unital and every 2-cell equation is a decidable pointwise
//! comparison. On top of that engine it provides
//!
//! * [`monadwarp`]: monads in spans (finite categories), warpings, wreaths and
//!   mw-monads, each with a validator that reports witnesses;
//! * [`correspond`]: the warping/monad and warping/wreath correspondences, the
//!   Kleisli category of an mw-monad, warping algebras and their
//!   Eilenberg–Moore counterparts;
//! * [`skew`]: finite skew bicategories, skew warpings, the skew Kleisli
//!   construction and skew algebras;
//! * [`enumerate`]: exhaustive enumerators used as oracles;
//! * [`cli`]: the structure-file format and the `warp` command line.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod correspond;
pub mod enumerate;
mod error;
pub mod fincore;
pub mod fixtures;
pub mod monadwarp;
mod report;
pub mod skew;
pub mod spaneng;

pub use error::{Error, Result};
pub use report::{ValidationReport, Violation};
