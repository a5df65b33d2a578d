//! Constacyclic codes over finite fields, their Schur squares, and detection of
//! generalized Reed–Solomon codes among them.
//!
//! Layers, bottom up: [`gf`] (prime and extension fields), [`poly`], [`matrix`],
//! [`zn`] (subsets of `Z_n` and sumsets), [`codes`] (linear and GRS codes),
//! [`constacyclic`], [`detector`], and the property suites in [`verify`].

pub mod cli;
pub mod codes;
pub mod constacyclic;
pub mod detector;
pub mod error;
pub mod gf;
pub mod matrix;
pub mod poly;
pub mod verify;
pub mod zn;

pub use codes::LinearCode;
pub use constacyclic::{family_grassl, ConstaCode, ConstaSpec, Family, SplittingData};
pub use detector::{detect, DetectReport, Verdict};
pub use error::{Error, Result};
pub use gf::{build_field, FieldCtx, FieldElem};
pub use zn::ZnSet;
