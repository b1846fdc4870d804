//! Finite-dimensional algebras, modules and bimodules over exact fields,
//! with Krull-Schmidt decomposition and verification of two-sided order
//! (J-order) witnesses.

pub mod algebra;
pub mod bimodule;
pub mod catalog;
pub mod error;
pub mod group;
pub mod io;
pub mod jorder;
pub mod field;
pub mod krull_schmidt;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod suite;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Gfp, Rationals};
pub use matrix::Matrix;
