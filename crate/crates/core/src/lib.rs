//! Exact computations for cyclotomic Hecke algebras of type `G(r,p,n)`.
//!
//! The crate provides exact cyclotomic and rational-function arithmetic,
//! multipartition and tableau combinatorics, seminormal representations of
//! Ariki–Koike algebras, the distinguished elements `v_b`, `Y_t`, …, the
//! closed formulas for Schur elements and the scalars `f_λ`, `g_λ`, and a
//! Vandermonde engine for splittable decomposition numbers.
#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod combin;
pub mod decomp;
pub mod elements;
pub mod error;
pub mod exactnum;
pub mod scalars;
pub mod seminormal;
pub mod tableau;

pub use error::{Error, ErrorKind, Result};
