// SPDX-License-Identifier: Apache-2.0

//! Exact algebra for the equivariant triple-intersection target spaces of a
//! Blanchfield module.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals and
//! every dimension is the nullity of an exactly reduced matrix. The crate is
//! `no_std` and only needs `alloc`; file formats, reports and the command line
//! live in the companion `blanchfield` crate.
//!
//! Layout:
//!
//! - [`arith`]: rationals, (Laurent) polynomials, factorization over ℚ,
//!   resultants and the root-product combinators.
//! - [`linalg`]: dense exact matrices, echelon forms, Kronecker products,
//!   exterior powers.
//! - [`module`]: validated Blanchfield modules in block normal form and the
//!   pairing.
//! - [`holonomy`]: the spaces 𝔄(i) and ℋ(i), root-triple criteria, bounds.
//! - [`numberfield`]: component presentations over ℚ[x]/(p).
//! - [`rings`]: the quotient rings ℛ(i) and ℛ_δ, antisymmetrization, `p_i`.
//! - [`surgery`]: variation formula, φ-families, Y-diagram reduction.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod holonomy;
pub mod linalg;
pub mod module;
pub mod numberfield;
pub mod rings;
pub mod surgery;

pub use arith::{LPoly, Poly, Rat};
pub use error::{Error, Result};
