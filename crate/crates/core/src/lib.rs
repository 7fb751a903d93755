//! Exact algebraic invariants of matrix-encoded CR symbols.
//!
//! Arithmetic is exact over the eighth cyclotomic field (rationals extended by
//! i and sqrt2), so every rank, dimension, sign, and membership decision in the
//! crate is a theorem about the input data rather than a floating-point guess.
//!
//! Module map:
//! - [`exactnum`] — field scalars, their real subfield, exact sign decisions;
//! - [`linalg`] — dense matrices, reduced row echelon form, subspace lattice;
//! - [`symbol`] — symbol data, validity, signature, regularity, recoverability,
//!   the distinguished matrix algebra and the flat piece of degree zero;
//! - [`prolong`] — graded nilpotent base, degree-zero spans, Tanaka-style
//!   prolongation dimensions;
//! - [`reduced`] — modified/reduced candidate structures, definition checks,
//!   compatibility system verification, dilation conjugation, the definite
//!   rank-one obstruction certificate;
//! - [`scan`] — seeded randomized genericity scans.

pub mod exactnum;
pub mod linalg;
pub mod prolong;
pub mod reduced;
pub mod scan;
pub mod symbol;
