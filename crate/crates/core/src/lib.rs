//! Exact geometry of the parameter variety of balanced incomplete block designs.
//!
//! The two design equations `vr = bk` and `r(k-1) = λ(v-1)` cut out a
//! three-dimensional affine variety in five-space. This crate works with its
//! points over the rationals: the seven degenerate planes, the four lines
//! through a non-degenerate point, the affine automorphism group, integer
//! points along lines, a number-theoretic existence sieve, family predicates
//! and integer-valued pseudo-designs.
//!
//! Everything here is exact arithmetic and free of IO; the crate is `no_std`
//! and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod automorphisms;
pub mod enumeration;
mod error;
pub mod families;
pub mod lattice;
mod linalg;
pub mod lines;
pub mod pseudo;
pub mod rational;
pub mod sieve;
pub mod variety;

pub use crate::error::{Error, Result};
pub use crate::rational::Rational;
pub use crate::variety::{DesignPoint, PlaneId, PlaneSet};
pub use crate::lines::LineDescriptor;
