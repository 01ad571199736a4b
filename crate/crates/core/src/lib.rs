//! Exact computations with braided vector spaces and degree-truncated
//! graded braided bialgebras: Yang-Baxter validation, quantum symmetrizers
//! and type-one (Nichols-style) images, Yetter-Drinfeld modules over group
//! algebras, relative (co)tensor constructions, Radford-Majid bosonization,
//! and a small typed language for strict-monoidal morphism expressions.
//!
//! All arithmetic is exact (arbitrary-precision rationals or GF(p)), all
//! verdicts are computed identities, and the crate is `no_std` + `alloc`.

#![no_std]

extern crate alloc;

pub mod bosonization;
pub mod braiding;
pub mod cotensor;
pub mod dsl;
pub mod graded;
pub mod hopf;
pub mod matrix;
pub mod perm;
pub mod scalar;
pub mod tensor;
pub mod typeone;
