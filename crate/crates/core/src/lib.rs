//! Exact combinatorics for boxed UC plane partitions.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`exactalg`]: rationals, multivariate polynomials with half-integer
//!   exponents and total-degree-truncated power series.
//! - [`partitions`]: partitions, 2-partitions, interlacing, plane partitions,
//!   diagonal slices and exhaustive enumerators.
//! - [`schur`]: Schur polynomials by bialternant, tableau sum and branching.
//! - [`phasemodel`]: the two-site generalized phase model on occupation
//!   vectors, its monodromy operators and the scalar product.
//! - [`fock`]: the charged two-sector fermion Fock space, Heisenberg modes
//!   and vertex operators.
//! - [`genfun`]: generating-function identities checked coefficient by
//!   coefficient against enumeration.
#![no_std]

extern crate alloc;

pub mod error;
pub mod exactalg;
pub mod fock;
pub mod genfun;
pub mod partitions;
pub mod phasemodel;
pub mod schur;

pub use error::{Error, Result};
pub use exactalg::{MPoly, Monomial, Rat, Series, Var};
pub use partitions::{BoxDims, Partition, PlanePartition, TwoPartition, UcPlanePartition};
