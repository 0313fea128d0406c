//! Exact computation in the affine symmetric group of type `A_k^(1)`, its
//! affine nilCoxeter algebra, the down operator and the
//! non-commutative k-Schur functions.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of immutable values; IO, serialization and the command line live
//! in the companion `kschur` crate.
//!
//! Module map:
//!
//! * [`affine_weyl`]: group elements in window notation, reduced words,
//!   Bruhat covers, parabolic factorization, cyclically decreasing elements.
//! * [`root_system`]: coroot and weight vectors, the Cartan pairing and the
//!   coroot attached to a Bruhat cover.
//! * [`cores`]: `(k+1)`-cores, residues, the level-zero action and the
//!   bijection with k-bounded partitions.
//! * [`nilcoxeter`]: sparse integer combinations of the basis `u_w` and the
//!   generators `h_i` of the affine Fomin–Stanley subalgebra.
//! * [`down_operator`]: `D_{Λ_j}` (two independent implementations) and `U`.
//! * [`kschur`]: k-Schur functions by exact solve, the rectangle and
//!   near-rectangle closed forms, and k-Littlewood–Richardson coefficients.

#![no_std]

extern crate alloc;

pub mod affine_weyl;
pub mod cores;
pub mod down_operator;
mod error;
pub mod kschur;
pub mod nilcoxeter;
pub mod root_system;

pub use affine_weyl::{AffinePermutation, Cover, DescentPolicy, Rank, Side, Word};
pub use cores::{BoundedPartition, Cell, Core};
pub use down_operator::DownMethod;
pub use error::{Error, Result};
pub use kschur::{Diagram, ExpansionMethod, HExpansion, KSchur};
pub use nilcoxeter::{HProductCache, LocalCache, NilCoxeterElement, NoCache};
pub use root_system::{CorootVector, WeightVector};
