//! Exact Monk, hook-Schur and Murnaghan-Nakayama products in the classical
//! and quantum cohomology of the flag manifold, with the quantum Bruhat order
//! and left-operator calculus behind them.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod kbruhat;
pub mod operators;
pub mod perm;
pub mod qbruhat;
pub mod qschubert;
pub mod schubert;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Partition, Permutation};
pub use qbruhat::{QElement, QMonomial};
