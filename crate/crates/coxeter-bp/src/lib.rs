//! Exact combinatorics for Coxeter and Weyl groups.
//!
//! Elements are kept in a normal form over a fixed [`CoxeterSystem`]; on top of
//! that the crate computes parabolic decompositions, Bruhat intervals and their
//! Poincare polynomials, Billey-Postnikov (BP) decompositions with their
//! families and posets, J-stars over root systems, generalized Lehmer codes and
//! Schubert structure constants in type A.
//!
//! ```
//! use coxeter_bp::{CoxeterSystem, GenSet};
//!
//! let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
//! let w = a3.from_permutation(&[4, 2, 3, 1]).unwrap();
//! assert!(a3.is_bp(&w, GenSet::from_labels([1])).unwrap());
//! assert!(!a3.is_bp(&w, GenSet::from_labels([2])).unwrap());
//! ```
//!
//! The `examples/` directory has one program per area: `elements`,
//! `roots_and_jstars`, `bruhat_interval`, `bp_poset`, `type_a_patterns`,
//! `rational_smoothness`, `linear_extension`, `lehmer_codes`, `schubert`,
//! `lemmas`, `bench` and `verify`.

pub mod bench;
pub mod bp;
pub mod bruhat;
pub mod element;
pub mod error;
pub mod export;
pub mod genset;
pub mod jstar;
pub mod lehmer;
pub mod lemmas;
pub mod perm;
pub mod roots;
pub mod schubert;
pub mod suite;
pub mod scalar;
pub mod system;

pub use element::{Element, ParabolicDecomposition, Side};
pub use error::{Error, Result};
pub use genset::GenSet;
pub use roots::{Root, RootSet, RootSystem};
pub use system::{CoxeterSystem, CoxeterType};
