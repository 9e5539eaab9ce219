//! Rook placements on staircase boards and the combinatorics around them.
//!
//! The crate models weighted staircase Young diagrams and the non-attacking
//! rook placements they carry, together with the objects those placements
//! are equinumerous with: increasing trees with prescribed child slots,
//! chains of Dyck words, and permutations. Every map between the families
//! is implemented in both directions, and the [`enumeration`] module adds
//! exhaustive generators, exact integer polynomials (`p_n`, Eulerian,
//! gamma expansions) and whole-family consistency checks, so each identity
//! can be verified by brute force at small sizes.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `rookery-cli` crate adds text encodings and a command-line front end.
//!
//! ```
//! use rookery_core::{Permutation, StaircaseShape, RookPlacement};
//! use rookery_core::bijections::{perm_to_tree, tree_to_rook, rook_to_chain};
//!
//! let sigma = Permutation::new(vec![5, 1, 2, 6, 4, 3]).unwrap();
//! let rook = tree_to_rook(&perm_to_tree(&sigma)).unwrap();
//! assert_eq!(rook.cols(), &[2, 4, 5, 1, 7]);
//! assert_eq!(rook_to_chain(&rook).unwrap().last().to_string(), "UUUDUUDUDDDD");
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod bijections;
pub mod dyck;
pub mod enumeration;
pub mod perm;
pub mod placement;
pub mod poly;
pub mod projected;
pub mod shape;
pub mod tree;

pub use error::{Error, Result};

pub use dyck::{DyckChain, DyckWord, Step};
pub use perm::{LetterClass, Permutation, StirlingWord};
pub use placement::{Alignment, BlockContent, RookPlacement, Side};
pub use poly::{GammaVector, IntPolynomial};
pub use projected::ProjectedPlacement;
pub use shape::StaircaseShape;
pub use tree::IncreasingTree;

pub use num_bigint::BigInt;
