//! Kelly-Mac Lane graphs and combed trees.
//!
//! A combed tree with nodes of arities `m_1..m_k` and `l` leaves is encoded
//! as a graph `X_{m_1} ⊗ ⋯ ⊗ X_{m_k} → X_l`, where `X_m = [1^{⊗m}, 1]`.
//! The graphs arising this way are exactly the allowable ones of that
//! shape. This crate builds both directions of that correspondence:
//!
//! - [`tree::encode`] and [`tree::decode`] move between trees and graphs;
//! - [`certify::certificate`] writes down an allowable term for any tree;
//! - [`certify::witness`] produces, for a pairing with an index cycle, an
//!   allowable morphism whose composite with it closes a loop.
//!
//! ```
//! use kmtree::tree::{decode, encode, Tree};
//! use kmtree::certify::certificate;
//!
//! let t: Tree = "node#2(node#1(leaf, leaf, leaf), leaf) | rho=[1,3,4,2]".parse().unwrap();
//! let g = encode(&t);
//! assert_eq!(decode(&g).unwrap(), t);
//! assert_eq!(certificate(&t).term.eval().unwrap(), g);
//! ```

pub mod certify;
pub mod cli;
pub mod composition;
pub mod error;
pub mod gen;
pub mod graph;
mod parse;
pub mod shape;
pub mod term;
pub mod tree;

pub use certify::{
    certificate, decide, is_tree_allowable, witness, Certificate, Decision, Witness,
};
pub use error::{Error, Result};
pub use graph::{compose, KmGraph, LoopCount};
pub use parse::ParseError;
pub use shape::{Shape, ShapeExpr, Sign, VariableRef};
pub use term::Term;
pub use tree::{decode, encode, AlphaBijection, CycleReport, Port, Tree};
