//! Exact computations in the twisted descent algebra: set compositions,
//! increasing planar trees and the bijection between them, the products
//! and coproducts on both, and the Hopf algebras they form.
//!
//! All arithmetic is exact. Structure constants are integers; rationals
//! appear only in the convolution logarithm.

pub mod bialgebra;
pub mod comp;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod perm;
pub mod render;
pub mod report;
pub mod symgroups;
pub mod tree;
pub mod verify;

pub use bialgebra::GradedBialgebra;
pub use comp::{enumerate_set_compositions, order_ll, OrderIso, SetComposition};
pub use error::{Error, ParseError, Result};
pub use hopf::{CompHopf, TreeHopf};
pub use linear::{Basis, Integer, LinComb, Rational, Tensor};
pub use perm::{enumerate_permutations, Permutation};
pub use report::{Check, Report};
pub use symgroups::PermHopf;
pub use tree::{enumerate_increasing_trees, enumerate_trees, fgt, inc, sigma, tau, IncreasingTree, PlanarTree};
pub use verify::Suite;
