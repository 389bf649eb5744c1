//! Decide whether the tensor product of two bound quiver algebras is
//! representation-finite, and explain the decision.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything is a pure
//! function over immutable values:
//!
//! * [`quiver`] and [`algebra`] hold the data model: finite quivers, paths,
//!   monomial relations plus optional commutativity squares.
//! * [`shape`] and [`canonical`] detect lines, cycles and trees and give
//!   isomorphism-invariant keys for the line/cycle shapes.
//! * [`tensor`] builds the product quiver with lifted relations.
//! * [`separated`] recognises Dynkin and Euclidean graphs and runs the
//!   radical-square-zero finiteness criterion.
//! * [`cover`] unrolls the periodic universal coverings of loops and
//!   oriented cycles into finite windows.
//! * [`catalog`] holds the named algebras and decides quotient containment.
//! * [`classifier`] is the rule ladder producing a [`classifier::Verdict`].
//!
//! Paths compose left to right: `ab` means "first `a`, then `b`".

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod canonical;
pub mod catalog;
pub mod classifier;
pub mod cover;
mod error;
pub mod families;
pub mod quiver;
pub mod separated;
pub mod shape;
pub mod tensor;

pub use algebra::{AlgebraPresentation, RelationSet, ValidationReport};
pub use canonical::{canonical_form, is_isomorphic, CanonicalKey};
pub use catalog::{Catalog, Pattern};
pub use classifier::{classify, individual_rf, RfStatus, Verdict, VerdictKind};
pub use error::Error;
pub use quiver::{Arrow, ArrowId, Path, Quiver, VertexId};
pub use shape::{graph_shape, GraphShape, ShapeKind};
pub use tensor::{tensor, TensorPresentation};

pub type Result<T> = core::result::Result<T, Error>;
