//! Complex cobordism classes of almost-complex manifolds.
//!
//! Chern numbers indexed by partitions, toric localization, the cobordism ring
//! in low dimensions, and explicit realization of classes as integer
//! combinations of products of projective spaces, blow-ups and hypersurfaces.

pub mod chern;
pub mod cli;
pub mod expr;
pub mod linalg;
pub mod numbertheory;
pub mod partition;
pub mod realization;
pub mod ring;
pub mod symfunc;
pub mod toric;
pub mod variety;
