//! Exact computational homological algebra for tilting-endomorphism algebras.
//!
//! The crate builds graded quiver algebras with relations (Beilinson algebras,
//! the rolled-up algebra on the cyclic quiver, twisted group algebras of
//! diagonal cyclic actions), computes their Hochschild (co)homology, minimal
//! projective resolutions and Ext algebras, and provides independent
//! geometric oracles (Bott's formula, HKR/Hodge assembly on projective space,
//! fixed-point counts for twisted group rings) to compare against.

pub mod linalg;

pub use linalg::{Field, FieldScalar};
pub mod algebra;
pub mod combinatorics;
pub mod constructions;
pub mod hochschild;
pub mod limits;
pub mod oracle;
pub mod table;
