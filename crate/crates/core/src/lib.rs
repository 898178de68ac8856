//! Finite-group toolkit for central extensions, second cohomology, crossed
//! modules and the true commutator, together with root-datum and
//! Artin-Schreier computations.

pub mod abelian;
pub mod cli;
pub mod artin_schreier;
pub mod cohomology;
pub mod crossed;
pub mod error;
pub mod group;
pub mod modular;
pub mod report;
pub mod root_data;
pub mod snf;
pub mod true_commutator;

pub use abelian::FiniteAbelian;
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupHom, GroupRef, Limits, Subgroup};
