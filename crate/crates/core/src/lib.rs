//! Nakayama algebras given by Kupisch series: homological invariants,
//! resolution quivers, and the bijections with ordered trees and Dyck paths.
//!
//! ```
//! use nakayama::KupischSeries;
//!
//! let a: KupischSeries = "[3,4,4,3,2,1]".parse().unwrap();
//! assert_eq!(a.global_dimension().finite(), Some(3));
//! ```

pub mod bijections;
pub mod cartan;
pub mod dyck;
pub mod enumeration;
pub mod error;
pub mod kupisch;
pub mod resolution_quiver;
pub mod trees;
pub mod verify;

pub use cartan::{CartanMatrix, Rational, RationalJson};
pub use dyck::{BoundedDecomposition, BouncePath, DyckPath, Step};
pub use enumeration::Distribution;
pub use error::{Error, Result};
pub use kupisch::{HomDim, Kind, KupischSeries, Resolution, SeriesClass, Uniserial};
pub use resolution_quiver::{CycleReport, ResolutionQuiver};
pub use trees::{LabeledTree, OrderedTree};
pub use verify::{Suite, SuiteReport};
