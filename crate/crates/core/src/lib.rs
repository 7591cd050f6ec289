//! Singular meanders: encoding, the two-colored insertion operad, canonical
//! decomposition into prime factors, exhaustive census and generating-function
//! identities over exact integers.

pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod meander;
pub mod operad;
pub mod render;
pub mod series;
pub mod structure;
pub mod verify;

pub use decompose::{decompose, reconstruct, DecompTree, FactorKind};
pub use enumerate::{count_tables, enumerate_meanders, Class, ClassFilter, CountTable, Shard};
pub use error::{Error, Result};
pub use meander::{Arc, MeanderCode, Order, PointType, Side};
pub use operad::{insert, OpExpr, Slot, SlotKind};
pub use series::{BiSeries, Convention};
pub use render::{render, RenderFormat};
pub use verify::{Status, Suite, SuiteReport, Verifier, VerifyConfig, VerifyReport};
