#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod lattice;
pub mod model;
pub mod potentials;
pub mod radial;
pub mod spectrum;
pub mod verify;
pub mod specfun;

pub use error::{Error, Result};
pub use model::{lambda4, lambda_d, PhysicalParams, QuantumNumbers};
