//! Unitary Cayley graphs of finite rings, chiefly the ring of
//! upper-triangular matrices over a finite field, with exact graph
//! invariants and exhaustive checks of their structure.

pub mod checker;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod field;
pub mod graph;
pub mod limits;
pub mod ring;

pub use error::{Error, Result};
pub use limits::Limits;
pub use ring::RingSpec;
