//! Difficult pairs of extended ordered binary trees under rotation distance.
//!
//! Trees are handled as pre-order binary words ([`word`]). On top of that sit
//! rotations and the reduction rules that define difficult pairs
//! ([`rotation`]), Remy-style growth ([`growth`]), exhaustive oracles for
//! small sizes ([`enumeration`]), the difficult pair sampler ([`dps`]) and
//! sampling statistics ([`stats`]).

pub mod cli;
pub mod dps;
pub mod enumeration;
pub mod error;
pub mod growth;
pub mod rng;
pub mod rotation;
pub mod stats;
pub mod word;

pub use dps::{dps_choices, dps_sample, DpsConfig};
pub use error::{Error, Result};
pub use rng::Rng;
pub use rotation::{is_difficult, TreePair};
pub use word::{Interval, IntervalSet, NodeRef, TreeWord};
