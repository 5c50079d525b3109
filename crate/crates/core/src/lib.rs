//! Finite group toolkit for class-preserving automorphisms and Blackburn groups.

pub mod autos;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod counterexample;
pub mod error;
pub mod group;
pub mod iso;
pub mod maps;
pub mod parallel;
pub mod products;
pub mod search;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::{Group, Limits};
pub use maps::GroupMap;
pub use products::Action;
pub use subgroup::Subgroup;
