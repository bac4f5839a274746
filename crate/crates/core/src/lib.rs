//! Mealy automata `I_m` whose semigroups have intermediate growth.
//!
//! The generic layer is [`machine::MealyMachine`] with products,
//! minimization and similarity. [`growth`] enumerates semigroup balls
//! exactly, [`family`] holds the normal forms and relations of `I_m`,
//! [`madic`] the integer action and [`series`] the closed formulas.

pub mod cli;
pub mod error;
pub mod family;
pub mod growth;
pub mod machine;
pub mod madic;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use machine::MealyMachine;
