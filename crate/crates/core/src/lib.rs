//! Lindenmayer systems with rational control, and the group-theoretic languages they
//! describe.
//!
//! - [`lsystem`]: ET0L/EDT0L systems, bounded enumeration, membership with checkable
//!   derivation witnesses, union and concatenation.
//! - [`catalog`]: concrete systems (a language of intermediate growth, crossing sequences of
//!   lattice points, a combing of Z²⋊Z, the Grigorchuk co-word grammar) with independent
//!   reference generators.
//! - [`grigorchuk`]: reduction, the word problem, the tree action, and derivation witnesses
//!   for nontrivial words.
//! - [`stallings`]: segment graphs, folds and pinches, and a primitive-set recognizer with
//!   Whitehead and commutator oracles.
//! - [`growth`]: growth series of generated languages.
//! - [`cli`]: the command-line front end used by the `grouplang` binary.

pub mod lsystem;
pub mod catalog;
pub mod grigorchuk;
pub mod stallings;
pub mod growth;
pub mod cli;
