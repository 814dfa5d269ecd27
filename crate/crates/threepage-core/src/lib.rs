//! Words over the three-page alphabets, the semigroups they present, and the
//! machinery built on top: balance tests, embedding models, rewriting proofs,
//! abelian invariants, fundamental groups of complements, complexity bounds
//! and a census of low-complexity spatial graphs.
//!
//! A closed spatial graph embedded in the three-page book (three half-planes
//! sharing an axis) is read off the axis point by point as a word; the word is
//! *balanced* exactly when every arc closes up in its page. Everything else in
//! this crate is derived from that encoding:
//!
//! * [`words`] — the alphabet, words, parsing, the mirror anti-automorphism
//!   and the index-shift symmetry;
//! * [`pages`] — bracket projections, the linear balance test, arc matching
//!   and the combinatorial embedding model;
//! * [`abelian`] — the abelianization invariant and its linear functionals;
//! * [`rewrite`] — the defining relations, two-sided rewriting moves, an
//!   equivalence prover with replayable certificates, and the derived
//!   equivalence verification suites;
//! * [`tangles`] — the graph-tangle generators and their canonical images as
//!   three-page words;
//! * [`fundgroup`] — presentations of the complement's fundamental group,
//!   Tietze simplification, homology and finite-quotient counts;
//! * [`complexity`] — arch-number accounting, graph constructions, two-bridge
//!   words and the three-letters bound;
//! * [`census`] — pruned enumeration of balanced words and the classification
//!   of the results into invariant classes.
//!
//! The crate is `no_std` (with `alloc`); IO, parallelism and the command-line
//! front end live in the companion `threepage` crate.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::result_large_err)]

extern crate alloc;

pub mod abelian;
pub mod census;
pub mod complexity;
pub mod error;
pub mod fundgroup;
pub mod pages;
pub mod rewrite;
pub mod snf;
pub mod tangles;
pub mod words;

pub use error::Error;
pub use words::{Alphabet, Kind, Letter, Word};
