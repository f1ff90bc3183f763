//! Vertex-primitive digraphs of large relative fixity.
//!
//! The crate builds the digraph families whose relative fixity exceeds 1/3
//! (generalised Hamming graphs, distance-i Johnson graphs, squashed Johnson
//! graphs and the rank-3 strongly regular graphs of small classical groups),
//! computes their automorphism groups and minimal degrees exactly, and checks
//! the closed-form relative fixities against brute force.
//!
//! The modules build on each other bottom-up:
//!
//! * [`permgroup`]: permutations, materialized groups, orbits, orbitals,
//!   primitivity and wreath products in product action.
//! * [`digraph`]: dense digraphs, products and unions, automorphism search and
//!   strongly regular parameters.
//! * [`families`]: Johnson, squashed Johnson, generalised Hamming and merged
//!   product action digraphs, plus the J-set algebra.
//! * [`geometry`]: small finite fields, formed spaces and the strongly regular
//!   graphs built from them, with the parameter catalog.
//! * [`fixity`]: fixity reports, closed-form relative fixities, batch
//!   verification, the classifier and the valency growth report.
//! * [`report`]: PASS/FAIL records shared by the verification code.
//! * [`cli`]: the `primfix` command line.

#![forbid(unsafe_code)]

pub mod cli;
pub mod digraph;
mod error;
pub mod families;
pub mod fixity;
pub mod geometry;
pub mod permgroup;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
