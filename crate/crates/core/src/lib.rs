//! Membership tests for classical and Bredon Sigma-invariants of three
//! families of groups, plus a bounded brute-force laboratory for the monoid
//! `G_χ = {g : χ(g) ≥ 0}`.

pub mod bredon;
pub mod chars;
pub mod cli;
pub mod exactlin;
pub mod groups;
pub mod monoidlab;
pub mod raagsigma;
pub mod thompson;
pub mod verdict;
