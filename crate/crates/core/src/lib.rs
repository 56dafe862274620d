#![no_std]
//! Exact computational kernel for λ-rings, Dold-Kan normalization and simplicial cones.
//!
//! Everything here is pure and allocation-only; file formats, caching and the command line
//! live in the companion `lambda-cli` crate.

extern crate alloc;

pub mod cone;
pub mod dk;
pub mod exact;
pub mod lambda;
pub mod rep;
