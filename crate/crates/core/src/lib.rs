//! Binary constant-weight codes on up to 64 coordinates: bitmask words,
//! exhaustive verification, deterministic constructions (the Z4 octacode
//! and its Gray image, length and weight surgeries), an embedded record
//! code, seeded simulated annealing and greedy augmentation, an exact
//! branch-and-bound solver for small parameters, and coordinate
//! automorphism groups.
//!
//! A code `(n, d, w)` is a set of length-`n` binary words of weight `w`
//! at pairwise Hamming distance at least `d`. Words live in single `u64`
//! bitmasks, so everything is exact integer arithmetic; no operation here
//! trusts a declared parameter without being able to check it.

pub mod autgroup;
pub mod clique;
pub mod code;
pub mod construct;
pub mod data;
pub mod error;
pub mod rng;
pub mod search;
pub mod verify;
pub mod word;

pub use code::Code;
pub use error::Error;
pub use word::Codeword;
